from fractions import Fraction
from unittest import TestCase
from fanotoric.lattice import Lattice, AffineLatticeMap, primitive_vector, rank, \
 determinant, integer_nullspace, solve_rational, solve_integer, dot

class HelperTests(TestCase):

    def test_primitive_vector_of_integers(self):
        self.assertEqual(primitive_vector((4, -6)), (2, -3))
        self.assertEqual(primitive_vector((0, 5, 0)), (0, 1, 0))


    def test_primitive_vector_of_fractions(self):
        self.assertEqual(primitive_vector((Fraction(1, 2), Fraction(1, 3))), (3, 2))


    def test_primitive_vector_of_zero(self):
        self.assertEqual(primitive_vector((0, 0)), (0, 0))


    def test_rank(self):
        self.assertEqual(rank([(1, 2), (2, 4)], 2), 1)
        self.assertEqual(rank([(1, 0, 0), (0, 1, 0), (1, 1, 1)], 3), 3)
        self.assertEqual(rank([], 3), 0)


    def test_determinant(self):
        self.assertEqual(determinant([[2, 1], [1, 1]]), 1)
        self.assertEqual(determinant([[2, 0], [0, 3]]), 6)
        self.assertEqual(determinant([]), 1)


    def test_integer_nullspace(self):
        kernel = integer_nullspace([[1, 1, 1]], 3)
        self.assertEqual(len(kernel), 2)
        for vector in kernel:
            self.assertEqual(dot(vector, (1, 1, 1)), 0)
            self.assertTrue(all(isinstance(v, int) for v in vector))


    def test_nullspace_of_no_rows_is_everything(self):
        self.assertEqual(integer_nullspace([], 2), [(1, 0), (0, 1)])


    def test_solve_rational(self):
        self.assertEqual(solve_rational([[1, 1], [1, -1]], [2, 0]), (1, 1))
        self.assertEqual(solve_rational([[2, 0]], [1]), (Fraction(1, 2), 0))


    def test_inconsistent_system_has_no_solution(self):
        self.assertIsNone(solve_rational([[1, 1], [1, 1]], [1, 2]))


    def test_solve_integer_rejects_fractions(self):
        self.assertIsNone(solve_integer([[2]], [1]))
        self.assertEqual(solve_integer([[2, 1], [1, 1]], [3, 2]), (1, 1))



class LatticeCreationTests(TestCase):

    def test_can_create_lattice(self):
        lattice = Lattice([(2, 0), (0, 3)], 2)
        self.assertEqual(lattice._ambient_rank, 2)
        self.assertEqual(lattice.rank(), 2)
        self.assertEqual(lattice.index(), 6)


    def test_generators_must_have_ambient_length(self):
        with self.assertRaises(ValueError):
            Lattice([(1, 0), (0, 1, 0)], 2)


    def test_ambient_rank_must_be_int(self):
        with self.assertRaises(TypeError):
            Lattice([(1, 0)], "2")


    def test_zero_generators_give_zero_lattice(self):
        lattice = Lattice([(0, 0)], 2)
        self.assertEqual(lattice.rank(), 0)
        self.assertEqual(lattice.basis(), ())


    def test_lattice_repr(self):
        self.assertEqual(str(Lattice([(1, 2, 3)], 3)), "<Lattice (rank 1 in Z^3)>")


    def test_equal_lattices_from_different_generators(self):
        self.assertEqual(
         Lattice([(1, 1), (1, -1)], 2), Lattice([(2, 0), (1, 1)], 2)
        )
        self.assertNotEqual(Lattice([(1, 0)], 2), Lattice([(2, 0)], 2))



class LatticeMembershipTests(TestCase):

    def test_membership(self):
        lattice = Lattice([(1, 1), (1, -1)], 2)
        self.assertIn((2, 0), lattice)
        self.assertIn((3, 1), lattice)
        self.assertNotIn((1, 0), lattice)
        self.assertEqual(lattice.index(), 2)


    def test_membership_in_lower_rank_lattice(self):
        lattice = Lattice([(1, 2, 3)], 3)
        self.assertIn((2, 4, 6), lattice)
        self.assertNotIn((1, 2, 4), lattice)


    def test_coordinates(self):
        lattice = Lattice([(2, 0), (0, 3)], 2)
        self.assertEqual(lattice.coordinates((4, 3)), (2, 1))
        self.assertIsNone(lattice.coordinates((1, 3)))


    def test_vector_inverts_coordinates(self):
        lattice = Lattice([(1, 2, 0), (0, 1, 5), (3, 0, 1)], 3)
        for vector in [(1, 2, 0), (-1, 5, 4), (0, 0, 0)]:
            self.assertEqual(lattice.vector(lattice.coordinates(vector)), vector)
        self.assertEqual(lattice.index(), 31)
        self.assertIsNone(lattice.coordinates((4, 2, 6)))


    def test_coordinates_need_ambient_length(self):
        with self.assertRaises(ValueError):
            Lattice([(1, 0)], 2).coordinates((1, 0, 0))


    def test_full_lattice(self):
        self.assertTrue(Lattice([(1, 0), (1, 1)], 2).is_full())
        self.assertFalse(Lattice([(1, 1), (1, -1)], 2).is_full())
        self.assertFalse(Lattice([(1, 0)], 2).is_full())


    def test_reduce_is_constant_on_cosets(self):
        lattice = Lattice([(2, 0), (0, 3)], 2)
        self.assertEqual(lattice.reduce((5, 7)), lattice.reduce((1, 1)))
        self.assertNotEqual(lattice.reduce((1, 0)), lattice.reduce((0, 0)))
        self.assertEqual(lattice.reduce((4, -3)), (0, 0))



class AffineLatticeMapTests(TestCase):

    def test_apply_and_pullback(self):
        mapping = AffineLatticeMap((1, 1), Lattice([(2, 0), (0, 3)], 2))
        self.assertEqual(mapping.apply((1, 1)), (3, 4))
        self.assertEqual(mapping.pullback((3, 4)), (1, 1))


    def test_pullback_outside_image(self):
        mapping = AffineLatticeMap((1, 1), Lattice([(2, 0), (0, 3)], 2))
        with self.assertRaises(ValueError):
            mapping.pullback((2, 4))


    def test_lattice_must_be_lattice(self):
        with self.assertRaises(TypeError):
            AffineLatticeMap((0, 0), [(1, 0), (0, 1)])


    def test_identity(self):
        self.assertTrue(AffineLatticeMap((0, 0), Lattice([(1, 0), (0, 1)], 2)).is_identity())
        self.assertFalse(AffineLatticeMap((1, 0), Lattice([(1, 0), (0, 1)], 2)).is_identity())
