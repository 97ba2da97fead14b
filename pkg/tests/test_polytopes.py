from fractions import Fraction
from unittest import TestCase
from fanotoric.budget import Budget, SearchBudgetExceeded
from fanotoric.polytopes import PointConfiguration, Face, Cone, LatticePolytope, \
 NotSmoothError, DimensionMismatchError, check_point, box_points, \
 inequality_points, normalize_configuration, faces, facets_containing, \
 is_smooth, normalized_mixed_volume
from fanotoric.quick import simplex, product_of_simplices, blowup_p2_p5

class PointCheckingTests(TestCase):

    def test_integral_points_become_int_tuples(self):
        self.assertEqual(check_point([1, 2.0, -3]), (1, 2, -3))


    def test_points_must_be_sequences(self):
        with self.assertRaises(TypeError):
            check_point({1, 2})


    def test_points_must_be_numeric(self):
        with self.assertRaises(TypeError):
            check_point((1, "2"))
        with self.assertRaises(TypeError):
            check_point((1, True))


    def test_points_must_be_integral(self):
        with self.assertRaises(ValueError):
            check_point((1, 1.5))



class ConfigurationCreationTests(TestCase):

    def test_can_create_configuration(self):
        configuration = PointConfiguration([(0, 0), (1, 0), (0, 1)])
        self.assertEqual(configuration._points, ((0, 0), (1, 0), (0, 1)))
        self.assertEqual(configuration.ambient_rank(), 2)
        self.assertEqual(len(configuration), 3)


    def test_can_create_configuration_from_columns(self):
        configuration = PointConfiguration.from_columns([[0, 1, 0], [0, 0, 1]])
        self.assertEqual(configuration.points(), ((0, 0), (1, 0), (0, 1)))


    def test_configuration_needs_points(self):
        with self.assertRaises(ValueError):
            PointConfiguration([])
        with self.assertRaises(ValueError):
            PointConfiguration.from_columns([[]])


    def test_points_must_have_equal_lengths(self):
        with self.assertRaises(ValueError):
            PointConfiguration([(0, 0), (1, 0, 0)])


    def test_points_cannot_repeat(self):
        with self.assertRaises(ValueError):
            PointConfiguration([(0, 0), (1, 0), (0, 0)])


    def test_points_must_be_list_or_tuple(self):
        with self.assertRaises(TypeError):
            PointConfiguration({(0, 0), (1, 0)})


    def test_configuration_repr(self):
        self.assertEqual(str(simplex(3)), "<PointConfiguration (4 points in Z^3)>")


    def test_index_and_membership(self):
        configuration = simplex(2)
        self.assertEqual(configuration.index((0, 1)), 2)
        self.assertIn((1, 0), configuration)
        self.assertNotIn((1, 1), configuration)
        with self.assertRaises(ValueError):
            configuration.index((1, 1))



class ConfigurationLatticeTests(TestCase):

    def test_dimension(self):
        self.assertEqual(simplex(3).dimension(), 3)
        self.assertEqual(PointConfiguration([(1, 0, 0), (0, 1, 0), (0, 0, 1)]).dimension(), 2)


    def test_normalized(self):
        self.assertTrue(simplex(2).is_normalized())
        self.assertFalse(PointConfiguration([(0, 0), (2, 0), (0, 2)]).is_normalized())


    def test_normalize_sublattice(self):
        normalized, mapping = normalize_configuration(
         PointConfiguration([(0, 0), (2, 0), (0, 2)])
        )
        self.assertEqual(normalized.points(), ((0, 0), (1, 0), (0, 1)))
        self.assertEqual(mapping.apply((1, 0)), (2, 0))


    def test_normalize_lower_dimensional(self):
        normalized, mapping = normalize_configuration(
         PointConfiguration([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        )
        self.assertEqual(normalized.ambient_rank(), 2)
        self.assertEqual(normalized.dimension(), 2)
        self.assertTrue(normalized.is_normalized())
        for i, point in enumerate(normalized.points()):
            self.assertEqual(mapping.apply(point), ((1, 0, 0), (0, 1, 0), (0, 0, 1))[i])


    def test_normalized_configuration_comes_back_unchanged(self):
        configuration = simplex(2)
        normalized, mapping = normalize_configuration(configuration)
        self.assertIs(normalized, configuration)
        self.assertTrue(mapping.is_identity())



class FaceTests(TestCase):

    def test_simplex_faces(self):
        found = faces(simplex(2))
        self.assertEqual(len(found), 7)
        self.assertEqual([f.dim() for f in found], [0, 0, 0, 1, 1, 1, 2])
        self.assertTrue(found[-1].is_full())


    def test_cube_faces(self):
        found = product_of_simplices(1, 1, 1).faces()
        self.assertEqual(len(found), 27)
        self.assertEqual(len([f for f in found if f.dim() == 2]), 6)


    def test_faces_of_lower_dimensional_configuration(self):
        configuration = PointConfiguration([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        self.assertEqual(len(configuration.faces()), 7)
        self.assertEqual(len(configuration.facets()), 3)


    def test_faces_only_use_hull_points(self):
        configuration = PointConfiguration([(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)])
        self.assertEqual(len(configuration.faces()), 7)
        edge = configuration.face([0, 1, 2])
        self.assertEqual(edge.dim(), 1)
        self.assertEqual(len(edge), 3)


    def test_face_budget(self):
        with self.assertRaises(SearchBudgetExceeded):
            product_of_simplices(1, 1, 1).faces(budget=Budget(max_faces=5))


    def test_facet_inequalities(self):
        configuration = simplex(2)
        self.assertEqual(
         set(configuration.facet_inequality(f) for f in configuration.facets()),
         {((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)}
        )


    def test_facet_inequalities_with_boundary_and_interior_points(self):
        configuration = PointConfiguration(
         [(x, y) for x in range(3) for y in range(3)]
        )
        facets = configuration.facets()
        self.assertEqual([len(f) for f in facets], [3, 3, 3, 3])
        self.assertEqual(
         set(configuration.facet_inequality(f) for f in facets),
         {((1, 0), 0), ((0, 1), 0), ((-1, 0), -2), ((0, -1), -2)}
        )


    def test_facet_inequalities_of_blown_up_five_space(self):
        configuration = blowup_p2_p5()
        self.assertEqual(
         set(configuration.facet_inequality(f) for f in configuration.facets()), {
          ((1, 0, 0, 0, 0), 0), ((0, 1, 0, 0, 0), 0), ((0, 0, 1, 0, 0), 0),
          ((0, 0, 0, 1, 0), 0), ((0, 0, 0, 0, 1), 0),
          ((-1, -1, -1, -1, -1), -2), ((1, 1, 1, 0, 0), 1)
         }
        )


    def test_facet_inequality_needs_facet(self):
        configuration = simplex(2)
        with self.assertRaises(ValueError):
            configuration.facet_inequality(configuration.faces()[0])


    def test_face_lookup(self):
        configuration = simplex(2)
        self.assertEqual(configuration.face([1, 2]).dim(), 1)
        with self.assertRaises(ValueError):
            configuration.face([0, 1, 2, 3])


    def test_face_repr(self):
        self.assertEqual(str(simplex(2).face([0, 1])), "<Face (dim 1, 2 points)>")


    def test_face_order(self):
        configuration = simplex(2)
        edge, vertex = configuration.face([0, 1]), configuration.face([0])
        self.assertTrue(vertex <= edge)
        self.assertTrue(vertex < edge)
        self.assertFalse(edge <= vertex)


    def test_face_members_in_coordinate_order(self):
        configuration = PointConfiguration([(1, 0), (0, 0), (0, 1)])
        self.assertEqual(configuration.face([0, 1]).points(), ((0, 0), (1, 0)))


    def test_vertices(self):
        configuration = PointConfiguration([(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)])
        self.assertEqual(configuration.vertex_indices(), (0, 5, 2))


    def test_faces_of_face(self):
        configuration = simplex(3)
        facet = configuration.face([0, 1, 2])
        self.assertEqual(len(configuration.faces_of(facet)), 7)


    def test_facets_containing(self):
        configuration = simplex(3)
        self.assertEqual(len(facets_containing(configuration, configuration.face([0]))), 3)
        self.assertEqual(len(facets_containing(configuration, configuration.face([0, 1]))), 2)


    def test_face_difference_lattice(self):
        configuration = PointConfiguration([(0, 0), (2, 0), (0, 1)])
        lattice = configuration.face([0, 1]).difference_lattice()
        self.assertIn((2, 0), lattice)
        self.assertNotIn((1, 0), lattice)



class SmoothnessTests(TestCase):

    def test_simplices_and_products_are_smooth(self):
        self.assertTrue(is_smooth(simplex(3)))
        self.assertTrue(product_of_simplices(2, 1).is_smooth())


    def test_weighted_projective_plane_is_not_smooth(self):
        self.assertFalse(is_smooth(PointConfiguration([(0, 0), (1, 0), (0, 1), (-1, -1)])))


    def test_missing_edge_points_are_not_smooth(self):
        self.assertFalse(is_smooth(PointConfiguration([(0, 0), (2, 0), (0, 1)])))


    def test_vertex_cone(self):
        cone = simplex(2).vertex_cone(1)
        self.assertEqual(set(cone.generators()), {(-1, 0), (-1, 1)})
        self.assertTrue(cone.is_unimodular())


    def test_normal_cone(self):
        cone = simplex(2).normal_cone(0)
        self.assertEqual(set(cone.generators()), {(1, 0), (0, 1)})



class ConeTests(TestCase):

    def test_generators_are_made_primitive(self):
        cone = Cone([(2, 0), (0, 3)], 2)
        self.assertEqual(cone.generators(), ((0, 1), (1, 0)))
        self.assertTrue(cone.is_unimodular())


    def test_generators_cannot_be_zero(self):
        with self.assertRaises(ValueError):
            Cone([(0, 0)], 2)


    def test_generators_must_have_ambient_length(self):
        with self.assertRaises(ValueError):
            Cone([(1, 0, 0)], 2)


    def test_non_unimodular_cone(self):
        self.assertFalse(Cone([(1, 0), (1, 2)], 2).is_unimodular())
        self.assertFalse(Cone([(1, 0)], 2).is_unimodular())


    def test_contains(self):
        cone = Cone([(1, 0), (1, 1)], 2)
        self.assertTrue(cone.contains((2, 1)))
        self.assertFalse(cone.contains((0, 1)))
        with self.assertRaises(ValueError):
            Cone([(1, 0)], 2).contains((1, 0))



class LatticePolytopeTests(TestCase):

    def test_can_create_polytope(self):
        polytope = LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1), (1, 0)])
        self.assertEqual(polytope.vertices(), ((0, 0), (0, 1), (1, 0), (1, 1)))
        self.assertEqual(polytope.dimension(), 2)


    def test_interior_points_are_not_vertices(self):
        polytope = LatticePolytope([(0, 0), (2, 0), (1, 0), (0, 2), (1, 1)])
        self.assertEqual(polytope.vertices(), ((0, 0), (0, 2), (2, 0)))


    def test_polytope_needs_points(self):
        with self.assertRaises(ValueError):
            LatticePolytope([])


    def test_polytope_repr(self):
        self.assertEqual(
         str(LatticePolytope([(0, 0), (1, 0), (0, 1)])),
         "<LatticePolytope (3 vertices in Z^2)>"
        )


    def test_volumes(self):
        square = LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1)])
        self.assertEqual(square.volume(), Fraction(1))
        self.assertEqual(square.normalized_volume(), 2)
        self.assertEqual(LatticePolytope(list(simplex(3).points())).normalized_volume(), 1)


    def test_lower_dimensional_volume_is_zero(self):
        self.assertEqual(LatticePolytope([(0, 0), (3, 3)]).volume(), 0)


    def test_lattice_points(self):
        triangle = 2 * LatticePolytope([(0, 0), (1, 0), (0, 1)])
        self.assertEqual(len(triangle.lattice_points()), 6)
        self.assertIn((1, 1), triangle.lattice_points())


    def test_lattice_points_of_lower_dimensional_polytope(self):
        segment = LatticePolytope([(0, 0, 0), (2, 2, 2)])
        self.assertEqual(segment.lattice_points(), [(0, 0, 0), (1, 1, 1), (2, 2, 2)])


    def test_contains(self):
        triangle = LatticePolytope([(0, 0), (2, 0), (0, 2)])
        self.assertTrue(triangle.contains((1, 1)))
        self.assertFalse(triangle.contains((2, 1)))


    def test_minkowski_sum(self):
        horizontal = LatticePolytope([(0, 0), (1, 0)])
        vertical = LatticePolytope([(0, 0), (0, 1)])
        self.assertEqual(
         horizontal + vertical, LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1)])
        )


    def test_sum_needs_equal_ranks(self):
        with self.assertRaises(DimensionMismatchError):
            LatticePolytope([(0, 0)]) + LatticePolytope([(0, 0, 0)])


    def test_translate(self):
        polytope = LatticePolytope([(0, 0), (1, 0)]).translate((2, 3))
        self.assertEqual(polytope.vertices(), ((2, 3), (3, 3)))


    def test_dilation_cannot_be_negative(self):
        with self.assertRaises(ValueError):
            LatticePolytope([(0, 0), (1, 0)]) * -1



class MixedVolumeTests(TestCase):

    def setUp(self):
        self.triangle = LatticePolytope([(0, 0), (1, 0), (0, 1)])
        self.square = LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1)])


    def test_mixed_volume_of_equal_polytopes(self):
        self.assertEqual(normalized_mixed_volume(self.triangle, self.triangle), 1)
        self.assertEqual(normalized_mixed_volume(self.square, self.square), 2)


    def test_mixed_volume_is_multilinear(self):
        self.assertEqual(normalized_mixed_volume(2 * self.triangle, 3 * self.triangle), 6)


    def test_mixed_volume_of_segments(self):
        self.assertEqual(normalized_mixed_volume(
         LatticePolytope([(0, 0), (1, 0)]), LatticePolytope([(0, 0), (0, 1)])
        ), 1)


    def test_bezout(self):
        cubic = 3 * LatticePolytope(list(simplex(3).points()))
        self.assertEqual(normalized_mixed_volume(cubic, cubic, cubic), 27)


    def test_mixed_volume_needs_matching_rank(self):
        with self.assertRaises(DimensionMismatchError):
            normalized_mixed_volume(self.triangle)



class BoxPointTests(TestCase):

    def test_box_points(self):
        points = box_points([0, 0], [2, 2], [((-1, -1), -2)])
        self.assertEqual(len(points), 6)
        self.assertEqual(points[0], (0, 0))


    def test_empty_box(self):
        self.assertEqual(box_points([1, 0], [0, 0], []), [])


    def test_box_budget(self):
        with self.assertRaises(SearchBudgetExceeded):
            box_points([0, 0], [9, 9], [], budget=Budget(max_points=50))


    def test_inequality_points(self):
        points = inequality_points([((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)], 2)
        self.assertEqual(points, [(0, 0), (0, 1), (1, 0)])


    def test_empty_inequality_polytope(self):
        self.assertEqual(inequality_points([((1,), 1), ((-1,), 0)], 1), [])
