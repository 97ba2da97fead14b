from unittest import TestCase
from fanotoric.polytopes import PointConfiguration
from fanotoric.divisors import ToricDivisor
from fanotoric.quick import simplex, dilate, product, product_of_simplices, \
 facet_divisor, multidegree, hyperplane_class, blowup_p2_p5, \
 blowup_point_times_simplex

class SimplexTests(TestCase):

    def test_can_make_simplex(self):
        plane = simplex(2)
        self.assertEqual(plane.points(), ((0, 0), (1, 0), (0, 1)))
        self.assertEqual(plane.dimension(), 2)


    def test_dimension_must_be_int(self):
        with self.assertRaises(TypeError):
            simplex(2.0)
        with self.assertRaises(TypeError):
            simplex(True)


    def test_dimension_must_be_non_negative(self):
        with self.assertRaises(ValueError):
            simplex(-1)



class DilateTests(TestCase):

    def test_veronese_plane(self):
        self.assertEqual(len(dilate(simplex(2), 2)), 6)
        self.assertEqual(len(dilate(simplex(2), 3)), 10)


    def test_factor_must_be_positive_int(self):
        with self.assertRaises(TypeError):
            dilate(simplex(2), 1.5)
        with self.assertRaises(ValueError):
            dilate(simplex(2), 0)



class ProductTests(TestCase):

    def test_square(self):
        square = product_of_simplices(1, 1)
        self.assertEqual(square.points(), ((0, 0), (0, 1), (1, 0), (1, 1)))


    def test_product_dimension(self):
        configuration = product(simplex(2), simplex(1))
        self.assertEqual(len(configuration), 6)
        self.assertEqual(configuration.dimension(), 3)


    def test_product_needs_factors(self):
        with self.assertRaises(ValueError):
            product()



class DivisorHelperTests(TestCase):

    def test_facet_divisor(self):
        plane = simplex(2)
        self.assertEqual(facet_divisor(plane, (-1, -1)), ToricDivisor(plane, [0, 0, 1]))
        self.assertEqual(facet_divisor(plane, [1, 0]), ToricDivisor(plane, [1, 0, 0]))


    def test_missing_facet(self):
        with self.assertRaises(ValueError):
            facet_divisor(simplex(2), (1, 1))


    def test_hyperplane_class(self):
        plane = simplex(2)
        self.assertEqual(hyperplane_class(plane), ToricDivisor.ample(plane).divisor_class())


    def test_multidegree(self):
        square = product_of_simplices(1, 1)
        self.assertEqual(
         multidegree(square, (1, 2)).representative(), ToricDivisor(square, [0, 0, 2, 1])
        )


    def test_multidegree_needs_one_degree_per_factor(self):
        with self.assertRaises(ValueError):
            multidegree(product_of_simplices(2, 2), (1,))



class StandardExampleTests(TestCase):

    def test_blown_up_five_space(self):
        configuration = blowup_p2_p5()
        self.assertIsInstance(configuration, PointConfiguration)
        self.assertEqual(len(configuration), 15)
        self.assertEqual(configuration.dimension(), 5)
        self.assertTrue(configuration.is_smooth())
        facet_divisor(configuration, (-1, -1, -1, -1, -1))
        facet_divisor(configuration, (1, 1, 1, 0, 0))


    def test_blown_up_plane_times_simplex(self):
        configuration = blowup_point_times_simplex(2)
        self.assertEqual(len(configuration), 15)
        self.assertEqual(configuration.dimension(), 4)
        self.assertTrue(configuration.is_smooth())
