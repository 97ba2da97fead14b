"""End-to-end checks on the standard examples, and the property suites that
run over a corpus of small smooth configurations. These are slower than the
unit tests."""

import random
from itertools import combinations_with_replacement
from math import comb
from unittest import TestCase
from fanotoric.polytopes import PointConfiguration
from fanotoric.cayley import CayleyStructure, enumerate_cayley_structures, \
 maximal_cayley_structures, pi_faces
from fanotoric.divisors import ToricDivisor, is_basepoint_free, restriction_degree, \
 restricts_surjectively, satisfies_ddagger
from fanotoric.analysis import ExpectedDimensionInput, Verdict, check_hypotheses, \
 expected_dimension, normal_bundle_degrees, fiber_semigroups_agree
from fanotoric.chow import count_k_planes, schubert_oracle, full_count
from fanotoric.quick import simplex, dilate, product_of_simplices, multidegree, \
 hyperplane_class, facet_divisor, blowup_p2_p5, blowup_point_times_simplex

def corpus():
    return [
     simplex(1), simplex(2), simplex(3), product_of_simplices(1, 1),
     product_of_simplices(2, 1), product_of_simplices(1, 1, 1),
     PointConfiguration([(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]),
     dilate(simplex(2), 2), blowup_point_times_simplex(1)
    ]


def full_structure(configuration):
    face = configuration.full_face()
    return CayleyStructure(face, [[i] for i in face.members()])



class ProjectiveSpaceTests(TestCase):

    def test_lines_on_cubic_surface(self):
        space = simplex(3)
        self.assertEqual(full_count(space, [3 * hyperplane_class(space)], 1).total(), 27)


    def test_lines_on_quintic_threefold(self):
        space = simplex(4)
        self.assertEqual(full_count(space, [5 * hyperplane_class(space)], 1).total(), 2875)


    def test_conic_is_empty_for_general_x(self):
        plane = simplex(2)
        data = ExpectedDimensionInput(
         plane, full_structure(plane), [2 * hyperplane_class(plane)], 1
        )
        self.assertEqual(expected_dimension(data), -1)
        report = check_hypotheses(data)
        self.assertIs(report.verdict("empty_for_general_x"), Verdict.HOLDS)



class SegreTests(TestCase):

    def test_bidegree_three_three(self):
        product = product_of_simplices(2, 2)
        result = full_count(product, [multidegree(product, (3, 3))], 1)
        self.assertEqual(len(result.components()), 2)
        for component in result.components():
            self.assertEqual(component.phi(), 0)
            self.assertEqual(component.count(), 189)
            self.assertTrue(component.theorem_report().all_hold())
        self.assertEqual(result.total(), 378)



class BlownUpFiveSpaceTests(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.space = blowup_p2_p5()
        cls.h = facet_divisor(cls.space, (-1, -1, -1, -1, -1)).divisor_class()
        cls.e = facet_divisor(cls.space, (1, 1, 1, 0, 0)).divisor_class()
        cls.structures = {
         s.length(): s for s in maximal_cayley_structures(cls.space, 1)
        }


    def test_two_maximal_structures(self):
        self.assertEqual(len(maximal_cayley_structures(self.space, 1)), 2)
        self.assertEqual(sorted(self.structures), [2, 3])


    def test_restriction_degrees(self):
        first, second = self.structures[3], self.structures[2]
        degree = lambda c, s: restriction_degree(self.space, c, s)
        self.assertEqual(degree(self.h, first), 1)
        self.assertEqual(degree(self.e, first), 1)
        self.assertEqual(degree(2 * self.h - self.e, first), 1)
        self.assertEqual(degree(8 * self.h - 3 * self.e, first), 5)
        self.assertEqual(degree(self.h, second), 0)
        self.assertEqual(degree(self.e, second), -1)
        self.assertEqual(degree(2 * self.h - self.e, second), 1)
        self.assertEqual(degree(8 * self.h - 3 * self.e, second), 3)


    def test_count(self):
        result = full_count(self.space, [8 * self.h - 3 * self.e], 1)
        counts = {}
        for component in result.components():
            self.assertEqual(component.phi(), 0)
            self.assertTrue(component.theorem_report().all_hold())
            self.assertTrue(component.corollary_report().all_hold())
            counts[component.structure().length()] = component.count()
        self.assertEqual(counts, {3: 77875, 2: 189})
        self.assertEqual(result.total(), 78064)


    def test_count_does_not_depend_on_seed(self):
        for length, deltas, expected in ((3, [5], 77875), (2, [3], 189)):
            for seed in (0, 3):
                with self.subTest(length=length, seed=seed):
                    self.assertEqual(count_k_planes(
                     self.structures[length], 1, deltas, seed=seed
                    ), expected)


    def test_count_does_not_depend_on_face(self):
        for length, deltas, expected in ((3, [5], 77875), (2, [3], 189)):
            structure = self.structures[length]
            faces = pi_faces(structure, structure.length())
            self.assertGreater(len(faces), 1)
            for face in faces:
                with self.subTest(length=length, face=face):
                    self.assertEqual(
                     count_k_planes(structure, 1, deltas, face=face), expected
                    )



class DaggerCounterexampleTests(TestCase):

    def check_counterexample(self, q):
        configuration = blowup_point_times_simplex(q)
        face = [
         f for f in configuration.facets()
         if configuration.facet_inequality(f)[0] == (0, 1) + (0,) * q
        ][0]
        structure = CayleyStructure(face, [
         [i for i in face if configuration.point(i)[0] == 1],
         [i for i in face if configuration.point(i)[0] == 2]
        ])
        c = facet_divisor(configuration, (1, 1) + (0,) * q) + \
         facet_divisor(configuration, (0, 0) + (-1,) * q)
        c = c.divisor_class()
        self.assertFalse(restricts_surjectively(configuration, c, structure))
        self.assertEqual(
         satisfies_ddagger(configuration, [c], structure, 1), (False, (0, structure))
        )
        data = ExpectedDimensionInput(configuration, structure, [c], 1)
        self.assertEqual(data.deltas(), (1,))
        self.assertEqual(expected_dimension(data), q - 2)


    def test_with_line(self):
        self.check_counterexample(1)


    def test_with_plane(self):
        self.check_counterexample(2)



class PropertyTests(TestCase):

    def test_basepoint_free_classes_restrict_surjectively(self):
        generator = random.Random(2024)
        configurations = [c for c in corpus() if c.is_smooth()]
        structures = {
         c: enumerate_cayley_structures(c, 1) for c in configurations
        }
        checked = 0
        for attempt in range(5000):
            if checked >= 200:
                break
            configuration = generator.choice(configurations)
            if not structures[configuration]:
                continue
            divisor = ToricDivisor(configuration, [
             generator.randint(0, 2) for _ in configuration.facets()
            ])
            if not any(divisor.coefficients()) or not is_basepoint_free(configuration, divisor):
                continue
            for structure in generator.sample(
             structures[configuration], min(3, len(structures[configuration]))
            ):
                with self.subTest(configuration=configuration, divisor=divisor):
                    self.assertTrue(
                     restricts_surjectively(configuration, divisor, structure)
                    )
            checked += 1
        self.assertGreaterEqual(checked, 200)


    def test_normal_bundle_shape(self):
        for configuration in corpus() + [blowup_p2_p5()]:
            m = configuration.dimension()
            for structure in maximal_cayley_structures(configuration, 1):
                length, tau = structure.length(), structure.face().dim()
                for outer in pi_faces(structure, length):
                    for k in range(1, length + 1):
                        for inner in pi_faces(structure, k):
                            if not inner <= outer:
                                continue
                            degrees = normal_bundle_degrees(
                             configuration, structure, outer, inner
                            )
                            with self.subTest(structure=structure, inner=inner):
                                self.assertEqual(len(degrees), m - k)
                                self.assertEqual(degrees.count(1), length - k)
                                self.assertEqual(degrees.count(0), tau - length)
                                self.assertEqual(
                                 len([d for d in degrees if d < 0]), m - tau
                                )


    def test_fiber_semigroups_agree(self):
        for configuration in corpus() + [blowup_p2_p5()]:
            for structure in maximal_cayley_structures(configuration, 1):
                with self.subTest(structure=structure):
                    self.assertTrue(fiber_semigroups_agree(configuration, structure))



class OracleTests(TestCase):

    def test_localization_matches_schubert_calculus(self):
        cases = 0
        for n in range(1, 8):
            structure = full_structure(simplex(n))
            for k in range(0, min(2, n - 1) + 1):
                target = (k + 1) * (n - k)
                for size in range(1, 5):
                    for deltas in combinations_with_replacement(range(1, 7), size):
                        if sum(comb(k + d, k) for d in deltas) != target:
                            continue
                        expected = schubert_oracle(n + 1, k, deltas)
                        for seed in (0, 1):
                            with self.subTest(n=n, k=k, deltas=deltas, seed=seed):
                                self.assertEqual(
                                 count_k_planes(structure, k, deltas, seed=seed), expected
                                )
                        cases += 1
        self.assertGreater(cases, 100)
