"""Counting k-planes when the expected dimension is zero.

The component Z_{π,k} of the Fano scheme is the Grassmann bundle
Gr(k+1, ℰ) over the toric variety Z_π of the configuration of fiber sums, and
ℰ = ⊕ L_i* splits into line bundles whose sections are spanned by the
generator sets 𝒢_i = π⁻¹(e_i) − v_i. The number of planes is the integral of
∏ c_top(Sym^{δ_i} S*) over Gr(k+1, ℰ), evaluated here by torus localization.

At a fixed point (b, S), with ξ a generic cocharacter and ε a generic scaling
of the summands, write c_i = ⟨w_i(b), ξ⟩ + ε_i where w_i(b) is the local
generator of L_i at b. The Chern roots of S* are −c_i for i ∈ S, the tangent
weights are ⟨e, ξ⟩ for the primitive edge directions e of Z_π at b, and
c_j − c_i for i ∈ S, j ∉ S."""

import logging
import random
from fractions import Fraction
from itertools import combinations, product
from math import comb
from sympy import Poly, symbols
from .budget import default_budget
from .cayley import CayleyStructure, pi_faces, maximal_cayley_structures
from .divisors import (
 ToricDivisor, DivisorClass, facet_normals, local_data, divisor_polytope
)
from .analysis import ExpectedDimensionInput, Verdict, check_hypotheses
from .lattice import dot, subtract
from .polytopes import (
 PointConfiguration, LatticePolytope, NotSmoothError, DimensionMismatchError,
 normalize_configuration, normalized_mixed_volume, is_smooth
)

logger = logging.getLogger(__name__)

XI_ATTEMPTS = 64

class DegreeMismatchError(ValueError):
    """Raised when the ranks of the bundles Sym^δ S* do not add up to the
    dimension of the Grassmann bundle, so the count is not a number."""



class LocalizationError(ArithmeticError):
    """Raised when localization fails: no generic cocharacter was found, a
    summand has no local generator, or the sum is not an integer."""



class CayleySumConfiguration(PointConfiguration):
    """The normalized configuration 𝒜_π of all sums u₀ + … + u_ℓ with u_i in
    the i-th fiber of a Cayley structure. Its toric variety is Z_π.

    :param CayleyStructure structure: The structure π."""

    def __init__(self, structure):
        if not isinstance(structure, CayleyStructure):
            raise TypeError("structure must be CayleyStructure, not '%s'" % str(structure))
        m = structure.configuration().ambient_rank()
        sums = sorted(set(
         tuple(sum(column) for column in zip(*choice)) if m else ()
         for choice in product(*structure.block_points())
        ))
        normalized, mapping = normalize_configuration(PointConfiguration(sums))
        PointConfiguration.__init__(self, list(normalized.points()))
        self._structure = structure
        self._mapping = mapping
        self._sums = tuple(sums)


    def __repr__(self):
        return "<CayleySumConfiguration (%i points in Z^%i)>" % (
         len(self), self.ambient_rank()
        )


    def structure(self):
        """Returns the Cayley structure the configuration was built from.

        :rtype: :py:class:`.CayleyStructure`"""

        return self._structure


    def mapping(self):
        """Returns the map from the normalized coordinates back to M.

        :rtype: :py:class:`.AffineLatticeMap`"""

        return self._mapping


    def sums(self):
        """Returns the fiber sums in the coordinates of M.

        :rtype: ``tuple``"""

        return self._sums


    def difference_coordinates(self, vector):
        """Expresses a difference of fiber sums in the normalized
        coordinates.

        :raises ValueError: if the vector is not such a difference."""

        coordinates = self._mapping.lattice().coordinates(vector)
        if coordinates is None:
            raise ValueError("%s is not in M_pi" % str(vector))
        return coordinates



class SplitBundle:
    """The universal bundle ℰ = ⊕ L_i* over Z_π, given by the generator sets
    𝒢_i of the L_i in the normalized coordinates of Z_π.

    :param CayleySumConfiguration base: The base Z_π.
    :param list generators: The sets 𝒢₀, …, 𝒢_ℓ.
    :param Face face: The π-face used to linearize the L_i."""

    def __init__(self, base, generators, face):
        self._base = base
        self._generators = tuple(tuple(sorted(g)) for g in generators)
        self._face = face
        self._local = {}


    def __repr__(self):
        return "<SplitBundle (rank %i over %s)>" % (self.rank(), repr(self._base))


    def base(self):
        return self._base


    def face(self):
        return self._face


    def rank(self):
        return len(self._generators)


    def generators(self):
        """Returns the generator sets 𝒢_i.

        :rtype: ``tuple``"""

        return self._generators


    def local_generator(self, summand, vertex):
        """Returns w_i(b), the element of 𝒢_i minimizing the sum of the inner
        facet normals of Z_π at the vertex b.

        :param int summand: The index i.
        :param int vertex: The index of the vertex b of Z_π.
        :raises LocalizationError: if the minimizer is not unique."""

        key = (summand, vertex)
        if key not in self._local:
            normal = [0] * self._base.ambient_rank()
            for (facet_normal, _), facet in zip(
             facet_normals(self._base), self._base.facets()
            ):
                if vertex in facet:
                    normal = [a + b for a, b in zip(normal, facet_normal)]
            values = [dot(normal, w) for w in self._generators[summand]]
            best = [w for w, v in zip(self._generators[summand], values) if v == min(values)]
            if len(best) != 1:
                raise LocalizationError(
                 "Summand %i has no local generator at %s" % (
                  summand, str(self._base.point(vertex))
                 )
                )
            self._local[key] = best[0]
        return self._local[key]


    def summand_class(self, summand):
        """Returns the class of L_i on Z_π: the nef class whose section
        polytope is conv 𝒢_i.

        :rtype: :py:class:`.DivisorClass`"""

        return ToricDivisor(self._base, [
         -min(dot(normal, w) for w in self._generators[summand])
         for normal, _ in facet_normals(self._base)
        ]).divisor_class()


    def summand_classes(self):
        return [self.summand_class(i) for i in range(self.rank())]



class FixedPoint:
    """A torus-fixed point of the Grassmann bundle Gr(k+1, ℰ): a vertex of
    Z_π together with the k+1 summands of ℰ spanning the fixed subspace.

    :param int base_vertex: The index of the vertex of Z_π.
    :param subset: The summand indices, k+1 of them."""

    def __init__(self, base_vertex, subset):
        self._base_vertex = base_vertex
        self._subset = tuple(sorted(subset))


    def __repr__(self):
        return "<FixedPoint (vertex %i, summands %s)>" % (
         self._base_vertex, str(list(self._subset))
        )


    def __eq__(self, other):
        return isinstance(other, FixedPoint) and \
         (self._base_vertex, self._subset) == (other._base_vertex, other._subset)


    def __hash__(self):
        return hash((self._base_vertex, self._subset))


    def base_vertex(self):
        return self._base_vertex


    def subset(self):
        return self._subset



def cayley_sum_configuration(structure):
    """Returns 𝒜_π, the normalized configuration of fiber sums.

    :param CayleyStructure structure: A maximal structure π.
    :rtype: :py:class:`.CayleySumConfiguration`"""

    return CayleySumConfiguration(structure)


def universal_bundle(structure, face=None):
    """Returns the split bundle ℰ over Z_π, with 𝒢_i = π⁻¹(e_i) − v_i where
    {v₀, …, v_ℓ} is an ℓ-dimensional π-face.

    :param CayleyStructure structure: A maximal structure π.
    :param Face face: The π-face to use. The first one in canonical order is\
    used if not given.
    :rtype: :py:class:`.SplitBundle`
    :raises ValueError: if ``face`` is not an ℓ-dimensional π-face."""

    faces = pi_faces(structure, structure.length())
    if face is None:
        face = faces[0]
    elif face not in faces:
        raise ValueError("%s is not an %i-dimensional pi-face" % (repr(face), structure.length()))
    base = cayley_sum_configuration(structure)
    configuration = structure.configuration()
    generators = []
    for block in structure.blocks():
        vertex = [i for i in block if i in face][0]
        origin = configuration.point(vertex)
        generators.append([
         base.difference_coordinates(subtract(configuration.point(i), origin))
         for i in block
        ])
    return SplitBundle(base, generators, face)


def fixed_points(bundle, k):
    """Returns the torus-fixed points of Gr(k+1, ℰ), in canonical order.

    :rtype: ``list``"""

    return [
     FixedPoint(vertex, subset) for vertex in bundle.base().vertex_indices()
     for subset in combinations(range(bundle.rank()), k + 1)
    ]


def _nef_shift(configuration, coefficients):
    data = local_data(configuration, ToricDivisor(configuration, list(coefficients)))
    normals = facet_normals(configuration)
    shift = 0
    for vertex in configuration.vertex_indices():
        point = configuration.point(vertex)
        for (normal, offset), a in zip(normals, coefficients):
            alpha = dot(normal, data[vertex]) + a
            beta = dot(normal, point) - offset
            if alpha < 0 and beta > 0:
                shift = max(shift, -(alpha // beta))
    return shift


def toric_intersection_number(configuration, classes):
    """Returns the intersection number of d divisor classes on the smooth
    toric variety of a d-dimensional configuration. Each class is written as
    N − tA with N nef and A the ample class of the configuration, and the
    product is expanded into normalized mixed volumes of the polytopes of the
    nef classes.

    :param PointConfiguration configuration: A smooth full-dimensional\
    configuration, for example a :py:class:`.CayleySumConfiguration`.
    :param list classes: The d classes.
    :rtype: ``int``
    :raises NotSmoothError: if the configuration is not smooth.
    :raises DimensionMismatchError: if d is not the dimension."""

    d = configuration.ambient_rank()
    if len(classes) != d:
        raise DimensionMismatchError(
         "%i classes cannot be intersected on a %i-dimensional variety" % (len(classes), d)
        )
    if not is_smooth(configuration):
        raise NotSmoothError("%s is not smooth" % repr(configuration))
    if d == 0:
        return 1
    ample = ToricDivisor.ample(configuration)
    ample_polytope = LatticePolytope(
     [configuration.point(v) for v in configuration.vertex_indices()]
    )
    terms = []
    for c in classes:
        divisor = c.representative() if isinstance(c, DivisorClass) else c
        shift = _nef_shift(configuration, divisor.coefficients())
        nef = divisor + shift * ample
        terms.append((divisor_polytope(configuration, nef), shift))
    volumes = {}
    total = 0
    for choice in product((True, False), repeat=d):
        factor = 1
        for (_, shift), take_nef in zip(terms, choice):
            if not take_nef:
                factor *= -shift
        if factor == 0:
            continue
        polytopes = [
         polytope if take_nef else ample_polytope
         for (polytope, _), take_nef in zip(terms, choice)
        ]
        key = tuple(sorted(p.vertices() for p in polytopes))
        if key not in volumes:
            volumes[key] = normalized_mixed_volume(*polytopes)
        total += factor * volumes[key]
    return total


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _check_degrees(base_dimension, length, k, deltas):
    expected = base_dimension + (k + 1) * (length - k)
    ranks = sum(comb(k + delta, k) for delta in deltas)
    if ranks != expected:
        raise DegreeMismatchError(
         "Sym ranks add up to %i, but the Grassmann bundle has dimension %i" % (
          ranks, expected
         )
        )


def _vertex_contribution(bundle, vertex, k, deltas, xi, epsilon):
    base = bundle.base()
    edges = base.vertex_cone(vertex).generators()
    tangent = 1
    for edge in edges:
        tangent *= dot(edge, xi)
    weights = [
     dot(bundle.local_generator(i, vertex), xi) + epsilon[i]
     for i in range(bundle.rank())
    ]
    compositions = [list(_compositions(delta, k + 1)) for delta in deltas]
    total = Fraction(0)
    for subset in combinations(range(bundle.rank()), k + 1):
        euler = tangent
        for i in subset:
            for j in range(bundle.rank()):
                if j not in subset:
                    euler *= weights[j] - weights[i]
        if euler == 0:
            return None
        roots = [-weights[i] for i in subset]
        numerator = 1
        for group in compositions:
            for exponents in group:
                numerator *= sum(a * x for a, x in zip(exponents, roots))
        total += Fraction(numerator, euler)
    return total


def count_k_planes(structure, k, deltas, face=None, budget=None, seed=0):
    """Returns the number of k-planes in V_{π,k} for a general complete
    intersection with restriction degrees ``deltas``, which is the integral of
    ∏ c_top(Sym^{δ_i} S*) over Gr(k+1, ℰ).

    :param CayleyStructure structure: A maximal structure π on a smooth\
    configuration.
    :param int k: The dimension of the planes.
    :param list deltas: The restriction degrees, all non-negative.
    :param Face face: The π-face linearizing ℰ (see :py:func:`.universal_bundle`).
    :param Budget budget: Limits the number of fixed points.
    :param int seed: Selects the sequence of generic cocharacters.
    :rtype: ``int``
    :raises DegreeMismatchError: if the expected dimension is not zero.
    :raises LocalizationError: if no generic cocharacter is found or the sum\
    is not an integer."""

    if k < 0 or k > structure.length():
        raise ValueError("k must be between 0 and the length %i, not %i" % (structure.length(), k))
    if any(delta < 0 for delta in deltas):
        raise ValueError("Restriction degrees %s must be non-negative" % str(list(deltas)))
    if not is_smooth(structure.configuration()):
        raise NotSmoothError("%s is not smooth" % repr(structure.configuration()))
    budget = budget or default_budget()
    bundle = universal_bundle(structure, face)
    base = bundle.base()
    _check_degrees(base.ambient_rank(), structure.length(), k, deltas)
    vertices = base.vertex_indices()
    budget.check("fixed points", len(fixed_points(bundle, k)))
    for attempt in range(XI_ATTEMPTS):
        generator = random.Random(seed * 1000 + attempt)
        values = [
         generator.randint(1, 10 ** 6) for _ in range(base.ambient_rank() + bundle.rank())
        ]
        xi, epsilon = values[:base.ambient_rank()], values[base.ambient_rank():]
        contributions = budget.map(
         lambda vertex: _vertex_contribution(bundle, vertex, k, deltas, xi, epsilon),
         vertices
        )
        if any(c is None for c in contributions):
            logger.debug("Cocharacter %s is not generic, retrying" % str(values))
            continue
        total = sum(contributions, Fraction(0))
        if total.denominator != 1:
            raise LocalizationError("Localization sum %s is not an integer" % str(total))
        logger.debug(
         "%i %i-planes on %s (deltas %s)" % (
          int(total), k, repr(structure), str(list(deltas))
         )
        )
        return int(total)
    raise LocalizationError("No generic cocharacter in %i attempts" % XI_ATTEMPTS)


def schubert_oracle(n_plus_1, k, deltas):
    """Returns the integral of ∏ c_top(Sym^{δ_i} S*) over the Grassmannian of
    (k+1)-planes in a vector space of dimension n+1, by symmetric function
    calculus: the coefficient of the full-box Schur polynomial is read off as
    the coefficient of x₀^n x₁^(n−1) ⋯ x_k^(n−k) after multiplying by the
    Vandermonde determinant.

    :param int n_plus_1: The dimension n+1 of the vector space.
    :param int k: The dimension of the planes.
    :param list deltas: The degrees δ_i.
    :rtype: ``int``
    :raises DegreeMismatchError: if the ranks do not match the dimension."""

    n = n_plus_1 - 1
    if k < 0 or k > n:
        raise ValueError("k must be between 0 and %i, not %i" % (n, k))
    if any(delta < 0 for delta in deltas):
        raise ValueError("Degrees %s must be non-negative" % str(list(deltas)))
    _check_degrees(0, n, k, deltas)
    variables = symbols("x0:%i" % (k + 1))
    polynomial = Poly(1, *variables)
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            polynomial *= Poly(variables[i] - variables[j], *variables)
    for delta in deltas:
        for exponents in _compositions(delta, k + 1):
            polynomial *= Poly(
             sum(a * x for a, x in zip(exponents, variables)), *variables
            )
    target = tuple(n - i for i in range(k + 1))
    return int(polynomial.as_dict().get(target, 0))



class ComponentCount:
    """The analysis of one component Z_{π,k}: both hypothesis reports and,
    when it is determined, the number of k-planes of a general complete
    intersection in it."""

    def __init__(self, structure, theorem, corollary, count, reason=None):
        self._structure = structure
        self._theorem = theorem
        self._corollary = corollary
        self._count = count
        self._reason = reason


    def __repr__(self):
        return "<ComponentCount (length %i, count %s)>" % (
         self._structure.length(), str(self._count)
        )


    def structure(self):
        return self._structure


    def theorem_report(self):
        return self._theorem


    def corollary_report(self):
        return self._corollary


    def deltas(self):
        return self._theorem.deltas()


    def phi(self):
        return self._theorem.phi()


    def count(self):
        """Returns the number of k-planes, or ``None`` if it is not
        determined.

        :rtype: ``int``"""

        return self._count


    def reason(self):
        """Returns why there is no count, or ``None``.

        :rtype: ``str``"""

        return self._reason



class FanoCount:
    """The result of :py:func:`.full_count`."""

    def __init__(self, k, components):
        self._k = k
        self._components = tuple(components)


    def __repr__(self):
        return "<FanoCount (%i components, total %s)>" % (
         len(self._components), str(self.total())
        )


    def k(self):
        return self._k


    def components(self):
        return self._components


    def total(self):
        """Returns the total number of k-planes, or ``None`` if some
        component has no count.

        :rtype: ``int``"""

        counts = [component.count() for component in self._components]
        if any(count is None for count in counts):
            return None
        return sum(counts)



def full_count(configuration, classes, k, budget=None):
    """Analyses every component of the Fano scheme of k-planes of a general
    complete intersection, and counts the planes in components of expected
    dimension zero whose hypotheses hold. Components where the planes are
    known not to exist count zero.

    :param PointConfiguration configuration: The configuration 𝒜.
    :param list classes: The classes α_i.
    :param int k: The dimension of the planes.
    :param Budget budget: The resource budget.
    :rtype: :py:class:`.FanoCount`"""

    budget = budget or default_budget()
    components = []
    for structure in maximal_cayley_structures(configuration, k, budget):
        data = ExpectedDimensionInput(configuration, structure, classes, k, budget)
        theorem = check_hypotheses(data, "theorem", budget)
        corollary = check_hypotheses(data, "corollary", budget)
        count, reason = None, None
        if not data.is_smooth():
            reason = "configuration is not smooth"
        elif theorem.verdict("empty_for_general_x") is Verdict.HOLDS:
            count = 0
        elif theorem.phi() != 0:
            reason = "expected dimension is %i" % theorem.phi()
        elif min(theorem.deltas(), default=0) < 0:
            reason = "negative restriction degree"
        elif Verdict.HOLDS not in (
         theorem.verdict("nonempty"), corollary.verdict("nonempty")
        ):
            reason = "hypotheses not satisfied"
        else:
            count = count_k_planes(structure, k, theorem.deltas(), budget=budget)
        components.append(ComponentCount(structure, theorem, corollary, count, reason))
    return FanoCount(k, components)
