"""Torus-invariant Cartier divisors on the toric variety of a configuration,
their classes, and their restrictions to the linear spaces of Cayley
structures.

A divisor D = Σ a_F D_F is stored as its vector of facet coefficients, in the
canonical facet order of :py:meth:`.PointConfiguration.facets`. With ν_F the
primitive inner normal of F, the sections of O(D) are the lattice points of
{u : ⟨ν_F, u⟩ ≥ −a_F for all F}, and at a vertex v the local datum u_v solves
⟨ν_F, u_v⟩ = −a_F for the facets F containing v."""

import logging
from functools import lru_cache
from itertools import product
from .budget import default_budget
from .lattice import Lattice, solve_integer, dot, subtract
from .polytopes import (
 PointConfiguration, LatticePolytope, NotSmoothError, inequality_points,
 is_smooth
)
from .cayley import structures_below

logger = logging.getLogger(__name__)

class CayleyRestrictionError(ArithmeticError):
    """Raised when the local data of a divisor do not project onto a dilated
    standard simplex. This means an internal inconsistency, never bad
    input."""



def _check_configuration(configuration):
    if not isinstance(configuration, PointConfiguration):
        raise TypeError(
         "configuration must be PointConfiguration, not '%s'" % str(configuration)
        )
    if configuration.dimension() != configuration.ambient_rank():
        raise ValueError(
         "%s is not full-dimensional, normalize it first" % repr(configuration)
        )


@lru_cache(maxsize=64)
def facet_normals(configuration):
    """Returns ``(normal, offset)`` for every facet, in canonical facet order.

    :rtype: ``tuple``"""

    return tuple(
     configuration.facet_inequality(facet) for facet in configuration.facets()
    )


@lru_cache(maxsize=64)
def _smooth(configuration):
    return is_smooth(configuration)


@lru_cache(maxsize=64)
def principal_lattice(configuration):
    """Returns the lattice of principal divisors {(⟨ν_F, u⟩)_F : u ∈ ℤ^m}
    inside the lattice of facet coefficient vectors.

    :rtype: :py:class:`.Lattice`"""

    normals = facet_normals(configuration)
    return Lattice([
     tuple(normal[j] for normal, _ in normals)
     for j in range(configuration.ambient_rank())
    ], len(normals))



class ToricDivisor:
    """A torus-invariant divisor D = Σ a_F D_F.

    :param PointConfiguration configuration: The (full-dimensional)\
    configuration.
    :param coefficients: The a_F, either as a sequence in canonical facet\
    order or as a ``dict`` from facets to integers (missing facets are 0).
    :raises ValueError: if the number of coefficients is not the number of\
    facets, or a key is not a facet."""

    def __init__(self, configuration, coefficients):
        _check_configuration(configuration)
        facets = configuration.facets()
        if isinstance(coefficients, dict):
            for facet in coefficients:
                if facet not in facets:
                    raise ValueError("%s is not a facet of %s" % (repr(facet), repr(configuration)))
            coefficients = [coefficients.get(facet, 0) for facet in facets]
        if not isinstance(coefficients, list) and not isinstance(coefficients, tuple):
            raise TypeError(
             "coefficients must be list, tuple or dict, not '%s'" % str(coefficients)
            )
        if len(coefficients) != len(facets):
            raise ValueError(
             "%s has %i facets, not %i" % (repr(configuration), len(facets), len(coefficients))
            )
        for value in coefficients:
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError("Facet coefficient %s is not an int" % str(value))
        self._configuration = configuration
        self._coefficients = tuple(coefficients)


    @classmethod
    def prime(cls, configuration, facet):
        """Returns the prime divisor D_F of a facet.

        :rtype: :py:class:`.ToricDivisor`"""

        return cls(configuration, {facet: 1})


    @classmethod
    def principal(cls, configuration, u):
        """Returns div χ^u = Σ ⟨ν_F, u⟩ D_F.

        :rtype: :py:class:`.ToricDivisor`"""

        return cls(configuration, [dot(normal, u) for normal, _ in facet_normals(configuration)])


    @classmethod
    def ample(cls, configuration):
        """Returns the divisor whose polytope is the convex hull of the
        configuration.

        :rtype: :py:class:`.ToricDivisor`"""

        return cls(configuration, [-offset for _, offset in facet_normals(configuration)])


    def __repr__(self):
        return "<ToricDivisor %s>" % str(list(self._coefficients))


    def __eq__(self, other):
        return isinstance(other, ToricDivisor) and \
         self._coefficients == other._coefficients and \
         self._configuration == other._configuration


    def __hash__(self):
        return hash(self._coefficients)


    def _other(self, other):
        if not isinstance(other, ToricDivisor) or other._configuration != self._configuration:
            raise ValueError("Cannot combine divisors on different configurations")
        return other._coefficients


    def __add__(self, other):
        return ToricDivisor(self._configuration, [
         a + b for a, b in zip(self._coefficients, self._other(other))
        ])


    def __sub__(self, other):
        return ToricDivisor(self._configuration, [
         a - b for a, b in zip(self._coefficients, self._other(other))
        ])


    def __neg__(self):
        return ToricDivisor(self._configuration, [-a for a in self._coefficients])


    def __mul__(self, factor):
        if not isinstance(factor, int) or isinstance(factor, bool):
            return NotImplemented
        return ToricDivisor(self._configuration, [factor * a for a in self._coefficients])


    __rmul__ = __mul__

    def configuration(self):
        return self._configuration


    def coefficients(self):
        """Returns the facet coefficients in canonical facet order.

        :rtype: ``tuple``"""

        return self._coefficients


    def coefficient(self, facet):
        return self._coefficients[self._configuration.facets().index(facet)]


    def divisor_class(self):
        """Returns the class of the divisor.

        :rtype: :py:class:`.DivisorClass`"""

        return DivisorClass(self)



class DivisorClass:
    """The class of a torus-invariant divisor modulo principal divisors. Two
    classes are equal exactly when their representatives differ by some
    div χ^u, which is decided by reducing the coefficient vector modulo the
    Hermite basis of the principal lattice.

    :param ToricDivisor representative: Any divisor in the class."""

    def __init__(self, representative):
        if not isinstance(representative, ToricDivisor):
            raise TypeError(
             "representative must be ToricDivisor, not '%s'" % str(representative)
            )
        self._representative = representative
        self._canonical = principal_lattice(
         representative.configuration()
        ).reduce(representative.coefficients())


    def __repr__(self):
        return "<DivisorClass %s>" % str(list(self._canonical))


    def __eq__(self, other):
        return isinstance(other, DivisorClass) and self._canonical == other._canonical \
         and self.configuration() == other.configuration()


    def __hash__(self):
        return hash(self._canonical)


    def __add__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(self._representative + other._representative)


    def __sub__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(self._representative - other._representative)


    def __neg__(self):
        return DivisorClass(-self._representative)


    def __mul__(self, factor):
        if not isinstance(factor, int) or isinstance(factor, bool):
            return NotImplemented
        return DivisorClass(factor * self._representative)


    __rmul__ = __mul__

    def configuration(self):
        return self._representative.configuration()


    def representative(self):
        """Returns the divisor the class was created from.

        :rtype: :py:class:`.ToricDivisor`"""

        return self._representative


    def canonical(self):
        """Returns the canonical coefficient vector of the class.

        :rtype: ``tuple``"""

        return self._canonical


    def canonical_representative(self):
        return ToricDivisor(self.configuration(), self._canonical)


    def is_zero(self):
        return not any(self._canonical)



def _divisor(configuration, divisor):
    if isinstance(divisor, DivisorClass):
        divisor = divisor.representative()
    if not isinstance(divisor, ToricDivisor):
        raise TypeError("%s is not a ToricDivisor or DivisorClass" % str(divisor))
    if divisor.configuration() != configuration:
        raise ValueError("%s does not live on %s" % (repr(divisor), repr(configuration)))
    return divisor



class LocalData:
    """The local data u_v of a Cartier divisor: for each vertex v, the lattice
    point with ⟨ν_F, u_v⟩ = −a_F for every facet F containing v.

    :param ToricDivisor divisor: The divisor.
    :param dict points: Map from vertex indices to the points u_v."""

    def __init__(self, divisor, points):
        self._divisor = divisor
        self._points = dict(points)


    def __repr__(self):
        return "<LocalData (%i vertices)>" % len(self._points)


    def __getitem__(self, vertex):
        return self._points[vertex]


    def __len__(self):
        return len(self._points)


    def divisor(self):
        return self._divisor


    def vertices(self):
        """Returns the vertex indices, in coordinate order.

        :rtype: ``tuple``"""

        return self._divisor.configuration().vertex_indices()


    def points(self):
        """Returns the u_v in vertex order.

        :rtype: ``list``"""

        return [self._points[v] for v in self.vertices()]


    def items(self):
        return [(v, self._points[v]) for v in self.vertices()]



def local_data(configuration, divisor):
    """Returns the local data {u_v} of a divisor.

    :param PointConfiguration configuration: A smooth configuration.
    :param divisor: A :py:class:`.ToricDivisor` or :py:class:`.DivisorClass`\
    (whose representative is used).
    :rtype: :py:class:`.LocalData`
    :raises NotSmoothError: if the configuration is not smooth."""

    _check_configuration(configuration)
    divisor = _divisor(configuration, divisor)
    if not _smooth(configuration):
        raise NotSmoothError(
         "Cartier data unavailable: %s is not smooth" % repr(configuration)
        )
    normals = facet_normals(configuration)
    facets = configuration.facets()
    points = {}
    for vertex in configuration.vertex_indices():
        incident = [i for i, facet in enumerate(facets) if vertex in facet]
        solution = solve_integer(
         [list(normals[i][0]) for i in incident],
         [-divisor.coefficients()[i] for i in incident]
        )
        if solution is None:
            raise NotSmoothError(
             "Cartier data unavailable at vertex %s" % str(configuration.point(vertex))
            )
        points[vertex] = solution
    return LocalData(divisor, points)


def divisor_polytope(configuration, divisor):
    """Returns P_D = conv{u_v : v a vertex}.

    :rtype: :py:class:`.LatticePolytope`"""

    return LatticePolytope(local_data(configuration, divisor).points())


def section_points(configuration, divisor, budget=None):
    """Returns the lattice points of {u : ⟨ν_F, u⟩ ≥ −a_F}. Their characters
    χ^u are a basis of the global sections of O(D).

    :param PointConfiguration configuration: A smooth configuration.
    :param divisor: A :py:class:`.ToricDivisor` or :py:class:`.DivisorClass`.
    :param Budget budget: Limits the size of the scanned bounding box.
    :rtype: ``list``
    :raises NotSmoothError: if the configuration is not smooth."""

    _check_configuration(configuration)
    divisor = _divisor(configuration, divisor)
    if not _smooth(configuration):
        raise NotSmoothError(
         "Sections unavailable: %s is not smooth" % repr(configuration)
        )
    inequalities = [
     (normal, -a) for (normal, _), a in zip(
      facet_normals(configuration), divisor.coefficients()
     )
    ]
    return inequality_points(inequalities, configuration.ambient_rank(), budget)


def is_effective(configuration, divisor_class, budget=None):
    """Returns ``True`` if the class contains an effective divisor, which is
    the case exactly when O(D) has a non-zero section.

    :rtype: ``bool``"""

    return len(section_points(configuration, divisor_class, budget)) > 0


def is_basepoint_free(configuration, divisor):
    """Returns ``True`` if the divisor is basepoint free. This holds when each
    u_v lies in the section polytope, which makes u_v a vertex of P_D with
    pos(P_D − u_v) contained in pos(conv 𝒜 − v).

    :rtype: ``bool``"""

    data = local_data(configuration, divisor)
    divisor = data.divisor()
    pairs = list(zip(facet_normals(configuration), divisor.coefficients()))
    return all(
     dot(normal, u) >= -a for u in data.points() for (normal, _), a in pairs
    )


def _dagger_shift(configuration, divisor, face):
    data = local_data(configuration, divisor)
    return data[face.vertex_indices()[0]]


def make_dagger_representative(configuration, divisor_class, face):
    """Returns a divisor in the class whose local data at the vertices of
    ``face`` all lie in M_τ, so that its support does not contain the torus
    orbit closure of the face. The divisor is shifted by div χ^w where w is
    the local datum at the face's first vertex.

    :param PointConfiguration configuration: A smooth configuration.
    :param divisor_class: A :py:class:`.DivisorClass` or :py:class:`.ToricDivisor`.
    :param Face face: The face τ.
    :rtype: :py:class:`.ToricDivisor`
    :raises CayleyRestrictionError: if the shifted data leave M_τ."""

    divisor = _divisor(configuration, divisor_class)
    shift = _dagger_shift(configuration, divisor, face)
    dagger = divisor + ToricDivisor.principal(configuration, shift)
    data = local_data(configuration, dagger)
    lattice = face.difference_lattice()
    for vertex in face.vertex_indices():
        if data[vertex] not in lattice:
            raise CayleyRestrictionError(
             "u_v = %s at %s is not in M_tau" % (
              str(data[vertex]), str(configuration.point(vertex))
             )
            )
    return dagger


def _restriction(configuration, divisor_class, structure):
    divisor = _divisor(configuration, divisor_class)
    face = structure.face()
    shift = _dagger_shift(configuration, divisor, face)
    data = local_data(configuration, make_dagger_representative(configuration, divisor, face))
    projection = structure.projection()
    images = {}
    for vertex in face.vertex_indices():
        image = projection.image(data[vertex])
        block = structure.fiber_of(vertex)
        if images.setdefault(block, image) != image:
            raise CayleyRestrictionError(
             "Local data in fiber %i project to %s and %s" % (
              block, str(images[block]), str(image)
             )
            )
    length = structure.length()
    if length == 0:
        return 0, images, shift
    base = images[0]
    degree = images[1][1] - base[1]
    for i in range(1, length + 1):
        expected = [0] * (length + 1)
        expected[0], expected[i] = -degree, degree
        if list(subtract(images[i], base)) != expected:
            raise CayleyRestrictionError(
             "Projected local data %s are not a dilated standard simplex" % str(
              [images[j] for j in range(length + 1)]
             )
            )
    return degree, images, shift


def restriction_degree(configuration, divisor_class, structure):
    """Returns the degree δ of the class restricted to the linear space of a
    Cayley structure, read off from the projections of the local data of a
    representative satisfying the support condition.

    :param PointConfiguration configuration: A smooth configuration.
    :param divisor_class: A :py:class:`.DivisorClass` or :py:class:`.ToricDivisor`.
    :param CayleyStructure structure: The structure π.
    :rtype: ``int``
    :raises CayleyRestrictionError: if the projected data are not a dilated\
    standard simplex."""

    return _restriction(configuration, divisor_class, structure)[0]


def _simplex_points(base, degree):
    length = len(base) - 1
    points = set()
    for steps in product(range(degree + 1), repeat=length):
        if sum(steps) <= degree:
            point = list(base)
            point[0] -= sum(steps)
            for i, step in enumerate(steps, start=1):
                point[i] += step
            points.add(tuple(point))
    return points


def _restricts_surjectively(configuration, divisor_class, structure, sections):
    degree, images, shift = _restriction(configuration, divisor_class, structure)
    if degree < 0:
        return True
    projection = structure.projection()
    lattice = projection.lattice()
    image = set()
    for u in sections:
        shifted = subtract(u, shift)
        if shifted in lattice:
            image.add(projection.image(shifted))
    return _simplex_points(images[0], degree) <= image


def restricts_surjectively(configuration, divisor_class, structure, budget=None):
    """Returns ``True`` if every section of O(δ) on the linear space of the
    structure is the restriction of a global section of the class. A section
    χ^u restricts to χ^π′(u) when u ∈ M_τ and to zero otherwise.

    :param PointConfiguration configuration: A smooth configuration.
    :param divisor_class: A :py:class:`.DivisorClass` or :py:class:`.ToricDivisor`.
    :param CayleyStructure structure: The structure π.
    :param Budget budget: Limits the section enumeration.
    :rtype: ``bool``
    :raises NotSmoothError: if the configuration is not smooth."""

    sections = section_points(configuration, divisor_class, budget)
    return _restricts_surjectively(configuration, divisor_class, structure, sections)


def satisfies_ddagger(configuration, classes, structure, k, budget=None):
    """Checks that every class restricts surjectively with respect to every
    Cayley structure below ``structure`` of length at least k. Basepoint free
    classes always do and are not searched.

    :param PointConfiguration configuration: A smooth configuration.
    :param list classes: The classes α₁, …, α_r.
    :param CayleyStructure structure: The structure π.
    :param int k: The dimension of the planes.
    :param Budget budget: The resource budget.
    :returns: ``(True, None)``, or ``(False, (i, structure))`` naming the\
    first failing class index and structure in canonical order.
    :rtype: ``tuple``"""

    budget = budget or default_budget()
    checked = [
     (i, c) for i, c in enumerate(classes)
     if not is_basepoint_free(configuration, c)
    ]
    if not checked:
        return True, None
    below = structures_below(structure, k, budget)
    sections = {
     i: section_points(configuration, c, budget) for i, c in checked
    }
    grid = [(i, c, p) for i, c in checked for p in below]
    results = budget.map(
     lambda item: _restricts_surjectively(
      configuration, item[1], item[2], sections[item[0]]
     ), grid
    )
    for (i, _, p), result in zip(grid, results):
        if not result:
            logger.debug("Class %i does not restrict surjectively to %s" % (i, repr(p)))
            return False, (i, p)
    return True, None
