"""Point configurations, their faces, cones and lattice polytopes.

Convex hulls are computed exactly: the points are projected onto coordinates
spanning their affine hull and handed to cdd in fraction arithmetic, and each
facet inequality it returns is scaled to a primitive integer normal."""

import logging
import cdd
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import factorial, floor, ceil, prod
import numpy as np
from numerus import is_numeric
from .budget import default_budget
from .lattice import (
 Lattice, AffineLatticeMap, rank, determinant, integer_nullspace,
 primitive_vector, solve_rational, dot, add, subtract, scale
)

logger = logging.getLogger(__name__)

class NotSmoothError(ValueError):
    """Raised when Cartier data or sections are requested on a configuration
    whose toric variety is not smooth."""



class DimensionMismatchError(ValueError):
    """Raised when polytopes do not live in a lattice of the required rank."""



def check_point(point, name="point"):
    """Checks that a point is a list or tuple of integral numbers and returns
    it as a tuple of ``int``.

    :raises TypeError: if the point is not a sequence of numbers.
    :raises ValueError: if any coordinate is not integral."""

    if not isinstance(point, list) and not isinstance(point, tuple):
        raise TypeError("%s must be list or tuple, not '%s'" % (name, str(point)))
    for value in point:
        if isinstance(value, bool) or isinstance(value, complex) \
         or not is_numeric(value):
            raise TypeError("%s %s contains non-numeric data" % (name, str(point)))
        if int(value) != value:
            raise ValueError("%s %s contains non-integer data" % (name, str(point)))
    return tuple(int(value) for value in point)


def _sort_key(point):
    return tuple(point)



class _Hull:
    """Facets and affine hull of a finite set of integer points."""

    def __init__(self, points, budget):
        self.points = points
        m = len(points[0])
        base = points[0]
        differences = [subtract(p, base) for p in points[1:]]
        self.dim = rank(differences, m)
        self.equations = [
         (normal, dot(normal, base)) for normal in integer_nullspace(differences, m)
        ]
        coordinates, columns = [], []
        for j in range(m):
            if len(coordinates) == self.dim:
                break
            trial = columns + [[d[j] for d in differences]]
            if rank(trial, len(differences)) > len(columns):
                coordinates.append(j)
                columns = trial
        self.coordinates = coordinates
        projected = [tuple(p[j] for j in coordinates) for p in points]
        self.facets = self._find_facets(projected, m)
        logger.debug(
         "Hull of %i points in Z^%i: dimension %i, %i facets" % (
          len(points), m, self.dim, len(self.facets)
         )
        )


    def _find_facets(self, projected, m):
        d = self.dim
        found = []
        if d == 0:
            return found
        generators = cdd.Matrix(
         [[1] + list(q) for q in projected], number_type="fraction"
        )
        generators.rep_type = cdd.RepType.GENERATOR
        inequalities = cdd.Polyhedron(generators).get_inequalities()
        for row in range(inequalities.row_size):
            if row in inequalities.lin_set:
                continue
            normal = primitive_vector(inequalities[row][1:])
            if not any(normal):
                continue
            values = [dot(normal, q) for q in projected]
            offset = min(values)
            members = frozenset(i for i, v in enumerate(values) if v == offset)
            if any(members == other for other, _, _ in found):
                continue
            base = projected[min(members)]
            if rank([subtract(projected[i], base) for i in members], d) != d - 1:
                continue
            lifted = [0] * m
            for j, c in zip(self.coordinates, normal):
                lifted[j] = c
            found.append((members, tuple(lifted), offset))
        return found



class PointConfiguration:
    """A finite set 𝒜 of distinct points in ℤ^m. The points keep the order they
    were given in, and faces refer to them by index.

    :param points: The points, as lists or tuples of integers.
    :raises TypeError: if the points are not sequences of integers.
    :raises ValueError: if there are no points, if they have different\
    lengths, or if a point is repeated."""

    def __init__(self, points):
        if not isinstance(points, list) and not isinstance(points, tuple):
            raise TypeError("points must be list or tuple, not '%s'" % str(points))
        if len(points) == 0:
            raise ValueError("Cannot create PointConfiguration with no points")
        checked = [check_point(point) for point in points]
        lengths = set(len(point) for point in checked)
        if len(lengths) != 1:
            raise ValueError("Points have different lengths %s" % str(sorted(lengths)))
        self._index = {}
        for i, point in enumerate(checked):
            if point in self._index:
                raise ValueError("Point %s appears more than once" % str(point))
            self._index[point] = i
        self._points = tuple(checked)
        self._ambient_rank = len(checked[0])
        self._hash = hash(self._points)
        self._hull = None
        self._faces = None
        self._difference_lattice = None


    @classmethod
    def from_columns(cls, matrix):
        """Creates a configuration from a matrix whose columns are the points,
        which is how configurations are usually written down.

        :param list matrix: The rows of the matrix.
        :rtype: :py:class:`.PointConfiguration`"""

        if not isinstance(matrix, list) and not isinstance(matrix, tuple):
            raise TypeError("matrix must be list or tuple, not '%s'" % str(matrix))
        if not matrix or not matrix[0]:
            raise ValueError("Cannot create PointConfiguration with no points")
        return cls([tuple(column) for column in zip(*matrix)])


    def __repr__(self):
        return "<PointConfiguration (%i points in Z^%i)>" % (
         len(self._points), self._ambient_rank
        )


    def __eq__(self, other):
        return isinstance(other, PointConfiguration) and self._points == other._points


    def __hash__(self):
        return self._hash


    def __len__(self):
        return len(self._points)


    def __iter__(self):
        return iter(self._points)


    def __contains__(self, point):
        return tuple(point) in self._index


    def points(self):
        """Returns the points of the configuration, in their original order.

        :rtype: ``tuple``"""

        return self._points


    def point(self, index):
        return self._points[index]


    def index(self, point):
        """Returns the index of a point.

        :raises ValueError: if the point is not in the configuration."""

        try:
            return self._index[tuple(point)]
        except KeyError:
            raise ValueError("%s is not in %s" % (str(point), repr(self)))


    def ambient_rank(self):
        """Returns m, the rank of the lattice the points live in.

        :rtype: ``int``"""

        return self._ambient_rank


    def difference_lattice(self):
        """Returns the lattice generated by differences of points.

        :rtype: :py:class:`.Lattice`"""

        if self._difference_lattice is None:
            base = self._points[0]
            self._difference_lattice = Lattice(
             [subtract(p, base) for p in self._points[1:]], self._ambient_rank
            )
        return self._difference_lattice


    def dimension(self):
        """Returns the dimension of the configuration's affine hull.

        :rtype: ``int``"""

        return self.difference_lattice().rank()


    def is_normalized(self):
        """Returns ``True`` if the differences of points generate ℤ^m.

        :rtype: ``bool``"""

        return self.difference_lattice().is_full()


    def _get_hull(self, budget=None):
        if self._hull is None:
            self._hull = _Hull(self._points, budget or default_budget())
        return self._hull


    def faces(self, budget=None):
        """Returns every non-empty face of the configuration, including the
        configuration itself, sorted by dimension and then by member
        coordinates.

        :param Budget budget: Limits the number of faces.
        :rtype: ``list``
        :raises SearchBudgetExceeded: if there are too many faces."""

        if self._faces is None:
            budget = budget or default_budget()
            hull = self._get_hull(budget)
            full = frozenset(range(len(self._points)))
            found = {full}
            frontier = [full]
            while frontier:
                new = []
                for face in frontier:
                    for members, _, _ in hull.facets:
                        meet = face & members
                        if meet and meet != face and meet not in found:
                            found.add(meet)
                            new.append(meet)
                            budget.check("faces", len(found))
                frontier = new
            faces = []
            for members in found:
                if members == full:
                    faces.append(Face(self, members, hull.dim, None))
                    continue
                normal = [0] * self._ambient_rank
                for facet_members, facet_normal, _ in hull.facets:
                    if members <= facet_members:
                        normal = add(normal, facet_normal)
                points = [self._points[i] for i in members]
                dim = rank([subtract(p, points[0]) for p in points[1:]], self._ambient_rank)
                faces.append(Face(self, members, dim, primitive_vector(normal)))
            self._faces = sorted(faces, key=lambda f: f.sort_key())
            logger.debug("%s has %i faces" % (repr(self), len(self._faces)))
        return list(self._faces)


    def full_face(self):
        """Returns the configuration as a face of itself.

        :rtype: :py:class:`.Face`"""

        return self.faces()[-1] if self.faces()[-1].is_full() else \
         [face for face in self.faces() if face.is_full()][0]


    def facets(self):
        """Returns the facets, in canonical order. This order is the one used
        for facet-coefficient vectors of divisors.

        :rtype: ``list``"""

        dim = self.dimension()
        return [face for face in self.faces() if face.dim() == dim - 1]


    def facet_inequality(self, facet):
        """Returns ``(normal, offset)`` with ``normal·u >= offset`` on the
        configuration and equality exactly on the facet. The normal is the
        primitive inner normal.

        :rtype: ``tuple``"""

        members = frozenset(facet.members())
        for facet_members, normal, offset in self._get_hull().facets:
            if facet_members == members:
                return normal, offset
        raise ValueError("%s is not a facet of %s" % (repr(facet), repr(self)))


    def face(self, members):
        """Returns the face with exactly the given member indices.

        :raises ValueError: if no face has these members."""

        members = frozenset(members)
        for face in self.faces():
            if frozenset(face.members()) == members:
                return face
        raise ValueError("%s are not the members of a face" % str(sorted(members)))


    def vertex_indices(self):
        """Returns the indices of the vertices, ordered by coordinates.

        :rtype: ``tuple``"""

        return tuple(face.members()[0] for face in self.faces() if face.dim() == 0)


    def edges(self):
        return [face for face in self.faces() if face.dim() == 1]


    def faces_of(self, face):
        """Returns the faces of the configuration contained in ``face``, which
        are exactly the faces of ``face`` itself.

        :rtype: ``list``"""

        members = set(face.members())
        return [f for f in self.faces() if members.issuperset(f.members())]


    def vertex_cone(self, index):
        """Returns the cone pos(𝒜 − v) at the vertex with the given index, as
        generated by the primitive edge directions at v.

        :rtype: :py:class:`.Cone`"""

        vertex = self._points[index]
        directions = []
        for edge in self.edges():
            if index in edge:
                other = [i for i in edge.members() if i != index][0]
                directions.append(subtract(self._points[other], vertex))
        return Cone(directions, self._ambient_rank)


    def normal_cone(self, index):
        """Returns the cone of the configuration's fan at the vertex with the
        given index, generated by the inner normals of the facets containing
        it.

        :rtype: :py:class:`.Cone`"""

        return Cone([
         self.facet_inequality(facet)[0]
         for facet in self.facets() if index in facet
        ], self._ambient_rank)


    def is_smooth(self):
        """Returns ``True`` if the toric variety of the configuration is smooth.
        See :py:func:`.is_smooth`."""

        return is_smooth(self)



class Face:
    """A face τ of a configuration, meaning the points of 𝒜 on some face of its
    convex hull.

    :param PointConfiguration configuration: The configuration.
    :param members: The indices of the points in the face.
    :param int dim: The dimension of the face.
    :param normal: A normal vector whose minimum over 𝒜 is attained exactly\
    on the face, or ``None`` for the full face."""

    def __init__(self, configuration, members, dim, normal=None):
        if not isinstance(configuration, PointConfiguration):
            raise TypeError(
             "configuration must be PointConfiguration, not '%s'" % str(configuration)
            )
        self._configuration = configuration
        self._members = tuple(sorted(
         members, key=lambda i: _sort_key(configuration.point(i))
        ))
        self._member_set = frozenset(self._members)
        self._dim = dim
        self._normal = normal
        self._lattice = None


    def __repr__(self):
        return "<Face (dim %i, %i points)>" % (self._dim, len(self._members))


    def __eq__(self, other):
        return isinstance(other, Face) and self._member_set == other._member_set \
         and self._configuration == other._configuration


    def __hash__(self):
        return hash(self._member_set)


    def __len__(self):
        return len(self._members)


    def __iter__(self):
        return iter(self._members)


    def __contains__(self, index):
        return index in self._member_set


    def __le__(self, other):
        return self._member_set <= other._member_set


    def __lt__(self, other):
        return self._member_set < other._member_set


    def configuration(self):
        return self._configuration


    def members(self):
        """Returns the indices of the face's points, ordered by coordinates.

        :rtype: ``tuple``"""

        return self._members


    def points(self):
        """Returns the face's points, ordered by coordinates.

        :rtype: ``tuple``"""

        return tuple(self._configuration.point(i) for i in self._members)


    def dim(self):
        return self._dim


    def normal(self):
        return self._normal


    def is_full(self):
        return len(self._members) == len(self._configuration)


    def vertex_indices(self):
        """Returns the vertices of the configuration that lie in this face.

        :rtype: ``tuple``"""

        return tuple(
         i for i in self._configuration.vertex_indices() if i in self._member_set
        )


    def difference_lattice(self):
        """Returns M_τ, the lattice generated by differences of the face's
        points.

        :rtype: :py:class:`.Lattice`"""

        if self._lattice is None:
            points = self.points()
            self._lattice = Lattice(
             [subtract(p, points[0]) for p in points[1:]],
             self._configuration.ambient_rank()
            )
        return self._lattice


    def sort_key(self):
        return (self._dim, tuple(_sort_key(p) for p in self.points()))



class Cone:
    """A rational polyhedral cone, given by generators. Generators are stored
    as primitive integer vectors.

    :param generators: The generating vectors.
    :param int ambient_rank: The rank of the lattice the cone lives in.
    :raises ValueError: if a generator is zero or has the wrong length."""

    def __init__(self, generators, ambient_rank):
        self._ambient_rank = ambient_rank
        checked = []
        for generator in generators:
            generator = check_point(generator, name="generator")
            if len(generator) != ambient_rank:
                raise ValueError(
                 "Generator %s does not live in Z^%i" % (str(generator), ambient_rank)
                )
            if not any(generator):
                raise ValueError("Cone generators cannot be zero")
            checked.append(primitive_vector(generator))
        self._generators = tuple(sorted(set(checked)))


    def __repr__(self):
        return "<Cone (%i generators in Z^%i)>" % (
         len(self._generators), self._ambient_rank
        )


    def __len__(self):
        return len(self._generators)


    def generators(self):
        return self._generators


    def ambient_rank(self):
        return self._ambient_rank


    def is_unimodular(self):
        """Returns ``True`` if the generators form a basis of ℤ^m.

        :rtype: ``bool``"""

        if len(self._generators) != self._ambient_rank:
            return False
        return abs(determinant([list(g) for g in self._generators])) == 1


    def contains(self, vector):
        """Returns ``True`` if the vector is a non-negative combination of the
        generators. Only simplicial full-dimensional cones are supported.

        :raises ValueError: if the cone is not simplicial and full-dimensional."""

        if len(self._generators) != self._ambient_rank or \
         rank(list(self._generators), self._ambient_rank) != self._ambient_rank:
            raise ValueError("%s is not simplicial and full-dimensional" % repr(self))
        columns = [list(row) for row in zip(*self._generators)]
        solution = solve_rational(columns, list(vector))
        return all(value >= 0 for value in solution)



class LatticePolytope:
    """The convex hull of finitely many lattice points. Only the vertices are
    kept, in sorted order.

    :param points: The points (at least one) whose convex hull is taken.
    :raises ValueError: if there are no points."""

    def __init__(self, points):
        if not isinstance(points, list) and not isinstance(points, tuple):
            raise TypeError("points must be list or tuple, not '%s'" % str(points))
        if len(points) == 0:
            raise ValueError("Cannot create LatticePolytope with no points")
        distinct = sorted(set(check_point(point) for point in points))
        configuration = PointConfiguration(distinct)
        self._vertices = tuple(sorted(
         configuration.point(i) for i in configuration.vertex_indices()
        ))
        self._configuration = PointConfiguration(self._vertices)
        self._volume = None


    def __repr__(self):
        return "<LatticePolytope (%i vertices in Z^%i)>" % (
         len(self._vertices), self.ambient_rank()
        )


    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self._vertices == other._vertices


    def __hash__(self):
        return hash(self._vertices)


    def __add__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        if other.ambient_rank() != self.ambient_rank():
            raise DimensionMismatchError(
             "Cannot add polytopes in Z^%i and Z^%i" % (
              self.ambient_rank(), other.ambient_rank()
             )
            )
        return LatticePolytope([add(u, v) for u in self._vertices for v in other._vertices])


    def __mul__(self, factor):
        if not isinstance(factor, int) or isinstance(factor, bool):
            return NotImplemented
        if factor < 0:
            raise ValueError("Cannot dilate by negative factor %i" % factor)
        return LatticePolytope([scale(factor, v) for v in self._vertices])


    __rmul__ = __mul__

    def vertices(self):
        """Returns the vertices, sorted.

        :rtype: ``tuple``"""

        return self._vertices


    def ambient_rank(self):
        return len(self._vertices[0])


    def dimension(self):
        return self._configuration.dimension()


    def translate(self, vector):
        """Returns the translate of the polytope by ``vector``.

        :rtype: :py:class:`.LatticePolytope`"""

        return LatticePolytope([add(v, vector) for v in self._vertices])


    def inequalities(self):
        """Returns the facet inequalities as ``(normal, offset)`` pairs meaning
        ``normal·u >= offset``, together with the affine hull as
        ``(normal, value)`` pairs meaning ``normal·u == value``.

        :rtype: ``tuple``"""

        hull = self._configuration._get_hull()
        return (
         [(normal, offset) for _, normal, offset in hull.facets], hull.equations
        )


    def contains(self, point):
        inequalities, equations = self.inequalities()
        return all(dot(n, point) >= o for n, o in inequalities) and \
         all(dot(n, point) == v for n, v in equations)


    def lattice_points(self, budget=None):
        """Returns all lattice points of the polytope, sorted.

        :param Budget budget: Limits the size of the scanned bounding box.
        :rtype: ``list``"""

        inequalities, equations = self.inequalities()
        lower = [min(v[j] for v in self._vertices) for j in range(self.ambient_rank())]
        upper = [max(v[j] for v in self._vertices) for j in range(self.ambient_rank())]
        return box_points(lower, upper, inequalities, equations, budget)


    def _triangulation(self):
        faces = self._configuration.faces()
        children = {
         face: [f for f in faces if f.dim() == face.dim() - 1 and f < face]
         for face in faces
        }
        memo = {}
        def triangulate(face):
            if face not in memo:
                if face.dim() == 0:
                    memo[face] = [face.members()]
                else:
                    apex = face.members()[0]
                    memo[face] = [
                     (apex,) + simplex for child in children[face]
                     if apex not in child for simplex in triangulate(child)
                    ]
            return memo[face]
        full = [face for face in faces if face.is_full()][0]
        return [
         [self._configuration.point(i) for i in simplex]
         for simplex in triangulate(full)
        ]


    def volume(self):
        """Returns the euclidean volume, which is zero unless the polytope is
        full-dimensional.

        :rtype: ``Fraction``"""

        if self._volume is None:
            d = self.ambient_rank()
            if d == 0:
                self._volume = Fraction(1)
            elif self.dimension() < d:
                self._volume = Fraction(0)
            else:
                total = sum(
                 abs(determinant([subtract(p, simplex[0]) for p in simplex[1:]]))
                 for simplex in self._triangulation()
                )
                self._volume = Fraction(total, factorial(d))
        return self._volume


    def normalized_volume(self):
        """Returns d! times the euclidean volume, an integer.

        :rtype: ``int``"""

        return int(self.volume() * factorial(self.ambient_rank()))



def box_points(lower, upper, inequalities, equations=(), budget=None):
    """Returns the lattice points of the box ``lower <= x <= upper`` that
    satisfy every inequality ``normal·x >= offset`` and every equation
    ``normal·x == value``, in lexicographic order.

    :raises SearchBudgetExceeded: if the box has too many points."""

    budget = budget or default_budget()
    m = len(lower)
    if m == 0:
        feasible = all(0 >= o for _, o in inequalities) and \
         all(v == 0 for _, v in equations)
        return [()] if feasible else []
    sizes = [u - l + 1 for l, u in zip(lower, upper)]
    if min(sizes) <= 0:
        return []
    budget.check("points", prod(sizes))
    axes = [np.arange(l, u + 1, dtype=np.int64) for l, u in zip(lower, upper)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, m)
    mask = np.ones(len(grid), dtype=bool)
    if inequalities:
        normals = np.array([n for n, _ in inequalities], dtype=np.int64)
        offsets = np.array([o for _, o in inequalities], dtype=np.int64)
        mask &= (grid @ normals.T >= offsets).all(axis=1)
    if equations:
        normals = np.array([n for n, _ in equations], dtype=np.int64)
        values = np.array([v for _, v in equations], dtype=np.int64)
        mask &= (grid @ normals.T == values).all(axis=1)
    return [tuple(row) for row in grid[mask].tolist()]


def inequality_vertices(inequalities, ambient_rank):
    """Returns the vertices of the polytope ``{u : normal·u >= offset}``, found
    by solving every m-subset of the inequalities as equations. The polytope
    is assumed bounded; an empty list means it is empty.

    :rtype: ``list``"""

    if ambient_rank == 0:
        return [()] if all(0 >= o for _, o in inequalities) else []
    vertices = set()
    for subset in combinations(inequalities, ambient_rank):
        rows = [list(n) for n, _ in subset]
        if rank(rows, ambient_rank) < ambient_rank:
            continue
        solution = solve_rational(rows, [o for _, o in subset])
        if all(dot(n, solution) >= o for n, o in inequalities):
            vertices.add(solution)
    return sorted(vertices)


def inequality_points(inequalities, ambient_rank, budget=None):
    """Returns the lattice points of the bounded polytope
    ``{u : normal·u >= offset}``, sorted.

    :rtype: ``list``"""

    vertices = inequality_vertices(inequalities, ambient_rank)
    if not vertices:
        return []
    lower = [floor(min(v[j] for v in vertices)) for j in range(ambient_rank)]
    upper = [ceil(max(v[j] for v in vertices)) for j in range(ambient_rank)]
    return box_points(lower, upper, inequalities, (), budget)


def normalize_configuration(configuration):
    """Re-embeds a configuration so that differences of its points generate
    the whole lattice. A configuration that is already normalized comes back
    unchanged together with the identity map; otherwise the first point
    becomes the origin and the Hermite basis of the difference lattice becomes
    the standard basis.

    :param PointConfiguration configuration: The configuration.
    :returns: ``(normalized configuration, AffineLatticeMap)``, where the map\
    sends the new coordinates back to the old ones.
    :rtype: ``tuple``"""

    m = configuration.ambient_rank()
    lattice = configuration.difference_lattice()
    if lattice.is_full():
        identity = [tuple(1 if i == j else 0 for j in range(m)) for i in range(m)]
        return configuration, AffineLatticeMap([0] * m, Lattice(identity, m))
    mapping = AffineLatticeMap(configuration.point(0), lattice)
    logger.debug(
     "Normalizing %s into Z^%i" % (repr(configuration), lattice.rank())
    )
    return PointConfiguration(
     [mapping.pullback(point) for point in configuration.points()]
    ), mapping


def faces(configuration, budget=None):
    """Returns all non-empty faces of a configuration, including the
    configuration itself.

    :param PointConfiguration configuration: The configuration.
    :param Budget budget: Limits the number of faces.
    :rtype: ``list``"""

    return configuration.faces(budget=budget)


def facets_containing(configuration, face):
    """Returns ℱ_σ, the facets of the configuration that contain ``face``.

    :param PointConfiguration configuration: The configuration.
    :param Face face: A face of it.
    :rtype: ``list``"""

    return [facet for facet in configuration.facets() if face <= facet]


def is_smooth(configuration):
    """Returns ``True`` if the toric variety of the configuration is smooth:
    at every vertex v, the primitive edge directions form a basis of ℤ^m and
    v plus each of them is again a point of the configuration.

    Smoothness is judged in the lattice the points are given in. A
    configuration that is not full-dimensional is judged after normalization.

    :param PointConfiguration configuration: The configuration.
    :rtype: ``bool``"""

    if configuration.dimension() < configuration.ambient_rank():
        configuration = normalize_configuration(configuration)[0]
    for index in configuration.vertex_indices():
        cone = configuration.vertex_cone(index)
        if not cone.is_unimodular():
            return False
        vertex = configuration.point(index)
        for direction in cone.generators():
            if add(vertex, direction) not in configuration:
                return False
    return True


def normalized_mixed_volume(*polytopes):
    """Returns the normalized mixed volume MV(P₁, …, P_d) of d lattice
    polytopes in ℤ^d, computed from the volumes of all partial Minkowski sums.
    MV(P, …, P) is d! times the volume of P.

    :param polytopes: The polytopes.
    :rtype: ``int``
    :raises DimensionMismatchError: if the polytopes do not live in ℤ^d."""

    d = len(polytopes)
    for polytope in polytopes:
        if not isinstance(polytope, LatticePolytope):
            raise TypeError("%s is not a LatticePolytope" % str(polytope))
        if polytope.ambient_rank() != d:
            raise DimensionMismatchError(
             "Mixed volume of %i polytopes needs Z^%i, not Z^%i" % (
              d, d, polytope.ambient_rank()
             )
            )
    volumes = {}
    total = Fraction(0)
    for size in range(1, d + 1):
        for subset in combinations(range(d), size):
            key = tuple(sorted(polytopes[i].vertices() for i in subset))
            if key not in volumes:
                volumes[key] = reduce(
                 lambda p, q: p + q, [polytopes[i] for i in subset]
                ).volume()
            total += (-1) ** (d - size) * volumes[key]
    if total.denominator != 1:
        raise ArithmeticError("Mixed volume %s is not an integer" % str(total))
    return int(total)
