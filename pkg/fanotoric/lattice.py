"""Exact linear algebra over the integers and rationals.

Everything here works on plain tuples of Python integers. The heavy lifting
(rank, nullspace, determinants, Hermite normal forms) is delegated to SymPy's
``DomainMatrix`` so that no floating point arithmetic is ever involved."""

import logging
from fractions import Fraction
from functools import reduce
from math import gcd
from sympy.polys.domains import ZZ, QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

logger = logging.getLogger(__name__)

def integer_matrix(rows, width):
    """Builds a SymPy ``DomainMatrix`` over the integers from a list of rows.

    :param list rows: The rows, each a sequence of ``int``.
    :param int width: The number of columns (needed when there are no rows).
    :rtype: ``DomainMatrix``"""

    return DomainMatrix(
     [[ZZ(int(value)) for value in row] for row in rows], (len(rows), width), ZZ
    )


def to_fraction(value):
    """Converts an element of SymPy's ``QQ`` or ``ZZ`` domain to a
    ``Fraction``."""

    if hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    return Fraction(int(value))


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def subtract(u, v):
    return tuple(a - b for a, b in zip(u, v))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def scale(factor, u):
    return tuple(factor * a for a in u)


def primitive_vector(vector):
    """Takes a vector of integers or fractions and returns the primitive
    integer vector pointing in the same direction. The zero vector is returned
    unchanged.

    :param vector: A sequence of ``int`` or ``Fraction``.
    :rtype: ``tuple``"""

    vector = [Fraction(value) for value in vector]
    denominator = reduce(
     lambda a, b: a * b // gcd(a, b), [v.denominator for v in vector], 1
    )
    integers = [int(v * denominator) for v in vector]
    divisor = reduce(gcd, [abs(v) for v in integers], 0)
    if divisor == 0:
        return tuple(integers)
    return tuple(v // divisor for v in integers)


def rank(vectors, width):
    """Returns the rank of a list of integer vectors of the given width.

    :param list vectors: The vectors.
    :param int width: Their common length.
    :rtype: ``int``"""

    if not vectors or width == 0:
        return 0
    return integer_matrix(vectors, width).to_field().rank()


def determinant(rows):
    """Returns the determinant of a square integer matrix.

    :rtype: ``int``"""

    if not rows:
        return 1
    return int(integer_matrix(rows, len(rows)).det())


def integer_nullspace(rows, width):
    """Returns a basis of the rational kernel of the matrix with the given rows,
    scaled to primitive integer vectors.

    :param list rows: The rows of the matrix, read as linear forms.
    :param int width: The number of columns.
    :rtype: ``list``"""

    if width == 0:
        return []
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(width)) for i in range(width)]
    kernel = integer_matrix(rows, width).to_field().nullspace()
    return [
     primitive_vector([to_fraction(value) for value in row])
     for row in kernel.to_list()
    ]


def solve_rational(rows, rhs):
    """Finds one rational solution x of ``rows · x = rhs``, with the free
    variables set to zero.

    :param list rows: The coefficient rows (integers).
    :param list rhs: The right hand side (integers or fractions).
    :returns: A ``tuple`` of ``Fraction``, or ``None`` if the system is\
    inconsistent."""

    width = len(rows[0]) if rows else 0
    augmented = DomainMatrix(
     [[QQ(int(v)) for v in row] + [QQ(Fraction(b).numerator, Fraction(b).denominator)]
      for row, b in zip(rows, rhs)],
     (len(rows), width + 1), QQ
    )
    reduced, pivots = augmented.rref()
    if width in pivots:
        return None
    solution = [Fraction(0)] * width
    reduced = reduced.to_list()
    for row, column in enumerate(pivots):
        solution[column] = to_fraction(reduced[row][width])
    return tuple(solution)


def solve_integer(rows, rhs):
    """Like :py:func:`solve_rational` but for square unimodular systems, where
    the unique solution is integral. Returns ``None`` when the solution is
    missing or not integral."""

    solution = solve_rational(rows, rhs)
    if solution is None or any(value.denominator != 1 for value in solution):
        return None
    return tuple(int(value) for value in solution)



class Lattice:
    """A sublattice of ℤ^m, given by generators. Internally the lattice keeps a
    basis in Hermite normal form: each basis vector has a distinct pivot row
    (its last non-zero entry), which makes membership tests and coordinates a
    matter of back-substitution.

    :param generators: The generating vectors (sequences of ``int``).
    :param int ambient_rank: The rank m of the ambient lattice ℤ^m.
    :raises ValueError: if a generator does not have length m."""

    def __init__(self, generators, ambient_rank):
        if not isinstance(ambient_rank, int) or ambient_rank < 0:
            raise TypeError(
             "ambient_rank must be a non-negative int, not '%s'" % str(ambient_rank)
            )
        generators = [tuple(int(v) for v in g) for g in generators]
        for generator in generators:
            if len(generator) != ambient_rank:
                raise ValueError(
                 "Generator %s does not live in Z^%i" % (str(generator), ambient_rank)
                )
        self._ambient_rank = ambient_rank
        generators = [g for g in generators if any(g)]
        if not generators:
            self._basis = ()
        else:
            columns = integer_matrix(generators, ambient_rank).transpose()
            hnf = hermite_normal_form(columns).transpose().to_list()
            self._basis = tuple(
             tuple(int(v) for v in row) for row in hnf if any(row)
            )
        self._pivots = tuple(
         max(i for i, v in enumerate(vector) if v) for vector in self._basis
        )


    def __repr__(self):
        return "<Lattice (rank %i in Z^%i)>" % (self.rank(), self._ambient_rank)


    def __eq__(self, other):
        return isinstance(other, Lattice) and self._basis == other._basis \
         and self._ambient_rank == other._ambient_rank


    def __hash__(self):
        return hash((self._basis, self._ambient_rank))


    def basis(self):
        """Returns the Hermite normal form basis of the lattice.

        :rtype: ``tuple``"""

        return self._basis


    def rank(self):
        """Returns the rank of the lattice.

        :rtype: ``int``"""

        return len(self._basis)


    def ambient_rank(self):
        """Returns m, where the lattice lives in ℤ^m.

        :rtype: ``int``"""

        return self._ambient_rank


    def index(self):
        """Returns the product of the pivots of the Hermite basis. For a
        full-rank lattice this is its index in ℤ^m.

        :rtype: ``int``"""

        result = 1
        for vector, pivot in zip(self._basis, self._pivots):
            result *= abs(vector[pivot])
        return result


    def is_full(self):
        """Returns ``True`` if the lattice is all of ℤ^m.

        :rtype: ``bool``"""

        return self.rank() == self._ambient_rank and self.index() == 1


    def coordinates(self, vector):
        """Expresses a vector in terms of the lattice's basis.

        :param vector: A sequence of ``int`` of length m.
        :returns: A ``tuple`` of ``int``, or ``None`` if the vector is not in\
        the lattice."""

        residual = [int(v) for v in vector]
        if len(residual) != self._ambient_rank:
            raise ValueError(
             "Vector %s does not live in Z^%i" % (str(vector), self._ambient_rank)
            )
        coefficients = [0] * len(self._basis)
        order = sorted(
         range(len(self._basis)), key=lambda j: self._pivots[j], reverse=True
        )
        for j in order:
            pivot, vector_j = self._pivots[j], self._basis[j]
            quotient, remainder = divmod(residual[pivot], vector_j[pivot])
            if remainder:
                return None
            coefficients[j] = quotient
            if quotient:
                residual = [r - quotient * v for r, v in zip(residual, vector_j)]
        if any(residual):
            return None
        return tuple(coefficients)


    def __contains__(self, vector):
        return self.coordinates(vector) is not None


    def vector(self, coordinates):
        """The inverse of :py:meth:`coordinates`: returns the vector with the
        given coordinates in the lattice's basis.

        :rtype: ``tuple``"""

        result = [0] * self._ambient_rank
        for c, vector in zip(coordinates, self._basis):
            if c:
                result = [r + c * v for r, v in zip(result, vector)]
        return tuple(result)


    def reduce(self, vector):
        """Returns the canonical representative of ``vector`` modulo the
        lattice: each pivot entry is brought into ``[0, pivot)``. Two vectors
        differ by a lattice vector exactly when their reductions agree.

        :rtype: ``tuple``"""

        residual = [int(v) for v in vector]
        order = sorted(
         range(len(self._basis)), key=lambda j: self._pivots[j], reverse=True
        )
        for j in order:
            pivot, vector_j = self._pivots[j], self._basis[j]
            quotient = residual[pivot] // vector_j[pivot]
            if quotient:
                residual = [r - quotient * v for r, v in zip(residual, vector_j)]
        return tuple(residual)



class AffineLatticeMap:
    """The affine map x ↦ origin + Σ xⱼ bⱼ from ℤ^d into ℤ^m, where the bⱼ
    are the basis of a :py:class:`.Lattice`.

    :param origin: The image of zero.
    :param Lattice lattice: The lattice whose basis gives the linear part."""

    def __init__(self, origin, lattice):
        if not isinstance(lattice, Lattice):
            raise TypeError("lattice must be Lattice, not '%s'" % str(lattice))
        self._origin = tuple(int(v) for v in origin)
        self._lattice = lattice


    def __repr__(self):
        return "<AffineLatticeMap (Z^%i -> Z^%i)>" % (
         self._lattice.rank(), self._lattice.ambient_rank()
        )


    def origin(self):
        return self._origin


    def lattice(self):
        return self._lattice


    def is_identity(self):
        """Returns ``True`` if the map is the identity of ℤ^m.

        :rtype: ``bool``"""

        m = self._lattice.ambient_rank()
        identity = tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))
        return not any(self._origin) and self._lattice.basis() == identity


    def apply(self, point):
        """Sends a point of ℤ^d to ℤ^m.

        :rtype: ``tuple``"""

        return add(self._origin, self._lattice.vector(point))


    def pullback(self, point):
        """Sends a point of ℤ^m in the image back to ℤ^d.

        :raises ValueError: if the point is not in the image."""

        coordinates = self._lattice.coordinates(subtract(point, self._origin))
        if coordinates is None:
            raise ValueError("%s is not in the image of %s" % (str(point), repr(self)))
        return coordinates
