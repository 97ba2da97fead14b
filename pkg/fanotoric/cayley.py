"""Cayley structures on the faces of a point configuration.

A Cayley structure π: τ → Δ_ℓ is stored as its fibers (blocks). A partition of
a face τ into blocks is a Cayley structure exactly when the indicator function
of every block is the restriction of a rational affine function, which is the
test used throughout this module."""

import logging
from fractions import Fraction
from .budget import default_budget
from .lattice import solve_rational, dot, subtract
from .polytopes import PointConfiguration, Face

logger = logging.getLogger(__name__)

def _indicator_functional(points, block_points):
    rows = [list(point) + [1] for point in points]
    rhs = [1 if point in block_points else 0 for point in points]
    return solve_rational(rows, rhs)


def _is_affine_partition(points, blocks):
    for block in blocks:
        if _indicator_functional(points, set(block)) is None:
            return False
    return True



class CayleyStructure:
    """A Cayley structure of length ℓ on a face τ of a configuration, given as
    the partition of τ into its ℓ+1 fibers.

    The structure is kept in canonical form: each fiber lists its points in
    coordinate order, and fibers are ordered by their smallest point, so
    structures differing by a permutation of Δ_ℓ are equal.

    :param Face face: The face τ.
    :param blocks: The fibers, each a collection of member indices of τ.
    :raises TypeError: if ``face`` is not a :py:class:`.Face`.
    :raises ValueError: if the blocks are not a partition of the face into\
    non-empty sets, or if some fiber's indicator is not affine on τ."""

    def __init__(self, face, blocks, validate=True):
        if not isinstance(face, Face):
            raise TypeError("face must be Face, not '%s'" % str(face))
        configuration = face.configuration()
        key = lambda i: configuration.point(i)
        blocks = [tuple(sorted(block, key=key)) for block in blocks]
        if validate:
            if any(len(block) == 0 for block in blocks):
                raise ValueError("Cayley structure fibers cannot be empty")
            flat = [i for block in blocks for i in block]
            if len(flat) != len(set(flat)) or set(flat) != set(face.members()):
                raise ValueError("Fibers %s do not partition %s" % (str(blocks), repr(face)))
            if not _is_affine_partition(face.points(), [
             [configuration.point(i) for i in block] for block in blocks
            ]):
                raise ValueError("Fibers %s do not preserve affine relations" % str(blocks))
        self._face = face
        self._blocks = tuple(sorted(blocks, key=lambda b: key(b[0])))
        self._assignment = {
         i: number for number, block in enumerate(self._blocks) for i in block
        }
        self._projection = None


    def __repr__(self):
        return "<CayleyStructure (length %i on %i points)>" % (
         self.length(), len(self._face)
        )


    def __eq__(self, other):
        return isinstance(other, CayleyStructure) and self._face == other._face \
         and self._blocks == other._blocks


    def __hash__(self):
        return hash(self._blocks)


    def face(self):
        """Returns the face τ the structure is defined on.

        :rtype: :py:class:`.Face`"""

        return self._face


    def configuration(self):
        return self._face.configuration()


    def length(self):
        """Returns ℓ, one less than the number of fibers.

        :rtype: ``int``"""

        return len(self._blocks) - 1


    def blocks(self):
        """Returns the fibers π⁻¹(e₀), …, π⁻¹(e_ℓ) as tuples of member indices.

        :rtype: ``tuple``"""

        return self._blocks


    def block_points(self):
        """Returns the fibers as tuples of points.

        :rtype: ``list``"""

        configuration = self.configuration()
        return [tuple(configuration.point(i) for i in block) for block in self._blocks]


    def assignment(self):
        """Returns the map from member indices of τ to {0, …, ℓ}.

        :rtype: ``dict``"""

        return dict(self._assignment)


    def fiber_of(self, index):
        return self._assignment[index]


    def restrict(self, face):
        """Returns the restriction of the structure to a face contained in τ.
        The restriction may have a shorter length if some fibers miss the
        face.

        :param Face face: A face of the configuration inside τ.
        :rtype: :py:class:`.CayleyStructure`
        :raises ValueError: if the face is not inside τ."""

        if not face <= self._face:
            raise ValueError("%s is not contained in %s" % (repr(face), repr(self._face)))
        blocks = [
         [i for i in block if i in face] for block in self._blocks
        ]
        return CayleyStructure(face, [b for b in blocks if b], validate=False)


    def sort_key(self):
        configuration = self.configuration()
        return (
         -len(self._face), -self.length(),
         tuple(tuple(configuration.point(i) for i in block) for block in self._blocks)
        )


    def to_dict(self):
        """Returns the structure as a JSON-ready ``dict`` of its length, the
        dimension of its face and its fibers as lists of points."""

        return {
         "length": self.length(), "face_dimension": self._face.dim(),
         "fibers": [[list(point) for point in block] for block in self.block_points()]
        }


    def projection(self):
        """Returns the induced lattice surjection. See
        :py:func:`.induced_projection`."""

        if self._projection is None:
            self._projection = LatticeProjection(self)
        return self._projection



class LatticeProjection:
    """The surjection π′: M_τ → M_ℓ induced by a Cayley structure, where M_ℓ is
    the lattice of integer vectors in ℤ^(ℓ+1) with coordinate sum zero.

    :param CayleyStructure structure: The structure inducing the map."""

    def __init__(self, structure):
        if not isinstance(structure, CayleyStructure):
            raise TypeError("structure must be CayleyStructure, not '%s'" % str(structure))
        self._structure = structure
        points = structure.face().points()
        self._functionals = []
        for block in structure.block_points():
            solution = _indicator_functional(points, set(block))
            self._functionals.append((solution[:-1], solution[-1]))
        self._lattice = structure.face().difference_lattice()


    def __repr__(self):
        return "<LatticeProjection (Z^%i -> Z^%i)>" % (
         self._lattice.rank(), self._structure.length()
        )


    def structure(self):
        return self._structure


    def lattice(self):
        """Returns the source lattice M_τ.

        :rtype: :py:class:`.Lattice`"""

        return self._lattice


    def image(self, vector):
        """Applies π′ to a vector of M_τ, returning a vector of ℤ^(ℓ+1) with
        coordinate sum zero.

        :raises ValueError: if the vector is not in M_τ."""

        if vector not in self._lattice:
            raise ValueError("%s is not in M_tau" % str(vector))
        values = [dot(linear, vector) for linear, _ in self._functionals]
        return tuple(int(value) for value in values)


    def point_image(self, point):
        """Applies the affine extension of π to a point of τ's affine lattice.
        Points of τ go to standard basis vectors.

        :rtype: ``tuple``"""

        values = [dot(linear, point) + constant for linear, constant in self._functionals]
        if any(Fraction(value).denominator != 1 for value in values):
            raise ValueError("%s is not in the affine lattice of tau" % str(point))
        return tuple(int(value) for value in values)


    def matrix(self):
        """Returns the matrix of π′ with respect to the Hermite basis of M_τ
        and the basis e_i − e_0 (i = 1, …, ℓ) of M_ℓ.

        :rtype: ``tuple``"""

        images = [self.image(b) for b in self._lattice.basis()]
        return tuple(
         tuple(image[i] for image in images)
         for i in range(1, self._structure.length() + 1)
        )



def enumerate_cayley_structures(configuration, min_length, budget=None):
    """Returns every Cayley structure of length at least ``min_length`` on any
    face of the configuration, in canonical form and without duplicates,
    sorted by :py:meth:`.CayleyStructure.sort_key`. A ``min_length`` below 1
    is treated as 1.

    On each face τ the fibers are found as an exact cover of τ by faces of τ
    whose indicator is affine on τ. Every search node counts against the
    budget's node limit.

    :param PointConfiguration configuration: The configuration.
    :param int min_length: The shortest length wanted.
    :param Budget budget: The resource budget.
    :rtype: ``list``
    :raises SearchBudgetExceeded: if the search visits too many nodes."""

    if not isinstance(configuration, PointConfiguration):
        raise TypeError(
         "configuration must be PointConfiguration, not '%s'" % str(configuration)
        )
    if not isinstance(min_length, int):
        raise TypeError("min_length must be int, not '%s'" % str(min_length))
    min_length = max(min_length, 1)
    budget = budget or default_budget()
    counter = budget.counter("nodes")
    faces = configuration.faces(budget=budget)
    found = budget.map(
     lambda face: _structures_on(configuration, face, min_length, counter), faces
    )
    structures = sorted(
     [structure for group in found for structure in group],
     key=lambda s: s.sort_key()
    )
    logger.debug(
     "%i Cayley structures of length >= %i on %s (%i search nodes)" % (
      len(structures), min_length, repr(configuration), counter.used()
     )
    )
    return structures


def _structures_on(configuration, face, min_length, counter):
    needed = min_length + 1
    if len(face) < needed:
        return []
    points = face.points()
    candidates = {}
    for sub in configuration.faces_of(face):
        if sub == face:
            continue
        block = set(configuration.point(i) for i in sub.members())
        if _indicator_functional(points, block) is not None:
            candidates.setdefault(sub.members()[0], []).append(frozenset(sub.members()))
    order = face.members()
    results = []

    def search(covered, blocks):
        counter.tick()
        remaining = [i for i in order if i not in covered]
        if not remaining:
            if len(blocks) >= needed:
                results.append(CayleyStructure(face, blocks, validate=False))
            return
        for block in candidates.get(remaining[0], []):
            if block & covered:
                continue
            if len(blocks) + 1 + len(remaining) - len(block) < needed:
                continue
            search(covered | block, blocks + [block])

    search(frozenset(), [])
    return results


def leq(p, q):
    """Returns ``True`` if p ≤ q in the partial order on Cayley structures:
    τ_p ⊆ τ_q and p factors through q, meaning every fiber of q meets τ_p
    inside a single fiber of p.

    :param CayleyStructure p: The smaller structure.
    :param CayleyStructure q: The larger structure.
    :rtype: ``bool``"""

    if p.configuration() != q.configuration():
        raise ValueError("Cannot compare structures on different configurations")
    if not p.face() <= q.face():
        return False
    assignment = p.assignment()
    for block in q.blocks():
        images = set(assignment[i] for i in block if i in assignment)
        if len(images) > 1:
            return False
    return True


def maximal_cayley_structures(configuration, min_length, budget=None):
    """Returns the maximal elements, under :py:func:`.leq`, of the Cayley
    structures of length at least ``min_length``. These index the irreducible
    components of the Fano scheme of k-planes for k = ``min_length``.

    :param PointConfiguration configuration: The configuration.
    :param int min_length: The shortest length wanted.
    :param Budget budget: The resource budget.
    :rtype: ``list``"""

    maximal = []
    for structure in enumerate_cayley_structures(configuration, min_length, budget):
        if not any(leq(structure, other) for other in maximal):
            maximal.append(structure)
    logger.debug("%i maximal Cayley structures" % len(maximal))
    return maximal


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def structures_below(structure, min_length, budget=None):
    """Returns every Cayley structure p′ ≤ ``structure`` of length at least
    ``min_length`` (treated as at least 1). These are the coarsenings of the
    restrictions of the structure to the faces of τ.

    :param CayleyStructure structure: The upper bound.
    :param int min_length: The shortest length wanted.
    :param Budget budget: The resource budget.
    :rtype: ``list``"""

    min_length = max(min_length, 1)
    budget = budget or default_budget()
    counter = budget.counter("nodes")
    configuration = structure.configuration()
    found = set()
    for face in configuration.faces_of(structure.face()):
        restricted = structure.restrict(face)
        if restricted.length() < min_length:
            continue
        for partition in _set_partitions(list(restricted.blocks())):
            counter.tick()
            if len(partition) < min_length + 1:
                continue
            found.add(CayleyStructure(
             face, [[i for block in group for i in block] for group in partition],
             validate=False
            ))
    return sorted(found, key=lambda s: s.sort_key())


def pi_faces(structure, k):
    """Returns the k-dimensional faces of τ on which the structure is
    injective, ordered by coordinates. They are in bijection with the
    torus-fixed k-planes of the corresponding component.

    :param CayleyStructure structure: The structure π.
    :param int k: The dimension of the faces.
    :rtype: ``list``
    :raises ValueError: if k is larger than the structure's length."""

    if k > structure.length():
        raise ValueError(
         "k=%i is larger than the length %i of %s" % (k, structure.length(), repr(structure))
        )
    configuration = structure.configuration()
    assignment = structure.assignment()
    return [
     face for face in configuration.faces_of(structure.face())
     if face.dim() == k and len(set(assignment[i] for i in face)) == len(face)
    ]


def component_dimension(structure, k):
    """Returns dim τ − ℓ + (k+1)(ℓ−k), the dimension of the component of the
    Fano scheme indexed by the structure.

    :param CayleyStructure structure: The structure π.
    :param int k: The dimension of the planes.
    :rtype: ``int``"""

    length = structure.length()
    if k > length:
        raise ValueError("k=%i is larger than the length %i" % (k, length))
    return structure.face().dim() - length + (k + 1) * (length - k)


def induced_projection(structure):
    """Returns the lattice surjection π′: M_τ → M_ℓ induced by the structure,
    which sends v − v′ to e_π(v) − e_π(v′).

    :param CayleyStructure structure: The structure π.
    :rtype: :py:class:`.LatticeProjection`"""

    return structure.projection()
