"""Expected dimensions, normal bundles of torus-fixed planes, and mechanical
checks of the hypotheses under which the part V_{π,k} of the Fano scheme of a
general complete intersection is non-empty and smooth of the expected
dimension.

Every verdict here is about a *sufficiently general* complete intersection X.
No X is ever constructed."""

import logging
from enum import Enum
from math import comb
from .budget import default_budget
from .cayley import CayleyStructure, pi_faces, component_dimension
from .divisors import (
 DivisorClass, ToricDivisor, restriction_degree,
 satisfies_ddagger, is_basepoint_free, is_effective, section_points,
 facet_normals, _restricts_surjectively
)
from .lattice import dot, subtract
from .polytopes import PointConfiguration, facets_containing, is_smooth

logger = logging.getLogger(__name__)

class Verdict(Enum):
    """The outcome of a hypothesis check."""

    HOLDS = "holds"
    FAILS = "fails"
    NOT_CHECKABLE = "not-checkable"



class Condition:
    """One checked hypothesis.

    :param str name: The condition's name.
    :param Verdict verdict: Its outcome.
    :param witness: JSON-ready data explaining the outcome, or ``None``."""

    def __init__(self, name, verdict, witness=None):
        if not isinstance(name, str):
            raise TypeError("name must be str, not '%s'" % str(name))
        if not isinstance(verdict, Verdict):
            raise TypeError("verdict must be Verdict, not '%s'" % str(verdict))
        self._name = name
        self._verdict = verdict
        self._witness = witness


    def __repr__(self):
        return "<Condition '%s' (%s)>" % (self._name, self._verdict.value)


    def name(self):
        return self._name


    def verdict(self):
        return self._verdict


    def witness(self):
        return self._witness


    def holds(self):
        return self._verdict is Verdict.HOLDS


    def to_dict(self):
        return {
         "name": self._name, "verdict": self._verdict.value, "witness": self._witness
        }



def _verdict(value):
    return Verdict.HOLDS if value else Verdict.FAILS



class ExpectedDimensionInput:
    """The data (𝒜, π, α₁…α_r, k) of a Fano scheme problem.

    :param PointConfiguration configuration: The configuration 𝒜.
    :param CayleyStructure structure: A maximal Cayley structure π.
    :param list classes: The divisor classes α_i of the complete intersection.
    :param int k: The dimension of the planes.
    :param Budget budget: Limits section enumeration in the checks.
    :raises ValueError: if k is negative or longer than π, or some class is\
    trivial or (on smooth configurations) not effective."""

    def __init__(self, configuration, structure, classes, k, budget=None):
        if not isinstance(configuration, PointConfiguration):
            raise TypeError(
             "configuration must be PointConfiguration, not '%s'" % str(configuration)
            )
        if not isinstance(structure, CayleyStructure):
            raise TypeError("structure must be CayleyStructure, not '%s'" % str(structure))
        if not isinstance(k, int) or isinstance(k, bool):
            raise TypeError("k must be int, not '%s'" % str(k))
        if k < 0 or k > structure.length():
            raise ValueError(
             "k must be between 0 and the length %i, not %i" % (structure.length(), k)
            )
        classes = [
         c.divisor_class() if isinstance(c, ToricDivisor) else c for c in classes
        ]
        self._smooth = is_smooth(configuration)
        for i, c in enumerate(classes):
            if not isinstance(c, DivisorClass):
                raise TypeError("Class %i is not a DivisorClass" % i)
            if c.is_zero():
                raise ValueError("Class %i is trivial" % i)
            if self._smooth and not is_effective(configuration, c, budget):
                raise ValueError("Class %i is not effective" % i)
        self._configuration = configuration
        self._structure = structure
        self._classes = tuple(classes)
        self._k = k
        self._deltas = None


    def __repr__(self):
        return "<ExpectedDimensionInput (k=%i, %i classes)>" % (self._k, len(self._classes))


    def configuration(self):
        return self._configuration


    def structure(self):
        return self._structure


    def classes(self):
        return self._classes


    def k(self):
        return self._k


    def is_smooth(self):
        return self._smooth


    def deltas(self):
        """Returns the restriction degrees δ_i of the classes to the linear
        space of π.

        :rtype: ``tuple``
        :raises NotSmoothError: if 𝒜 is not smooth."""

        if self._deltas is None:
            self._deltas = tuple(
             restriction_degree(self._configuration, c, self._structure)
             for c in self._classes
            )
        return self._deltas



def _rank_contribution(k, delta):
    return comb(k + delta, k) if delta >= 0 else 0


def expected_dimension(data):
    """Returns the expected dimension
    φ = dim τ − ℓ + (k+1)(ℓ−k) − Σ C(k+δ_i, k), where a negative δ_i
    contributes nothing.

    :param ExpectedDimensionInput data: The problem.
    :rtype: ``int``"""

    k = data.k()
    return component_dimension(data.structure(), k) - sum(
     _rank_contribution(k, delta) for delta in data.deltas()
    )


def _check_chain(configuration, structure, outer, inner):
    length = structure.length()
    if outer not in pi_faces(structure, length):
        raise ValueError("%s is not an %i-dimensional pi-face" % (repr(outer), length))
    if not inner <= outer or inner.dim() > length:
        raise ValueError("%s is not a face of %s" % (repr(inner), repr(outer)))
    if inner not in pi_faces(structure, inner.dim()):
        raise ValueError("%s is not a pi-face" % repr(inner))


def normal_bundle_splitting(configuration, structure, outer, inner):
    """Returns, for each facet F containing the π-face σ = ``inner``, the
    degree of O(D_F) on the plane L_σ and the facet's category:
    ``"transverse"`` if F does not contain σ′ = ``outer``, ``"tangent"`` if F
    contains σ′ but not τ, and ``"normal"`` if F contains τ.

    :param PointConfiguration configuration: A smooth configuration.
    :param CayleyStructure structure: The structure π.
    :param Face outer: An ℓ-dimensional π-face σ′.
    :param Face inner: A face σ of σ′.
    :returns: A ``list`` of ``(facet, degree, category)`` in facet order.
    :raises ValueError: if the faces are not a π-face chain.
    :raises NotSmoothError: if the configuration is not smooth."""

    _check_chain(configuration, structure, outer, inner)
    restricted = structure.restrict(inner)
    tau = structure.face()
    result = []
    for facet in facets_containing(configuration, inner):
        degree = restriction_degree(
         configuration, ToricDivisor.prime(configuration, facet), restricted
        )
        if not outer <= facet:
            category = "transverse"
        elif not tau <= facet:
            category = "tangent"
        else:
            category = "normal"
        result.append((facet, degree, category))
    return result


def normal_bundle_degrees(configuration, structure, outer, inner):
    """Returns the degrees of the line bundles the normal bundle of L_σ in the
    toric variety splits into, largest first. On smooth input there are
    ℓ−k ones, dim τ−ℓ zeros and m−dim τ negative degrees.

    :rtype: ``list``"""

    return sorted([
     degree for _, degree, _ in
     normal_bundle_splitting(configuration, structure, outer, inner)
    ], reverse=True)



class HypothesisReport:
    """The outcome of :py:func:`.check_hypotheses`: the restriction degrees,
    the expected dimension, each checked condition and the verdicts derived
    from them."""

    def __init__(self, data, mode, conditions, verdicts, deltas, phi):
        self._data = data
        self._mode = mode
        self._conditions = tuple(conditions)
        self._verdicts = dict(verdicts)
        self._deltas = deltas
        self._phi = phi


    def __repr__(self):
        return "<HypothesisReport (%s mode, %i conditions)>" % (
         self._mode, len(self._conditions)
        )


    def input(self):
        return self._data


    def mode(self):
        return self._mode


    def conditions(self):
        return self._conditions


    def condition(self, name):
        """Returns the condition with the given name.

        :raises KeyError: if there is no such condition."""

        for condition in self._conditions:
            if condition.name() == name:
                return condition
        raise KeyError(name)


    def verdicts(self):
        return dict(self._verdicts)


    def verdict(self, name):
        return self._verdicts[name]


    def deltas(self):
        return self._deltas


    def phi(self):
        return self._phi


    def all_hold(self):
        return all(condition.holds() for condition in self._conditions)


    def lemma_numbers(self):
        """Returns the two numbers a+b−k−r and a(k+1)+b−ΣC(k+δ_i,k), with
        a = ℓ−k and b = dim τ−ℓ, whose non-negativity the dimension estimates
        for planes through a fixed point rest on. ``None`` when the degrees
        are unknown.

        :rtype: ``dict``"""

        if self._deltas is None:
            return None
        structure, k = self._data.structure(), self._data.k()
        a = structure.length() - k
        b = structure.face().dim() - structure.length()
        return {
         "a+b-k-r": a + b - k - len(self._deltas),
         "a(k+1)+b-sum": a * (k + 1) + b - sum(
          _rank_contribution(k, delta) for delta in self._deltas
         )
        }


    def to_dict(self):
        """Returns the report as a JSON-ready ``dict``.

        :rtype: ``dict``"""

        structure, k = self._data.structure(), self._data.k()
        return {
         "mode": self._mode,
         "deltas": list(self._deltas) if self._deltas is not None else None,
         "phi": self._phi,
         "component_dimension": component_dimension(structure, k),
         "fixed_planes": len(pi_faces(structure, k)),
         "fano_scheme_smooth": self._data.is_smooth(),
         "lemma_numbers": self.lemma_numbers(),
         "conditions": [condition.to_dict() for condition in self._conditions],
         "verdicts": {name: v.value for name, v in sorted(self._verdicts.items())}
        }



def _face_chain(configuration, structure, classes, k, budget):
    sections = {}
    for outer in pi_faces(structure, structure.length()):
        for inner in pi_faces(structure, k):
            if not inner <= outer:
                continue
            restricted = structure.restrict(inner)
            transverse = [
             facet for facet in facets_containing(configuration, inner)
             if not outer <= facet
            ]
            good = True
            for c in classes:
                for facet in transverse:
                    shifted = c - ToricDivisor.prime(configuration, facet).divisor_class()
                    key = shifted.representative().coefficients()
                    if key not in sections:
                        sections[key] = section_points(configuration, shifted, budget)
                    if not _restricts_surjectively(
                     configuration, shifted, restricted, sections[key]
                    ):
                        good = False
                        break
                if not good:
                    break
            if good:
                return outer, inner
    return None


def _all_basepoint_free(configuration, classes):
    for i, c in enumerate(classes):
        if not is_basepoint_free(configuration, c):
            return (i, None)
        for f, facet in enumerate(configuration.facets()):
            shifted = c - ToricDivisor.prime(configuration, facet).divisor_class()
            if not is_basepoint_free(configuration, shifted):
                return (i, f)
    return None


def check_hypotheses(data, mode="theorem", budget=None):
    """Checks the hypotheses under which V_{π,k} is non-empty for general X.

    In ``"theorem"`` mode the conditions are: smoothness of 𝒜, surjective
    restriction of every class along every structure below π, a chain of
    π-faces σ ≺ σ′ along which each α_i − [D_F] restricts surjectively,
    φ ≥ 0, all δ_i ≥ 0, dim τ − 2k − r ≥ 0, and one of the alternatives
    some δ_i ≥ 3, two δ_i ≥ 2, or ℓ − 2k − #{δ_i = 1} ≥ 0. In
    ``"corollary"`` mode the second and third conditions are replaced by
    basepoint freeness of every α_i and every α_i − [D_F].

    Failures are verdicts, never exceptions.

    :param ExpectedDimensionInput data: The problem.
    :param str mode: ``"theorem"`` or ``"corollary"``.
    :param Budget budget: The resource budget.
    :rtype: :py:class:`.HypothesisReport`
    :raises ValueError: if the mode is unknown."""

    if mode not in ("theorem", "corollary"):
        raise ValueError("mode must be 'theorem' or 'corollary', not '%s'" % str(mode))
    budget = budget or default_budget()
    configuration, structure = data.configuration(), data.structure()
    classes, k = data.classes(), data.k()
    tau, length = structure.face(), structure.length()
    conditions = [Condition("smooth", _verdict(data.is_smooth()))]
    if not data.is_smooth():
        names = ["ddagger", "face_chain"] if mode == "theorem" else ["basepoint_free"]
        names += [
         "phi_nonnegative", "deltas_nonnegative", "dimension_bound",
         "lemma_alternatives"
        ]
        conditions += [Condition(name, Verdict.NOT_CHECKABLE) for name in names]
        verdicts = {
         name: Verdict.NOT_CHECKABLE for name in (
          "lower_bound", "dimension_equals_phi", "empty_for_general_x",
          "nonempty", "smooth_of_dimension_phi"
         )
        }
        return HypothesisReport(data, mode, conditions, verdicts, None, None)

    deltas = data.deltas()
    phi = expected_dimension(data)
    ddagger, witness = satisfies_ddagger(configuration, classes, structure, k, budget)
    if mode == "theorem":
        conditions.append(Condition("ddagger", _verdict(ddagger), None if ddagger else {
         "class": witness[0], "structure": witness[1].to_dict()
        }))
        chain = _face_chain(configuration, structure, classes, k, budget)
        conditions.append(Condition("face_chain", _verdict(chain is not None), None if
         chain is None else [[list(p) for p in face.points()] for face in chain]
        ))
    else:
        failure = _all_basepoint_free(configuration, classes)
        conditions.append(Condition(
         "basepoint_free", _verdict(failure is None),
         None if failure is None else {"class": failure[0], "facet": failure[1]}
        ))
    r = len(classes)
    ones = len([d for d in deltas if d == 1])
    conditions += [
     Condition("phi_nonnegative", _verdict(phi >= 0), phi),
     Condition("deltas_nonnegative", _verdict(min(deltas, default=0) >= 0), list(deltas)),
     Condition("dimension_bound", _verdict(tau.dim() - 2 * k - r >= 0), tau.dim() - 2 * k - r),
     Condition("lemma_alternatives", _verdict(
      any(d >= 3 for d in deltas) or len([d for d in deltas if d >= 2]) >= 2
      or length - 2 * k - ones >= 0
     ), length - 2 * k - ones)
    ]
    nonempty = all(condition.holds() for condition in conditions)
    if ddagger and phi < 0:
        empty = Verdict.HOLDS
    elif nonempty:
        empty = Verdict.FAILS
    else:
        empty = Verdict.NOT_CHECKABLE
    verdicts = {
     "lower_bound": Verdict.HOLDS,
     "dimension_equals_phi": _verdict(ddagger and phi >= 0) if ddagger else
      Verdict.NOT_CHECKABLE,
     "empty_for_general_x": empty,
     "nonempty": Verdict.HOLDS if nonempty else (
      Verdict.FAILS if empty is Verdict.HOLDS else Verdict.NOT_CHECKABLE
     ),
     "smooth_of_dimension_phi": Verdict.HOLDS if nonempty else Verdict.NOT_CHECKABLE
    }
    logger.debug(
     "Hypotheses for %s, k=%i (%s mode): deltas %s, phi %i" % (
      repr(structure), k, mode, str(list(deltas)), phi
     )
    )
    return HypothesisReport(data, mode, conditions, verdicts, deltas, phi)


def _in_semigroup(target, generators, grading):
    generators = [g for g in generators if any(g)]
    memo = {}
    def member(vector):
        if not any(vector):
            return True
        if vector not in memo:
            height = dot(grading, vector)
            memo[vector] = height > 0 and any(
             dot(grading, g) <= height and member(subtract(vector, g))
             for g in generators
            )
        return memo[vector]
    return member(tuple(target))


def fiber_semigroups_agree(configuration, structure):
    """Checks that the semigroups generated by π⁻¹(e_j) − v_j, for the
    vertices v_j of the first ℓ-dimensional π-face, do not depend on j. Each
    semigroup's generators are tested for membership in every other.

    :param PointConfiguration configuration: A smooth configuration.
    :param CayleyStructure structure: A maximal structure π.
    :rtype: ``bool``"""

    length = structure.length()
    face = pi_faces(structure, length)[0]
    normals = facet_normals(configuration)
    facets = configuration.facets()
    generators, gradings = [], []
    for j, block in enumerate(structure.blocks()):
        vertex = [i for i in face if structure.fiber_of(i) == j][0]
        origin = configuration.point(vertex)
        generators.append([
         subtract(configuration.point(i), origin) for i in block if i != vertex
        ])
        grading = [0] * configuration.ambient_rank()
        for (normal, _), facet in zip(normals, facets):
            if vertex in facet:
                grading = [a + b for a, b in zip(grading, normal)]
        gradings.append(grading)
    for i in range(length + 1):
        for j in range(length + 1):
            if i != j and not all(
             _in_semigroup(g, generators[i], gradings[i]) for g in generators[j]
            ):
                return False
    return True
