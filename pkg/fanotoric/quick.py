"""Ready-made configurations and classes: simplices, their dilates and
products, and the configurations of the standard examples."""

from itertools import product as cartesian
from .polytopes import PointConfiguration, LatticePolytope, check_point
from .divisors import ToricDivisor, facet_normals

def simplex(n):
    """Returns the configuration {0, e₁, …, e_n} ⊂ ℤ^n of projective n-space.

    :param int n: The dimension.
    :rtype: :py:class:`.PointConfiguration`"""

    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("n must be int, not '%s'" % str(n))
    if n < 0:
        raise ValueError("n must be non-negative, not %i" % n)
    return PointConfiguration(
     [tuple([0] * n)] + [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    )


def dilate(configuration, d):
    """Returns all lattice points of d times the convex hull of a
    configuration, which embeds its toric variety by O(d).

    :param PointConfiguration configuration: The configuration.
    :param int d: The positive factor.
    :rtype: :py:class:`.PointConfiguration`"""

    if not isinstance(d, int) or isinstance(d, bool):
        raise TypeError("d must be int, not '%s'" % str(d))
    if d < 1:
        raise ValueError("d must be positive, not %i" % d)
    polytope = d * LatticePolytope(list(configuration.points()))
    return PointConfiguration(polytope.lattice_points())


def product(*configurations):
    """Returns the product configuration, whose toric variety is the product
    of the factors' varieties.

    :rtype: :py:class:`.PointConfiguration`"""

    if len(configurations) == 0:
        raise ValueError("Cannot take the product of no configurations")
    return PointConfiguration([
     sum(points, ()) for points in cartesian(*[c.points() for c in configurations])
    ])


def product_of_simplices(*dimensions):
    """Returns the Segre configuration Δ_{m₁} × ⋯ × Δ_{m_q}.

    :rtype: :py:class:`.PointConfiguration`"""

    return product(*[simplex(m) for m in dimensions])


def facet_divisor(configuration, normal):
    """Returns the prime divisor D_F of the facet with the given primitive
    inner normal.

    :param PointConfiguration configuration: The configuration.
    :param normal: The inner normal of the facet.
    :rtype: :py:class:`.ToricDivisor`
    :raises ValueError: if no facet has this normal."""

    normal = check_point(normal, name="normal")
    for (facet_normal, _), facet in zip(facet_normals(configuration), configuration.facets()):
        if facet_normal == normal:
            return ToricDivisor.prime(configuration, facet)
    raise ValueError("%s has no facet with normal %s" % (repr(configuration), str(normal)))


def multidegree(configuration, degrees):
    """Returns the class of multidegree (a₁, …, a_q) on a product of
    simplices. The j-th hyperplane class is the divisor of the facet whose
    inner normal is minus the sum of the j-th factor's coordinate vectors.

    :param PointConfiguration configuration: A product of simplices.
    :param degrees: The degrees a_j, one per factor.
    :rtype: :py:class:`.DivisorClass`
    :raises ValueError: if the number of degrees is not the number of factors."""

    hyperplanes = sorted(
     [(normal, facet) for (normal, _), facet in
      zip(facet_normals(configuration), configuration.facets())
      if any(normal) and all(v in (0, -1) for v in normal)],
     key=lambda pair: [v == 0 for v in pair[0]]
    )
    if len(degrees) != len(hyperplanes):
        raise ValueError(
         "%s has %i factors, not %i" % (repr(configuration), len(hyperplanes), len(degrees))
        )
    divisor = ToricDivisor(configuration, {
     facet: degree for (_, facet), degree in zip(hyperplanes, degrees)
    })
    return divisor.divisor_class()


def hyperplane_class(configuration):
    """Returns the hyperplane class of a simplex configuration.

    :rtype: :py:class:`.DivisorClass`"""

    return multidegree(configuration, (1,))


def blowup_p2_p5():
    """Returns the 15 points of ℤ⁵ with u₁+u₂+u₃ ≥ 1, all u_i ≥ 0 and
    Σu_i ≤ 2, which embed the blowup of P⁵ in a plane by 2H−E. Here H is the
    divisor of the facet Σu_i = 2 and E that of the facet u₁+u₂+u₃ = 1.

    :rtype: :py:class:`.PointConfiguration`"""

    return PointConfiguration.from_columns([
     [2, 0, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0],
     [0, 2, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0],
     [0, 0, 2, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1],
     [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0],
     [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1]
    ])


def blowup_point_times_simplex(q):
    """Returns the product of {(1,0), (0,1), (2,0), (1,1), (0,2)}, the
    configuration of the blowup of P² in a point embedded by 2H−E, with the
    simplex of P^q. E is the divisor of the facet x+y = 1 and F the hyperplane
    class of the second factor.

    :param int q: The dimension of the second factor.
    :rtype: :py:class:`.PointConfiguration`"""

    return product(
     PointConfiguration([(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]), simplex(q)
    )
