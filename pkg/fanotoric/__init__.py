from .budget import Budget, SearchBudgetExceeded
from .polytopes import PointConfiguration, LatticePolytope, NotSmoothError
from .cayley import CayleyStructure, maximal_cayley_structures
from .divisors import ToricDivisor, DivisorClass
from .analysis import ExpectedDimensionInput, check_hypotheses, expected_dimension
from .chow import count_k_planes, full_count, schubert_oracle
from .problems import parse_problem, run
from .quick import simplex, product_of_simplices, multidegree, facet_divisor

__version__ = "0.1.0"
__author__ = "The fanotoric developers"
