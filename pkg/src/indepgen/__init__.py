"""Independent generating sets of finite groups and the number theory around them.

Exhaustive computation of d(G), m(G), Sylow ranks and chief-series data for
small permutation groups, the Sylow rank sum of symmetric groups, primitive
prime divisors, and wreath product ranks.
"""

from .errors import (Budget, BudgetExceeded, CheckFailed, DEFAULT_BUDGET, FactorizationBudgetExceeded,
                     InvalidInput, OutOfRange)
from .kernels import backend_name
from .perm import Permutation, PermGroup, group_closure, parse_permutation

__version__ = "0.1.0"

__all__ = [
    "Budget", "BudgetExceeded", "CheckFailed", "DEFAULT_BUDGET", "FactorizationBudgetExceeded",
    "InvalidInput", "OutOfRange", "Permutation", "PermGroup", "backend_name", "group_closure",
    "parse_permutation", "__version__",
]
