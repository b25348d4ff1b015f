"""Exceptions and resource budgets shared across the package."""

from dataclasses import dataclass, replace
import time


class BudgetExceeded(RuntimeError):
    """A configured size or time budget was hit; results would be partial."""


class FactorizationBudgetExceeded(BudgetExceeded):
    pass


class OutOfRange(ValueError):
    """Query outside the range covered by a precomputed table."""


class InvalidInput(ValueError):
    pass


class CheckFailed(AssertionError):
    """An identity that must hold (a theorem, or a cross-check) failed."""


@dataclass(frozen=True)
class Budget:
    """Hard limits for exhaustive computations.

    ``closure_order``  max elements materialised by group closure
    ``lattice_order``  max group order for subgroup lattices and m(G)
    ``table_order``    max group order for a full Cayley table
    ``time_ms``        wall-clock cap for the independent-set search
    """

    closure_order: int = 200_000
    lattice_order: int = 2000
    table_order: int = 2500
    time_ms: float | None = None

    def deadline(self):
        if self.time_ms is None:
            return float("inf")
        return time.perf_counter() + self.time_ms / 1000.0

    def with_(self, **changes):
        return replace(self, **changes)


DEFAULT_BUDGET = Budget()
