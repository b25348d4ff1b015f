"""Prime sieve, prime counting and explicit prime-bound checks.

All logarithms are natural. Floating-point inequalities ``lhs <= rhs`` are
reported as violated only when ``lhs - rhs > REL_GUARD * |rhs|``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import math
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import BudgetExceeded, InvalidInput, OutOfRange

REL_GUARD = 1e-9
SIEVE_MEMORY_LIMIT = 10**8
DEFAULT_SIEVE_LIMIT = 10**6


@dataclass(frozen=True)
class PrimeSieve:
    limit: int
    is_prime: np.ndarray = field(repr=False)
    primes: np.ndarray = field(repr=False)
    cumulative_count: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.primes)


class Violation(NamedTuple):
    x: int
    lhs: float
    rhs: float
    check: str


@dataclass
class BoundReport:
    """Outcome of checking ``lhs <= rhs`` over a range; ``parts`` holds per-inequality ranges."""

    name: str
    range_checked: tuple[int, int]
    violations: list[Violation] = field(default_factory=list)
    parts: dict[str, tuple[int, int]] = field(default_factory=dict)

    @property
    def passed(self):
        return not self.violations

    def merge(self, other: BoundReport):
        self.violations.extend(other.violations)
        self.parts.update(other.parts)


def sieve_primes(limit: int, max_limit: int = SIEVE_MEMORY_LIMIT) -> PrimeSieve:
    if limit < 1:
        raise InvalidInput(f"sieve limit must be >= 1, got {limit}")
    if limit > max_limit:
        raise BudgetExceeded(f"sieve limit {limit} exceeds memory budget {max_limit}")
    flags = kernels.sieve_flags(limit).astype(bool)
    primes = np.flatnonzero(flags).astype(np.int64)
    counts = np.cumsum(flags, dtype=np.int64)
    for arr in (flags, primes, counts):
        arr.flags.writeable = False
    return PrimeSieve(limit, flags, primes, counts)


_shared: PrimeSieve | None = None


def shared_sieve(limit: int) -> PrimeSieve:
    """A process-wide sieve covering at least ``limit`` (grown on demand)."""
    global _shared
    if _shared is None or _shared.limit < limit:
        _shared = sieve_primes(max(limit, 1000))
    return _shared


def prime_count(x: float, sieve: PrimeSieve) -> int:
    """pi(x), the number of primes <= x, for real x >= 0."""
    n = math.floor(x)
    if n < 2:
        return 0
    if n > sieve.limit:
        raise OutOfRange(f"pi({x}) needs sieve limit >= {n}, have {sieve.limit}")
    return int(sieve.cumulative_count[n])


def nth_prime(k: int, sieve: PrimeSieve) -> int:
    if k < 1:
        raise InvalidInput("k must be positive")
    if k > len(sieve.primes):
        raise OutOfRange(f"sieve to {sieve.limit} holds only {len(sieve.primes)} primes")
    return int(sieve.primes[k - 1])


def _collect(name, xs, lhs, rhs):
    """Violations of lhs <= rhs over aligned arrays, with the relative guard."""
    bad = np.flatnonzero(lhs - rhs > REL_GUARD * np.abs(rhs))
    return [Violation(int(xs[i]), float(lhs[i]), float(rhs[i]), name) for i in bad]


def verify_rs_bounds(x_max: int, sieve: PrimeSieve) -> BoundReport:
    """Rosser-Schoenfeld: pi(x) <= x/log x * (1 + 3/(2 log x)) for x > 1 and
    pi(x) >= x/(log x - 1/2) for x >= 67, at every integer up to ``x_max``."""
    if x_max > sieve.limit:
        raise OutOfRange(f"x_max {x_max} exceeds sieve limit {sieve.limit}")
    report = BoundReport("rosser-schoenfeld", (2, x_max))
    if x_max >= 2:
        xs = np.arange(2, x_max + 1)
        x = xs.astype(float)
        log_x = np.log(x)
        pi = sieve.cumulative_count[2 : x_max + 1].astype(float)
        upper = x / log_x * (1 + 3 / (2 * log_x))
        report.violations += _collect("rs-upper", xs, pi, upper)
        report.parts["rs-upper"] = (2, x_max)
    if x_max >= 67:
        xs = np.arange(67, x_max + 1)
        x = xs.astype(float)
        pi = sieve.cumulative_count[67 : x_max + 1].astype(float)
        lower = x / (np.log(x) - 0.5)
        report.violations += _collect("rs-lower", xs, lower, pi)
        report.parts["rs-lower"] = (67, x_max)
    else:
        report.parts["rs-lower"] = (67, 66)
    return report


def verify_pk_bounds(k_max: int, sieve: PrimeSieve) -> BoundReport:
    """k log k < p_k (k >= 1); p_k < k(log k + log log k) (k >= 6);
    (p_k - 1)/log p_k <= k and (p_k - 1)/log^2 p_k <= k/(log k + log log k) (k >= 2).

    The strict inequalities are checked with the same relative guard as the
    others; no p_k comes close to either side in practice.
    """
    if k_max > len(sieve.primes):
        raise OutOfRange(f"need {k_max} primes, sieve holds {len(sieve.primes)}")
    report = BoundReport("nth-prime", (1, k_max))
    if k_max < 1:
        return report
    ks = np.arange(1, k_max + 1)
    k = ks.astype(float)
    pk = sieve.primes[:k_max].astype(float)
    log_k = np.log(k)
    report.violations += _collect("pk-lower", ks, k * log_k, pk)
    report.parts["pk-lower"] = (1, k_max)
    if k_max >= 6:
        s = slice(5, None)
        upper = k[s] * (log_k[s] + np.log(log_k[s]))
        report.violations += _collect("pk-upper", ks[s], pk[s], upper)
    report.parts["pk-upper"] = (6, k_max)
    if k_max >= 2:
        s = slice(1, None)
        ll = log_k[s] + np.log(log_k[s])
        log_p = np.log(pk[s])
        report.violations += _collect("eq5", ks[s], (pk[s] - 1) / log_p, k[s])
        report.violations += _collect("eq7", ks[s], (pk[s] - 1) / log_p**2, k[s] / ll)
    report.parts["eq5"] = report.parts["eq7"] = (2, k_max)
    return report


def stup_constant(eta: float, n_max: int, sieve: PrimeSieve) -> tuple[float, int]:
    """max over 2 <= n <= n_max of n / pi(n)**eta, and the first n attaining it."""
    if eta <= 1:
        raise InvalidInput("eta must exceed 1")
    if n_max < 2:
        raise InvalidInput("n_max must be >= 2")
    if n_max > sieve.limit:
        raise OutOfRange(f"n_max {n_max} exceeds sieve limit {sieve.limit}")
    n = np.arange(2, n_max + 1, dtype=float)
    ratio = n / sieve.cumulative_count[2 : n_max + 1].astype(float) ** eta
    i = int(np.argmax(ratio))
    return float(ratio[i]), i + 2
