"""delta(Sym(n)) via Kaluznin's formula for the rank of Sylow subgroups.

For a prime p with p-adic digits n = sum a_i p^i, the Sylow p-subgroup of
Sym(n) needs d_p(n) = sum_{i>=1} i * a_i generators, and
d(n) = sum_p d_p(n) = delta(Sym(n)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
import math

import numpy as np

from . import kernels
from .errors import InvalidInput, OutOfRange
from .primes import REL_GUARD, BoundReport, PrimeSieve, Violation, prime_count, shared_sieve

LOG2 = math.log(2)
CLASSIFY_LIMIT = 10**6
OFFSETS = (0, 1, 2, 3)


def _is_prime(p):
    if p < 2:
        return False
    return all(p % q for q in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class PadicExpansion:
    n: int
    p: int
    digits: tuple[int, ...]

    @property
    def length(self):
        """ell(p, n): index of the leading digit."""
        return len(self.digits) - 1


@dataclass(frozen=True)
class SymDeltaRecord:
    n: int
    contributions: dict[int, int] = field(repr=False)
    delta: int
    offset: int


@dataclass(frozen=True)
class StopBoundRecord:
    n: int
    d: int
    lower: float
    upper_tight: float
    upper_loose: float
    lower_ok: bool
    tight_ok: bool
    chain_ok: bool


def padic_digits(n: int, p: int) -> PadicExpansion:
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    if not _is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    digits, m = [], n
    while m:
        m, r = divmod(m, p)
        digits.append(r)
    return PadicExpansion(n, p, tuple(digits))


def d_p_sym(n: int, p: int) -> int:
    """Rank of a Sylow p-subgroup of Sym(n); 0 when p > n."""
    if p > n:
        return 0
    total, i = 0, 0
    while n:
        n, a = divmod(n, p)
        total += i * a
        i += 1
    return total


def delta_sym(n: int, sieve: PrimeSieve | None = None) -> SymDeltaRecord:
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    sieve = sieve or shared_sieve(n)
    if sieve.limit < n:
        raise OutOfRange(f"sieve limit {sieve.limit} < n = {n}")
    primes = sieve.primes[: prime_count(n, sieve)]
    contributions = {int(p): d_p_sym(n, int(p)) for p in primes}
    delta = sum(contributions.values())
    return SymDeltaRecord(n, contributions, delta, delta - (n - 1))


def delta_range(n_max: int, sieve: PrimeSieve | None = None) -> np.ndarray:
    """Array whose entry n is d(n), for 0 <= n <= n_max (kernel path)."""
    sieve = sieve or shared_sieve(n_max)
    if sieve.limit < n_max:
        raise OutOfRange(f"sieve limit {sieve.limit} < {n_max}")
    return kernels.delta_table(n_max, sieve.primes)


@dataclass
class Classification:
    n_max: int
    lists: dict[int, list[int]]
    residual_count: int
    anomalies: list[int]

    @property
    def ok(self):
        return not self.anomalies


def classify_range(n_max: int, sieve: PrimeSieve | None = None) -> Classification:
    """Partition 1..n_max by d(n) - (n - 1) in {0, 1, 2, 3}, or negative.

    Any n with offset > 3 lands in ``anomalies``.
    """
    if n_max < 1:
        raise InvalidInput("n_max must be >= 1")
    d = delta_range(n_max, sieve)
    n = np.arange(n_max + 1)
    offset = d[1:] - (n[1:] - 1)
    lists = {k: [int(x) + 1 for x in np.flatnonzero(offset == k)] for k in OFFSETS}
    anomalies = [int(x) + 1 for x in np.flatnonzero(offset > 3)]
    residual = int(np.count_nonzero(offset < 0))
    return Classification(n_max, lists, residual, anomalies)


def split_d(n: int, sieve: PrimeSieve) -> tuple[int, int]:
    """(d'(n), d''(n)): contributions of primes p <= sqrt(n) and sqrt(n) < p <= n."""
    if n < 2:
        raise InvalidInput("n must be >= 2")
    if sieve.limit < n:
        raise OutOfRange(f"sieve limit {sieve.limit} < n = {n}")
    root = math.isqrt(n)
    small = large = 0
    for p in sieve.primes[: prime_count(n, sieve)]:
        p = int(p)
        if p <= root:  # p <= sqrt(n) iff p <= isqrt(n) for integer p
            small += d_p_sym(n, p)
        else:
            large += d_p_sym(n, p)
    return small, large


def dm2_closed_form(n: int, sieve: PrimeSieve) -> int:
    """sum_{i=1}^{isqrt n} pi(n/i) - isqrt(n) * pi(sqrt n), in exact integers."""
    root = math.isqrt(n)
    total = sum(prime_count(n // i, sieve) for i in range(1, root + 1))
    return total - root * prime_count(root, sieve)


def verify_dm2_identity(n: int, sieve: PrimeSieve) -> bool:
    return split_d(n, sieve)[1] == dm2_closed_form(n, sieve)


def stop_bounds(n):
    """(lower, upper_tight, upper_loose) for d(n); accepts scalars or arrays."""
    n = np.asarray(n, dtype=float)
    log_n = np.log(n)
    root = np.sqrt(n)
    base = n * LOG2
    lower = base - 12 * n / log_n
    tight = (base + 19 * n / (2 * log_n) + 137 * n / (2 * log_n**2)
             + 4 * root / log_n + 1.5 * root * log_n)
    loose = base + 112 * n / log_n
    return lower, tight, loose


def _le(lhs, rhs):
    return lhs - rhs <= REL_GUARD * np.abs(rhs)


def stop_bound_record(n: int, d: int) -> StopBoundRecord:
    lower, tight, loose = (float(v) for v in stop_bounds(n))
    return StopBoundRecord(n, d, lower, tight, loose,
                           bool(_le(lower, d)), bool(_le(d, tight)), bool(_le(tight, loose)))


def stop_flags(n_from: int, n_to: int, d: np.ndarray):
    """Vectorised (lower_ok, tight_ok, chain_ok) for n_from..n_to; ``d`` indexed by n."""
    ns = np.arange(n_from, n_to + 1)
    lower, tight, loose = stop_bounds(ns)
    dv = d[n_from : n_to + 1].astype(float)
    return ns, dv, (lower, tight, loose), (_le(lower, dv), _le(dv, tight), _le(tight, loose))


def verify_stop_bounds(n_from: int, n_to: int, sieve: PrimeSieve) -> BoundReport:
    """n log 2 - 12n/log n <= d(n) <= tight upper <= n log 2 + 112n/log n."""
    if not 2 <= n_from <= n_to <= sieve.limit:
        raise OutOfRange(f"need 2 <= {n_from} <= {n_to} <= {sieve.limit}")
    d = delta_range(n_to, sieve)
    ns, dv, (lower, tight, loose), (ok_lo, ok_t, ok_c) = stop_flags(n_from, n_to, d)
    report = BoundReport("delta-sym-bounds", (n_from, n_to))
    for name, ok, lhs, rhs in (("lower", ok_lo, lower, dv), ("tight", ok_t, dv, tight),
                               ("chain", ok_c, tight, loose)):
        report.parts[name] = (n_from, n_to)
        for i in np.flatnonzero(~ok):
            report.violations.append(Violation(int(ns[i]), float(lhs[i]), float(rhs[i]), name))
    return report
