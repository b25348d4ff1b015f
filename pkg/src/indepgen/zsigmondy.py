"""Primitive prime divisors of a^n - 1, cyclotomic values and pi*(S) data."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
import math
import random

from .errors import FactorizationBudgetExceeded, InvalidInput

TRIAL_LIMIT = 10**6
MAX_BITS = 128
RHO_ITERATIONS = 2_000_000

MERSENNE_CASE = "mersenne_case"
BINARY_SIX_CASE = "binary_six_case"

# Deterministic for n < 3.3e24 (Sorenson & Webster); beyond that the extra
# bases make the test a strong probable-prime test.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=1)
def _small_primes():
    from .primes import sieve_primes
    return tuple(int(p) for p in sieve_primes(TRIAL_LIMIT).primes)


def _brent(n, max_iter, rng):
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        spent = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            spent += r
            if spent > max_iter:
                return None
        if g == n:
            while True:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                if g > 1:
                    break
        if g != n:
            return g
        max_iter -= spent


def factorize(n: int, trial_limit: int = TRIAL_LIMIT, rho_iterations: int = RHO_ITERATIONS) -> dict[int, int]:
    """Prime factorisation: trial division up to ``trial_limit``, then Brent's rho.

    A composite cofactor that rho cannot split within budget raises
    FactorizationBudgetExceeded.
    """
    if n < 1:
        raise InvalidInput("factorize expects a positive integer")
    factors: dict[int, int] = {}
    for p in _small_primes():
        if p > trial_limit or p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
    if n == 1:
        return factors
    rng = random.Random(n)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack += [root, root]
            continue
        g = _brent(m, rho_iterations, rng)
        if g is None:
            raise FactorizationBudgetExceeded(f"could not split composite {m}")
        stack += [g, m // g]
    return dict(sorted(factors.items()))


def zsigmondy_exception(a: int, n: int) -> str | None:
    """Exception tag for (a, n): n = 2 with a = 2^s - 1 (s >= 2), or (a, n) = (2, 6)."""
    if n == 2 and a >= 3 and (a + 1) & a == 0:
        return MERSENNE_CASE
    if n == 6 and a == 2:
        return BINARY_SIX_CASE
    return None


def has_order_exactly(a: int, n: int, p: int, n_primes) -> bool:
    """ord_p(a) == n, given the primes dividing n."""
    if pow(a, n, p) != 1:
        return False
    return all(pow(a, n // r, p) != 1 for r in n_primes)


@dataclass(frozen=True)
class PpdResult:
    a: int
    n: int
    value: int = field(repr=False)
    primitive_primes: frozenset[int]
    exception: str | None


def primitive_prime_divisors(a: int, n: int, max_bits: int = MAX_BITS) -> PpdResult:
    if a < 2 or n < 2:
        raise InvalidInput("need a, n >= 2")
    if n * math.log2(a) >= max_bits:
        raise FactorizationBudgetExceeded(f"{a}^{n} - 1 exceeds the {max_bits}-bit budget")
    value = a**n - 1
    n_primes = list(factorize(n))
    primes = frozenset(p for p in factorize(value) if has_order_exactly(a, n, p, n_primes))
    exception = None if primes else zsigmondy_exception(a, n)
    return PpdResult(a, n, value, primes, exception)


def verify_residue(a: int, n: int) -> bool:
    """Every primitive prime divisor of a^n - 1 is 1 mod n (vacuous for exceptions)."""
    return all(p % n == 1 for p in primitive_prime_divisors(a, n).primitive_primes)


def _divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=4096)
def cyclotomic_eval(m: int, q: int) -> int:
    """Phi_m(q) = (q^m - 1) / prod_{d | m, d < m} Phi_d(q)."""
    if m < 1:
        raise InvalidInput("m must be positive")
    if q < 2:
        raise InvalidInput("q must exceed 1")
    value = q**m - 1
    for d in _divisors(m)[:-1]:
        value //= cyclotomic_eval(d, q)
    return value


@dataclass
class SweepReport:
    a_max: int
    n_max: int
    checked: int = 0
    exceptions: list[tuple[int, int]] = field(default_factory=list)
    missing: list[tuple[int, int]] = field(default_factory=list)
    residue_failures: list[tuple[int, int, int]] = field(default_factory=list)
    unexpected: list[tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self):
        return not (self.missing or self.residue_failures or self.unexpected)


def zsigmondy_sweep(a_max: int, n_max: int) -> SweepReport:
    """Existence of primitive primes off the exception list, and p = 1 mod n for each."""
    report = SweepReport(a_max, n_max)
    for a in range(2, a_max + 1):
        for n in range(2, n_max + 1):
            res = primitive_prime_divisors(a, n)
            report.checked += 1
            tagged = zsigmondy_exception(a, n)
            if not res.primitive_primes:
                (report.exceptions if tagged else report.missing).append((a, n))
            elif tagged:
                report.unexpected.append((a, n))
            report.residue_failures += [(a, n, p) for p in sorted(res.primitive_primes) if p % n != 1]
    return report


@dataclass(frozen=True)
class SimpleGroupDatum:
    label: str
    order: int
    out_order: int
    pi: frozenset[int]
    pi_star: frozenset[int]

    @property
    def has_two_primes(self):
        return len(self.pi_star) >= 2


def pi_star(order: int, out_order: int, label: str = "") -> SimpleGroupDatum:
    if order < 2 or out_order < 1:
        raise InvalidInput("need order >= 2 and out_order >= 1")
    pi = frozenset(factorize(order))
    return SimpleGroupDatum(label, order, out_order, pi,
                            frozenset(p for p in pi if out_order % p))


def load_simple_groups() -> list[SimpleGroupDatum]:
    """Bundled spot-check table: ``label order out_order`` per line, ``#`` comments."""
    text = resources.files("indepgen").joinpath("data/simple_groups.txt").read_text()
    return parse_simple_groups(text)


def parse_simple_groups(text: str) -> list[SimpleGroupDatum]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise InvalidInput(f"line {lineno}: expected 'label order out_order'")
        label, order, out = parts[0], int(parts[1]), int(parts[2])
        rows.append(pi_star(order, out, label))
    return rows
