"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on both backends with identical inputs; outputs are
checked for equality before timings are reported.
"""

import argparse
import time

import numpy as np

from indepgen import kernels
from indepgen.lattice import subgroup_lattice
from indepgen.perm import group_closure, parse_permutation
from indepgen.primes import sieve_primes


def _group(degree, *cycles):
    return group_closure([parse_permutation(c, degree) for c in cycles], degree)


def cases():
    sieve = sieve_primes(10**6)
    s5 = _group(5, "(1 2 3 4 5)", "(1 2)")
    s5_lat = subgroup_lattice(s5)
    # A4 wr C2, order 288
    a4wr = _group(8, "(1 2 3)", "(1 2)(3 4)", "(1 5)(2 6)(3 7)(4 8)")
    a4_lat = subgroup_lattice(a4wr)
    mult, _ = s5.table
    top = s5_lat[s5_lat.top]
    lat_args = lambda lat: (lat.join_table, lat.member, lat.height, lat.top, lat.trivial)
    return [
        ("sieve_flags(10^6)", "sieve_flags", (10**6,)),
        ("delta_table(10^6)", "delta_table", (10**6, sieve.primes)),
        ("dimino_join(Sym(5))", "dimino_join", (mult, np.array([0], dtype=np.int32), top.gens)),
        ("max_independent(Sym(5))", "max_independent", lat_args(s5_lat)),
        (f"max_independent(order {a4wr.order})", "max_independent", lat_args(a4_lat)),
    ]


def best_time(fn, args, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - start)
    return min(times), result


def same(a, b):
    if isinstance(a, tuple):
        return len(a) == len(b) and all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    header = f"{'kernel':34s}" + "".join(f"{b:>12s}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for label, name, fargs in cases():
        results, times = [], []
        for backend in backends:
            previous = kernels.use_backend(backend)
            try:
                t, r = best_time(getattr(kernels, name), fargs, args.repeat)
            finally:
                kernels.use_backend(previous)
            times.append(t)
            results.append(r)
        if len(results) == 2 and not same(results[0], results[1]):
            raise SystemExit(f"backends disagree on {label}")
        row = f"{label:34s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
