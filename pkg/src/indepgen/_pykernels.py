"""Pure-Python/numpy implementations of the hot kernels.

These define the reference semantics; ``_kernels.pyx`` mirrors them
one-for-one and the test-suite runs both backends against each other.
"""

import time

import numpy as np

NAME = "python"


def sieve_flags(limit):
    """Eratosthenes sieve; ``flags[x] == 1`` iff x is prime, for 0 <= x <= limit."""
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0] = 0
    if limit >= 1:
        flags[1] = 0
    p = 2
    while p * p <= limit:
        if flags[p]:
            start = p * p
            flags[start::p] = bytes(len(range(start, limit + 1, p)))
        p += 1
    return np.frombuffer(bytes(flags), dtype=np.uint8).copy()


def delta_table(n_max, primes):
    """d(n) = delta(Sym(n)) for every 0 <= n <= n_max.

    Adding one to n-1 in base p carries through the k trailing zero digits
    of n (p^k || n), which changes sum(i * a_i) by k - (p-1)k(k-1)/2. That
    increment is spread over the powers p^j dividing n as 1 - (p-1)(j-1).
    """
    inc = np.zeros(n_max + 1, dtype=np.int64)
    for p in primes:
        p = int(p)
        if p > n_max:
            break
        q, j = p, 1
        while q <= n_max:
            inc[q::q] += 1 - (p - 1) * (j - 1)
            q *= p
            j += 1
    return np.cumsum(inc)


def dimino_join(mult, h_elems, gens):
    """Elements of <H, gens> as a union of right cosets of H.

    ``h_elems`` must list H with the identity first; ``gens`` must contain a
    generating set of H together with the new generators.
    """
    n = mult.shape[0]
    hs = np.asarray(h_elems, dtype=np.intp)
    inset = np.zeros(n, dtype=bool)
    inset[hs] = True
    blocks = [hs]
    reps = [int(hs[0])]
    gens = [int(s) for s in gens]
    i = 0
    while i < len(reps):
        r = reps[i]
        for s in gens:
            y = int(mult[r, s])
            if not inset[y]:
                coset = mult[hs, y]
                inset[coset] = True
                blocks.append(coset)
                reps.append(y)
        i += 1
    return np.concatenate(blocks).astype(np.int32)


def max_independent(join, member, height, top, trivial, deadline=float("inf")):
    """Largest independent generating set, by DFS over ascending index sequences.

    ``join[h, g]`` is the lattice id of <H_h, g>; ``member[h, g]`` tests g in H_h;
    ``height[h]`` is the longest chain from H_h up to the top. Returns
    ``(best, witness, nodes, timed_out)``.
    """
    join = join.tolist()
    member = member.tolist()
    height = height.tolist()
    n = len(join[0])
    state = {"best": 0, "witness": (), "nodes": 0, "timed_out": False}
    if top == trivial:
        return 0, (), 0, False
    xs = []

    def dfs(k, last, h, others):
        # others[i] is the id of <X \ {x_i}> for the current set X
        hrow = member[h]
        for g in range(last + 1, n):
            if hrow[g]:
                continue
            hn = join[h][g]
            if k + 1 + height[hn] <= state["best"]:
                continue
            state["nodes"] += 1
            if state["nodes"] & 0xFFF == 1 and time.perf_counter() > deadline:
                state["timed_out"] = True
                return
            nxt = []
            for i in range(k):
                a = join[others[i]][g]
                if member[a][xs[i]]:
                    break
                nxt.append(a)
            else:
                nxt.append(h)
                xs.append(g)
                if hn == top:
                    state["best"] = k + 1
                    state["witness"] = tuple(xs)
                else:
                    dfs(k + 1, g, hn, nxt)
                xs.pop()
                if state["timed_out"]:
                    return

    dfs(0, -1, trivial, [])
    return state["best"], state["witness"], state["nodes"], state["timed_out"]
