# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; same contracts as ``indepgen._pykernels``."""

import time

import numpy as np
cimport numpy as cnp

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

cnp.import_array()

NAME = "cython"


def sieve_flags(Py_ssize_t limit):
    flags = np.ones(limit + 1, dtype=np.uint8)
    cdef unsigned char[::1] f = flags
    cdef Py_ssize_t p, j
    f[0] = 0
    if limit >= 1:
        f[1] = 0
    p = 2
    while p * p <= limit:
        if f[p]:
            j = p * p
            while j <= limit:
                f[j] = 0
                j += p
        p += 1
    return flags


def delta_table(Py_ssize_t n_max, primes):
    cdef const long long[::1] ps = np.ascontiguousarray(primes, dtype=np.int64)
    out = np.zeros(n_max + 1, dtype=np.int64)
    cdef long long[::1] inc = out
    cdef Py_ssize_t i, m
    cdef long long p, q, j, step, acc
    for i in range(ps.shape[0]):
        p = ps[i]
        if p > n_max:
            break
        q = p
        j = 1
        while q <= n_max:
            step = 1 - (p - 1) * (j - 1)
            m = q
            while m <= n_max:
                inc[m] += step
                m += q
            if q > n_max // p:
                break
            q *= p
            j += 1
    acc = 0
    for i in range(n_max + 1):
        acc += inc[i]
        inc[i] = acc
    return out


def dimino_join(const int[:, ::1] mult, h_elems, gens):
    cdef const int[::1] hs = np.ascontiguousarray(h_elems, dtype=np.int32)
    cdef const int[::1] gs = np.ascontiguousarray(gens, dtype=np.int32)
    cdef Py_ssize_t n = mult.shape[0]
    cdef Py_ssize_t hsize = hs.shape[0]
    out = np.empty(n, dtype=np.int32)
    cdef int[::1] o = out
    cdef unsigned char* inset = <unsigned char*>malloc(n)
    cdef Py_ssize_t i, count, rep_pos
    cdef int r, y, z, s
    if inset == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            inset[i] = 0
        for i in range(hsize):
            o[i] = hs[i]
            inset[hs[i]] = 1
        count = hsize
        rep_pos = 0
        while rep_pos < count:
            r = o[rep_pos]
            for s in range(gs.shape[0]):
                y = mult[r, gs[s]]
                if not inset[y]:
                    for i in range(hsize):
                        z = mult[hs[i], y]
                        o[count] = z
                        inset[z] = 1
                        count += 1
            rep_pos += hsize
    finally:
        free(inset)
    return out[:count].copy()


cdef struct SearchState:
    int n
    int depth_cap
    int best
    long long nodes
    int timed_out
    int* xs
    int* witness
    int* others     # (depth_cap + 1) rows of depth_cap entries
    double deadline


cdef void _dfs(SearchState* st, const int[:, ::1] join, const unsigned char[:, ::1] member,
               const int[::1] height, int top, int k, int last, int h, object clock):
    cdef int g, hn, i, a, ok
    cdef int row = st.depth_cap
    cdef int* cur = st.others + k * row
    cdef int* nxt = st.others + (k + 1) * row
    for g in range(last + 1, st.n):
        if member[h, g]:
            continue
        hn = join[h, g]
        if k + 1 + height[hn] <= st.best:
            continue
        st.nodes += 1
        if (st.nodes & 0xFFF) == 1 and st.deadline < 1e300:
            if clock() > st.deadline:
                st.timed_out = 1
                return
        ok = 1
        for i in range(k):
            a = join[cur[i], g]
            if member[a, st.xs[i]]:
                ok = 0
                break
            nxt[i] = a
        if not ok:
            continue
        nxt[k] = h
        st.xs[k] = g
        if hn == top:
            st.best = k + 1
            memcpy(st.witness, st.xs, (k + 1) * sizeof(int))
        else:
            _dfs(st, join, member, height, top, k + 1, g, hn, clock)
            if st.timed_out:
                return


def max_independent(const int[:, ::1] join, const unsigned char[:, ::1] member, const int[::1] height,
                    int top, int trivial, double deadline=float("inf")):
    if top == trivial:
        return 0, (), 0, False
    cdef SearchState st
    cdef int cap = height[trivial] + 1
    st.n = join.shape[1]
    st.depth_cap = cap
    st.best = 0
    st.nodes = 0
    st.timed_out = 0
    st.deadline = deadline if deadline != float("inf") else 1e308
    st.xs = <int*>malloc(cap * sizeof(int))
    st.witness = <int*>malloc(cap * sizeof(int))
    st.others = <int*>malloc((cap + 1) * cap * sizeof(int))
    if st.xs == NULL or st.witness == NULL or st.others == NULL:
        free(st.xs); free(st.witness); free(st.others)
        raise MemoryError()
    try:
        _dfs(&st, join, member, height, top, 0, -1, trivial, time.perf_counter)
        witness = tuple(st.witness[i] for i in range(st.best))
    finally:
        free(st.xs); free(st.witness); free(st.others)
    return st.best, witness, st.nodes, bool(st.timed_out)
