"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. ``use_backend`` switches explicitly (tests and benchmarks).
"""

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_FUNCS = ("sieve_flags", "delta_table", "dimino_join", "max_independent")
_active = _compiled or _pykernels


def available_backends():
    names = ["python"]
    if _compiled is not None:
        names.insert(0, "cython")
    return names


def backend_name():
    return _active.NAME


def use_backend(name):
    """Select ``"cython"`` or ``"python"``; returns the previous name."""
    global _active
    previous = _active.NAME
    if name == "python":
        _active = _pykernels
    elif name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        _active = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous


def sieve_flags(limit):
    return _active.sieve_flags(limit)


def delta_table(n_max, primes):
    return _active.delta_table(n_max, primes)


def dimino_join(mult, h_elems, gens):
    return _active.dimino_join(mult, h_elems, gens)


def max_independent(join, member, height, top, trivial, deadline=float("inf")):
    return _active.max_independent(join, member, height, top, trivial, deadline)
