"""Backend selection for the containment kernels.

At import time the compiled extension (``votelace._ckernels``) is preferred;
if it is missing the pure-Python twin is used.  Set ``VOTELACE_BACKEND`` to
``python`` or ``c`` to force a backend, or call :func:`use_backend` at
runtime (the benchmark does this to compare the two).
"""

import os

from votelace import _pykernels

_BACKENDS = {"python": _pykernels}

try:
    from votelace import _ckernels

    _BACKENDS["c"] = _ckernels
except ImportError:
    _ckernels = None

_impl = None
_active = None


def available_backends():
    return tuple(sorted(_BACKENDS))


def active_backend():
    return _active


def use_backend(name):
    """Switch the kernel implementation; returns the previously active name."""
    global _impl, _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; have {available_backends()}")
    previous = _active
    _impl = _BACKENDS[name]
    _active = name
    return previous


def contains_pattern(host, pattern):
    return _impl.contains_pattern(host, pattern)


def strong_contains(big_first, big_second, small_first, small_second):
    return _impl.strong_contains(big_first, big_second, small_first, small_second)


def contains_configuration(host_ranks, cfg_ranks):
    return _impl.contains_configuration(host_ranks, cfg_ranks)


def fits_axis(order, axis_pos):
    return _impl.fits_axis(order, axis_pos)


_requested = os.environ.get("VOTELACE_BACKEND")
if _requested:
    use_backend(_requested)
else:
    use_backend("c" if "c" in _BACKENDS else "python")
