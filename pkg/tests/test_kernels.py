"""The compiled kernels must agree with the pure-Python twins everywhere."""

import random
from itertools import permutations

import pytest

from votelace import _pykernels, kernels

has_c = "c" in kernels.available_backends()
needs_c = pytest.mark.skipif(not has_c, reason="compiled kernels not built")


def _ckernels():
    from votelace import _ckernels

    return _ckernels


@needs_c
def test_contains_pattern_agrees_exhaustively():
    ck = _ckernels()
    hosts = [p for n in range(6) for p in permutations(range(1, n + 1))]
    pats = [p for k in range(4) for p in permutations(range(1, k + 1))]
    for host in hosts:
        for pat in pats:
            assert ck.contains_pattern(host, pat) == _pykernels.contains_pattern(host, pat)


@needs_c
def test_strong_contains_agrees_exhaustively():
    ck = _ckernels()
    bigs = [(b1, b2) for b1 in permutations((1, 2, 3, 4)) for b2 in permutations((1, 2, 3, 4))]
    smalls = [(s1, s2) for s1 in permutations((1, 2)) for s2 in permutations((1, 2))]
    smalls += [((1, 2, 3), (3, 1, 2)), ((2, 1, 3), (1, 3, 2))]
    for b1, b2 in bigs:
        for s1, s2 in smalls:
            assert ck.strong_contains(b1, b2, s1, s2) == _pykernels.strong_contains(b1, b2, s1, s2)


@needs_c
def test_contains_configuration_agrees_on_random_cases():
    ck = _ckernels()
    rng = random.Random(99)

    def ranks(m):
        order = list(range(m))
        rng.shuffle(order)
        return tuple(order)

    for _ in range(400):
        n, m = rng.randint(1, 4), rng.randint(1, 5)
        l, h = rng.randint(1, 4), rng.randint(1, 5)
        host = tuple(ranks(m) for _ in range(n))
        cfg = tuple(ranks(h) for _ in range(l))
        assert ck.contains_configuration(host, cfg) == _pykernels.contains_configuration(host, cfg)


@needs_c
def test_fits_axis_agrees_exhaustively():
    ck = _ckernels()
    for order in permutations((1, 2, 3, 4)):
        for axis in permutations(range(4)):
            assert ck.fits_axis(order, axis) == _pykernels.fits_axis(order, axis)


def test_backend_switching_round_trip():
    start = kernels.active_backend()
    try:
        for name in kernels.available_backends():
            kernels.use_backend(name)
            assert kernels.active_backend() == name
            assert kernels.contains_pattern((5, 2, 6, 1, 4, 3), (3, 1, 2))
            assert not kernels.contains_pattern((5, 2, 6, 1, 4, 3), (1, 2, 3))
    finally:
        kernels.use_backend(start)


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_backend_env_var_honored():
    import os
    import subprocess
    import sys

    probe = "from votelace import kernels; print(kernels.active_backend())"
    out = subprocess.run(
        [sys.executable, "-c", probe],
        env={**os.environ, "VOTELACE_BACKEND": "python"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


@needs_c
def test_compiled_kernels_reject_oversized_input():
    ck = _ckernels()
    big = tuple(range(1, 40))
    with pytest.raises(ValueError):
        ck.contains_pattern(big, (1, 2))
