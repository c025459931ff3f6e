"""Exact counting: brute-force counters, recurrences, closed forms, and bounds.

All counts are exact arbitrary-precision integers; floating point appears only
in closed-form evaluation, which is validated against the integer recurrences
(the recurrences are canonical).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Callable, Optional

from votelace.elections import Election, Ranking, all_elections, elections_with_first
from votelace.errors import GuardExceeded
from votelace.guards import brute_call_guard
from votelace.pairs import PairPattern, PairPatternSet, count_pair_avoiders
from votelace.perms import Permutation, compose

METHODS = ("brute-force", "recurrence", "closed-form", "formula")


@dataclass(frozen=True)
class CountReport:
    """One exact count, with the method that produced it recorded truthfully."""

    m: int
    n: int
    label: str
    count: int
    method: str

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("counts are nonnegative")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    def to_json(self) -> str:
        """Single-line JSON; the count is a decimal string to survive any integer width."""
        return json.dumps(
            {"m": self.m, "n": self.n, "label": self.label, "count": str(self.count), "method": self.method}
        )

    @classmethod
    def from_json(cls, line: str) -> "CountReport":
        raw = json.loads(line)
        return cls(raw["m"], raw["n"], raw["label"], int(raw["count"]), raw["method"])


@dataclass(frozen=True)
class CharacteristicRoot:
    """The square root of 2^(n-1) * (2^(n-1) - 1), the discriminant root of
    the enriched-count recurrence's characteristic polynomial."""

    n: int
    value: float

    def __post_init__(self):
        target = 2 ** (self.n - 1) * (2 ** (self.n - 1) - 1)
        if abs(self.value**2 - target) > 1e-12 * max(target, 1):
            raise ValueError(f"inconsistent root {self.value} for n={self.n}")

    @classmethod
    def for_voters(cls, n: int) -> "CharacteristicRoot":
        if n < 1:
            raise ValueError("need at least one voter")
        return cls(n, math.sqrt(2 ** (n - 1) * (2 ** (n - 1) - 1)))


def brute_force_count(
    m: int,
    n: int,
    recognizer: Callable[[Election], object],
    label: Optional[str] = None,
    guard: Optional[int] = None,
    jobs: int = 1,
) -> CountReport:
    """Count the (m,n)-elections accepted by ``recognizer``, exhaustively.

    The recognizer is called once per election; its result is interpreted as a
    boolean (DomainVerdict supports this directly).  With ``jobs > 1`` the
    enumeration is partitioned by the first voter's ranking and partial counts
    merge by addition, so the result is independent of the worker count.
    """
    if guard is None:
        guard = brute_call_guard()
    total = math.factorial(m) ** n
    if total > guard:
        raise GuardExceeded(f"(m!)^n = {total} recognizer calls at (m,n)=({m},{n}) exceeds the guard {guard}")
    if label is None:
        label = getattr(recognizer, "__name__", "recognizer")
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        firsts = [Ranking(v) for v in _itertools_permutations(range(1, m + 1))]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                _count_with_first, ((m, n, first, recognizer) for first in firsts)
            )
            count = sum(parts)
    else:
        count = sum(1 for e in all_elections(m, n, limit=guard) if recognizer(e))
    return CountReport(m, n, label, count, "brute-force")


def _count_with_first(args):
    m, n, first, recognizer = args
    return sum(1 for e in elections_with_first(m, n, first) if recognizer(e))


# ---------------------------------------------------------------------------
# enriched-count recurrence and closed forms


def reduced_enriched_count(m: int, n: int) -> int:
    """Number of enriched group-separable (m,n)-elections with the first
    preference fixed, by the integer recurrence
    f(m) = 2^n f(m-1) - 2^(n-1) f(m-2), f(0) = f(1) = 1.
    """
    if m < 0 or n < 0:
        raise ValueError("sizes are nonnegative")
    prev, cur = 1, 1
    for _ in range(m - 1):
        prev, cur = cur, 2**n * cur - 2 ** (n - 1) * prev
    return cur if m >= 1 else prev


def enriched_count(m: int, n: int) -> int:
    """Number of enriched group-separable (m,n)-elections: m! times the reduced count."""
    return math.factorial(m) * reduced_enriched_count(m, n)


def reduced_enriched_count_closed(m: int, n: int) -> float:
    """Closed form of :func:`reduced_enriched_count` in floating point.

    The two characteristic roots are 2^(n-1) +- r with r the discriminant
    root.  At n = 1 the roots coincide (r = 0) and both coefficients
    degenerate to 1/2, so the value is exactly 1 for every m.
    """
    if n < 1:
        raise ValueError("need at least one voter")
    root = CharacteristicRoot.for_voters(n).value
    half = 2.0 ** (n - 1)
    if root == 0.0:
        return 0.5 * (half**m) + 0.5 * (half**m)
    coeff_plus = (root + (1.0 - half)) / (2.0 * root)
    coeff_minus = (root - (1.0 - half)) / (2.0 * root)
    return coeff_plus * (half + root) ** m + coeff_minus * (half - root) ** m


_FORMULAS = ("m3", "m4", "m5", "n2")


def enriched_count_formula(which: str, index: int) -> int:
    """Closed formulas for slices of the enriched count.

    ``m3``/``m4``/``m5`` take the number of voters n and count elections with
    3, 4, 5 candidates; ``n2`` takes the number of candidates m and counts
    2-voter elections (evaluated in floating point and rounded, after checking
    the value is within 1e-6 relative of an integer).
    """
    if which == "m3":
        _require(index >= 1, "m3 needs n >= 1")
        return 6 * 2 ** (index - 1) * (2**index - 1)
    if which == "m4":
        _require(index >= 1, "m4 needs n >= 1")
        return 24 * 4 ** (index - 1) * (2 ** (index + 1) - 3)
    if which == "m5":
        _require(index >= 1, "m5 needs n >= 1")
        return 120 * 4 ** (index - 1) * (2 ** (2 * index + 1) - 2 ** (index + 2) + 1)
    if which == "n2":
        _require(index >= 0, "n2 needs m >= 0")
        root2 = math.sqrt(2.0)
        value = (
            math.factorial(index)
            / 4.0
            * ((2 + root2) * (2 - root2) ** index + (2 - root2) * (2 + root2) ** index)
        )
        nearest = math.floor(value + 0.5)  # half away from zero; value is positive
        if abs(value - nearest) > 1e-6 * max(abs(value), 1.0):
            raise ArithmeticError(f"n2 formula drifted from an integer at m={index}: {value}")
        return nearest
    raise ValueError(f"unknown formula selector {which!r}; have {_FORMULAS}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def enriched_pair_avoider_count(n: int) -> int:
    """Number of length-n permutations avoiding the four enriched forbidden
    patterns, by the recurrence f(n) = 4 f(n-1) - 2 f(n-2), f(0) = f(1) = 1
    (OEIS A006012)."""
    if n < 0:
        raise ValueError("length is nonnegative")
    prev, cur = 1, 1
    for _ in range(n - 1):
        prev, cur = cur, 4 * cur - 2 * prev
    return cur if n >= 1 else prev


# ---------------------------------------------------------------------------
# three-voter configurations and the strong order


def three_voter_pattern_set(tau: Permutation, sigma: Permutation) -> PairPatternSet:
    """The six pair patterns whose strong containment in [pi, rho]
    characterizes containment of the 3-voter configuration (id, tau, sigma)
    in the 3-voter election (id, pi, rho).  Duplicates are removed.
    """
    if len(tau) != len(sigma):
        raise ValueError(f"length mismatch: {len(tau)} vs {len(sigma)}")
    tau_inv = tau.inverse()
    sigma_inv = sigma.inverse()
    tau_inv_sigma = compose(tau_inv, sigma)
    sigma_inv_tau = compose(sigma_inv, tau)
    return PairPatternSet(
        [
            PairPattern(tau, sigma),
            PairPattern(sigma, tau),
            PairPattern(tau_inv, tau_inv_sigma),
            PairPattern(tau_inv_sigma, tau_inv),
            PairPattern(sigma_inv, sigma_inv_tau),
            PairPattern(sigma_inv_tau, sigma_inv),
        ]
    )


def contains_3voter(pi: Permutation, rho: Permutation, tau: Permutation, sigma: Permutation) -> bool:
    """Containment of the 3-voter configuration (id, tau, sigma) in the
    3-voter election (id, pi, rho), decided through the strong order."""
    if len(pi) != len(rho):
        raise ValueError(f"election lengths differ: {len(pi)} vs {len(rho)}")
    if len(tau) > len(pi):
        raise ValueError("configuration is larger than the election")
    from votelace import kernels

    pv, rv = pi.values, rho.values
    return any(
        kernels.strong_contains(pv, rv, q.first.values, q.second.values)
        for q in three_voter_pattern_set(tau, sigma)
    )


def count_avoiding_pairs(
    m: int, tau: Permutation, sigma: Permutation, max_m: int = 6, jobs: int = 1
) -> CountReport:
    """Number of pairs (V2, V3) such that the 3-voter election (id, V2, V3)
    avoids the configuration (id, tau, sigma), counted through the strong order."""
    pats = three_voter_pattern_set(tau, sigma)
    count = count_pair_avoiders(m, pats, max_m=max_m, jobs=jobs)
    label = f"avoiding-pairs[{tau.to_line()} | {sigma.to_line()}]"
    return CountReport(m, 3, label, count, "brute-force")


def upper_bound_3config(m: int, n: int, pi_set: PairPatternSet, max_m: int = 6, jobs: int = 1) -> int:
    """m! times |S_m(pi_set)| to the power C(n-1, 2), exactly.

    At n = 2 the exponent is zero and the pair count is not evaluated at all.
    """
    if n < 1:
        raise ValueError("need at least one voter")
    exponent = math.comb(n - 1, 2)
    if exponent == 0:
        return math.factorial(m)
    base = count_pair_avoiders(m, pi_set, max_m=max_m, jobs=jobs)
    return math.factorial(m) * base**exponent


def single_crossing_pair_patterns() -> PairPatternSet:
    """The six pair patterns every single-crossing election must avoid
    (via its known forbidden configuration with three voters)."""
    return PairPatternSet(
        [
            PairPattern.of((4, 2, 3, 1), (4, 1, 3, 2)),
            PairPattern.of((4, 1, 3, 2), (4, 2, 3, 1)),
            PairPattern.of((4, 2, 3, 1), (1, 4, 3, 2)),
            PairPattern.of((1, 4, 3, 2), (4, 2, 3, 1)),
            PairPattern.of((2, 4, 3, 1), (1, 4, 3, 2)),
            PairPattern.of((1, 4, 3, 2), (2, 4, 3, 1)),
        ]
    )
