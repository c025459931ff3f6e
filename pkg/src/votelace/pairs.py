"""The strong order on pairs of permutations and the weak Bruhat order.

A pair pattern [small.first, small.second] is strongly contained in
[big.first, big.second] when one common set of values realizes the first
component inside big.first and the second component inside big.second.
Witnesses are therefore reported as value sets, not index tuples: the same
values sit at different positions in the two host permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator

from votelace import kernels
from votelace.errors import GuardExceeded, ParseError
from votelace.perms import Permutation

#: default cap for pair enumeration: (6!)^2 pairs is comfortable, m = 7 is
#: tens of millions of matching calls and needs an explicit opt-in
DEFAULT_MAX_M = 6


@dataclass(frozen=True)
class PairPattern:
    """An ordered pair of equal-length permutations."""

    first: Permutation
    second: Permutation

    def __post_init__(self):
        if len(self.first) != len(self.second):
            raise ValueError(
                f"components differ in length: {len(self.first)} vs {len(self.second)}"
            )

    def __len__(self) -> int:
        return len(self.first)

    def __str__(self) -> str:
        return self.to_line()

    def to_line(self) -> str:
        """Serialize as two one-line permutations separated by " | "."""
        return f"{self.first.to_line()} | {self.second.to_line()}"

    @classmethod
    def from_line(cls, text: str) -> PairPattern:
        parts = text.split("|")
        if len(parts) != 2:
            raise ParseError(f"expected 'perm | perm', got {text!r}")
        return cls(Permutation.from_line(parts[0]), Permutation.from_line(parts[1]))

    @classmethod
    def of(cls, first: Iterable[int], second: Iterable[int]) -> PairPattern:
        return cls(Permutation(tuple(first)), Permutation(tuple(second)))


class PairPatternSet:
    """A duplicate-free collection of pair patterns (lengths may differ)."""

    def __init__(self, pairs: Iterable[PairPattern]):
        unique = sorted(set(pairs), key=lambda q: (len(q), q.first.values, q.second.values))
        self._pairs = tuple(unique)
        self._members = frozenset(self._pairs)

    def __iter__(self) -> Iterator[PairPattern]:
        return iter(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def __contains__(self, q: PairPattern) -> bool:
        return q in self._members

    def __eq__(self, other) -> bool:
        return isinstance(other, PairPatternSet) and self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"PairPatternSet([{', '.join(map(repr, self._pairs))}])"

    def to_lines(self) -> str:
        return "\n".join(q.to_line() for q in self._pairs)

    @classmethod
    def from_lines(cls, text: str) -> "PairPatternSet":
        return cls(PairPattern.from_line(line) for line in text.splitlines() if line.strip())


def strong_contains(small: PairPattern, big: PairPattern) -> bool:
    """True iff some value set realizes small.first in big.first and
    small.second in big.second simultaneously.

    >>> strong_contains(PairPattern.of((2, 1, 3), (1, 3, 2)),
    ...                 PairPattern.of((6, 1, 4, 2, 3, 5), (1, 2, 6, 5, 3, 4)))
    True
    """
    return kernels.strong_contains(
        big.first.values, big.second.values, small.first.values, small.second.values
    )


def strong_occurrences(small: PairPattern, big: PairPattern) -> Iterator[frozenset[int]]:
    """Yield every witnessing value set, smallest values first.

    The stream is empty iff :func:`strong_contains` is false.
    """
    h = len(small)
    n = len(big)
    if h > n:
        return
    if h == 0:
        yield frozenset()
        return
    pos1 = {v: i for i, v in enumerate(big.first.values)}
    pos2 = {v: i for i, v in enumerate(big.second.values)}
    q1 = small.first.inverse().values
    q2 = small.second.inverse().values
    chosen: list[int] = []

    def extend(start: int) -> Iterator[frozenset[int]]:
        depth = len(chosen)
        if depth == h:
            yield frozenset(chosen)
            return
        for v in range(start, n - (h - depth) + 2):
            ok = all(
                (pos1[w] < pos1[v]) == (q1[t] < q1[depth])
                and (pos2[w] < pos2[v]) == (q2[t] < q2[depth])
                for t, w in enumerate(chosen)
            )
            if ok:
                chosen.append(v)
                yield from extend(v + 1)
                chosen.pop()

    yield from extend(1)


@dataclass(frozen=True)
class InversionSet:
    """The set of inverted position pairs (i, j), i < j, of a permutation."""

    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        for i, j in self.pairs:
            if not 1 <= i < j:
                raise ValueError(f"bad inversion pair ({i}, {j})")

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def __le__(self, other: "InversionSet") -> bool:
        return self.pairs <= other.pairs


def inversion_set(p: Permutation) -> InversionSet:
    """All (i, j) with i < j and p[i] > p[j], 1-indexed.

    >>> sorted(inversion_set(Permutation((2, 4, 1, 3))).pairs)
    [(1, 3), (2, 3), (2, 4)]
    """
    v = p.values
    n = len(v)
    return InversionSet(
        frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if v[i] > v[j])
    )


def weak_bruhat_le(lo: Permutation, hi: Permutation) -> bool:
    """True iff ``lo`` is below ``hi`` in the weak Bruhat order.

    Comparability is containment of the out-of-order VALUE pairs, i.e. of the
    positional inversion sets of the inverses.  (Comparing positional
    inversion sets directly would give the mirror-image order, which does not
    match strong [12,21]-avoidance: (231, 132) separates the two.)
    """
    if len(lo) != len(hi):
        raise ValueError(f"length mismatch: {len(lo)} vs {len(hi)}")
    return inversion_set(lo.inverse()) <= inversion_set(hi.inverse())


def count_pair_avoiders(
    m: int, forbidden: PairPatternSet, max_m: int = DEFAULT_MAX_M, jobs: int = 1
) -> int:
    """Number of pairs (pi, rho) in S_m x S_m avoiding every forbidden pair pattern.

    Enumeration is partitioned by the first permutation; partial counts merge
    by addition, so the result is independent of ``jobs``.
    """
    if m > max_m:
        raise GuardExceeded(f"refusing to enumerate (m!)^2 pairs at m={m} (cap {max_m})")
    pats = [
        (q.first.values, q.second.values) for q in forbidden if len(q) <= m
    ]
    firsts = list(_itertools_permutations(range(1, m + 1)))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_count_avoiding_seconds, ((first, pats, m) for first in firsts))
            return sum(parts)
    return sum(_count_avoiding_seconds((first, pats, m)) for first in firsts)


def _count_avoiding_seconds(args):
    first, pats, m = args
    sc = kernels.strong_contains
    count = 0
    for second in _itertools_permutations(range(1, m + 1)):
        if not any(sc(first, second, sf, ss) for sf, ss in pats):
            count += 1
    return count
