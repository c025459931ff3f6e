"""Permutations in one-line notation, pattern containment, and avoidance counts.

A permutation of length n is stored as the tuple of its values at positions
1..n; the empty permutation is legal and is a pattern of everything.
Values and positions are 1-indexed throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator

from votelace import kernels
from votelace.errors import GuardExceeded, ParseError

#: default exhaustive-generation cap: 9! permutations enumerate instantly,
#: anything larger needs an explicit opt-in
DEFAULT_MAX_N = 9


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n} in one-line notation.

    >>> Permutation((2, 4, 1, 3)).inverse()
    Permutation((3, 1, 4, 2))
    """

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if sorted(values) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {values}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __repr__(self) -> str:
        return f"Permutation({self.values!r})"

    def __str__(self) -> str:
        return self.to_line()

    def reverse(self) -> Permutation:
        """The permutation read right-to-left."""
        return Permutation(self.values[::-1])

    def inverse(self) -> Permutation:
        """The group-theoretic inverse: q with q[p[i]] = i."""
        inv = [0] * len(self.values)
        for i, v in enumerate(self.values):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def to_line(self) -> str:
        """Space-separated one-line notation; empty permutation is an empty line."""
        return " ".join(str(v) for v in self.values)

    @classmethod
    def from_line(cls, text: str) -> Permutation:
        """Parse space-separated one-line notation."""
        stripped = text.strip()
        if not stripped:
            return cls(())
        try:
            values = tuple(int(tok) for tok in stripped.split())
        except ValueError as exc:
            raise ParseError(f"bad permutation line {text!r}") from exc
        try:
            return cls(values)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc


def identity(n: int) -> Permutation:
    """The identity permutation 1 2 ... n."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    return Permutation(tuple(range(1, n + 1)))


def compose(outer: Permutation, inner: Permutation) -> Permutation:
    """Right-to-left composition: result[i] = outer[inner[i]].

    >>> compose(Permutation((3, 1, 2)), Permutation((2, 3, 1)))
    Permutation((1, 2, 3))
    """
    if len(outer) != len(inner):
        raise ValueError(f"length mismatch: {len(outer)} vs {len(inner)}")
    return Permutation(tuple(outer.values[v - 1] for v in inner.values))


def contains_pattern(pattern: Permutation, host: Permutation) -> bool:
    """True iff some index-increasing subsequence of ``host`` is order-isomorphic to ``pattern``.

    >>> contains_pattern(Permutation((3, 1, 2)), Permutation((5, 2, 6, 1, 4, 3)))
    True
    >>> contains_pattern(Permutation((1, 2, 3)), Permutation((5, 2, 6, 1, 4, 3)))
    False
    """
    return kernels.contains_pattern(host.values, pattern.values)


def avoids_all(host: Permutation, forbidden: "PatternSet") -> bool:
    """True iff ``host`` contains none of the forbidden patterns."""
    hv = host.values
    return not any(kernels.contains_pattern(hv, p.values) for p in forbidden)


def occurrences(pattern: Permutation, host: Permutation) -> Iterator[tuple[int, ...]]:
    """Yield every strictly increasing index tuple (1-based) whose values
    are order-isomorphic to ``pattern``, in lexicographic order.

    The stream is empty iff :func:`contains_pattern` is false.
    """
    pat = pattern.values
    hv = host.values
    k = len(pat)
    n = len(hv)
    if k > n:
        return
    chosen: list[int] = []

    def extend(start: int) -> Iterator[tuple[int, ...]]:
        depth = len(chosen)
        if depth == k:
            yield tuple(i + 1 for i in chosen)
            return
        for i in range(start, n - (k - depth) + 1):
            v = hv[i]
            if all((pat[t] < pat[depth]) == (hv[chosen[t]] < v) for t in range(depth)):
                chosen.append(i)
                yield from extend(i + 1)
                chosen.pop()

    yield from extend(0)


class PatternSet:
    """A duplicate-free collection of permutations used as forbidden patterns."""

    def __init__(self, patterns: Iterable[Permutation]):
        unique = sorted(set(patterns), key=lambda p: (len(p), p.values))
        self._patterns = tuple(unique)
        self._members = frozenset(self._patterns)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self._patterns)

    def __len__(self) -> int:
        return len(self._patterns)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._members

    def __eq__(self, other) -> bool:
        return isinstance(other, PatternSet) and self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"PatternSet([{', '.join(map(repr, self._patterns))}])"

    @classmethod
    def from_lines(cls, text: str) -> "PatternSet":
        """One permutation per non-blank line."""
        return cls(Permutation.from_line(line) for line in text.splitlines() if line.strip())


def all_permutations(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[Permutation]:
    """Every permutation of length n in lexicographic order, guarded by ``max_n``."""
    if n > max_n:
        raise GuardExceeded(f"refusing to enumerate {n}! permutations (cap {max_n}); raise max_n to opt in")
    for values in _itertools_permutations(range(1, n + 1)):
        yield Permutation(values)


def count_avoiders(n: int, forbidden: PatternSet, max_n: int = DEFAULT_MAX_N) -> int:
    """|S_n(forbidden)| by exhaustive generation.

    >>> count_avoiders(3, PatternSet([Permutation((1, 2))]))
    1
    """
    if n > max_n:
        raise GuardExceeded(f"refusing to enumerate {n}! permutations (cap {max_n}); raise max_n to opt in")
    pats = [p.values for p in forbidden if len(p) <= n]
    ck = kernels.contains_pattern
    count = 0
    for values in _itertools_permutations(range(1, n + 1)):
        if not any(ck(values, pat) for pat in pats):
            count += 1
    return count
