"""Elections, configurations, and the generic configuration-containment oracle.

An election is a labeled candidate set [m] plus an ordered tuple of voters'
strict rankings (best-to-worst).  A configuration is a small election used as
a forbidden sub-structure: an election contains it when injective voter and
candidate maps preserve every stated preference.  Voters are significant as
tuple positions; elections with equal ranking multisets in different orders
are distinct objects.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations as _itertools_permutations, product
from typing import Iterable, Iterator, Optional, Sequence

from votelace import kernels
from votelace.errors import GuardExceeded, ParseError
from votelace.guards import brute_call_guard
from votelace.perms import Permutation


@dataclass(frozen=True)
class Ranking:
    """One voter's strict preference, listed from most to least preferred."""

    order: tuple[int, ...]
    ids: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        order = tuple(self.order)
        object.__setattr__(self, "order", order)
        ids = frozenset(order)
        if len(ids) != len(order):
            raise ValueError(f"duplicate candidate in ranking {order}")
        if any(c < 1 for c in order):
            raise ValueError(f"candidate identifiers must be positive: {order}")
        object.__setattr__(self, "ids", ids)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def to_line(self) -> str:
        return " ".join(str(c) for c in self.order)


@dataclass(frozen=True)
class Election:
    """A candidate set [m] plus an ordered tuple of n rankings over it."""

    num_candidates: int
    preferences: tuple[Ranking, ...]

    def __post_init__(self):
        object.__setattr__(self, "preferences", tuple(self.preferences))
        m = self.num_candidates
        if m < 1 or not self.preferences:
            raise ValueError("an election needs at least one candidate and one voter")
        full = frozenset(range(1, m + 1))
        for r in self.preferences:
            if r.ids != full:
                raise ValueError(f"ranking {r.order} is not a permutation of 1..{m}")

    @property
    def num_voters(self) -> int:
        return len(self.preferences)

    def rank_vectors(self) -> tuple[tuple[int, ...], ...]:
        """Per voter, the 0-based position of each candidate (indexed by candidate-1)."""
        return tuple(_rank_vector(r.order) for r in self.preferences)

    def to_text(self) -> str:
        """One voter per line, candidates space-separated best-to-worst."""
        return "\n".join(r.to_line() for r in self.preferences)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Election:
        rankings = tuple(Ranking(tuple(row)) for row in rows)
        if not rankings:
            raise ValueError("an election needs at least one voter")
        return cls(len(rankings[0]), rankings)


#: a configuration is itself a small election used as forbidden sub-structure
Configuration = Election


@lru_cache(maxsize=None)
def _rank_vector(order: tuple[int, ...]) -> tuple[int, ...]:
    ranks = [0] * len(order)
    for pos, c in enumerate(order):
        ranks[c - 1] = pos
    return tuple(ranks)


def parse_election(text: str) -> Election:
    """Parse the election file format.

    One voter per line, candidates space-separated best-to-worst; blank lines
    are ignored and "#" starts a comment line.  All lines must be permutations
    of the same set {1..m}.
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            row = tuple(int(tok) for tok in stripped.split())
        except ValueError as exc:
            raise ParseError(f"line {lineno}: malformed ranking {stripped!r}") from exc
        rows.append((lineno, row))
    if not rows:
        raise ParseError("no rankings found")
    m = len(rows[0][1])
    full = frozenset(range(1, m + 1))
    rankings = []
    for lineno, row in rows:
        if len(set(row)) != len(row):
            raise ParseError(f"line {lineno}: duplicate candidate in {row}")
        if frozenset(row) != full:
            raise ParseError(f"line {lineno}: inconsistent candidate set {sorted(set(row))}, expected 1..{m}")
        rankings.append(Ranking(row))
    return Election(m, tuple(rankings))


def restrict(e: Election, subset: Iterable[int]) -> Election:
    """Restrict to a candidate subset, relabeling to 1..|subset| in identifier order."""
    chosen = sorted(set(subset))
    if not chosen:
        raise ValueError("cannot restrict to an empty candidate set")
    if chosen[0] < 1 or chosen[-1] > e.num_candidates:
        raise ValueError(f"subset {chosen} out of range 1..{e.num_candidates}")
    relabel = {c: i + 1 for i, c in enumerate(chosen)}
    keep = set(chosen)
    rankings = tuple(
        Ranking(tuple(relabel[c] for c in r.order if c in keep)) for r in e.preferences
    )
    return Election(len(chosen), rankings)


def sub_election(e: Election, voters: Iterable[int], candidates: Iterable[int]) -> Election:
    """The election induced by a subset of voters (1-based indices) and candidates."""
    chosen = sorted(set(voters))
    if not chosen:
        raise ValueError("cannot keep zero voters")
    if chosen[0] < 1 or chosen[-1] > e.num_voters:
        raise ValueError(f"voter indices {chosen} out of range 1..{e.num_voters}")
    picked = Election(e.num_candidates, tuple(e.preferences[i - 1] for i in chosen))
    return restrict(picked, candidates)


def contains_configuration(e: Election, cfg: Configuration) -> bool:
    """True iff injective voter and candidate maps embed ``cfg`` into ``e``
    preserving all stated preferences.  Exhaustive over all injections."""
    return kernels.contains_configuration(e.rank_vectors(), cfg.rank_vectors())


def find_embedding(
    e: Election, cfg: Configuration
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """First embedding of ``cfg`` into ``e``, or None.

    Returns (f, g): f[i] is the 1-based election voter hosting configuration
    voter i+1, g[s] the election candidate hosting configuration candidate s+1.
    """
    host = e.rank_vectors()
    cfgr = cfg.rank_vectors()
    n, l = len(host), len(cfgr)
    if l > n:
        return None
    m, h = e.num_candidates, cfg.num_candidates
    if h > m:
        return None

    assigned: list[int] = []
    used = [False] * m

    def place(f: tuple[int, ...]) -> Optional[tuple[int, ...]]:
        depth = len(assigned)
        if depth == h:
            return tuple(assigned)
        for c in range(1, m + 1):
            if used[c - 1]:
                continue
            ok = True
            for t, ct in enumerate(assigned):
                for i in range(l):
                    hr = host[f[i]]
                    if (cfgr[i][t] < cfgr[i][depth]) != (hr[ct - 1] < hr[c - 1]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                assigned.append(c)
                used[c - 1] = True
                found = place(f)
                assigned.pop()
                used[c - 1] = False
                if found is not None:
                    return found
        return None

    for f in _itertools_permutations(range(n), l):
        g = place(f)
        if g is not None:
            return tuple(i + 1 for i in f), g
    return None


@lru_cache(maxsize=None)
def _pair_perm_values(ref_order: tuple[int, ...], other_order: tuple[int, ...]) -> tuple[int, ...]:
    ranks = _rank_vector(ref_order)
    return tuple(ranks[c - 1] + 1 for c in other_order)


def pair_permutation(reference: Ranking, other: Ranking) -> Permutation:
    """The permutation ``other`` becomes after relabeling candidates so that
    ``reference`` reads 1 2 ... m best-to-worst.

    >>> pair_permutation(Ranking((1, 2, 3, 4)), Ranking((2, 4, 1, 3)))
    Permutation((2, 4, 1, 3))
    """
    if reference.ids != other.ids:
        raise ValueError("rankings are over different candidate sets")
    return Permutation(_pair_perm_values(reference.order, other.order))


def all_elections(m: int, n: int, limit: Optional[int] = None) -> Iterator[Election]:
    """Every ordered tuple of n rankings over [m], in lexicographic order."""
    if limit is None:
        limit = brute_call_guard()
    total = math.factorial(m) ** n
    if total > limit:
        raise GuardExceeded(f"(m!)^n = {total} elections at (m,n)=({m},{n}) exceeds the guard {limit}")
    rankings = [Ranking(v) for v in _itertools_permutations(range(1, m + 1))]
    for prefs in product(rankings, repeat=n):
        yield Election(m, prefs)


def elections_with_first(m: int, n: int, first: Ranking) -> Iterator[Election]:
    """The lexicographic slice of :func:`all_elections` with a fixed first voter.

    This is the splitting point for parallel consumption: slices are disjoint,
    cover everything, and merge deterministically in first-ranking order.
    """
    rankings = [Ranking(v) for v in _itertools_permutations(range(1, m + 1))]
    if n == 1:
        yield Election(m, (first,))
        return
    for rest in product(rankings, repeat=n - 1):
        yield Election(m, (first, *rest))
