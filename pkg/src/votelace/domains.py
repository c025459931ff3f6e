"""Recognizers for the restricted election domains, one per formulation.

Each restriction the package knows about is implemented in every formulation
available for it (direct definition, forbidden configurations, recursive
characterization, ...), so the formulations can be tested against each other.
Recognizers are exponential-time by design: subset, axis, and voter-order
exhaustion at desk scale, guarded by a hard cap.

A failing verdict carries a witness naming voters (1-based) and candidates
whose induced sub-election still violates the domain condition; witnesses are
computed lazily so that bulk counting only pays for the boolean.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Optional

from votelace import kernels
from votelace.elections import Election, _rank_vector, sub_election
from votelace.errors import GuardExceeded
from votelace.perms import PatternSet, Permutation

MAX_CANDIDATES = 8
MAX_VOTERS = 6

#: pairwise voter patterns forbidden in group-separable elections
GROUP_SEPARABLE_FORBIDDEN = PatternSet([Permutation((2, 4, 1, 3)), Permutation((3, 1, 4, 2))])

#: pairwise voter patterns forbidden in enriched group-separable elections;
#: closed under inversion, counted by OEIS A006012
ENRICHED_FORBIDDEN = PatternSet(
    [
        Permutation((2, 4, 1, 3)),
        Permutation((3, 1, 4, 2)),
        Permutation((2, 1, 4, 3)),
        Permutation((3, 4, 1, 2)),
    ]
)

#: the four 2-voter, 4-candidate configurations whose avoidance (on top of
#: medium-restriction) defines the enriched domain
ENRICHED_FORBIDDEN_CONFIGURATIONS = (
    Election.from_rows([(1, 2, 3, 4), (2, 1, 4, 3)]),
    Election.from_rows([(1, 2, 3, 4), (2, 4, 1, 3)]),
    Election.from_rows([(1, 3, 2, 4), (2, 1, 4, 3)]),
    Election.from_rows([(1, 3, 2, 4), (2, 4, 1, 3)]),
)

#: the 2-voter, 4-candidate configuration whose avoidance (on top of
#: medium-restriction) defines group-separability
GROUP_SEPARABLE_FORBIDDEN_CONFIGURATION = Election.from_rows([(1, 2, 3, 4), (2, 4, 1, 3)])

_GS_PATS = tuple(p.values for p in GROUP_SEPARABLE_FORBIDDEN)
_ENRICHED_PATS = tuple(p.values for p in ENRICHED_FORBIDDEN)


@dataclass(frozen=True)
class Witness:
    """Voters and candidates of a sub-election violating a domain condition."""

    voters: tuple[int, ...]
    candidates: tuple[int, ...]


class DomainVerdict:
    """Boolean verdict plus, when false, a violating-substructure witness.

    The witness is materialized on first access: replaying it (restricting the
    election to the named voters and candidates) must reproduce the violation.
    """

    __slots__ = ("holds", "_witness", "_finder")

    def __init__(
        self,
        holds: bool,
        witness: Optional[Witness] = None,
        finder: Optional[Callable[[], Witness]] = None,
    ):
        if holds and (witness is not None or finder is not None):
            raise ValueError("a holding verdict cannot carry a witness")
        if not holds and witness is None and finder is None:
            raise ValueError("a failing verdict needs a witness or a witness finder")
        self.holds = holds
        self._witness = witness
        self._finder = finder

    @property
    def witness(self) -> Optional[Witness]:
        if self.holds:
            return None
        if self._witness is None:
            self._witness = self._finder()
        return self._witness

    def __bool__(self) -> bool:
        return self.holds

    def __repr__(self) -> str:
        return f"DomainVerdict(holds={self.holds})"


def format_verdict(domain: str, verdict: DomainVerdict) -> str:
    """Structured text report: domain name, boolean, witness when present."""
    lines = [f"domain: {domain}", f"holds: {'true' if verdict.holds else 'false'}"]
    if not verdict.holds:
        w = verdict.witness
        lines.append("violating voters: " + " ".join(map(str, w.voters)))
        lines.append("violating candidates: " + " ".join(map(str, w.candidates)))
    return "\n".join(lines)


def replay_witness(recognizer: Callable[[Election], DomainVerdict], e: Election, verdict: DomainVerdict) -> bool:
    """True iff the verdict's witness still violates under the same recognizer."""
    w = verdict.witness
    return not recognizer(sub_election(e, w.voters, w.candidates)).holds


def _guard(e: Election) -> None:
    if e.num_candidates > MAX_CANDIDATES or e.num_voters > MAX_VOTERS:
        raise GuardExceeded(
            f"recognizers are capped at m <= {MAX_CANDIDATES}, n <= {MAX_VOTERS}; "
            f"got (m,n)=({e.num_candidates},{e.num_voters})"
        )


# ---------------------------------------------------------------------------
# medium restriction


@lru_cache(maxsize=None)
def _triples(m: int) -> tuple[tuple[int, int, int], ...]:
    return tuple(combinations(range(1, m + 1), 3))


@lru_cache(maxsize=None)
def _middles(order: tuple[int, ...]) -> tuple[int, ...]:
    # per candidate triple (in _triples order), the middle candidate of this ranking
    ranks = _rank_vector(order)
    out = []
    for a, b, c in _triples(len(order)):
        ra, rb, rc = ranks[a - 1], ranks[b - 1], ranks[c - 1]
        if ra < rb:
            mid = b if rb < rc else (c if ra < rc else a)
        else:
            mid = a if ra < rc else (c if rb < rc else b)
        out.append(mid)
    return tuple(out)


def is_medium_restricted(e: Election) -> DomainVerdict:
    """No candidate triple has three voters each placing a different member in the middle."""
    _guard(e)
    if e.num_voters <= 2 or e.num_candidates <= 2:
        return DomainVerdict(True)
    rows = [_middles(r.order) for r in e.preferences]
    for t in range(len(rows[0])):
        if len({row[t] for row in rows}) == 3:
            return DomainVerdict(False, finder=lambda t=t, rows=tuple(rows): _medium_witness(e, t, rows))
    return DomainVerdict(True)


def _medium_witness(e: Election, t: int, rows) -> Witness:
    triple = _triples(e.num_candidates)[t]
    first_voter_for = {}
    for v, row in enumerate(rows, start=1):
        first_voter_for.setdefault(row[t], v)
        if len(first_voter_for) == 3:
            break
    return Witness(tuple(sorted(first_voter_for.values())), triple)


# ---------------------------------------------------------------------------
# group-separability, direct definition


def is_group_separable_direct(e: Election) -> DomainVerdict:
    """Every candidate subset of size >= 2 splits into two blocks that each
    voter ranks entirely above or entirely below one another."""
    _guard(e)
    bad = _unsplittable_subset(e)
    if bad is None:
        return DomainVerdict(True)
    voters = tuple(range(1, e.num_voters + 1))
    return DomainVerdict(False, witness=Witness(voters, bad))


def _unsplittable_subset(e: Election) -> Optional[tuple[int, ...]]:
    m = e.num_candidates
    ranks = e.rank_vectors()
    for size in range(2, m + 1):
        for subset in combinations(range(1, m + 1), size):
            pivot, rest = subset[0], subset[1:]
            # unordered bipartitions, pinning the pivot to block A; skip the
            # pick that would leave block B empty
            for pick in range(2 ** len(rest)):
                block_a = [pivot] + [c for i, c in enumerate(rest) if pick >> i & 1]
                if len(block_a) == size:
                    continue
                block_b = [c for c in rest if c not in block_a]
                if all(_split_ok(r, block_a, block_b) for r in ranks):
                    break
            else:
                return subset
    return None


def _split_ok(ranks: tuple[int, ...], block_a, block_b) -> bool:
    max_a = max(ranks[c - 1] for c in block_a)
    min_b = min(ranks[c - 1] for c in block_b)
    if max_a < min_b:
        return True
    min_a = min(ranks[c - 1] for c in block_a)
    max_b = max(ranks[c - 1] for c in block_b)
    return max_b < min_a


# ---------------------------------------------------------------------------
# forbidden-configuration formulations (pairwise voter permutations)


@lru_cache(maxsize=1 << 17)
def _pair_avoids(ref: tuple[int, ...], other: tuple[int, ...], pats: tuple) -> bool:
    ranks = _rank_vector(ref)
    perm = tuple(ranks[c - 1] + 1 for c in other)
    return not any(kernels.contains_pattern(perm, pat) for pat in pats)


def _first_bad_pair(e: Election, pats: tuple) -> Optional[tuple[int, int]]:
    orders = [r.order for r in e.preferences]
    n = len(orders)
    for i in range(n):
        for j in range(n):
            if i != j and not _pair_avoids(orders[i], orders[j], pats):
                return (i + 1, j + 1)
    return None


def _pair_witness(e: Election, i: int, j: int, pats: tuple) -> Witness:
    from votelace.perms import occurrences

    ref = e.preferences[i - 1]
    other = e.preferences[j - 1]
    ranks = _rank_vector(ref.order)
    perm = Permutation(tuple(ranks[c - 1] + 1 for c in other.order))
    for pat in pats:
        for occ in occurrences(Permutation(pat), perm):
            candidates = tuple(sorted(other.order[k - 1] for k in occ))
            return Witness(tuple(sorted((i, j))), candidates)
    raise AssertionError("pair witness requested for a clean pair")


def is_group_separable_bh(e: Election) -> DomainVerdict:
    """Group-separability via medium-restriction plus the forbidden 2-voter,
    4-candidate configuration (pairwise voter permutations avoiding 2413/3142)."""
    medium = is_medium_restricted(e)
    if not medium.holds:
        return medium
    bad = _first_bad_pair(e, _GS_PATS)
    if bad is None:
        return DomainVerdict(True)
    i, j = bad
    return DomainVerdict(False, finder=lambda: _pair_witness(e, i, j, _GS_PATS))


def is_enriched_group_separable(e: Election) -> DomainVerdict:
    """Group-separable and additionally avoiding the two extra 2-voter
    configurations: pairwise voter permutations avoid all four forbidden
    patterns, and the election stays medium-restricted."""
    medium = is_medium_restricted(e)
    if not medium.holds:
        return medium
    bad = _first_bad_pair(e, _ENRICHED_PATS)
    if bad is None:
        return DomainVerdict(True)
    i, j = bad
    return DomainVerdict(False, finder=lambda: _pair_witness(e, i, j, _ENRICHED_PATS))


# ---------------------------------------------------------------------------
# enriched domain, recursive characterization


def is_enriched_recursive(e: Election) -> DomainVerdict:
    """Recursive characterization of the enriched domain.

    After relabeling candidates so the first preference is the identity, some
    split point k < m must sort every preference into either the identity /
    reverse-identity block or one of two branch shapes (fixed prefix or fixed
    suffix), with the restriction to the free candidates again enriched.
    """
    _guard(e)
    if _recursive_ok(tuple(r.order for r in e.preferences)):
        return DomainVerdict(True)
    return DomainVerdict(False, finder=lambda: _minimized_witness(e, is_enriched_recursive))


@lru_cache(maxsize=1 << 17)
def _recursive_ok(prefs: tuple[tuple[int, ...], ...]) -> bool:
    m = len(prefs[0])
    if m <= 1:
        return True
    ranks = _rank_vector(prefs[0])
    normalized = tuple(tuple(ranks[c - 1] + 1 for c in p) for p in prefs)
    ident = tuple(range(1, m + 1))
    rev = ident[::-1]
    moving = [p for p in normalized if p != ident and p != rev]
    for k in range(1, m):
        # high block free: preferences open with 1..k or close with k..1
        if all(p[:k] == ident[:k] or p[m - k:] == rev[m - k:] for p in moving):
            restricted = tuple(tuple(c - k for c in p if c > k) for p in normalized)
            if _recursive_ok(restricted):
                return True
        # low block free: preferences close with k+1..m or open with m..k+1
        if all(p[k:] == ident[k:] or p[: m - k] == rev[: m - k] for p in moving):
            restricted = tuple(tuple(c for c in p if c <= k) for p in normalized)
            if _recursive_ok(restricted):
                return True
    return False


# ---------------------------------------------------------------------------
# extremes-vs-middles condition


@lru_cache(maxsize=None)
def _quads(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(1, m + 1), 4))


@lru_cache(maxsize=None)
def _ends_and_mids(order: tuple[int, ...]):
    # per 4-subset (in _quads order): ({top, bottom}, middle pair) of this ranking
    ranks = _rank_vector(order)
    ends = []
    mids = []
    for quad in _quads(len(order)):
        by_rank = sorted(quad, key=lambda c: ranks[c - 1])
        ends.append(frozenset((by_rank[0], by_rank[3])))
        mids.append(frozenset((by_rank[1], by_rank[2])))
    return tuple(ends), tuple(mids)


def em_condition(e: Election) -> DomainVerdict:
    """For every 4-subset and ordered voter pair, one voter's {top, bottom}
    differs from the other's middle pair.  Equivalent to avoiding the four
    enriched forbidden configurations (without medium-restriction)."""
    _guard(e)
    if e.num_candidates < 4:
        return DomainVerdict(True)
    tables = [_ends_and_mids(r.order) for r in e.preferences]
    n = e.num_voters
    quads = _quads(e.num_candidates)
    for gamma in range(n):
        ends = tables[gamma][0]
        for delta in range(n):
            mids = tables[delta][1]
            for s in range(len(quads)):
                if ends[s] == mids[s]:
                    return DomainVerdict(
                        False,
                        witness=Witness(tuple(sorted({gamma + 1, delta + 1})), quads[s]),
                    )
    return DomainVerdict(True)


# ---------------------------------------------------------------------------
# single-peaked


@lru_cache(maxsize=None)
def _axis_positions(m: int) -> tuple[tuple[int, ...], ...]:
    # one entry per axis (reversals identified): positions indexed by candidate-1
    if m <= 1:
        return ((0,) * max(m, 1),)
    out = []
    for axis in permutations(range(1, m + 1)):
        if axis[0] > axis[-1]:
            continue
        pos = [0] * m
        for i, c in enumerate(axis):
            pos[c - 1] = i
        out.append(tuple(pos))
    return tuple(out)


@lru_cache(maxsize=None)
def _peak_mask(order: tuple[int, ...]) -> int:
    mask = 0
    for i, pos in enumerate(_axis_positions(len(order))):
        if kernels.fits_axis(order, pos):
            mask |= 1 << i
    return mask


def is_single_peaked(e: Election) -> DomainVerdict:
    """Some candidate axis exists on which every prefix of every voter's
    ranking is an interval.  Exhaustive over the m!/2 axes."""
    _guard(e)
    mask = -1
    for r in e.preferences:
        mask &= _peak_mask(r.order)
        if mask == 0:
            return DomainVerdict(False, finder=lambda: _minimized_witness(e, is_single_peaked))
    return DomainVerdict(True)


# ---------------------------------------------------------------------------
# single-crossing


def is_single_crossing(e: Election) -> DomainVerdict:
    """Some ordering of the voter tuple makes every candidate pair switch at
    most once.  Exhaustive over the n! voter orderings."""
    _guard(e)
    n = e.num_voters
    if n <= 2:
        return DomainVerdict(True)
    ranks = e.rank_vectors()
    m = e.num_candidates
    prefer_first = [
        tuple(r[a - 1] < r[b - 1] for r in ranks)
        for a, b in combinations(range(1, m + 1), 2)
    ]
    for order in permutations(range(n)):
        if all(_switches_at_most_once(bits, order) for bits in prefer_first):
            return DomainVerdict(True)
    return DomainVerdict(False, finder=lambda: _minimized_witness(e, is_single_crossing))


def _switches_at_most_once(bits: tuple[bool, ...], order: tuple[int, ...]) -> bool:
    switches = 0
    prev = bits[order[0]]
    for t in order[1:]:
        cur = bits[t]
        if cur != prev:
            switches += 1
            if switches > 1:
                return False
            prev = cur
    return True


# ---------------------------------------------------------------------------
# generic witness minimizer


def _minimized_witness(e: Election, recognizer) -> Witness:
    """Greedily shrink the election while the recognizer still rejects it."""
    voters = list(range(1, e.num_voters + 1))
    candidates = list(range(1, e.num_candidates + 1))
    changed = True
    while changed:
        changed = False
        for v in list(voters):
            if len(voters) > 1:
                trial = [x for x in voters if x != v]
                if not recognizer(sub_election(e, trial, candidates)).holds:
                    voters = trial
                    changed = True
        for c in list(candidates):
            if len(candidates) > 1:
                trial = [x for x in candidates if x != c]
                if not recognizer(sub_election(e, voters, trial)).holds:
                    candidates = trial
                    changed = True
    return Witness(tuple(voters), tuple(candidates))


#: recognizers by their command-line names
DOMAINS: dict[str, Callable[[Election], DomainVerdict]] = {
    "medium": is_medium_restricted,
    "group-separable": is_group_separable_direct,
    "group-separable-bh": is_group_separable_bh,
    "enriched": is_enriched_group_separable,
    "enriched-recursive": is_enriched_recursive,
    "em": em_condition,
    "single-peaked": is_single_peaked,
    "single-crossing": is_single_crossing,
}
