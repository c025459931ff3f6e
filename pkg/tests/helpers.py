"""Shared test helpers."""

from itertools import permutations as itertools_permutations

from votelace.elections import Election
from votelace.perms import Permutation


def perm(compact: str) -> Permutation:
    """Build a permutation from compact one-line notation, e.g. perm("2413")."""
    return Permutation(tuple(int(ch) for ch in compact))


def election(*rows: str) -> Election:
    """Build an election from compact ranking strings, e.g. election("1234", "2413")."""
    return Election.from_rows([tuple(int(ch) for ch in row) for row in rows])


def symmetric_group(n: int) -> list[Permutation]:
    return [Permutation(v) for v in itertools_permutations(range(1, n + 1))]
