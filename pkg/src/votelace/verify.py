"""Cross-formulation verification suites.

Every claim the package relies on is double-checked here by running two
independent routes over exhaustive small ranges (plus seeded random samples
where the exhaustive range would be too large): recognizer vs recognizer,
recurrence vs brute force, strong-order reduction vs generic containment.
Failures carry the full counterexample.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import permutations as _itertools_permutations

from votelace import domains
from votelace.elections import Election, all_elections, contains_configuration
from votelace.enumeration import (
    brute_force_count,
    contains_3voter,
    count_avoiding_pairs,
    enriched_count,
    enriched_count_formula,
    reduced_enriched_count,
    reduced_enriched_count_closed,
    single_crossing_pair_patterns,
    upper_bound_3config,
)
from votelace.pairs import PairPattern, strong_contains, weak_bruhat_le
from votelace.perms import Permutation, count_avoiders

DEFAULT_SEED = 1729


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    info: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, counterexample: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(counterexample)


def _perms(n: int) -> list[Permutation]:
    return [Permutation(v) for v in _itertools_permutations(range(1, n + 1))]


def _random_perm(rng: random.Random, n: int) -> Permutation:
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return Permutation(tuple(values))


def _random_election(rng: random.Random, m: int, n: int) -> Election:
    return Election.from_rows([_random_perm(rng, m).values for _ in range(n)])


def suite_bh_equivalence(seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteResult:
    """Direct group-separability agrees with the forbidden-configuration form."""
    res = SuiteResult("bh-equivalence")
    for m in range(1, 5):
        for n in range(1, 4):
            for e in all_elections(m, n):
                a = domains.is_group_separable_direct(e).holds
                b = domains.is_group_separable_bh(e).holds
                res.check(a == b, f"(m,n)=({m},{n}) election {e.to_text()!r}: direct={a} bh={b}")
    rng = random.Random(seed)
    for _ in range(10_000):
        e = _random_election(rng, 5, 4)
        a = domains.is_group_separable_direct(e).holds
        b = domains.is_group_separable_bh(e).holds
        res.check(a == b, f"sampled (5,4) election {e.to_text()!r}: direct={a} bh={b}")
    return res


def suite_thm32(seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteResult:
    """The recursive characterization agrees with the configuration-based recognizer."""
    res = SuiteResult("thm32")
    cells = [(m, n) for m in range(1, 5) for n in range(1, 4)] + [(5, 2)]
    for m, n in cells:
        for e in all_elections(m, n):
            a = domains.is_enriched_group_separable(e).holds
            b = domains.is_enriched_recursive(e).holds
            res.check(a == b, f"(m,n)=({m},{n}) election {e.to_text()!r}: configuration={a} recursive={b}")
    return res


def suite_prop33(seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteResult:
    """The extremes-vs-middles condition equals avoidance of the four forbidden configurations."""
    res = SuiteResult("prop33")
    cells = [(m, 2) for m in range(1, 6)] + [(4, 3)]
    for m, n in cells:
        for e in all_elections(m, n):
            a = domains.em_condition(e).holds
            b = not any(
                contains_configuration(e, cfg) for cfg in domains.ENRICHED_FORBIDDEN_CONFIGURATIONS
            )
            res.check(a == b, f"(m,n)=({m},{n}) election {e.to_text()!r}: em={a} config-avoidance={b}")
    return res


def _three_voter_election(pi: Permutation, rho: Permutation) -> Election:
    m = len(pi)
    return Election.from_rows([tuple(range(1, m + 1)), pi.values, rho.values])


def suite_thm41(seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteResult:
    """The strong-order route to 3-voter containment agrees with the generic oracle.

    This equivalence also pins the composition convention used when building
    the pattern set.
    """
    res = SuiteResult("thm41")
    for h, m in [(2, 3), (2, 4), (3, 4)]:
        small = _perms(h)
        big = _perms(m)
        for tau in small:
            for sigma in small:
                cfg = _three_voter_election(tau, sigma)
                for pi in big:
                    for rho in big:
                        a = contains_3voter(pi, rho, tau, sigma)
                        b = contains_configuration(_three_voter_election(pi, rho), cfg)
                        res.check(
                            a == b,
                            f"tau={tau} sigma={sigma} pi={pi} rho={rho}: strong-order={a} generic={b}",
                        )
    rng = random.Random(seed)
    for _ in range(1000):
        tau, sigma = _random_perm(rng, 3), _random_perm(rng, 3)
        pi, rho = _random_perm(rng, 5), _random_perm(rng, 5)
        a = contains_3voter(pi, rho, tau, sigma)
        b = contains_configuration(_three_voter_election(pi, rho), _three_voter_election(tau, sigma))
        res.check(a == b, f"sampled tau={tau} sigma={sigma} pi={pi} rho={rho}: strong-order={a} generic={b}")
    return res


def suite_cor43(seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteResult:
    """Counting avoiding (V2, V3) pairs through the strong order matches direct counting."""
    res = SuiteResult("cor43")
    patterns = [(t, s) for h in (2, 3) for t in _perms(h) for s in _perms(h)]
    for m in range(1, 5):
        pairs = _perms(m)
        for tau, sigma in patterns:
            cfg = _three_voter_election(tau, sigma)
            direct = sum(
                1
                for v2 in pairs
                for v3 in pairs
                if not contains_configuration(_three_voter_election(v2, v3), cfg)
            )
            via_patterns = count_avoiding_pairs(m, tau, sigma, jobs=jobs).count
            res.check(
                direct == via_patterns,
                f"m={m} tau={tau} sigma={sigma}: direct={direct} strong-order={via_patterns}",
            )
    return res


def suite_recurrence(seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteResult:
    """The enriched-count recurrence matches exhaustive recognition."""
    res = SuiteResult("recurrence")
    cells = [(m, n) for m in range(1, 5) for n in range(1, 4)] + [(5, 2), (5, 3)]
    for m, n in cells:
        brute = brute_force_count(m, n, domains.is_enriched_group_separable, jobs=jobs).count
        expected = enriched_count(m, n)
        res.check(brute == expected, f"(m,n)=({m},{n}): brute-force={brute} recurrence={expected}")
        res.info.append(f"({m},{n}): brute-force={brute} recurrence={expected}")
    return res


def suite_closed_forms(seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteResult:
    """Closed forms and fixed-size formulas match the integer recurrences."""
    res = SuiteResult("closed-forms")
    for m in range(0, 11):
        for n in range(1, 9):
            exact = reduced_enriched_count(m, n)
            approx = reduced_enriched_count_closed(m, n)
            rel = abs(approx - exact) / exact
            res.check(rel <= 1e-9, f"closed form at (m,n)=({m},{n}): {approx} vs {exact} (rel {rel:.2e})")
    for selector, size in (("m3", 3), ("m4", 4), ("m5", 5)):
        for n in range(1, 11):
            formula = enriched_count_formula(selector, n)
            exact = enriched_count(size, n)
            res.check(formula == exact, f"{selector} at n={n}: formula={formula} recurrence={exact}")
    for m in range(0, 13):
        formula = enriched_count_formula("n2", m)
        exact = enriched_count(m, 2)
        res.check(formula == exact, f"n2 at m={m}: formula={formula} recurrence={exact}")
    return res


def suite_weak_bruhat(seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteResult:
    """Avoiding the pair pattern [12, 21] is exactly weak-Bruhat comparability."""
    res = SuiteResult("weak-bruhat")
    rising_falling = PairPattern.of((1, 2), (2, 1))
    for m in range(1, 6):
        for pi in _perms(m):
            for rho in _perms(m):
                avoids = not strong_contains(rising_falling, PairPattern(pi, rho))
                below = weak_bruhat_le(rho, pi)
                res.check(
                    avoids == below,
                    f"pi={pi} rho={rho}: avoids-[12|21]={avoids} inversion-subset={below}",
                )
    return res


def suite_bound3(seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteResult:
    """The 3-voter pattern bound is sound for single-crossing counts at desk scale."""
    res = SuiteResult("bound3")
    pi_set = single_crossing_pair_patterns()
    for m, n in [(3, 3), (4, 3)]:
        count = brute_force_count(m, n, domains.is_single_crossing, jobs=jobs).count
        bound = upper_bound_3config(m, n, pi_set, jobs=jobs)
        res.check(count <= bound, f"(m,n)=({m},{n}): single-crossing count {count} exceeds bound {bound}")
        res.info.append(f"({m},{n}): count={count} bound={bound}")
    return res


def suite_gamma_link(seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteResult:
    """At two voters, enriched elections factor through pattern-avoiding permutations."""
    res = SuiteResult("gamma-link")
    for m in range(1, 7):
        brute = brute_force_count(m, 2, domains.is_enriched_group_separable, jobs=jobs).count
        factored = math.factorial(m) * count_avoiders(m, domains.ENRICHED_FORBIDDEN)
        res.check(brute == factored, f"m={m}: brute-force={brute} m!*avoiders={factored}")
        res.info.append(f"m={m}: brute-force={brute} m!*avoiders={factored}")
    return res


SUITES = {
    "bh-equivalence": suite_bh_equivalence,
    "thm32": suite_thm32,
    "prop33": suite_prop33,
    "thm41": suite_thm41,
    "cor43": suite_cor43,
    "recurrence": suite_recurrence,
    "closed-forms": suite_closed_forms,
    "weak-bruhat": suite_weak_bruhat,
    "bound3": suite_bound3,
    "gamma-link": suite_gamma_link,
}


def run_suite(name: str, seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; have {sorted(SUITES)}")
    return SUITES[name](seed=seed, jobs=jobs)
