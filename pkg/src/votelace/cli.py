"""Command-line front end.

Subcommands: check, count, contains, verify, bound.  Reports go to standard
output, diagnostics to standard error.  Exit codes: 0 = holds/success,
1 = property fails, 2 = usage or input error.  The VOTELACE_GUARD environment
variable overrides the brute-force call guard.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from votelace import domains, enumeration, verify
from votelace.elections import contains_configuration, find_embedding, parse_election
from votelace.errors import GuardExceeded, ParseError
from votelace.pairs import PairPattern, PairPatternSet, strong_contains, strong_occurrences
from votelace.perms import Permutation, contains_pattern, occurrences


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="votelace", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="test an election file against a domain restriction")
    p_check.add_argument("file", type=Path, help="election file (one ranking per line)")
    p_check.add_argument("--domain", required=True, choices=sorted(domains.DOMAINS))

    p_count = sub.add_parser("count", help="count restricted elections")
    p_count.add_argument("--m", type=int, required=True, help="number of candidates")
    p_count.add_argument("--n", type=int, required=True, help="number of voters")
    p_count.add_argument("--domain", required=True, choices=sorted(domains.DOMAINS))
    p_count.add_argument("--method", required=True, choices=["brute", "recurrence", "formula"])
    p_count.add_argument("--jobs", type=int, default=1, help="workers for partitioned enumeration")
    p_count.add_argument("--guard", type=int, default=None, help="override the brute-force call guard")

    p_contains = sub.add_parser("contains", help="containment queries")
    p_contains.add_argument(
        "--kind", required=True, choices=["pattern", "pair", "config", "three-voter"]
    )
    p_contains.add_argument("operands", nargs="+", help="operands; see --kind")
    p_contains.add_argument("--witness", action="store_true", help="print one occurrence")

    p_verify = sub.add_parser("verify", help="run a cross-formulation verification suite")
    p_verify.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    p_verify.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p_verify.add_argument("--jobs", type=int, default=1)

    p_bound = sub.add_parser("bound", help="3-voter pattern upper bound for restricted counts")
    p_bound.add_argument("--m", type=int, required=True)
    p_bound.add_argument("--n", type=int, required=True)
    p_bound.add_argument("--pi", required=True, help='"single-crossing" or a pair-pattern file')
    p_bound.add_argument("--pair-cap", type=int, default=6, help="cap on pair enumeration size")
    p_bound.add_argument("--jobs", type=int, default=1)

    return parser


def cmd_check(args) -> int:
    text = args.file.read_text(encoding="utf-8")
    election = parse_election(text)
    verdict = domains.DOMAINS[args.domain](election)
    print(domains.format_verdict(args.domain, verdict))
    return 0 if verdict.holds else 1


def cmd_count(args) -> int:
    if args.method == "brute":
        report = enumeration.brute_force_count(
            args.m, args.n, domains.DOMAINS[args.domain], label=args.domain,
            guard=args.guard, jobs=args.jobs,
        )
    elif args.method == "recurrence":
        if args.domain != "enriched":
            raise ValueError("--method recurrence is only available for --domain enriched")
        report = enumeration.CountReport(
            args.m, args.n, "enriched", enumeration.enriched_count(args.m, args.n), "recurrence"
        )
    else:
        if args.domain != "enriched":
            raise ValueError("--method formula is only available for --domain enriched")
        if args.m in (3, 4, 5):
            count = enumeration.enriched_count_formula(f"m{args.m}", args.n)
        elif args.n == 2:
            count = enumeration.enriched_count_formula("n2", args.m)
        else:
            raise ValueError(f"no closed formula covers (m,n)=({args.m},{args.n})")
        report = enumeration.CountReport(args.m, args.n, "enriched", count, "formula")
    print(report.to_json())
    return 0


def _expect_operands(args, count: int, usage: str) -> list[str]:
    if len(args.operands) != count:
        raise ValueError(f"--kind {args.kind} expects {usage}")
    return args.operands


def cmd_contains(args) -> int:
    if args.kind == "pattern":
        pat_line, host_line = _expect_operands(args, 2, "PATTERN HOST (one-line permutations)")
        pattern = Permutation.from_line(pat_line)
        host = Permutation.from_line(host_line)
        found = contains_pattern(pattern, host)
        print("true" if found else "false")
        if found and args.witness:
            indices = next(iter(occurrences(pattern, host)))
            print("witness indices:", " ".join(map(str, indices)))
    elif args.kind == "pair":
        small_line, big_line = _expect_operands(args, 2, 'SMALL BIG (each "perm | perm")')
        small = PairPattern.from_line(small_line)
        big = PairPattern.from_line(big_line)
        found = strong_contains(small, big)
        print("true" if found else "false")
        if found and args.witness:
            values = next(iter(strong_occurrences(small, big)))
            print("witness values:", " ".join(map(str, sorted(values))))
    elif args.kind == "config":
        e_path, cfg_path = _expect_operands(args, 2, "ELECTION_FILE CONFIG_FILE")
        election = parse_election(Path(e_path).read_text(encoding="utf-8"))
        config = parse_election(Path(cfg_path).read_text(encoding="utf-8"))
        found = contains_configuration(election, config)
        print("true" if found else "false")
        if found and args.witness:
            f, g = find_embedding(election, config)
            print("witness voter map:", " ".join(f"{i + 1}->{v}" for i, v in enumerate(f)))
            print("witness candidate map:", " ".join(f"{s + 1}->{c}" for s, c in enumerate(g)))
    else:
        pi_l, rho_l, tau_l, sigma_l = _expect_operands(args, 4, "PI RHO TAU SIGMA (one-line permutations)")
        pi, rho = Permutation.from_line(pi_l), Permutation.from_line(rho_l)
        tau, sigma = Permutation.from_line(tau_l), Permutation.from_line(sigma_l)
        found = enumeration.contains_3voter(pi, rho, tau, sigma)
        print("true" if found else "false")
        if found and args.witness:
            big = PairPattern(pi, rho)
            for q in enumeration.three_voter_pattern_set(tau, sigma):
                if strong_contains(q, big):
                    values = next(iter(strong_occurrences(q, big)))
                    print(f"witness pattern: {q.to_line()}")
                    print("witness values:", " ".join(map(str, sorted(values))))
                    break
    return 0 if found else 1


def cmd_verify(args) -> int:
    result = verify.run_suite(args.suite, seed=args.seed, jobs=args.jobs)
    for line in result.info:
        print(line)
    for failure in result.failures:
        print(f"FAIL: {failure}")
    status = "ok" if result.passed else f"{len(result.failures)} failures"
    print(f"suite {result.name}: {result.checked} checks, {status}")
    return 0 if result.passed else 1


def cmd_bound(args) -> int:
    if args.pi == "single-crossing":
        pi_set = enumeration.single_crossing_pair_patterns()
        label = "bound:single-crossing"
    else:
        pi_set = PairPatternSet.from_lines(Path(args.pi).read_text(encoding="utf-8"))
        label = f"bound:{args.pi}"
    value = enumeration.upper_bound_3config(args.m, args.n, pi_set, max_m=args.pair_cap, jobs=args.jobs)
    print(enumeration.CountReport(args.m, args.n, label, value, "formula").to_json())
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "check": cmd_check,
        "count": cmd_count,
        "contains": cmd_contains,
        "verify": cmd_verify,
        "bound": cmd_bound,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, GuardExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
