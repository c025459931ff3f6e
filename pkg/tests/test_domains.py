import pytest

from helpers import election
from votelace.domains import (
    DOMAINS,
    DomainVerdict,
    Witness,
    em_condition,
    format_verdict,
    is_enriched_group_separable,
    is_enriched_recursive,
    is_group_separable_bh,
    is_group_separable_direct,
    is_medium_restricted,
    is_single_crossing,
    is_single_peaked,
    replay_witness,
)
from votelace.elections import all_elections
from votelace.errors import GuardExceeded


class TestMediumRestricted:
    def test_unanimous(self):
        assert is_medium_restricted(election("1234", "1234", "1234")).holds

    def test_rotating_middles(self):
        v = is_medium_restricted(election("123", "231", "312"))
        assert not v.holds
        assert v.witness == Witness((1, 2, 3), (1, 2, 3))

    def test_two_voters_always_hold(self):
        for e in all_elections(3, 2):
            assert is_medium_restricted(e).holds


class TestGroupSeparableDirect:
    def test_single_voter(self):
        for e in all_elections(4, 1):
            assert is_group_separable_direct(e).holds

    def test_forbidden_pair(self):
        assert not is_group_separable_direct(election("1234", "2413")).holds

    def test_reversed_pair(self):
        assert is_group_separable_direct(election("1234", "4321")).holds


class TestGroupSeparableBH:
    def test_forbidden_pair_witness(self):
        v = is_group_separable_bh(election("1234", "2413"))
        assert not v.holds
        assert v.witness == Witness((1, 2), (1, 2, 3, 4))

    def test_agrees_with_direct_on_three_voters(self):
        e = election("123", "321", "213")
        assert is_group_separable_bh(e).holds == is_group_separable_direct(e).holds


class TestEnriched:
    def test_interleaved_swap_pair(self):
        v = is_enriched_group_separable(election("1234", "2143"))
        assert not v.holds
        assert v.witness.candidates == (1, 2, 3, 4)

    def test_unanimous(self):
        assert is_enriched_group_separable(election("123", "123", "123")).holds

    def test_full_reversal(self):
        assert is_enriched_group_separable(election("12345", "54321")).holds


class TestEnrichedRecursive:
    def test_identity_and_reverse_block_only(self):
        assert is_enriched_recursive(election("123", "321")).holds

    def test_split_after_common_prefix(self):
        assert is_enriched_recursive(election("1234", "1243")).holds

    def test_rejects_interleaved_swap(self):
        assert not is_enriched_recursive(election("1234", "2143")).holds

    def test_agrees_with_configuration_form(self):
        for m, n in [(3, 3), (4, 2)]:
            for e in all_elections(m, n):
                assert (
                    is_enriched_recursive(e).holds
                    == is_enriched_group_separable(e).holds
                )


class TestEmCondition:
    def test_forbidden_pair(self):
        v = em_condition(election("1234", "2413"))
        assert not v.holds
        assert v.witness == Witness((1, 2), (1, 2, 3, 4))

    def test_single_voter_never_violates(self):
        for e in all_elections(4, 1):
            assert em_condition(e).holds

    def test_small_candidate_sets_vacuous(self):
        for e in all_elections(3, 2):
            assert em_condition(e).holds


class TestSinglePeaked:
    def test_tiny_elections(self):
        for e in all_elections(2, 2):
            assert is_single_peaked(e).holds

    def test_axis_fit_matches_interval_oracle(self):
        # independent route: each preference prefix must be a contiguous run
        # of axis positions
        from itertools import permutations

        from votelace import kernels

        def oracle(order, axis_pos):
            for k in range(1, len(order) + 1):
                positions = sorted(axis_pos[c - 1] for c in order[:k])
                if positions != list(range(positions[0], positions[0] + k)):
                    return False
            return True

        def positions(axis):
            pos = [0] * len(axis)
            for i, c in enumerate(axis):
                pos[c - 1] = i
            return tuple(pos)

        axes = [positions(a) for a in permutations(range(1, 6))]
        for order in permutations(range(1, 6)):
            for axis_pos in axes[:40]:
                assert kernels.fits_axis(order, axis_pos) == oracle(order, axis_pos)

    def test_axis_exists(self):
        assert is_single_peaked(election("2134", "3421")).holds

    def test_no_axis(self):
        # three voters each putting a different candidate last
        assert not is_single_peaked(election("123", "231", "312")).holds


class TestSingleCrossing:
    def test_one_or_two_voters(self):
        for e in all_elections(3, 1):
            assert is_single_crossing(e).holds
        for e in all_elections(3, 2):
            assert is_single_crossing(e).holds

    def test_reorderable(self):
        assert is_single_crossing(election("123", "231", "123")).holds

    def test_condorcet_cycle_is_not_single_crossing(self):
        assert not is_single_crossing(election("123", "231", "312")).holds


class TestVerdicts:
    def test_bool_and_witness_access(self):
        v = DomainVerdict(True)
        assert v and v.witness is None
        w = Witness((1,), (1, 2))
        assert DomainVerdict(False, witness=w).witness == w

    def test_validation(self):
        with pytest.raises(ValueError):
            DomainVerdict(False)
        with pytest.raises(ValueError):
            DomainVerdict(True, witness=Witness((1,), (1,)))

    def test_lazy_finder_runs_once(self):
        calls = []

        def finder():
            calls.append(1)
            return Witness((1,), (1,))

        v = DomainVerdict(False, finder=finder)
        assert v.witness == v.witness
        assert calls == [1]

    def test_format(self):
        text = format_verdict("enriched", is_enriched_group_separable(election("1234", "2143")))
        assert text.splitlines() == [
            "domain: enriched",
            "holds: false",
            "violating voters: 1 2",
            "violating candidates: 1 2 3 4",
        ]
        assert format_verdict("medium", DomainVerdict(True)) == "domain: medium\nholds: true"


class TestGenericProperties:
    def test_containment_chain(self):
        # enriched implies group-separable implies medium-restricted
        for m, n in [(3, 3), (4, 2)]:
            for e in all_elections(m, n):
                if is_enriched_group_separable(e).holds:
                    assert is_group_separable_direct(e).holds
                if is_group_separable_direct(e).holds:
                    assert is_medium_restricted(e).holds

    def test_witnesses_replay(self):
        for name, recognizer in DOMAINS.items():
            seen_false = 0
            for e in all_elections(3, 3):
                v = recognizer(e)
                if not v.holds:
                    seen_false += 1
                    assert replay_witness(recognizer, e, v), (name, e.to_text())
            if name != "em":  # vacuous below four candidates
                assert seen_false > 0

    def test_witnesses_replay_with_four_candidates(self):
        for name, recognizer in DOMAINS.items():
            seen_false = 0
            for e in all_elections(4, 2):
                v = recognizer(e)
                if not v.holds:
                    seen_false += 1
                    assert replay_witness(recognizer, e, v), (name, e.to_text())
            assert (seen_false > 0) == (name not in ("medium", "single-crossing"))

    def test_size_guard(self):
        big = election("123456789")
        for recognizer in DOMAINS.values():
            with pytest.raises(GuardExceeded):
                recognizer(big)
