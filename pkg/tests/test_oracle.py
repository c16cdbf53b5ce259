from __future__ import annotations

import pytest

from butson.construct import BHRow
from butson.groups import CyclicGroup, all_abelian_groups, cyclic_spec, parse_group
from butson.oracle import (
    Provenance,
    Status,
    decide,
    decide_cyclic,
    decide_cyclic_prime_power,
    nu,
    sufficient_circulant,
    sufficient_general,
)
from butson.search import Outcome, exhaustive_cyclic
from butson.verify import verify
from oracles import brute_force_circulant


class TestNu:
    @pytest.mark.parametrize("p,t,expected", [(2, 12, 2), (3, 12, 1), (5, 12, 0), (2, 1, 0), (3, 81, 4)])
    def test_examples(self, p, t, expected):
        assert nu(p, t) == expected

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            nu(2, 0)


class TestSufficiency:
    def test_z9(self):
        assert sufficient_general(parse_group([(3, 2)]), 3)

    def test_z3_z2_ii(self):
        report = sufficient_general(parse_group([(3, 1), (2, 1)]), 6)
        assert not report and report.failed == ("(ii)",)

    def test_z3_z2_h12(self):
        assert sufficient_general(parse_group([(3, 1), (2, 1)]), 12)

    def test_z8_h2(self):
        assert sufficient_general(parse_group([(2, 3)]), 2).failed == ("(i)",)

    def test_elementary_two_group_parity(self):
        # nu_2(|K|) = 3 is odd, so h must carry a factor 4
        assert not sufficient_general(parse_group([(2, 1)] * 3), 2)
        assert sufficient_general(parse_group([(2, 1)] * 2), 2)

    @pytest.mark.parametrize("v,h,ok", [(2, 2, False), (2, 4, True), (18, 6, False), (18, 12, True), (9, 3, True)])
    def test_circulant(self, v, h, ok):
        assert bool(sufficient_circulant(v, h)) is ok

    @pytest.mark.parametrize("v", range(1, 40))
    def test_circulant_matches_general(self, v):
        for h in range(1, 25):
            assert bool(sufficient_circulant(v, h)) == bool(sufficient_general(cyclic_spec(v), h))


class TestDecide:
    def test_z9_exists(self):
        verdict = decide(parse_group([(3, 2)]), 3)
        assert verdict.status is Status.EXISTS
        assert verdict.provenance is Provenance.PRIME_POWER_CRITERION
        assert verify(verdict.witness)

    def test_z3_h2(self):
        verdict = decide(parse_group([(3, 1)]), 2)
        assert verdict.status is Status.NOT_EXISTS
        assert verdict.provenance is Provenance.PRIME_MUST_DIVIDE_H

    def test_z2_h2(self):
        verdict = decide(parse_group([(2, 1)]), 2)
        assert verdict.status is Status.NOT_EXISTS

    def test_z27_h3(self):
        # ceil(3/2) = 2 > nu_3(3)
        verdict = decide(parse_group([(3, 3)]), 3)
        assert verdict.status is Status.NOT_EXISTS
        assert verdict.provenance is Provenance.PRIME_POWER_CRITERION

    def test_z18_h6_unknown(self):
        verdict = decide(cyclic_spec(18), 6)
        assert verdict.status is Status.UNKNOWN
        assert verdict.provenance is Provenance.INCONCLUSIVE
        assert "literature" in verdict.note and verdict.witness is None

    def test_general_sufficiency(self):
        verdict = decide(parse_group([(3, 1), (2, 1), (2, 1)]), 6)
        assert verdict.status is Status.EXISTS
        assert verdict.provenance is Provenance.GENERAL_SUFFICIENCY

    def test_non_cyclic_no_fallback(self):
        verdict = decide(parse_group([(3, 1), (3, 1)]), 2)
        assert verdict.status is Status.UNKNOWN

    def test_json(self):
        data = decide(parse_group([(3, 2)]), 3).to_json()
        assert data["status"] == "EXISTS" and data["witness"]["h"] == 3

    @pytest.mark.parametrize("v", [3, 9])
    def test_prime_must_divide(self, v):
        for h in range(1, 9):
            if h % 3:
                assert decide_cyclic_prime_power(v, h).status is Status.NOT_EXISTS

    @pytest.mark.parametrize("v", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32])
    def test_prime_power_never_unknown(self, v):
        for h in range(1, 37):
            verdict = decide_cyclic_prime_power(v, h)
            assert verdict.status is not Status.UNKNOWN
            if verdict.status is Status.EXISTS:
                assert verify(verdict.witness)

    def test_not_a_prime_power(self):
        with pytest.raises(ValueError):
            decide_cyclic_prime_power(6, 6)

    @pytest.mark.parametrize("n", range(1, 33))
    def test_witnesses_verify(self, n):
        for spec in all_abelian_groups(n):
            for h in range(1, 13):
                verdict = decide(spec, h)
                if verdict.status is Status.EXISTS:
                    assert verdict.witness.group == spec and verdict.witness.h == h
                    assert verify(verdict.witness)


class TestDecideCyclic:
    def test_witness_on_zv(self):
        verdict = decide_cyclic(12, 6)
        assert verdict.provenance is Provenance.CIRCULANT_SUFFICIENCY
        assert verdict.witness.group == CyclicGroup(12) and verify(verdict.witness)

    def test_search_limit_settles_z6(self):
        verdict = decide(cyclic_spec(6), 4, search_limit=10**6)
        assert verdict.status is Status.NOT_EXISTS and verdict.provenance is Provenance.SEARCH

    def test_search_limit_z6_h6(self):
        verdict = decide(cyclic_spec(6), 6, search_limit=10**6)
        assert verdict.status is Status.NOT_EXISTS and verdict.provenance is Provenance.SEARCH
        assert brute_force_circulant(6, 6) is None

    def test_search_budget_too_small(self):
        verdict = decide(cyclic_spec(6), 4, search_limit=3)
        assert verdict.status is Status.UNKNOWN and "exceeded" in verdict.note

    @pytest.mark.parametrize("v,h", [(v, h) for v in range(1, 6) for h in range(1, 7)] + [(6, h) for h in range(1, 5)])
    def test_never_contradicts_search(self, v, h):
        verdict = decide_cyclic(v, h)
        result = exhaustive_cyclic(v, h)
        if result.outcome is Outcome.FOUND:
            assert verdict.status is not Status.NOT_EXISTS
        elif result.outcome is Outcome.NOT_FOUND:
            assert verdict.status is not Status.EXISTS


def test_witness_row_type():
    verdict = decide(parse_group([(5, 2)]), 5)
    assert isinstance(verdict.witness, BHRow)
