from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from butson.construct import BHRow, circulant, default_build
from butson.groups import CyclicGroup, GroupSpec, all_abelian_groups, parse_group
from butson.verify import (
    MaterializeBoundExceeded,
    check_bh_characters,
    check_bh_direct,
    entries_order,
    materialize,
    verify,
    verify_matrix,
)
from oracles import numeric_is_bh

Z4 = parse_group([(2, 2)])
Z9 = parse_group([(3, 2)])
SMALL = [g for n in range(1, 17) for g in all_abelian_groups(n)]


class TestEntriesOrder:
    def test_examples(self):
        assert entries_order(BHRow(Z4, 2, (0, 0, 1, 0))) == 2
        assert entries_order(BHRow(Z4, 4, (0, 2, 0, 2))) == 2
        assert entries_order(BHRow(parse_group([(3, 1)]), 6, (0, 0, 0))) == 1

    def test_lift_preserves(self):
        row = default_build(Z9)
        assert entries_order(row.lift(18)) == 3


class TestDirect:
    def test_golden_rows(self):
        for spec in (Z9, Z4, GroupSpec((), 1)):
            assert check_bh_direct(default_build(spec))

    def test_refutes_all_zero(self):
        result = check_bh_direct(BHRow(Z4, 2, (0, 0, 0, 0)))
        assert not result and result.failing_index == 1 and result.failing_coords == (1,)

    def test_z2_with_h2_refuted(self):
        assert not check_bh_direct(BHRow(CyclicGroup(2), 2, (0, 1)))

    def test_trivial_group(self):
        assert verify(BHRow(GroupSpec(()), 1, (0,)))


class TestCharacters:
    def test_golden(self):
        assert check_bh_characters(default_build(Z9))

    def test_refutes(self):
        result = check_bh_characters(BHRow(Z9, 3, (0,) * 9))
        assert not result and result.criterion == "characters"

    def test_to_json(self):
        data = check_bh_characters(BHRow(Z4, 2, (0, 0, 0, 0))).to_json()
        assert data["passed"] is False and data["criterion"] == "characters"


class TestMaterialize:
    def test_z4(self):
        assert materialize(BHRow(Z4, 2, (0, 0, 1, 0))) == [
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
        ]

    def test_bound(self):
        with pytest.raises(MaterializeBoundExceeded):
            materialize(default_build(Z9), bound=8)

    @pytest.mark.parametrize("spec", SMALL, ids=str)
    def test_invariance(self, spec):
        row = default_build(spec)
        H = materialize(row)
        idx = spec.index
        for y in spec.elements():
            for x in spec.elements():
                for k in spec.elements():
                    assert H[idx(spec.add(y, k))][idx(spec.add(x, k))] == H[idx(y)][idx(x)]

    @pytest.mark.parametrize("spec", SMALL, ids=str)
    def test_matrix_mode_agrees(self, spec):
        row = default_build(spec)
        H = materialize(row)
        assert verify_matrix(H, row.h)
        assert numeric_is_bh(H, row.h)


class TestMatrixMode:
    def test_column_permutation(self):
        H = materialize(default_build(parse_group([(3, 1), (2, 1), (2, 1)])))
        perm = [5, 3, 0, 11, 1, 2, 4, 6, 10, 9, 8, 7]
        permuted = [[r[j] for j in perm] for r in H]
        assert verify_matrix(permuted, 6)

    def test_failing_pair(self):
        H = [[0, 0], [0, 0]]
        result = verify_matrix(H, 2)
        assert not result and result.failing_index == 1 and result.failing_coords == (0, 1)

    def test_shape(self):
        assert not verify_matrix([[0, 1], [0]], 2)

    def test_non_invariant_hadamard(self):
        # Sylvester-type real Hadamard, entries 0/1 for +1/-1
        H = [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 1, 1], [0, 1, 1, 0]]
        assert verify_matrix(H, 2)


class TestTransforms:
    """Operations known to preserve the BH property."""

    @pytest.mark.parametrize("v,h", [(9, 3), (12, 6), (25, 5), (8, 4)])
    def test_translation_scaling_constant(self, v, h):
        base = circulant(v, h).row
        for t in range(v):
            row = tuple(base[(x + t) % v] for x in range(v))
            assert verify(BHRow(CyclicGroup(v), h, row))
        for k in range(1, v):
            if all(k * m % v for m in range(1, v)):
                row = tuple(base[(k * x) % v] for x in range(v))
                assert verify(BHRow(CyclicGroup(v), h, row))
        for c in range(h):
            assert verify(BHRow(CyclicGroup(v), h, tuple(a + c for a in base)))


@st.composite
def random_rows(draw):
    spec = draw(st.sampled_from(SMALL))
    h = draw(st.integers(1, 12))
    row = tuple(draw(st.integers(0, h - 1)) for _ in range(spec.order))
    return BHRow(spec, h, row)


@settings(max_examples=300, deadline=None)
@given(random_rows())
def test_criteria_agree(row):
    direct = check_bh_direct(row)
    assert direct.passed == check_bh_characters(row).passed
    assert direct.passed == numeric_is_bh(materialize(row), row.h)
