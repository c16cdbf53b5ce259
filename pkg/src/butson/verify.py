"""Exact certification of group-invariant Butson Hadamard rows.

Two independent criteria are implemented: the periodic autocorrelation
``sum_l zeta_h^(row[l+g] - row[l])`` vanishes for every ``g != 0``, and
``|chi(D)|^2 = |K|`` for every character ``chi``.  Both are evaluated in
cyclotomic integers; nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .construct import BHRow
from .cyclotomic import CycInt, equals_integer, is_zero, norm_sq
from .groups import characters, char_exponent, mixed_radix_coords, mixed_radix_index


class CriterionMismatch(RuntimeError):
    """The two criteria disagreed; this indicates a bug, never a property of the input."""


class MaterializeBoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    criterion: str
    failing_index: int | None = None
    failing_coords: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "criterion": self.criterion,
            "failing_index": self.failing_index,
            "failing_coords": list(self.failing_coords) if self.failing_coords is not None else None,
        }


def entries_order(row: BHRow) -> int:
    """Smallest ``h'`` such that every entry is an ``h'``-th root of unity."""
    return row.h // math.gcd(row.h, *row.row)


def _coords_table(moduli: Sequence[int], n: int) -> list[tuple[int, ...]]:
    return [mixed_radix_coords(i, moduli) for i in range(n)]


def check_bh_direct(row: BHRow) -> CheckResult:
    moduli = row.moduli
    n = len(row.row)
    h = row.h
    coords = _coords_table(moduli, n)
    a = row.row
    for gi, g in enumerate(coords):
        shifted = [
            a[mixed_radix_index([x + y for x, y in zip(c, g)], moduli)] - a[li]
            for li, c in enumerate(coords)
        ]
        total = CycInt.from_exponents(h, shifted)
        ok = equals_integer(total, n) if gi == 0 else is_zero(total)
        if not ok:
            return CheckResult(False, "direct", gi, g)
    return CheckResult(True, "direct")


def check_bh_characters(row: BHRow) -> CheckResult:
    moduli = row.moduli
    n = len(row.row)
    big_n = math.lcm(1, *moduli)
    m = math.lcm(row.h, big_n)
    sh, sn = m // row.h, m // big_n
    coords = _coords_table(moduli, n)
    for ci, chi in enumerate(characters(moduli)):
        value = CycInt.from_exponents(
            m, (a * sh + char_exponent(moduli, chi, c) * sn for a, c in zip(row.row, coords))
        )
        if not equals_integer(norm_sq(value), n):
            return CheckResult(False, "characters", ci, chi.t_coords)
    return CheckResult(True, "characters")


def verify(row: BHRow) -> CheckResult:
    """Run both criteria; their disagreement is an internal error."""
    direct = check_bh_direct(row)
    chars = check_bh_characters(row)
    if direct.passed != chars.passed:
        raise CriterionMismatch(f"direct={direct.passed} characters={chars.passed} for {row}")
    return direct


def materialize(row: BHRow, bound: int = 256) -> list[list[int]]:
    """Full exponent matrix ``H[y][x] = row[x - y]`` in canonical order."""
    n = len(row.row)
    if n > bound:
        raise MaterializeBoundExceeded(f"order {n} exceeds bound {bound}")
    moduli = row.moduli
    coords = _coords_table(moduli, n)
    return [
        [row.row[mixed_radix_index([x - y for x, y in zip(cx, cy)], moduli)] for cx in coords]
        for cy in coords
    ]


def verify_matrix(matrix: Sequence[Sequence[int]], h: int) -> CheckResult:
    """``H H* = nI`` for an explicit exponent matrix; no invariance assumed.

    The failing index encodes the row pair as ``i * n + j``.
    """
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        return CheckResult(False, "matrix_shape")
    for i in range(n):
        for j in range(i, n):
            total = CycInt.from_exponents(h, (a - b for a, b in zip(matrix[i], matrix[j])))
            ok = equals_integer(total, n) if i == j else is_zero(total)
            if not ok:
                return CheckResult(False, "matrix", i * n + j, (i, j))
    return CheckResult(True, "matrix")
