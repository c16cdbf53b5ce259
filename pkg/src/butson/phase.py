"""The quadratic phase on the elementary abelian 2-part ``L = (Z_2)^c``.

A phase is ``s(g) = 2 F(g_1..g_2a) + g_(2a+1) + ... + g_c`` read as an
exponent of ``zeta_4``, where ``F`` is a Boolean function on ``2a`` bits
(the inner product of the two halves by default, which is bent).
Truth tables are indexed with ``g_1`` as the most significant bit.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .cyclotomic import CycInt, equals_integer, is_zero


class PhaseError(ValueError):
    pass


def inner_product_table(a: int) -> tuple[int, ...]:
    """Truth table of ``x_1 y_1 + ... + x_a y_a mod 2`` on ``2a`` bits."""
    out = []
    for bits in itertools.product((0, 1), repeat=2 * a):
        out.append(sum(x * y for x, y in zip(bits[:a], bits[a:])) % 2)
    return tuple(out)


def _bits_to_index(bits: Sequence[int]) -> int:
    i = 0
    for b in bits:
        i = 2 * i + (b & 1)
    return i


def truth_table_rank(n: int) -> int:
    a = 0
    while 4**a < n:
        a += 1
    if 4**a != n:
        raise PhaseError(f"truth table length {n} is not a power of 4")
    return a


@dataclass(frozen=True)
class PhaseFn:
    a: int
    d: int
    table: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.a < 0 or self.d < 0:
            raise PhaseError("a and d must be nonnegative")
        if self.table is not None:
            table = tuple(int(v) & 1 for v in self.table)
            if len(table) != 4**self.a:
                raise PhaseError(f"truth table must have {4**self.a} entries")
            object.__setattr__(self, "table", table)

    @property
    def c(self) -> int:
        return 2 * self.a + self.d

    @property
    def truth_table(self) -> tuple[int, ...]:
        return self.table if self.table is not None else inner_product_table(self.a)

    def F(self, bits: Sequence[int]) -> int:
        if self.table is None:
            a = self.a
            return sum(x * y for x, y in zip(bits[:a], bits[a : 2 * a])) % 2
        return self.table[_bits_to_index(bits[: 2 * self.a])]

    def __call__(self, g: Sequence[int]) -> int:
        return sl_eval(self, g)


def default_phase(l_rank: int) -> PhaseFn:
    return PhaseFn(l_rank // 2, l_rank % 2)


def sl_eval(s: PhaseFn, g: Sequence[int]) -> int:
    if len(g) != s.c:
        raise PhaseError(f"expected {s.c} bits, got {len(g)}")
    return (2 * s.F(g) + sum(g[2 * s.a :])) % 4


def walsh_sums(table: Sequence[int]) -> list[int]:
    """``sum_x (-1)^(F(x) + alpha.x)`` for every ``alpha`` in table order."""
    n = len(table)
    a = truth_table_rank(n)
    m = 2 * a
    points = list(itertools.product((0, 1), repeat=m))
    sums = []
    for alpha in points:
        total = 0
        for i, x in enumerate(points):
            parity = table[i] + sum(u * v for u, v in zip(alpha, x))
            total += -1 if parity & 1 else 1
        sums.append(total)
    return sums


@dataclass(frozen=True)
class BentReport:
    is_bent: bool
    zero_alpha_ok: bool
    sums: tuple[int, ...]


def bent_report(table: Sequence[int]) -> BentReport:
    a = truth_table_rank(len(table))
    sums = walsh_sums(table)
    target = 2**a
    return BentReport(
        is_bent=all(abs(v) == target for v in sums[1:]),
        zero_alpha_ok=abs(sums[0]) == target,
        sums=tuple(sums),
    )


def bent_check(table: Sequence[int]) -> bool:
    """Bent iff every nonzero-alpha Walsh sum has absolute value ``2^a``."""
    return bent_report(table).is_bent


def sl_vanishing_check(l_rank: int, s: PhaseFn) -> bool:
    """``sum_x zeta_4^(s(x) - s(x xor g))`` is 0 for ``g != 0`` and ``|L|`` at 0."""
    if s.c != l_rank:
        raise PhaseError(f"phase acts on {s.c} bits, L has rank {l_rank}")
    points = list(itertools.product((0, 1), repeat=l_rank))
    values = {x: sl_eval(s, x) for x in points}
    for g in points:
        total = CycInt.from_exponents(
            4, (values[x] - values[tuple(u ^ v for u, v in zip(x, g))] for x in points)
        )
        if any(g):
            if not is_zero(total):
                return False
        elif not equals_integer(total, len(points)):
            return False
    return True


def affine_equivalent(
    table: Sequence[int],
    matrix: Sequence[Sequence[int]],
    shift: Sequence[int],
    linear: Sequence[int],
    constant: int = 0,
) -> tuple[int, ...]:
    """Truth table of ``x -> F(x M + shift) + linear.x + constant`` over GF(2)."""
    m = len(matrix)
    points = list(itertools.product((0, 1), repeat=m))
    out = []
    for x in points:
        y = [
            (sum(x[i] * matrix[i][j] for i in range(m)) + shift[j]) % 2 for j in range(m)
        ]
        val = table[_bits_to_index(y)] + sum(u * v for u, v in zip(linear, x)) + constant
        out.append(val % 2)
    return tuple(out)


def _gf2_rank(rows: list[list[int]]) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                rows[r] = [u ^ v for u, v in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def random_affine_bent(a: int, rng: random.Random) -> tuple[int, ...]:
    """A bent function affinely equivalent to the inner product on ``2a`` bits."""
    m = 2 * a
    while True:
        matrix = [[rng.randrange(2) for _ in range(m)] for _ in range(m)]
        if _gf2_rank(matrix) == m:
            break
    shift = [rng.randrange(2) for _ in range(m)]
    linear = [rng.randrange(2) for _ in range(m)]
    return affine_equivalent(inner_product_table(a), matrix, shift, linear, rng.randrange(2))
