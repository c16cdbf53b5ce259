"""Exact arithmetic in ``Z[zeta_M]``.

Elements are kept as length-``M`` integer vectors over the powers of
``zeta_M``.  The representation is not canonical; equality and zero
testing go through exact division by the cyclotomic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


class OrderMismatch(ValueError):
    pass


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of ``Phi_m``, lowest degree first."""
    if m < 1:
        raise ValueError("order must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = poly_divmod(num, cyclotomic_poly(d))
            if any(rem):
                raise ArithmeticError(f"x^{m}-1 not divisible by Phi_{d}")
    return tuple(num)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_divmod(num: Sequence[int], div: Sequence[int]) -> tuple[list[int], list[int]]:
    """Division by a monic integer polynomial; quotient and remainder stay integral."""
    if div[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dd = len(div) - 1
    if len(rem) <= dd:
        return [0], rem + [0] * (dd - len(rem))
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                rem[k - dd + j] -= c * div[j]
    return quot, rem[:dd]


def reduce_mod_phi(coeffs: Sequence[int], m: int) -> list[int]:
    """Remainder of ``coeffs`` modulo ``Phi_m`` (length ``phi(m)``)."""
    return poly_divmod(coeffs, cyclotomic_poly(m))[1]


@dataclass(frozen=True)
class CycInt:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.order < 1 or len(self.coeffs) != self.order:
            raise ValueError(f"need {self.order} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, m: int) -> CycInt:
        return cls(m, (0,) * m)

    @classmethod
    def integer(cls, m: int, n: int) -> CycInt:
        return cls(m, (n,) + (0,) * (m - 1))

    @classmethod
    def from_exponents(cls, m: int, exponents) -> CycInt:
        """Sum of ``zeta_m^k`` over the given exponents."""
        c = [0] * m
        for k in exponents:
            c[k % m] += 1
        return cls(m, tuple(c))

    def _same(self, other: CycInt) -> None:
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} and {other.order}; rescale first")

    def __add__(self, other: CycInt) -> CycInt:
        self._same(other)
        return CycInt(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CycInt) -> CycInt:
        self._same(other)
        return CycInt(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CycInt:
        return CycInt(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> CycInt:
        if isinstance(other, int):
            return CycInt(self.order, tuple(other * a for a in self.coeffs))
        self._same(other)
        m = self.order
        out = [0] * m
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[(i + j) % m] += x * y
        return CycInt(m, tuple(out))

    __rmul__ = __mul__

    def conj(self) -> CycInt:
        m = self.order
        out = [0] * m
        for i, x in enumerate(self.coeffs):
            out[-i % m] = x
        return CycInt(m, tuple(out))

    def rescale(self, new_order: int) -> CycInt:
        """The same number viewed in ``Z[zeta_new_order]``."""
        if new_order % self.order:
            raise OrderMismatch(f"{self.order} does not divide {new_order}")
        k = new_order // self.order
        out = [0] * new_order
        for i, x in enumerate(self.coeffs):
            out[i * k] = x
        return CycInt(new_order, tuple(out))

    def is_zero(self) -> bool:
        return is_zero(self)

    def equals(self, other: CycInt) -> bool:
        return is_zero(self - other)


def root(m: int, k: int = 1) -> CycInt:
    c = [0] * m
    c[k % m] = 1
    return CycInt(m, tuple(c))


def add(x: CycInt, y: CycInt) -> CycInt:
    return x + y


def sub(x: CycInt, y: CycInt) -> CycInt:
    return x - y


def mul(x: CycInt, y: CycInt) -> CycInt:
    return x * y


def conj(x: CycInt) -> CycInt:
    return x.conj()


def rescale(x: CycInt, new_order: int) -> CycInt:
    return x.rescale(new_order)


def is_zero(z: CycInt) -> bool:
    if not any(z.coeffs):
        return True
    return not any(reduce_mod_phi(z.coeffs, z.order))


def norm_sq(z: CycInt) -> CycInt:
    return z * z.conj()


def equals_integer(z: CycInt, n: int) -> bool:
    return is_zero(z - CycInt.integer(z.order, n))
