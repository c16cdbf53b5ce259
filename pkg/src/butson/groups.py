"""Finite abelian groups in primary decomposition.

A group is stored as ``K = G x L`` where ``G`` is a product of cyclic
prime-power factors none of which is ``Z_2``, and ``L = (Z_2)^l_rank``
collects every ``Z_2`` factor.  Elements are enumerated in mixed-radix
order with the first ``G`` coordinate most significant and the ``L``
coordinates last; this is the canonical order used by rows and matrices.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from sympy import isprime


class GroupSpecError(ValueError):
    pass


class NoSquareRoot(ValueError):
    pass


@dataclass(frozen=True, order=True)
class PrimePower:
    p: int
    a: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not isprime(self.p):
            raise GroupSpecError(f"{self.p!r} is not prime")
        if not isinstance(self.a, int) or self.a < 1:
            raise GroupSpecError(f"exponent must be a positive integer, got {self.a!r}")

    @property
    def order(self) -> int:
        return self.p**self.a

    def __str__(self) -> str:
        return str(self.p) if self.a == 1 else f"{self.p}^{self.a}"


@dataclass(frozen=True)
class GroupElement:
    g_coords: tuple[int, ...]
    l_coords: tuple[int, ...] = ()

    @property
    def coords(self) -> tuple[int, ...]:
        return self.g_coords + self.l_coords

    def is_zero(self) -> bool:
        return not any(self.g_coords) and not any(self.l_coords)


@dataclass(frozen=True)
class CyclicGroup:
    """The cyclic group ``Z_v`` as a single coordinate.

    Only used to index circulant rows; it shares the duck-typed surface
    (``moduli``, ``order``, ``exponent``) that the verifier needs.
    """

    v: int

    @property
    def moduli(self) -> tuple[int, ...]:
        return (self.v,) if self.v > 1 else ()

    @property
    def order(self) -> int:
        return self.v

    @property
    def exponent(self) -> int:
        return self.v


@dataclass(frozen=True)
class GroupSpec:
    g_factors: tuple[PrimePower, ...]
    l_rank: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "g_factors", tuple(self.g_factors))
        for f in self.g_factors:
            if f.p == 2 and f.a == 1:
                raise GroupSpecError("Z_2 factors belong to L, not G")
        if self.l_rank < 0:
            raise GroupSpecError("l_rank must be nonnegative")

    # -- shape ---------------------------------------------------------------
    @property
    def g_orders(self) -> tuple[int, ...]:
        return tuple(f.order for f in self.g_factors)

    @property
    def moduli(self) -> tuple[int, ...]:
        """Order of each coordinate, G first then L."""
        return self.g_orders + (2,) * self.l_rank

    @property
    def g_order(self) -> int:
        return math.prod(self.g_orders)

    @property
    def order(self) -> int:
        return self.g_order * 2**self.l_rank

    @property
    def exponent(self) -> int:
        return exponent(self)

    @property
    def g_exponent(self) -> int:
        return math.lcm(1, *self.g_orders)

    def is_cyclic(self) -> bool:
        primes = [f.p for f in self.g_factors] + [2] * self.l_rank
        return len(primes) == len(set(primes))

    def factor_pairs(self) -> list[tuple[int, int]]:
        return [(f.p, f.a) for f in self.g_factors] + [(2, 1)] * self.l_rank

    def __str__(self) -> str:
        parts = [str(f) for f in self.g_factors] + ["2"] * self.l_rank
        return " x ".join(parts) if parts else "1"

    # -- elements ------------------------------------------------------------
    def element(self, coords: Sequence[int]) -> GroupElement:
        s = len(self.g_factors)
        if len(coords) != s + self.l_rank:
            raise GroupSpecError(f"expected {s + self.l_rank} coordinates, got {len(coords)}")
        reduced = tuple(c % m for c, m in zip(coords, self.moduli))
        return GroupElement(reduced[:s], reduced[s:])

    def zero(self) -> GroupElement:
        return GroupElement((0,) * len(self.g_factors), (0,) * self.l_rank)

    def elements(self) -> Iterator[GroupElement]:
        for coords in itertools.product(*(range(m) for m in self.moduli)):
            yield self.element(coords)

    def g_elements(self) -> Iterator[GroupElement]:
        for coords in itertools.product(*(range(m) for m in self.g_orders)):
            yield GroupElement(coords, (0,) * self.l_rank)

    def index(self, x: GroupElement) -> int:
        return mixed_radix_index(x.coords, self.moduli)

    def at(self, i: int) -> GroupElement:
        return self.element(mixed_radix_coords(i, self.moduli))

    def _check(self, x: GroupElement) -> None:
        if len(x.g_coords) != len(self.g_factors) or len(x.l_coords) != self.l_rank:
            raise GroupSpecError("element does not belong to this group")

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        self._check(x)
        self._check(y)
        return self.element([a + b for a, b in zip(x.coords, y.coords)])

    def neg(self, x: GroupElement) -> GroupElement:
        self._check(x)
        return self.element([-a for a in x.coords])

    def sub(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return self.add(x, self.neg(y))

    def scalar_mul(self, k: int, x: GroupElement) -> GroupElement:
        self._check(x)
        return self.element([k * a for a in x.coords])

    def g_part(self, x: GroupElement) -> GroupElement:
        return GroupElement(x.g_coords, (0,) * self.l_rank)

    def l_part(self, x: GroupElement) -> GroupElement:
        return GroupElement((0,) * len(self.g_factors), x.l_coords)


def mixed_radix_index(coords: Sequence[int], moduli: Sequence[int]) -> int:
    i = 0
    for c, m in zip(coords, moduli):
        i = i * m + c % m
    return i


def mixed_radix_coords(i: int, moduli: Sequence[int]) -> tuple[int, ...]:
    out = []
    for m in reversed(moduli):
        i, c = divmod(i, m)
        out.append(c)
    return tuple(reversed(out))


def translation_table(moduli: Sequence[int]) -> list[list[int]]:
    """``table[g][l]`` is the canonical index of ``l + g``."""
    n = math.prod(moduli)
    coords = [mixed_radix_coords(i, moduli) for i in range(n)]
    return [
        [mixed_radix_index([a + b for a, b in zip(cg, cl)], moduli) for cl in coords]
        for cg in coords
    ]


def parse_group(factorization: Iterable[tuple[int, int]]) -> GroupSpec:
    """Split a list of ``(p, a)`` pairs into ``G x L``; input order of G kept."""
    g = []
    l_rank = 0
    for p, a in factorization:
        pp = PrimePower(int(p), int(a))
        if pp.p == 2 and pp.a == 1:
            l_rank += 1
        else:
            g.append(pp)
    return GroupSpec(tuple(g), l_rank)


_FACTOR = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_group_string(text: str) -> GroupSpec:
    """Parse ``"3^2 x 2 x 2"``; ``"1"`` or an empty string is the trivial group."""
    compact = re.sub(r"\s+", "", text)
    if compact in ("", "1"):
        return GroupSpec(())
    pairs = []
    for part in compact.lower().split("x"):
        m = _FACTOR.match(part)
        if not m:
            raise GroupSpecError(f"cannot parse factor {part!r} in {text!r}")
        pairs.append((int(m.group(1)), int(m.group(2) or 1)))
    return parse_group(pairs)


def cyclic_spec(v: int) -> GroupSpec:
    """Primary decomposition of ``Z_v`` with primes in ascending order."""
    from sympy import factorint

    if v < 1:
        raise GroupSpecError("order must be positive")
    return parse_group(sorted(factorint(v).items()))


def exponent(spec: GroupSpec) -> int:
    return math.lcm(1, *spec.moduli)


def all_abelian_groups(n: int) -> list[GroupSpec]:
    """Every isomorphism type of abelian group of order ``n``, canonically sorted."""
    from sympy import factorint
    from sympy.utilities.iterables import partitions

    per_prime = []
    for p, k in sorted(factorint(n).items()):
        options = []
        for part in partitions(k):
            exps = sorted((a for a, mult in part.items() for _ in range(mult)), reverse=True)
            options.append([(p, a) for a in exps])
        per_prime.append(options)
    pair_lists = [sum(combo, []) for combo in itertools.product(*per_prime)]
    pair_lists.sort()
    return [parse_group(pairs) for pairs in pair_lists]


# -- the subgroup U and its coset representatives -----------------------------


@dataclass(frozen=True)
class SubgroupU:
    """Subgroup of G of the form ``prod stride_i * Z``; ``strides[i]`` divides the i-th order."""

    strides: tuple[int, ...]

    def contains(self, spec: GroupSpec, x: GroupElement) -> bool:
        return all(c % s == 0 for c, s in zip(x.g_coords, self.strides))

    def order(self, spec: GroupSpec) -> int:
        return math.prod(m // s for m, s in zip(spec.g_orders, self.strides))

    def exponent(self, spec: GroupSpec) -> int:
        return math.lcm(1, *(m // s for m, s in zip(spec.g_orders, self.strides)))

    def generators(self, spec: GroupSpec) -> list[GroupElement]:
        gens = []
        for i, s in enumerate(self.strides):
            coords = [0] * len(self.strides)
            coords[i] = s % spec.g_orders[i]
            gens.append(GroupElement(tuple(coords), (0,) * spec.l_rank))
        return gens

    def elements(self, spec: GroupSpec) -> Iterator[GroupElement]:
        ranges = [range(0, m, s) for m, s in zip(spec.g_orders, self.strides)]
        for coords in itertools.product(*ranges):
            yield GroupElement(coords, (0,) * spec.l_rank)

    def coset_key(self, x: GroupElement) -> tuple[int, ...]:
        return tuple(c % s for c, s in zip(x.g_coords, self.strides))


def make_subgroup(spec: GroupSpec, strides: Sequence[int]) -> SubgroupU:
    strides = tuple(int(s) for s in strides)
    if len(strides) != len(spec.g_factors):
        raise GroupSpecError("one stride per G coordinate required")
    for s, m in zip(strides, spec.g_orders):
        if s < 1 or m % s:
            raise GroupSpecError(f"stride {s} does not divide coordinate order {m}")
    return SubgroupU(strides)


def default_U(spec: GroupSpec) -> SubgroupU:
    return SubgroupU(tuple(f.p ** (f.a // 2) for f in spec.g_factors))


@dataclass(frozen=True)
class CosetReps:
    elements: tuple[GroupElement, ...]


def default_R(spec: GroupSpec, U: SubgroupU) -> CosetReps:
    ranges = [range(s) for s in U.strides]
    reps = tuple(GroupElement(c, (0,) * spec.l_rank) for c in itertools.product(*ranges))
    R = CosetReps(reps)
    check_coset_reps(spec, U, R)
    return R


def check_coset_reps(spec: GroupSpec, U: SubgroupU, R: CosetReps) -> None:
    """Raise ``GroupSpecError`` unless R is a complete system with 0 first."""
    if not R.elements or not R.elements[0].is_zero():
        raise GroupSpecError("coset representatives must start with 0")
    keys = {U.coset_key(r) for r in R.elements}
    if len(keys) != len(R.elements):
        raise GroupSpecError("two representatives lie in the same coset")
    if len(keys) * U.order(spec) != spec.g_order:
        raise GroupSpecError("representatives do not cover G")


def decompose(
    spec: GroupSpec, x: GroupElement, U: SubgroupU, R: CosetReps
) -> tuple[GroupElement, GroupElement, GroupElement]:
    """Return ``(x1, x2, x3)`` with ``x1 in U``, ``x2 in R``, ``x3 in L``."""
    lookup = _rep_lookup(U, R)
    x2 = lookup[U.coset_key(x)]
    x1 = GroupElement(
        tuple((a - b) % m for a, b, m in zip(x.g_coords, x2.g_coords, spec.g_orders)),
        (0,) * spec.l_rank,
    )
    x3 = GroupElement((0,) * len(spec.g_factors), x.l_coords)
    return x1, x2, x3


@lru_cache(maxsize=256)
def _rep_lookup(U: SubgroupU, R: CosetReps) -> dict[tuple[int, ...], GroupElement]:
    return {U.coset_key(r): r for r in R.elements}


# -- square roots --------------------------------------------------------------

SQRT_CHOOSERS = ("default", "alternate")


def square_root(spec: GroupSpec, u: GroupElement, chooser: str = "default") -> GroupElement:
    """Some ``y`` in G with ``2y = u``.

    Odd coordinates use the inverse of 2; 2-power coordinates halve the
    residue, and the ``alternate`` chooser adds ``2^(a-1)`` on those.
    """
    if chooser not in SQRT_CHOOSERS:
        raise ValueError(f"unknown square-root chooser {chooser!r}")
    out = []
    for c, f in zip(u.g_coords, spec.g_factors):
        m = f.order
        if f.p == 2:
            if c % 2:
                raise NoSquareRoot(f"{c} is odd in Z_{m}")
            y = c // 2
            if chooser == "alternate":
                y = (y + m // 2) % m
        else:
            y = c * pow(2, -1, m) % m
        out.append(y)
    return GroupElement(tuple(out), (0,) * spec.l_rank)


def has_square_roots(spec: GroupSpec, U: SubgroupU) -> bool:
    """Every element of U is a double; halving is linear so generators suffice."""
    for gen in U.generators(spec):
        try:
            square_root(spec, gen)
        except NoSquareRoot:
            return False
    return True


# -- characters ----------------------------------------------------------------


@dataclass(frozen=True)
class Character:
    """The character ``g -> zeta_N^(sum (N/n_i) t_i g_i)`` with ``N = exp(K)``."""

    t_coords: tuple[int, ...]


def _moduli(group) -> tuple[int, ...]:
    return tuple(getattr(group, "moduli", group))


def characters(group) -> Iterator[Character]:
    """All characters of a group (a spec or a sequence of coordinate orders)."""
    for t in itertools.product(*(range(m) for m in _moduli(group))):
        yield Character(t)


def char_exponent(group, chi: Character, g) -> int:
    """Exponent of ``zeta_N`` giving ``chi(g)``; ``g`` is an element or coordinate tuple."""
    moduli = _moduli(group)
    coords = g.coords if isinstance(g, GroupElement) else g
    n = math.lcm(1, *moduli)
    return sum((n // m) * t * c for m, t, c in zip(moduli, chi.t_coords, coords)) % n
