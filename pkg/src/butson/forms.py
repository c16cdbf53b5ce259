"""Symmetric bilinear forms ``f: G x G -> Z_e`` given on coordinate generators."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .groups import GroupElement, GroupSpec, GroupSpecError, SubgroupU


@dataclass(frozen=True)
class BilinearForm:
    e: int
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        gram = tuple(tuple(int(v) for v in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        if self.e < 1:
            raise ValueError("modulus must be positive")
        if any(len(row) != len(gram) for row in gram):
            raise ValueError("gram table must be square")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def __call__(self, g, h) -> int:
        return evaluate(self, g, h)

    def to_json(self) -> dict:
        return {"e": self.e, "gram": [list(r) for r in self.gram]}

    @classmethod
    def from_json(cls, data: dict) -> BilinearForm:
        return cls(int(data["e"]), tuple(tuple(r) for r in data["gram"]))

    @classmethod
    def load(cls, path) -> BilinearForm:
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def _coords(x) -> tuple[int, ...]:
    return x.g_coords if isinstance(x, GroupElement) else tuple(x)


def evaluate(f: BilinearForm, g, h) -> int:
    """``sum g_i h_j gram[i][j] mod e``; only G coordinates take part."""
    gc, hc = _coords(g), _coords(h)
    if len(gc) != f.rank or len(hc) != f.rank:
        raise GroupSpecError("element shape does not match the form")
    total = 0
    for i, gi in enumerate(gc):
        if gi:
            row = f.gram[i]
            total += gi * sum(hj * row[j] for j, hj in enumerate(hc) if hj)
    return total % f.e


def default_form(spec: GroupSpec) -> BilinearForm:
    """Diagonal form with ``e / p_i^a_i`` on the i-th generator."""
    e = spec.g_exponent
    n = len(spec.g_factors)
    gram = tuple(
        tuple(e // spec.g_orders[i] if i == j else 0 for j in range(n)) for i in range(n)
    )
    return BilinearForm(e, gram)


def check_symmetric(f: BilinearForm) -> bool:
    return all(f.gram[i][j] == f.gram[j][i] for i in range(f.rank) for j in range(f.rank))


def check_well_defined(f: BilinearForm, orders) -> bool:
    """Each table entry must be killed by the orders of both generators involved.

    ``orders`` is a spec (its G coordinate orders are used) or a plain sequence.
    """
    orders = orders.g_orders if isinstance(orders, GroupSpec) else tuple(orders)
    if len(orders) != f.rank:
        return False
    for i in range(f.rank):
        for j in range(f.rank):
            v = f.gram[i][j]
            if (orders[i] * v) % f.e or (orders[j] * v) % f.e:
                return False
    return True


def _unit(spec: GroupSpec, i: int, scale: int = 1) -> tuple[int, ...]:
    c = [0] * len(spec.g_factors)
    c[i] = scale % spec.g_orders[i]
    return tuple(c)


def check_nondegenerate(f: BilinearForm, spec: GroupSpec) -> bool:
    """No nonzero g with ``f(g, .)`` identically zero; generators suffice."""
    gens = [_unit(spec, i) for i in range(len(spec.g_factors))]
    for g in spec.g_elements():
        if any(g.g_coords) and all(evaluate(f, g, t) == 0 for t in gens):
            return False
    return True


def check_U_orthogonality(f: BilinearForm, U: SubgroupU, spec: GroupSpec) -> bool:
    """No element outside U is orthogonal to every element of U."""
    gens = [_unit(spec, i, s) for i, s in enumerate(U.strides)]
    for g in spec.g_elements():
        if U.contains(spec, g):
            continue
        if all(evaluate(f, g, u) == 0 for u in gens):
            return False
    return True


def form_issues(f: BilinearForm, spec: GroupSpec, U: SubgroupU) -> list[str]:
    """Names of the failed checks, empty when the form is usable."""
    if f.rank != len(spec.g_factors):
        return ["shape"]
    issues = []
    if not check_well_defined(f, spec):
        issues.append("well_defined")
        return issues
    if not check_symmetric(f):
        issues.append("symmetric")
    if not check_nondegenerate(f, spec):
        issues.append("nondegenerate")
    if not check_U_orthogonality(f, U, spec):
        issues.append("U_orthogonality")
    return issues

