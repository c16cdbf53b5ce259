"""Group-invariant Butson Hadamard matrices from bilinear forms.

For ``z = z1 + z2 + z3`` with ``z1 in U``, ``z2 in R`` and ``z3 in L`` the
defining row carries

    zeta_e^(f(z1/2, z1) + beta f(z1, z2)) * zeta_4^(s(z3))

and the matrix is ``H[y][x] = row[x - y]``.  All entries are ``e1``-th
roots of unity, where ``e1`` depends on ``exp(U)`` and the phase on ``L``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Union

from .conditions import sufficient_circulant, sufficient_general
from .forms import BilinearForm, default_form, evaluate, form_issues
from .groups import (
    CosetReps,
    CyclicGroup,
    GroupSpec,
    SubgroupU,
    check_coset_reps,
    cyclic_spec,
    decompose,
    default_R,
    default_U,
    has_square_roots,
    parse_group,
    square_root,
    SQRT_CHOOSERS,
    GroupSpecError,
)
from .phase import PhaseFn, bent_check, default_phase, sl_eval


class IngredientInvalid(ValueError):
    def __init__(self, check: str, message: str = ""):
        self.check = check
        super().__init__(f"ingredient check failed: {check}" + (f" ({message})" if message else ""))


class InternalOrderViolation(AssertionError):
    pass


class ConditionsNotMet(ValueError):
    def __init__(self, failed, details=()):
        self.failed = tuple(failed)
        self.details = tuple(details)
        msg = "sufficient condition(s) not met: " + ", ".join(self.failed)
        if self.details:
            msg += " [" + "; ".join(self.details) + "]"
        super().__init__(msg)


Group = Union[GroupSpec, CyclicGroup]


@dataclass(frozen=True)
class BHRow:
    """Defining row of a group-invariant matrix, exponents of ``zeta_h`` in canonical order."""

    group: Group
    h: int
    row: tuple[int, ...]

    def __post_init__(self) -> None:
        row = tuple(int(v) % self.h for v in self.row)
        object.__setattr__(self, "row", row)
        if len(row) != self.group.order:
            raise ValueError(f"row has {len(row)} entries, group has order {self.group.order}")

    @property
    def moduli(self) -> tuple[int, ...]:
        return self.group.moduli

    def to_json(self) -> dict:
        if isinstance(self.group, CyclicGroup):
            spec = cyclic_spec(self.group.v)
            out = {"cyclic": self.group.v}
        else:
            spec = self.group
            out = {}
        out.update(
            {
                "group": [[f.p, f.a] for f in spec.g_factors],
                "l_rank": spec.l_rank,
                "h": self.h,
                "row": list(self.row),
            }
        )
        return out

    @classmethod
    def from_json(cls, data: dict) -> BHRow:
        if "cyclic" in data:
            group: Group = CyclicGroup(int(data["cyclic"]))
        else:
            pairs = [tuple(pa) for pa in data["group"]] + [(2, 1)] * int(data.get("l_rank", 0))
            group = parse_group(pairs)
        return cls(group, int(data["h"]), tuple(data["row"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def lift(self, h: int) -> BHRow:
        """View the entries as ``h``-th roots of unity for a multiple ``h``."""
        if h % self.h:
            raise ValueError(f"{h} is not a multiple of {self.h}")
        k = h // self.h
        return BHRow(self.group, h, tuple(k * v for v in self.row))

    def to_csv(self) -> str:
        from .verify import materialize

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(materialize(self))
        return buf.getvalue()


@dataclass(frozen=True)
class Ingredients:
    spec: GroupSpec
    U: SubgroupU
    R: CosetReps
    form: BilinearForm
    beta: int = 1
    sqrt_chooser: str = "default"
    phase: PhaseFn = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.phase is None:
            object.__setattr__(self, "phase", default_phase(self.spec.l_rank))


def default_ingredients(spec: GroupSpec, **overrides) -> Ingredients:
    U = overrides.pop("U", None) or default_U(spec)
    R = overrides.pop("R", None) or default_R(spec, U)
    form = overrides.pop("form", None) or default_form(spec)
    return Ingredients(spec, U, R, form, **overrides)


def validate_ingredients(ing: Ingredients) -> None:
    spec = ing.spec
    if len(ing.U.strides) != len(spec.g_factors):
        raise IngredientInvalid("U_shape")
    try:
        check_coset_reps(spec, ing.U, ing.R)
    except GroupSpecError as exc:
        raise IngredientInvalid("coset_reps", str(exc)) from None
    if math.gcd(ing.beta, spec.g_order) != 1:
        raise IngredientInvalid("beta_coprime", f"gcd({ing.beta}, {spec.g_order}) != 1")
    if ing.sqrt_chooser not in SQRT_CHOOSERS:
        raise IngredientInvalid("sqrt_chooser", ing.sqrt_chooser)
    if not has_square_roots(spec, ing.U):
        raise IngredientInvalid("square_roots", "some element of U is not a double in G")
    issues = form_issues(ing.form, spec, ing.U)
    if issues:
        raise IngredientInvalid(issues[0], ", ".join(issues))
    if ing.phase.c != spec.l_rank:
        raise IngredientInvalid("phase_rank", f"phase on {ing.phase.c} bits, L has rank {spec.l_rank}")
    if ing.phase.a and not bent_check(ing.phase.truth_table):
        raise IngredientInvalid("phase_bent", "F is not bent")


def compute_e1(ing: Ingredients) -> int:
    """Order of the roots of unity the construction produces.

    An even-valued phase (no linear tail) needs only ``lcm(2, exp U)``.
    """
    exp_u = ing.U.exponent(ing.spec)
    if ing.spec.l_rank == 0:
        return exp_u
    if ing.phase.d == 0:
        return math.lcm(2, exp_u)
    return math.lcm(4, exp_u)


def build(ing: Ingredients) -> BHRow:
    validate_ingredients(ing)
    spec = ing.spec
    f = ing.form
    e = f.e
    e1 = compute_e1(ing)
    big = math.lcm(e, 4) if spec.l_rank else e
    scale_e = big // e
    step = big // e1
    row = []
    for z in spec.elements():
        z1, z2, z3 = decompose(spec, z, ing.U, ing.R)
        half = square_root(spec, z1, ing.sqrt_chooser)
        val = (evaluate(f, half, z1) + ing.beta * evaluate(f, z1, z2)) % e
        exp_big = val * scale_e
        if spec.l_rank:
            exp_big += sl_eval(ing.phase, z3.l_coords) * (big // 4)
        exp_big %= big
        if exp_big % step:
            raise InternalOrderViolation(
                f"entry at {z} has exponent {exp_big}/{big}, not an {e1}-th root of unity"
            )
        row.append(exp_big // step)
    return BHRow(spec, e1, tuple(row))


def default_build(spec: GroupSpec, h: int | None = None) -> BHRow:
    """Default ingredients, lifted to ``h`` (defaults to ``e1``)."""
    ing = default_ingredients(spec)
    if h is None:
        return build(ing)
    report = sufficient_general(spec, h)
    if not report:
        raise ConditionsNotMet(report.failed, report.details)
    base = build(ing)
    if h % base.h:
        raise InternalOrderViolation(f"h={h} satisfies the conditions but e1={base.h} does not divide it")
    return base.lift(h)


def crt_reindex(spec: GroupSpec, row: BHRow) -> BHRow:
    """Move a row on the primary decomposition of ``Z_v`` onto ``Z_v`` itself.

    ``n in Z_v`` corresponds to the element with coordinates ``n mod p_i^a_i``.
    """
    v = spec.order
    moduli = spec.moduli
    out = []
    for n in range(v):
        out.append(row.row[spec.index(spec.element([n % m for m in moduli]))])
    return BHRow(CyclicGroup(v), row.h, tuple(out))


def circulant(v: int, h: int) -> BHRow:
    report = sufficient_circulant(v, h)
    if not report:
        raise ConditionsNotMet(report.failed, report.details)
    spec = cyclic_spec(v)
    return crt_reindex(spec, default_build(spec, h))


def crt_restore(spec: GroupSpec, row: BHRow) -> BHRow:
    """Inverse of ``crt_reindex``: a ``Z_v`` row back onto the primary decomposition."""
    moduli = spec.moduli
    out = [0] * spec.order
    for n, val in enumerate(row.row):
        out[spec.index(spec.element([n % m for m in moduli]))] = val
    return BHRow(spec, row.h, tuple(out))
