"""Existence decisions for ``BH(K, h)``.

Only conclusive statements are encoded: the general sufficient conditions,
and the necessary-and-sufficient criterion for cyclic groups of prime
power order.  Everything else is ``UNKNOWN`` unless an explicit search
budget is supplied for a cyclic group.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from sympy import factorint

from .conditions import nu, sufficient_circulant, sufficient_general
from .construct import BHRow, crt_reindex, crt_restore, default_build
from .groups import GroupSpec, cyclic_spec
from .verify import verify

__all__ = [
    "Status",
    "Provenance",
    "Verdict",
    "nu",
    "sufficient_general",
    "sufficient_circulant",
    "decide_cyclic_prime_power",
    "decide",
    "decide_cyclic",
]


class Status(str, enum.Enum):
    EXISTS = "EXISTS"
    NOT_EXISTS = "NOT_EXISTS"
    UNKNOWN = "UNKNOWN"


class Provenance(str, enum.Enum):
    GENERAL_SUFFICIENCY = "general-sufficiency"
    CIRCULANT_SUFFICIENCY = "circulant-sufficiency"
    PRIME_POWER_CRITERION = "cyclic-prime-power-criterion"
    PRIME_MUST_DIVIDE_H = "cyclic-prime-power-p-divides-h"
    SEARCH = "exhaustive-search"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: Status
    provenance: Provenance
    witness: BHRow | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "provenance": self.provenance.value,
            "note": self.note,
            "witness": self.witness.to_json() if self.witness is not None else None,
        }


_LEU_NOTE = (
    "BH(Z_2p^2, 2p) is reported not to exist in the literature; "
    "that result is not encoded here"
)


def _prime_power(v: int) -> tuple[int, int] | None:
    f = factorint(v)
    if len(f) != 1:
        return None
    ((p, a),) = f.items()
    return p, a


def _certified(witness: BHRow) -> BHRow:
    if not verify(witness):
        raise AssertionError(f"constructed witness failed verification: {witness}")
    return witness


def decide_cyclic_prime_power(v: int, h: int) -> Verdict:
    """Decide ``BH(Z_v, h)`` for a prime power ``v``; never ``UNKNOWN``.

    Exists iff ``nu_p(h) >= ceil(nu_p(v)/2)`` and ``(v, nu_2(h)) != (2, 1)``.
    """
    pp = _prime_power(v)
    if pp is None:
        raise ValueError(f"{v} is not a prime power")
    p, a = pp
    if nu(p, h) == 0:
        return Verdict(Status.NOT_EXISTS, Provenance.PRIME_MUST_DIVIDE_H, note=f"{p} does not divide {h}")
    need = -(-a // 2)
    if nu(p, h) < need:
        return Verdict(
            Status.NOT_EXISTS, Provenance.PRIME_POWER_CRITERION, note=f"nu_{p}(h)={nu(p, h)} < {need}"
        )
    if v == 2 and nu(2, h) == 1:
        return Verdict(Status.NOT_EXISTS, Provenance.PRIME_POWER_CRITERION, note="(v, nu_2(h)) = (2, 1)")
    witness = _certified(default_build(cyclic_spec(v), h))
    return Verdict(Status.EXISTS, Provenance.PRIME_POWER_CRITERION, witness)


def _cyclic_prime_power_order(spec: GroupSpec) -> int | None:
    if len(spec.g_factors) == 1 and spec.l_rank == 0:
        return spec.g_factors[0].order
    if not spec.g_factors and spec.l_rank == 1:
        return 2
    return None


def _is_z2p2(spec: GroupSpec) -> bool:
    return (
        spec.l_rank == 1
        and len(spec.g_factors) == 1
        and spec.g_factors[0].p > 2
        and spec.g_factors[0].a == 2
    )


def decide(spec: GroupSpec, h: int, search_limit: int | None = None) -> Verdict:
    """Existence of a ``BH(K, h)``.

    With ``search_limit`` set, an otherwise inconclusive cyclic case is
    settled by exhaustive search when it finishes within the budget.
    """
    if h < 1:
        raise ValueError("h must be positive")
    v = _cyclic_prime_power_order(spec)
    if v is not None:
        return decide_cyclic_prime_power(v, h)
    report = sufficient_general(spec, h)
    if report:
        return Verdict(Status.EXISTS, Provenance.GENERAL_SUFFICIENCY, _certified(default_build(spec, h)))
    failed = ", ".join(report.failed)
    note = f"sufficient condition(s) {failed} fail; no necessary condition applies"
    if _is_z2p2(spec) and h == 2 * spec.g_factors[0].p:
        note += f"; {_LEU_NOTE}"
    if search_limit is not None and spec.is_cyclic():
        from .search import Outcome, exhaustive_cyclic

        result = exhaustive_cyclic(spec.order, h, search_limit)
        if result.outcome is Outcome.FOUND:
            witness = crt_restore(spec, _certified(result.row))
            return Verdict(Status.EXISTS, Provenance.SEARCH, witness)
        if result.outcome is Outcome.NOT_FOUND:
            return Verdict(Status.NOT_EXISTS, Provenance.SEARCH, note="exhaustive search found none")
        note += f"; search exceeded {search_limit} nodes"
    return Verdict(Status.UNKNOWN, Provenance.INCONCLUSIVE, note=note)


def decide_cyclic(v: int, h: int, search_limit: int | None = None) -> Verdict:
    """``decide`` on ``Z_v``; EXISTS witnesses are reindexed to ``Z_v``."""
    spec = cyclic_spec(v)
    verdict = decide(spec, h, search_limit)
    provenance = verdict.provenance
    if provenance is Provenance.GENERAL_SUFFICIENCY:
        provenance = Provenance.CIRCULANT_SUFFICIENCY
    witness = crt_reindex(spec, verdict.witness) if verdict.witness is not None else None
    return Verdict(verdict.status, provenance, witness, verdict.note)
