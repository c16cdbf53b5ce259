"""Valuation conditions on ``h`` under which a ``BH(K, h)`` exists."""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy import factorint

from .groups import GroupSpec


def nu(p: int, t: int) -> int:
    """p-adic valuation of a positive integer."""
    if t < 1:
        raise ValueError("valuation needs a positive integer")
    k = 0
    while t % p == 0:
        t //= p
        k += 1
    return k


@dataclass(frozen=True)
class ConditionReport:
    ok: bool
    failed: tuple[str, ...] = ()
    details: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def sufficient_general(spec: GroupSpec, h: int) -> ConditionReport:
    """Check the two sufficient conditions for an arbitrary abelian K.

    (i)  nu_p(h) >= ceil(nu_p(exp K) / 2) for every prime p dividing |K|;
    (ii) nu_2(h) >= 2 when nu_2(|K|) is odd and K has a direct factor Z_2.
    """
    if h < 1:
        raise ValueError("h must be positive")
    failed, details = [], []
    exp_k = spec.exponent
    bad = []
    for p in sorted(factorint(spec.order)):
        need = -(-nu(p, exp_k) // 2)
        if nu(p, h) < need:
            bad.append(f"nu_{p}(h)={nu(p, h)} < {need}")
    if bad:
        failed.append("(i)")
        details.append("; ".join(bad))
    if spec.l_rank > 0 and nu(2, spec.order) % 2 == 1 and nu(2, h) < 2:
        failed.append("(ii)")
        details.append(f"nu_2(|K|)={nu(2, spec.order)} is odd, K has a Z_2 factor, nu_2(h)={nu(2, h)} < 2")
    return ConditionReport(not failed, tuple(failed), tuple(details))


def sufficient_circulant(v: int, h: int) -> ConditionReport:
    """The cyclic specialisation: (i) as above for ``v``, (ii) ``nu_2(h) >= 2`` if ``v = 2 mod 4``."""
    if v < 1 or h < 1:
        raise ValueError("v and h must be positive")
    failed, details = [], []
    bad = []
    for p in sorted(factorint(v)):
        need = -(-nu(p, v) // 2)
        if nu(p, h) < need:
            bad.append(f"nu_{p}(h)={nu(p, h)} < {need}")
    if bad:
        failed.append("(i)")
        details.append("; ".join(bad))
    if v % 4 == 2 and nu(2, h) < 2:
        failed.append("(ii)")
        details.append(f"v={v} is 2 mod 4 and nu_2(h)={nu(2, h)} < 2")
    return ConditionReport(not failed, tuple(failed), tuple(details))
