"""Brute-force search for circulant ``BH(Z_v, h)`` rows.

Rows are normalised to ``a_0 = 0`` and enumerated depth first in
lexicographic order, so the first hit is the lexicographically smallest
normalised witness.  Branches are cut when a partially known periodic
autocorrelation (or the trivial character sum) is already too large for
the remaining unit-modulus terms to cancel.  These bounds use floating
point with a safety margin; acceptance of a leaf is exact.
"""

from __future__ import annotations

import cmath
import enum
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .construct import BHRow
from .cyclotomic import CycInt, equals_integer, norm_sq
from .groups import CyclicGroup
from .verify import check_bh_direct

DEFAULT_LIMIT = 10**7
_EPS = 1e-9


class Outcome(str, enum.Enum):
    FOUND = "FOUND"
    NOT_FOUND = "NOT_FOUND"
    BOUND_EXCEEDED = "BOUND_EXCEEDED"


@dataclass(frozen=True)
class SearchResult:
    outcome: Outcome
    row: BHRow | None = None
    nodes: int = 0


class _Budget(Exception):
    pass


class _Subtree:
    """Depth-first enumeration below a fixed prefix, counting visited nodes."""

    def __init__(self, v: int, h: int, budget: int):
        self.v, self.h, self.budget = v, h, budget
        self.nodes = 0
        self.roots = [cmath.exp(2j * math.pi * k / h) for k in range(h)]
        self.a = [0] * v
        self.sqrt_v = math.sqrt(v)

    def visit(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Budget

    def run(self, prefix: tuple[int, ...]) -> tuple[int, ...] | None:
        v = self.v
        sums = [0j] * v
        known = [0] * v
        total = 0j
        for k, val in enumerate(prefix):
            self.a[k] = val
            total += self.roots[val]
            self._extend(k, sums, known)
        self.visit()
        if not self._viable(len(prefix) - 1, sums, known, total):
            return None
        return self._dfs(len(prefix), sums, known, total)

    def _extend(self, k: int, sums: list[complex], known: list[int]) -> None:
        # terms l -> l+g of each shift g that become fully assigned once a[k] is set
        v, a, roots, h = self.v, self.a, self.roots, self.h
        for g in range(1, v):
            if k - g >= 0:
                sums[g] += roots[(a[k] - a[k - g]) % h]
                known[g] += 1
            w = k + g - v
            if 0 <= w < k:
                sums[g] += roots[(a[w] - a[k]) % h]
                known[g] += 1

    def _viable(self, k: int, sums: list[complex], known: list[int], total: complex) -> bool:
        v = self.v
        if abs(total) > self.sqrt_v + (v - k - 1) + _EPS:
            return False
        for g in range(1, v):
            if abs(sums[g]) > (v - known[g]) + _EPS:
                return False
        return True

    def _dfs(self, k: int, sums, known, total) -> tuple[int, ...] | None:
        v, h = self.v, self.h
        if k == v:
            return self._accept()
        for val in range(h):
            self.visit()
            self.a[k] = val
            s2, n2 = sums[:], known[:]
            self._extend(k, s2, n2)
            t2 = total + self.roots[val]
            if not self._viable(k, s2, n2, t2):
                continue
            hit = self._dfs(k + 1, s2, n2, t2)
            if hit is not None:
                return hit
        return None

    def _accept(self) -> tuple[int, ...] | None:
        row = tuple(self.a)
        if not equals_integer(norm_sq(CycInt.from_exponents(self.h, row)), self.v):
            return None
        if check_bh_direct(BHRow(CyclicGroup(self.v), self.h, row)):
            return row
        return None


def _run_subtree(v: int, h: int, prefix: tuple[int, ...], budget: int):
    walker = _Subtree(v, h, budget)
    try:
        hit = walker.run(prefix)
    except _Budget:
        return walker.nodes, None, True
    return walker.nodes, hit, False


def _workers(requested: int | None) -> int:
    if requested is not None:
        return max(1, requested)
    try:
        return max(1, int(os.environ.get("BUTSON_THREADS", "1")))
    except ValueError:
        return 1


def exhaustive_cyclic(v: int, h: int, limit: int = DEFAULT_LIMIT, workers: int | None = None) -> SearchResult:
    """Search for a circulant ``BH(Z_v, h)`` with at most ``limit`` visited nodes.

    The root ``a_0 = 0`` counts as one node.  Subtrees under each value of
    ``a_1`` may be searched in parallel; results are merged in lexicographic
    order with the same node accounting, so the outcome never depends on
    the worker count.
    """
    if v < 1 or h < 1:
        raise ValueError("v and h must be positive")
    if limit < 1:
        return SearchResult(Outcome.BOUND_EXCEEDED, None, 0)
    if v == 1:
        return SearchResult(Outcome.FOUND, BHRow(CyclicGroup(1), h, (0,)), 1)
    nodes = 1
    prefixes = [(0, b) for b in range(h)]
    n_workers = _workers(workers)
    if n_workers > 1:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            futures = [pool.submit(_run_subtree, v, h, p, limit - 1) for p in prefixes]
            results = [f.result() for f in futures]
    else:
        results = None
    for i, prefix in enumerate(prefixes):
        if results is None:
            sub_nodes, hit, exceeded = _run_subtree(v, h, prefix, limit - nodes)
        else:
            sub_nodes, hit, exceeded = results[i]
        nodes += sub_nodes
        if exceeded or nodes > limit:
            return SearchResult(Outcome.BOUND_EXCEEDED, None, min(nodes, limit + 1))
        if hit is not None:
            return SearchResult(Outcome.FOUND, BHRow(CyclicGroup(v), h, hit), nodes)
    return SearchResult(Outcome.NOT_FOUND, None, nodes)


@dataclass(frozen=True)
class SweepEntry:
    v: int
    h: int
    search: Outcome
    decision: str
    contradiction: bool


@dataclass
class SweepReport:
    entries: list[SweepEntry] = field(default_factory=list)

    @property
    def contradictions(self) -> list[SweepEntry]:
        return [e for e in self.entries if e.contradiction]

    def lookup(self, v: int, h: int) -> SweepEntry:
        return next(e for e in self.entries if (e.v, e.h) == (v, h))


def agreement_sweep(
    v_max: int, h_max: int, limit: int = DEFAULT_LIMIT, extra=(), workers: int | None = None
) -> SweepReport:
    """Compare search outcomes with ``oracle.decide`` on every ``(v, h)`` in range."""
    from .oracle import Status, decide_cyclic

    pairs = [(v, h) for v in range(1, v_max + 1) for h in range(1, h_max + 1)]
    pairs += [p for p in extra if p not in pairs]
    report = SweepReport()
    for v, h in pairs:
        found = exhaustive_cyclic(v, h, limit, workers)
        status = decide_cyclic(v, h).status
        bad = (found.outcome is Outcome.FOUND and status is Status.NOT_EXISTS) or (
            found.outcome is Outcome.NOT_FOUND and status is Status.EXISTS
        )
        report.entries.append(SweepEntry(v, h, found.outcome, status.value, bad))
    return report
