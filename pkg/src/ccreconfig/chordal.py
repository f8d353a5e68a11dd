"""Jump solver for configurations whose components all share one size.

The obstruction structure is a bipartite conflict graph: one node per
component that appears only in the start configuration, one per
component that appears only in the target, and an edge whenever the two
components touch (share a vertex or an edge of the host graph).  A
target component whose conflicts are all gone can be materialized by a
single jump.  When the conflict graph is a forest, peeling it leaf by
leaf schedules one jump per target component, which is optimal.  On a
chordal host graph the conflict graph has no even holes, and since it
is bipartite that makes it a forest, so the answer there is always yes.
For other hosts a cyclic conflict graph leaves the instance undecided.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    InternalContradictionError,
    UnequalSizesError,
    WrongGraphClassError,
)
from .graph import Graph, _clean_subset, connected_components, is_chordal
from .rules import Rule

__all__ = [
    "ConflictGraph",
    "build_conflict_graph",
    "EqualSizeResult",
    "solve_equal_size_cj",
    "solve_chordal_cj",
]


@dataclass(frozen=True)
class ConflictGraph:
    """Touching relation between start-only and target-only components."""

    a_only: tuple[tuple[int, ...], ...]
    b_only: tuple[tuple[int, ...], ...]
    common: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]  # (a index, b index)

    def is_forest(self) -> bool:
        parent = list(range(len(self.a_only) + len(self.b_only)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for ai, bi in self.edges:
            ra, rb = find(ai), find(len(self.a_only) + bi)
            if ra == rb:
                return False
            parent[ra] = rb
        return True


def build_conflict_graph(
    g: Graph, a: Iterable[int], b: Iterable[int]
) -> ConflictGraph:
    comps_a = connected_components(g, a)
    comps_b = connected_components(g, b)
    set_b = set(comps_b)
    common = tuple(c for c in comps_a if c in set_b)
    common_set = set(common)
    a_only = tuple(c for c in comps_a if c not in common_set)
    b_only = tuple(c for c in comps_b if c not in common_set)

    a_label = [-1] * g.n
    b_label = [-1] * g.n
    for i, comp in enumerate(a_only):
        for v in comp:
            a_label[v] = i
    for i, comp in enumerate(b_only):
        for v in comp:
            b_label[v] = i
    edges = set()
    for i, comp in enumerate(a_only):
        for v in comp:
            if b_label[v] >= 0:
                edges.add((i, b_label[v]))
            for u in g.adj[v]:
                if b_label[u] >= 0:
                    edges.add((i, b_label[u]))
    return ConflictGraph(a_only, b_only, common, tuple(sorted(edges)))


@dataclass(frozen=True)
class EqualSizeResult:
    rule: Rule
    answer: str  # "yes" | "no" | "unknown"
    jumps: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] | None = None
    states: tuple[tuple[int, ...], ...] | None = None
    conflicts: ConflictGraph | None = None
    reason: str | None = None


def _peel_order(cg: ConflictGraph) -> list[tuple[int, int]]:
    """(a index, b index) jump schedule obtained by repeatedly serving
    the lowest-numbered target component with at most one live conflict."""
    na, nb = len(cg.a_only), len(cg.b_only)
    a_nbrs: list[list[int]] = [[] for _ in range(na)]
    b_nbrs: list[list[int]] = [[] for _ in range(nb)]
    for ai, bi in cg.edges:
        a_nbrs[ai].append(bi)
        b_nbrs[bi].append(ai)
    deg = [len(nbrs) for nbrs in b_nbrs]
    alive_a = [True] * na
    alive_b = [True] * nb
    ready = [bi for bi in range(nb) if deg[bi] <= 1]
    heapq.heapify(ready)
    spare = list(range(na))
    heapq.heapify(spare)
    order = []
    while len(order) < nb:
        while ready and not alive_b[ready[0]]:
            heapq.heappop(ready)
        if not ready:
            raise InternalContradictionError("peeling stalled on a forest")
        bi = heapq.heappop(ready)
        if deg[bi] == 1:
            ai = next(x for x in b_nbrs[bi] if alive_a[x])
        else:
            while not alive_a[spare[0]]:
                heapq.heappop(spare)
            ai = spare[0]
        alive_a[ai] = False
        alive_b[bi] = False
        order.append((ai, bi))
        for bj in a_nbrs[ai]:
            if alive_b[bj]:
                deg[bj] -= 1
                if deg[bj] <= 1:
                    heapq.heappush(ready, bj)
    return order


def solve_equal_size_cj(
    g: Graph,
    a: Iterable[int],
    b: Iterable[int],
    *,
    want_states: bool = True,
) -> EqualSizeResult:
    """Jump reconfiguration when every component of both configurations
    has the same size.  Decides yes (with an optimal schedule) when the
    conflict graph is a forest; reports unknown otherwise."""
    va = _clean_subset(g, a)
    vb = _clean_subset(g, b)
    cg = build_conflict_graph(g, va, vb)
    sizes = {len(c) for c in cg.a_only + cg.b_only + cg.common}
    if len(sizes) > 1:
        raise UnequalSizesError(f"component sizes differ: {sorted(sizes)}")
    if len(cg.a_only) != len(cg.b_only):
        return EqualSizeResult(
            Rule.CJ, "no", conflicts=cg, reason="multiset-mismatch"
        )
    if not cg.is_forest():
        return EqualSizeResult(
            Rule.CJ, "unknown", conflicts=cg, reason="conflict-cycle"
        )
    jumps = tuple(
        (cg.a_only[ai], cg.b_only[bi]) for ai, bi in _peel_order(cg)
    )
    states = None
    if want_states:
        current = set(va)
        trace = [tuple(sorted(current))]
        for src, dst in jumps:
            current.difference_update(src)
            current.update(dst)
            trace.append(tuple(sorted(current)))
        states = tuple(trace)
    return EqualSizeResult(Rule.CJ, "yes", jumps, states, cg)


def solve_chordal_cj(
    g: Graph,
    a: Iterable[int],
    b: Iterable[int],
    *,
    check_class: bool = True,
    want_states: bool = True,
) -> EqualSizeResult:
    """Equal-size jump solver specialized to chordal host graphs, where
    the conflict graph is guaranteed to be a forest."""
    if check_class and not is_chordal(g):
        raise WrongGraphClassError("graph is not chordal")
    res = solve_equal_size_cj(g, a, b, want_states=want_states)
    if res.answer == "unknown":
        raise InternalContradictionError(
            "cyclic conflict graph on a chordal instance"
        )
    return res
