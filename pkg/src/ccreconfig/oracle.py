"""Brute-force ground truth at desk scale.

Enumerates every subset whose component-size multiset equals the target
(placing components largest-first behind a no-touch frontier), then runs
plain breadth-first search over single moves.  Everything is
deterministic: states live in canonical subset order, neighbor lists are
sorted, and shortest paths follow first-discovery parents.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InternalContradictionError, StateSpaceTooLargeError
from .graph import (
    Configuration,
    Graph,
    SizeMultiset,
    bits_of,
    components_masks,
    connected_k_subsets,
    is_connected_mask,
    vertices_of,
)
from .rules import Rule, _adjacent_core

__all__ = [
    "DEFAULT_STATE_CAP",
    "StateSpace",
    "enumerate_states",
    "OracleResult",
    "oracle_solve",
    "ReconfigGraph",
    "build_reconfig_graph",
    "export_dot",
    "reachability_partition",
    "bfs_distances",
]

DEFAULT_STATE_CAP = 2_000_000


@dataclass
class StateSpace:
    """All valid states for one (graph, multiset) pair."""

    graph: Graph
    multiset: SizeMultiset
    states: tuple[int, ...]
    index: dict[int, int]
    pools: dict[int, list[tuple[int, int]]]  # size -> [(comp mask, closed nbhd)]
    _comps: list[frozenset[int] | None] = field(repr=False, default_factory=list)

    def __len__(self) -> int:
        return len(self.states)

    def components_of(self, i: int) -> frozenset[int]:
        got = self._comps[i]
        if got is None:
            got = frozenset(components_masks(self.graph, self.states[i]))
            self._comps[i] = got
        return got

    def state_vertices(self, i: int) -> tuple[int, ...]:
        return vertices_of(self.states[i])


def _closed_neighborhood(g: Graph, mask: int) -> int:
    out = mask
    adj = g.adj_masks
    for v in bits_of(mask):
        out |= adj[v]
    return out


def enumerate_states(
    g: Graph,
    multiset: SizeMultiset | Iterable[int],
    *,
    state_cap: int = DEFAULT_STATE_CAP,
) -> StateSpace:
    """Every subset of G whose component sizes realize the multiset."""
    target = SizeMultiset(multiset)
    sizes_desc = sorted(Counter(target).items(), reverse=True)
    order: list[int] = []
    for size, count in sizes_desc:
        order.extend([size] * count)
    pools = {
        size: [
            (cmask, _closed_neighborhood(g, cmask))
            for cmask in connected_k_subsets(g, size)
        ]
        for size, _ in sizes_desc
    }
    found: list[int] = []

    def place(oi: int, min_idx: int, forbidden: int, acc: int) -> None:
        if oi == len(order):
            found.append(acc)
            if len(found) > state_cap:
                raise StateSpaceTooLargeError(state_cap)
            return
        size = order[oi]
        pool = pools[size]
        # equal-size components are placed with increasing pool index so
        # each state is produced exactly once
        start = min_idx if oi > 0 and order[oi - 1] == size else 0
        for idx in range(start, len(pool)):
            cmask, closed = pool[idx]
            if cmask & forbidden:
                continue
            place(oi + 1, idx + 1, forbidden | closed, acc | cmask)

    if target.total <= g.n:
        place(0, 0, 0, 0)
    found.sort(key=vertices_of)
    index = {mask: i for i, mask in enumerate(found)}
    return StateSpace(
        graph=g,
        multiset=target,
        states=tuple(found),
        index=index,
        pools=pools,
        _comps=[None] * len(found),
    )


def neighbors(space: StateSpace, i: int, rule: Rule) -> list[int]:
    """Indices of states one move away from state i, ascending."""
    g = space.graph
    u = space.states[i]
    index = space.index
    out: set[int] = set()
    if rule in (Rule.TJ, Rule.TS, Rule.CS1):
        adj = g.adj_masks
        free = g.full_mask & ~u
        for a in bits_of(u):
            targets = (adj[a] & free) if rule is Rule.TS else free
            stripped = u ^ (1 << a)
            for b in bits_of(targets):
                w = stripped | (1 << b)
                j = index.get(w)
                if j is None:
                    continue
                if rule is Rule.CS1 and not _adjacent_core(
                    g, u, space.components_of(i), w, space.components_of(j), rule
                ):
                    continue
                out.add(j)
    else:
        for c in space.components_of(i):
            rest = u & ~c
            blocked = _closed_neighborhood(g, rest)
            for cmask, _ in space.pools[c.bit_count()]:
                if cmask == c or cmask & blocked:
                    continue
                if rule is Rule.CS and not is_connected_mask(g, c | cmask):
                    continue
                j = index.get(rest | cmask)
                if j is None:
                    raise InternalContradictionError(
                        "generated a component move that left the state space"
                    )
                out.add(j)
    return sorted(out)


@dataclass(frozen=True)
class OracleResult:
    rule: Rule
    reachable: bool
    distance: int | None = None
    states: tuple[tuple[int, ...], ...] | None = None
    space_size: int = 0
    reason: str | None = None


def oracle_solve(
    g: Graph,
    a: Iterable[int],
    b: Iterable[int],
    rule: Rule,
    *,
    state_cap: int = DEFAULT_STATE_CAP,
) -> OracleResult:
    """Exhaustive reachability with a shortest witness sequence."""
    ca = Configuration(g, a)
    cb = Configuration(g, b)
    if ca.multiset != cb.multiset:
        return OracleResult(rule, False, reason="multiset-mismatch")
    if ca.vertices == cb.vertices:
        return OracleResult(rule, True, 0, (ca.vertices,), space_size=1)
    space = enumerate_states(g, ca.multiset, state_cap=state_cap)
    try:
        src = space.index[ca.mask]
        dst = space.index[cb.mask]
    except KeyError:
        raise InternalContradictionError("endpoint missing from its own state space")
    parent = {src: -1}
    queue = deque((src,))
    while queue:
        cur = queue.popleft()
        if cur == dst:
            break
        for j in neighbors(space, cur, rule):
            if j not in parent:
                parent[j] = cur
                queue.append(j)
    if dst not in parent:
        return OracleResult(
            rule, False, space_size=len(space), reason="search-exhausted"
        )
    chain = [dst]
    while chain[-1] != src:
        chain.append(parent[chain[-1]])
    chain.reverse()
    states = tuple(space.state_vertices(i) for i in chain)
    return OracleResult(rule, True, len(chain) - 1, states, space_size=len(space))


@dataclass(frozen=True)
class ReconfigGraph:
    """Materialized reconfiguration graph for one rule."""

    space: StateSpace
    rule: Rule
    edges: tuple[tuple[int, int], ...]


def build_reconfig_graph(
    g: Graph,
    multiset: SizeMultiset | Iterable[int],
    rule: Rule,
    *,
    state_cap: int = DEFAULT_STATE_CAP,
) -> ReconfigGraph:
    space = enumerate_states(g, multiset, state_cap=state_cap)
    edges = []
    for i in range(len(space)):
        for j in neighbors(space, i, rule):
            if j > i:
                edges.append((i, j))
    return ReconfigGraph(space, rule, tuple(edges))


def export_dot(rg: ReconfigGraph) -> str:
    """Graphviz text for a reconfiguration graph; nodes are labeled with
    their vertex sets."""
    if not rg.space.states:
        return "graph {}\n"
    lines = ["graph {"]
    for i in range(len(rg.space)):
        label = "{" + ",".join(map(str, rg.space.state_vertices(i))) + "}"
        lines.append(f'  {i} [label="{label}"];')
    for i, j in rg.edges:
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def reachability_partition(space: StateSpace, rule: Rule) -> list[int]:
    """Connected-component label per state of the reconfiguration graph;
    labels are the smallest state index in each class."""
    labels = [-1] * len(space)
    for start in range(len(space)):
        if labels[start] != -1:
            continue
        labels[start] = start
        queue = deque((start,))
        while queue:
            cur = queue.popleft()
            for j in neighbors(space, cur, rule):
                if labels[j] == -1:
                    labels[j] = start
                    queue.append(j)
    return labels


def bfs_distances(space: StateSpace, src: int, rule: Rule) -> list[int | None]:
    """Move counts from one state to every state, None when unreachable."""
    dist: list[int | None] = [None] * len(space)
    dist[src] = 0
    queue = deque((src,))
    while queue:
        cur = queue.popleft()
        for j in neighbors(space, cur, rule):
            if dist[j] is None:
                dist[j] = dist[cur] + 1
                queue.append(j)
    return dist
