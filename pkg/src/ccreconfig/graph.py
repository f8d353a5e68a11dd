"""Graph core: simple undirected graphs with dense 0-based vertex ids.

Everything downstream (rules, solvers, the brute-force oracle) works on
plain vertex subsets of these graphs.  Two subset representations are
used: sorted tuples of ints for public results, and int bitmasks for the
small-n hot paths (the oracle and the adjacency predicates).  Bitmask
adjacency is built lazily so that large sparse graphs (the path and
chordal solvers run at n = 10^5 and up) never pay for it.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InvalidInstanceError

__all__ = [
    "Graph",
    "SizeMultiset",
    "Configuration",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "empty_graph",
    "parse_graph",
    "format_graph",
    "mask_of",
    "bits_of",
    "vertices_of",
    "connected_components",
    "components_masks",
    "is_connected_set",
    "is_connected_mask",
    "cc_multiset",
    "touches",
    "co_components",
    "induced_subgraph",
    "is_chordal",
    "connected_k_subsets",
]


class Graph:
    """Immutable undirected graph on vertices 0..n-1.

    Self-loops and duplicate edges are rejected.  Treat instances as
    frozen: all derived structure is shared freely across threads.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidInstanceError("vertex count must be non-negative")
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n)]
        norm: list[tuple[int, int]] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInstanceError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInstanceError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if v in adj[u]:
                raise InvalidInstanceError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            norm.append((u, v))
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InvalidInstanceError(f"vertex {v} out of range for n={self.n}")

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighbor bitmask per vertex.  Only touch this at small n."""
        return tuple(mask_of(s) for s in self.adj)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidInstanceError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [])


# ---------------------------------------------------------------------------
# plain-text graph format: first line "n m", then m lines "u v" with u < v

def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise InvalidInstanceError("empty graph file")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise InvalidInstanceError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise InvalidInstanceError(f"line {lineno}: header must be two ints") from None
    if n < 0 or m < 0:
        raise InvalidInstanceError(f"line {lineno}: negative counts in header")
    if len(rows) - 1 != m:
        raise InvalidInstanceError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InvalidInstanceError(f"line {lineno}: edge line must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidInstanceError(f"line {lineno}: edge line must be two ints") from None
        if u >= v:
            raise InvalidInstanceError(f"line {lineno}: edges must satisfy u < v")
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except InvalidInstanceError as exc:
        raise InvalidInstanceError(f"bad edge list: {exc}") from None


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subsets: masks and vertex tuples

def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def bits_of(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertices_of(mask: int) -> tuple[int, ...]:
    return tuple(bits_of(mask))


def _clean_subset(g: Graph, vertices: Iterable[int]) -> tuple[int, ...]:
    vs = sorted(vertices)
    prev = None
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidInstanceError(f"vertex ids must be ints, got {v!r}")
        g._check_vertex(v)
        if v == prev:
            raise InvalidInstanceError(f"duplicate vertex {v} in subset")
        prev = v
    return tuple(vs)


def connected_components(g: Graph, vertices: Iterable[int]) -> list[tuple[int, ...]]:
    """Components of G[vertices]: each block sorted, blocks ordered by
    lowest vertex."""
    vs = _clean_subset(g, vertices)
    inside = set(vs)
    seen: set[int] = set()
    blocks = []
    for s in vs:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque((s,))
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if u in inside and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        blocks.append(tuple(sorted(comp)))
    return blocks


def components_masks(g: Graph, mask: int) -> list[int]:
    """Bitmask variant of connected_components, ordered by lowest bit."""
    adj = g.adj_masks
    comps = []
    rem = mask
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & rem & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def is_connected_set(g: Graph, vertices: Iterable[int]) -> bool:
    vs = _clean_subset(g, vertices)
    if not vs:
        return False
    inside = set(vs)
    seen = {vs[0]}
    queue = deque((vs[0],))
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u in inside and u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(vs)


def is_connected_mask(g: Graph, mask: int) -> bool:
    if mask == 0:
        return False
    adj = g.adj_masks
    comp = mask & -mask
    frontier = comp
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= adj[low.bit_length() - 1]
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


class SizeMultiset(tuple):
    """Multiset of component sizes, kept as a sorted tuple of ints >= 1."""

    def __new__(cls, sizes: Iterable[int] = ()) -> "SizeMultiset":
        vals = sorted(int(s) for s in sizes)
        if vals and vals[0] < 1:
            raise InvalidInstanceError("component sizes must be >= 1")
        return super().__new__(cls, vals)

    @property
    def total(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"SizeMultiset({list(self)})"


def cc_multiset(g: Graph, vertices: Iterable[int]) -> SizeMultiset:
    """Multiset of component sizes of G[vertices] (m(U) in the docs)."""
    return SizeMultiset(len(c) for c in connected_components(g, vertices))


class Configuration:
    """A vertex subset with its component decomposition computed once.

    Equality and hashing look only at the vertex set, so configurations
    are usable as dict keys and in seen-sets during searches.
    """

    def __init__(self, graph: Graph, vertices: Iterable[int]):
        self.graph = graph
        self.vertices = _clean_subset(graph, vertices)
        self.components = tuple(connected_components(graph, self.vertices))
        self.multiset = SizeMultiset(len(c) for c in self.components)

    @cached_property
    def mask(self) -> int:
        return mask_of(self.vertices)

    @cached_property
    def component_masks(self) -> frozenset[int]:
        return frozenset(mask_of(c) for c in self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.vertices == other.vertices and self.graph == other.graph

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"Configuration({list(self.vertices)})"


def touches(g: Graph, u: Iterable[int], w: Iterable[int]) -> bool:
    """True iff the union of the two connected sets is connected.

    Overlapping sets touch; so do disjoint sets joined by an edge.
    """
    us = _clean_subset(g, u)
    ws = _clean_subset(g, w)
    if not is_connected_set(g, us):
        raise InvalidInstanceError(f"touches: first set {list(us)} is not connected")
    if not is_connected_set(g, ws):
        raise InvalidInstanceError(f"touches: second set {list(ws)} is not connected")
    return is_connected_set(g, set(us) | set(ws))


def co_components(g: Graph, subset: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components of the complement of
    G[subset] (the whole graph when subset is None).

    Runs on the original adjacency without materializing the complement;
    kept-in-remaining work is charged to real edges, so the sweep is
    near-linear.
    """
    vs = _clean_subset(g, range(g.n) if subset is None else subset)
    remaining = set(vs)
    blocks = []
    for s in vs:
        if s not in remaining:
            continue
        remaining.discard(s)
        comp = [s]
        queue = deque((s,))
        while queue:
            v = queue.popleft()
            adjv = g.adj[v]
            taken = [u for u in remaining if u not in adjv]
            if taken:
                remaining.difference_update(taken)
                comp.extend(taken)
                queue.extend(taken)
        blocks.append(tuple(sorted(comp)))
    return blocks


def induced_subgraph(
    g: Graph, vertices: Iterable[int]
) -> tuple[Graph, dict[int, int], tuple[int, ...]]:
    """Induced subgraph on the given vertices with dense relabeling.

    Returns (subgraph, old->new map, new->old tuple).
    """
    vs = _clean_subset(g, vertices)
    to_sub = {v: i for i, v in enumerate(vs)}
    edges = []
    for v in vs:
        for u in g.adj[v]:
            if u > v and u in to_sub:
                edges.append((to_sub[v], to_sub[u]))
    return Graph(len(vs), edges), to_sub, vs


def is_chordal(g: Graph) -> bool:
    """Chordality via maximum cardinality search plus the linear perfect
    elimination check (reverse MCS order is a PEO iff the graph is
    chordal)."""
    n = g.n
    if n <= 2:
        return True
    weight = [0] * n
    selected = [False] * n
    # bucket[w] holds candidates of weight w, with stale entries skipped
    buckets: list[list[int]] = [[] for _ in range(n + 1)]
    buckets[0] = list(range(n - 1, -1, -1))
    maxw = 0
    order = []
    for _ in range(n):
        v = -1
        while True:
            while maxw > 0 and not buckets[maxw]:
                maxw -= 1
            cand = buckets[maxw].pop()
            if not selected[cand] and weight[cand] == maxw:
                v = cand
                break
        selected[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not selected[u]:
                weight[u] += 1
                buckets[weight[u]].append(u)
                if weight[u] > maxw:
                    maxw = weight[u]
    pos = [0] * n
    for i, v in enumerate(reversed(order)):
        pos[v] = i
    for v in range(n):
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        padj = g.adj[parent]
        for u in later:
            if u != parent and u not in padj:
                return False
    return True


def connected_k_subsets(g: Graph, k: int, within: int | None = None) -> list[int]:
    """All connected k-vertex subsets of G (restricted to the `within`
    mask if given), as bitmasks in canonical subset order.

    Uses the rooted extension scheme that emits every subset exactly
    once: grow only with vertices above the root, and never re-offer a
    candidate that an earlier branch already consumed.
    """
    if k < 1 or k > g.n:
        return []
    domain = g.full_mask if within is None else within
    adj = g.adj_masks
    out: list[int] = []

    def extend(sub: int, ext: int, closed: int, need: int, above: int) -> None:
        if need == 0:
            out.append(sub)
            return
        while ext:
            wbit = ext & -ext
            ext ^= wbit
            w = wbit.bit_length() - 1
            grown = adj[w] & above & ~closed
            extend(sub | wbit, ext | grown, closed | wbit | adj[w], need - 1, above)

    for root in bits_of(domain):
        rbit = 1 << root
        above = domain & ~((rbit << 1) - 1)
        if k == 1:
            out.append(rbit)
            continue
        extend(rbit, adj[root] & above, rbit | adj[root], k - 1, above)
    out.sort(key=vertices_of)
    return out
