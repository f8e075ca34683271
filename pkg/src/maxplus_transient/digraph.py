"""Weighted digraphs, walks, and the purely structural graph parameters.

Nodes are ``0 .. n-1``.  Every exponential search (elementary cycles, longest
simple paths) refuses graphs with more than ``cap`` nodes and raises
:class:`CapacityError` instead of approximating.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from .algebra import NEG_INF, MaxPlusMatrix, MaxPlusVector, weight
from .errors import CapacityError, InputError

DEFAULT_NODE_CAP = 12


@dataclass(frozen=True)
class Digraph:
    """An e-weighted graph, optionally carrying node weights (en-weighted).

    ``edges`` maps ``(source, target)`` to a finite Fraction weight.
    """

    n_nodes: int
    edges: tuple  # sorted tuple of (u, v, w)
    node_weights: Optional[tuple] = None

    def __post_init__(self):
        if self.n_nodes < 1:
            raise InputError("a graph needs at least one node")
        seen = set()
        clean = []
        for u, v, w in self.edges:
            if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
                raise InputError(f"edge ({u}, {v}) has an endpoint out of range")
            if (u, v) in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            w = weight(w)
            if w is NEG_INF:
                raise InputError(f"edge ({u}, {v}) has weight -inf")
            seen.add((u, v))
            clean.append((u, v, w))
        object.__setattr__(self, "edges", tuple(sorted(clean)))
        if self.node_weights is not None:
            nw = tuple(weight(x) for x in self.node_weights)
            if len(nw) != self.n_nodes:
                raise InputError("node_weights length differs from n_nodes")
            object.__setattr__(self, "node_weights", nw)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, node_weights=None) -> "Digraph":
        return cls(n, tuple(edges), None if node_weights is None else tuple(node_weights))

    @cached_property
    def weights(self) -> dict:
        return {(u, v): w for u, v, w in self.edges}

    @cached_property
    def succ(self) -> tuple:
        out = [[] for _ in range(self.n_nodes)]
        for u, v, _ in self.edges:
            out[u].append(v)
        return tuple(tuple(s) for s in out)

    @cached_property
    def pred(self) -> tuple:
        out = [[] for _ in range(self.n_nodes)]
        for u, v, _ in self.edges:
            out[v].append(u)
        return tuple(tuple(sorted(p)) for p in out)

    @property
    def nodes(self) -> range:
        return range(self.n_nodes)

    @property
    def is_trivial(self) -> bool:
        return not self.edges

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.weights

    def edge_subgraph(self, edge_pairs: Iterable) -> "Digraph":
        """Same node numbering, only the given edges (weights kept)."""
        keep = set(edge_pairs)
        return Digraph(self.n_nodes, tuple(e for e in self.edges if (e[0], e[1]) in keep))

    def induced(self, nodes: Iterable[int]) -> tuple["Digraph", tuple]:
        """Subgraph induced by ``nodes``, renumbered; also returns the old labels."""
        labels = tuple(sorted(set(nodes)))
        index = {x: i for i, x in enumerate(labels)}
        edges = tuple((index[u], index[v], w) for u, v, w in self.edges if u in index and v in index)
        nw = None
        if self.node_weights is not None:
            nw = tuple(self.node_weights[x] for x in labels)
        return Digraph(len(labels), edges, nw), labels

    def shifted(self, lam) -> "Digraph":
        """lam ⊗ G: add ``lam`` to every edge weight."""
        lam = weight(lam)
        if lam is NEG_INF:
            raise InputError("scaling by bottom is not a homothety")
        return Digraph(self.n_nodes, tuple((u, v, w + lam) for u, v, w in self.edges), self.node_weights)

    def with_node_weights(self, node_weights) -> "Digraph":
        return Digraph(self.n_nodes, self.edges, None if node_weights is None else tuple(node_weights))


def from_matrix(a: MaxPlusMatrix, v: MaxPlusVector | None = None) -> Digraph:
    """G(A), or G(A, v) when ``v`` is given."""
    if not a.is_square:
        raise InputError("G(A) needs a square matrix")
    if v is not None and v.dim != a.n_rows:
        raise InputError("vector dimension differs from matrix size")
    edges = tuple((i, j, x) for i, row in enumerate(a.rows) for j, x in enumerate(row) if x is not NEG_INF)
    return Digraph(a.n_rows, edges, None if v is None else v.entries)


def to_matrix(g: Digraph) -> MaxPlusMatrix:
    rows = [[NEG_INF] * g.n_nodes for _ in g.nodes]
    for u, v, w in g.edges:
        rows[u][v] = w
    return MaxPlusMatrix(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class Path:
    """A walk given by its node sequence; ``nodes[0]`` is the start."""

    nodes: tuple

    def __post_init__(self):
        if not self.nodes:
            raise InputError("a path has at least its start node")
        object.__setattr__(self, "nodes", tuple(self.nodes))

    @classmethod
    def empty(cls, node: int) -> "Path":
        return cls((node,))

    @property
    def start(self) -> int:
        return self.nodes[0]

    @property
    def end(self) -> int:
        return self.nodes[-1]

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    @property
    def edges(self) -> tuple:
        return tuple(zip(self.nodes, self.nodes[1:]))

    @property
    def is_closed(self) -> bool:
        return self.start == self.end

    @property
    def is_simple(self) -> bool:
        return len(set(self.nodes)) == len(self.nodes)

    @property
    def is_elementary(self) -> bool:
        if self.is_closed and self.length > 0:
            return len(set(self.nodes[:-1])) == self.length
        return self.is_simple

    def concat(self, other: "Path") -> "Path":
        if self.end != other.start:
            raise InputError("paths do not chain")
        return Path(self.nodes + other.nodes[1:])

    def check_in(self, g: Digraph) -> None:
        if not 0 <= self.start < g.n_nodes:
            raise InputError(f"node {self.start} not in graph")
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise InputError(f"edge ({u}, {v}) is not in the graph")

    def __str__(self) -> str:
        return "->".join(str(x) for x in self.nodes)


@dataclass(frozen=True)
class SccDecomposition:
    component_of: tuple
    components: tuple  # tuple of sorted node tuples, ordered by smallest node

    @property
    def is_strongly_connected(self) -> bool:
        return len(self.components) == 1


@lru_cache(maxsize=4096)
def scc(g: Digraph) -> SccDecomposition:
    """Tarjan's algorithm, iterative."""
    index = [None] * g.n_nodes
    low = [0] * g.n_nodes
    on_stack = [False] * g.n_nodes
    stack: list = []
    found: list = []
    counter = 0
    for root in g.nodes:
        if index[root] is not None:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            succ = g.succ[v]
            descended = False
            while pos < len(succ):
                w = succ[pos]
                pos += 1
                if index[w] is None:
                    work.append((v, pos))
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                found.append(tuple(sorted(comp)))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    found.sort()
    component_of = [0] * g.n_nodes
    for k, comp in enumerate(found):
        for x in comp:
            component_of[x] = k
    return SccDecomposition(tuple(component_of), tuple(found))


def is_strongly_connected(g: Digraph) -> bool:
    return scc(g).is_strongly_connected


def is_irreducible_graph(g: Digraph) -> bool:
    return not g.is_trivial and is_strongly_connected(g)


def _check_cap(g: Digraph, cap: int) -> None:
    if g.n_nodes > cap:
        raise CapacityError(f"{g.n_nodes} nodes exceeds the exponential-search cap of {cap}")


@dataclass(frozen=True)
class Cycle:
    """An elementary closed path, rotated so that its smallest node comes first."""

    nodes: tuple  # without the repeated start node
    weight: Fraction

    @property
    def length(self) -> int:
        return len(self.nodes)

    @property
    def mean(self) -> Fraction:
        return self.weight / len(self.nodes)

    @property
    def edges(self) -> tuple:
        ns = self.nodes
        return tuple((ns[i], ns[(i + 1) % len(ns)]) for i in range(len(ns)))

    def as_path(self, start: int | None = None) -> Path:
        ns = self.nodes
        k = 0 if start is None else ns.index(start)
        rotated = ns[k:] + ns[:k]
        return Path(rotated + (rotated[0],))


@lru_cache(maxsize=1024)
def elementary_cycles(g: Digraph, cap: int = DEFAULT_NODE_CAP) -> tuple:
    """All elementary closed paths of ``g``, deterministic order.

    Backtracking from each start node ``s`` over nodes ``> s``, pruned to nodes
    that can still reach ``s`` inside the allowed set.
    """
    _check_cap(g, cap)
    w = g.weights
    cycles = []
    for s in g.nodes:
        allowed = [x >= s for x in g.nodes]
        # nodes >= s that reach s using only nodes >= s
        reach_s = [False] * g.n_nodes
        reach_s[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.pred[x]:
                if allowed[y] and not reach_s[y]:
                    reach_s[y] = True
                    queue.append(y)
        on_path = [False] * g.n_nodes
        path = [s]
        on_path[s] = True

        def extend(u: int, acc: Fraction) -> None:
            for v in g.succ[u]:
                if v == s:
                    cycles.append(Cycle(tuple(path), acc + w[(u, v)]))
                elif reach_s[v] and not on_path[v]:
                    on_path[v] = True
                    path.append(v)
                    extend(v, acc + w[(u, v)])
                    path.pop()
                    on_path[v] = False

        extend(s, Fraction(0))
    return tuple(cycles)


def girth_circumference(g: Digraph, cap: int = DEFAULT_NODE_CAP) -> tuple:
    """(g, cr); ``(None, None)`` on acyclic graphs."""
    lengths = [c.length for c in elementary_cycles(g, cap)]
    if not lengths:
        return None, None
    return min(lengths), max(lengths)


def longest_simple_path(g: Digraph, nodes: Iterable[int] | None = None, cap: int = DEFAULT_NODE_CAP) -> int:
    """Length of the longest simple path using only ``nodes`` (default: all).

    Exhaustive over (visited-set, endpoint) states.  Returns 0 for an empty
    node set.
    """
    allowed = tuple(sorted(set(g.nodes if nodes is None else nodes)))
    if not allowed:
        return 0
    if len(allowed) > cap:
        raise CapacityError(f"{len(allowed)} nodes exceeds the exponential-search cap of {cap}")
    k = len(allowed)
    pos = {x: i for i, x in enumerate(allowed)}
    succ = [[pos[y] for y in g.succ[x] if y in pos and y != x] for x in allowed]
    # states[mask] = bitmask of endpoints reachable as a simple path covering mask
    states = [0] * (1 << k)
    for i in range(k):
        states[1 << i] = 1 << i
    best = 0
    for mask in range(1, 1 << k):
        ends = states[mask]
        if not ends:
            continue
        best = max(best, bin(mask).count("1") - 1)
        e = ends
        while e:
            low = e & -e
            i = low.bit_length() - 1
            e ^= low
            for j in succ[i]:
                if not (mask >> j) & 1:
                    states[mask | (1 << j)] |= 1 << j
    return best


def cab_diameter(g: Digraph, cap: int = DEFAULT_NODE_CAP) -> int:
    return longest_simple_path(g, None, cap)


def _component_gcd(g: Digraph, comp: Sequence[int]) -> int:
    """gcd of closed-path lengths inside one SCC via BFS level differences; 0 if none."""
    members = set(comp)
    root = comp[0]
    level = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.succ[x]:
            if y in members and y not in level:
                level[y] = level[x] + 1
                queue.append(y)
    d = 0
    for u, v, _ in g.edges:
        if u in members and v in members:
            d = gcd(d, abs(level[u] + 1 - level[v]))
    return d


def component_cyclicities(g: Digraph) -> tuple:
    """c(H) per SCC, in SCC order; components without closed paths give 1."""
    return tuple(_component_gcd(g, comp) or 1 for comp in scc(g).components)


def cyclicity(g: Digraph) -> tuple:
    """(c(G), d(G))."""
    cs = component_cyclicities(g)
    return reduce(lcm, cs, 1), max(cs)


def elementary_cycle_lcm(g: Digraph, cap: int = DEFAULT_NODE_CAP) -> int:
    lengths = {c.length for c in elementary_cycles(g, cap)}
    if not lengths:
        raise InputError("p(G) needs at least one closed path")
    return reduce(lcm, lengths, 1)


def reachability_powers(g: Digraph, horizon: int) -> list:
    """``powers[n][i]`` is the bitmask of nodes reachable from ``i`` in exactly n steps."""
    n = g.n_nodes
    current = [1 << i for i in range(n)]
    powers = [current]
    for _ in range(horizon):
        nxt = []
        for i in range(n):
            m = 0
            for j in g.succ[i]:
                m |= current[j]
            nxt.append(m)
        current = nxt
        powers.append(current)
    return powers


@dataclass(frozen=True)
class ClosedLengthProfile:
    horizon: int
    lengths: tuple  # per node: int bitset, bit n set iff a closed path of length n exists
    gcds: tuple

    def achieves(self, i: int, n: int) -> bool:
        return n <= self.horizon and bool((self.lengths[i] >> n) & 1)

    def length_set(self, i: int) -> frozenset:
        bits = self.lengths[i]
        return frozenset(n for n in range(self.horizon + 1) if (bits >> n) & 1)


def closed_length_profile(g: Digraph, horizon: int) -> ClosedLengthProfile:
    if not is_strongly_connected(g):
        raise InputError("closed-length profiles need a strongly connected graph")
    powers = reachability_powers(g, horizon)
    lengths = []
    gcds = []
    for i in g.nodes:
        bits = 0
        d = 0
        for n, row in enumerate(powers):
            if (row[i] >> i) & 1:
                bits |= 1 << n
                d = gcd(d, n)
        lengths.append(bits)
        gcds.append(d)
    return ClosedLengthProfile(horizon, tuple(lengths), tuple(gcds))


def ep_bound(n: int, g: int, c: int) -> int:
    """Upper bound on the exploration penalty from girth and cyclicity."""
    return 2 * (g // c) * n - g // c - 2 * g + c


def denardo_bound(n: int, g: int) -> int:
    """Upper bound on the exploration penalty of a primitive graph."""
    return n + (n - 2) * g


@lru_cache(maxsize=4096)
def exploration_penalty(g: Digraph, cap: int = DEFAULT_NODE_CAP) -> int:
    """Least k such that every multiple of c(G) that is >= k is a closed length at every node."""
    if not is_irreducible_graph(g):
        raise InputError("exploration penalty needs a nontrivial strongly connected graph")
    girth, _ = girth_circumference(g, cap)
    c, _ = cyclicity(g)
    horizon = ep_bound(g.n_nodes, girth, c)
    if c == 1:
        horizon = max(horizon, denardo_bound(g.n_nodes, girth))
    horizon = max(horizon, 0)
    profile = closed_length_profile(g, horizon)
    last_gap = -1
    for m in range(0, horizon + 1, c):
        if not all(profile.achieves(i, m) for i in g.nodes):
            last_gap = m
    return last_gap + 1


@dataclass(frozen=True)
class GraphParams:
    n_nodes: int
    girth: Optional[int]
    circumference: Optional[int]
    cab_diameter: int
    c: int
    d: int
    p: Optional[int]
    ep: Optional[int]


def graph_params(g: Digraph, cap: int = DEFAULT_NODE_CAP) -> GraphParams:
    girth, cr = girth_circumference(g, cap)
    c, d = cyclicity(g)
    p = elementary_cycle_lcm(g, cap) if girth is not None else None
    ep = exploration_penalty(g, cap) if is_irreducible_graph(g) else None
    return GraphParams(g.n_nodes, girth, cr, cab_diameter(g, cap), c, d, p, ep)
