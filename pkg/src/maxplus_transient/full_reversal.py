"""Greedy Full Reversal: every sink reverses all its incoming edges at once.

Routing graphs mark destinations with self-loops; a self-loop counts as an
outgoing edge, so destinations never fire.  The work vector W(t) counts how
often each node has fired, and it obeys a min-plus linear recurrence that
:func:`fr_matrix` exposes in max-plus form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .algebra import NEG_INF, MaxPlusMatrix, MaxPlusVector, mat_vec
from .errors import HorizonError, InputError

ROUTING = "routing"
SCHEDULING = "scheduling"
MODES = (ROUTING, SCHEDULING)


def _weakly_connected(n: int, pairs: Iterable) -> bool:
    adj = [set() for _ in range(n)]
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x] - seen:
            seen.add(y)
            queue.append(y)
    return len(seen) == n


def _acyclic(n: int, pairs: Iterable) -> bool:
    indeg = [0] * n
    succ = [[] for _ in range(n)]
    for u, v in pairs:
        succ[u].append(v)
        indeg[v] += 1
    queue = deque(i for i in range(n) if indeg[i] == 0)
    seen = 0
    while queue:
        x = queue.popleft()
        seen += 1
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return seen == n


@dataclass(frozen=True)
class FRGraph:
    n_nodes: int
    edges: frozenset  # of (u, v); self-loops mark routing destinations
    mode: str = ROUTING

    def __post_init__(self):
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.mode not in MODES:
            raise InputError(f"mode must be one of {MODES}")
        if self.n_nodes < 1:
            raise InputError("need at least one node")
        for u, v in edges:
            if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
                raise InputError(f"edge ({u}, {v}) has an endpoint out of range")
            if u != v and (v, u) in edges:
                raise InputError(f"edge ({u}, {v}) appears in both directions")
        links = self.links
        if self.mode == ROUTING:
            if not self.destinations:
                raise InputError("routing needs at least one destination (self-loop)")
        elif len(links) != len(edges):
            raise InputError("scheduling graphs have no self-loops")
        if not _weakly_connected(self.n_nodes, links):
            raise InputError("graph is not weakly connected")
        if not _acyclic(self.n_nodes, links):
            raise InputError("graph is not acyclic")

    @property
    def destinations(self) -> frozenset:
        return frozenset(u for u, v in self.edges if u == v)

    @property
    def links(self) -> frozenset:
        return frozenset((u, v) for u, v in self.edges if u != v)

    def sinks(self) -> frozenset:
        has_out = {u for u, _ in self.edges}
        return frozenset(x for x in range(self.n_nodes) if x not in has_out)

    def with_edges(self, edges) -> "FRGraph":
        return FRGraph(self.n_nodes, frozenset(edges), self.mode)


def fr_step(g: FRGraph) -> FRGraph:
    sinks = g.sinks()
    if not sinks:
        return g
    return g.with_edges((v, u) if v in sinks and u != v else (u, v) for u, v in g.edges)


def is_destination_oriented(g: FRGraph) -> bool:
    """Every node has a directed path to some destination."""
    pred = [[] for _ in range(g.n_nodes)]
    for u, v in g.links:
        pred[v].append(u)
    seen = set(g.destinations)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for y in pred[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == g.n_nodes


@dataclass(frozen=True)
class FRTrace:
    """Graphs G_0..G_T and work vectors W(0)..W(T).

    Routing: ``theta`` is the first t with G_t = G_{t+1}.  Scheduling:
    ``transient`` and ``period`` describe the increment sequence W(t+1) - W(t).
    """

    mode: str
    graphs: tuple
    work: tuple
    theta: Optional[int] = None
    transient: Optional[int] = None
    period: Optional[int] = None

    @property
    def increments(self) -> tuple:
        return tuple(
            tuple(b - a for a, b in zip(w0, w1)) for w0, w1 in zip(self.work, self.work[1:])
        )


def default_horizon(g: FRGraph) -> int:
    n = g.n_nodes
    if g.mode == ROUTING:
        return max((n - 1) ** 2, 2 * n) + 1
    # scheduling states are orientations of a fixed forest-like support; the
    # orbit closes long before this
    return 4 * n ** 3 + 8


def _fire(w: tuple, sinks: frozenset) -> tuple:
    return tuple(x + 1 if i in sinks else x for i, x in enumerate(w))


def fr_run(g0: FRGraph, horizon: int | None = None) -> FRTrace:
    horizon = default_horizon(g0) if horizon is None else horizon
    graphs = [g0]
    work = [(0,) * g0.n_nodes]
    if g0.mode == ROUTING:
        for t in range(horizon + 1):
            g = graphs[-1]
            nxt = fr_step(g)
            if nxt == g:
                return FRTrace(ROUTING, tuple(graphs), tuple(work), theta=t)
            graphs.append(nxt)
            work.append(_fire(work[-1], g.sinks()))
        raise HorizonError(f"routing did not terminate within {horizon} steps")

    # scheduling: orientations form a finite deterministic system, so the
    # first repeated graph pins down eventual periodicity exactly
    first_seen = {g0.edges: 0}
    for t in range(1, horizon + 2):
        g = graphs[-1]
        work.append(_fire(work[-1], g.sinks()))
        nxt = fr_step(g)
        graphs.append(nxt)
        if nxt.edges in first_seen:
            start, cycle = first_seen[nxt.edges], t - first_seen[nxt.edges]
            trace = FRTrace(SCHEDULING, tuple(graphs), tuple(work))
            transient, period = _increment_periodicity(trace.increments, start, cycle)
            return FRTrace(SCHEDULING, tuple(graphs), tuple(work), transient=transient, period=period)
        first_seen[nxt.edges] = t
    raise HorizonError(f"scheduling orbit did not close within {horizon} steps")


def _increment_periodicity(incs: tuple, start: int, cycle: int) -> tuple:
    """Least transient and period of a sequence known to repeat from ``start`` with ``cycle``."""
    # extend by one period so windows below are in range
    seq = list(incs)
    while len(seq) < start + 2 * cycle:
        seq.append(seq[len(seq) - cycle])
    period = next(
        q for q in range(1, cycle + 1)
        if cycle % q == 0 and all(seq[t + q] == seq[t] for t in range(start, start + cycle))
    )
    transient = start
    while transient > 0 and seq[transient - 1] == seq[transient - 1 + period]:
        transient -= 1
    return transient, period


def fr_matrix(g0: FRGraph) -> MaxPlusMatrix:
    """Max-plus form -A of the min-plus work recurrence W(t+1) = A ⊗' W(t).

    A[i][j] is 0 if (i, j) is an initial edge, 1 if only (j, i) is, and +inf
    for non-neighbours; the returned matrix holds the negations.
    """
    n = g0.n_nodes
    rows = [[NEG_INF] * n for _ in range(n)]
    for u, v in g0.edges:
        rows[u][v] = Fraction(0)
    for u, v in g0.edges:
        if (v, u) not in g0.edges:
            rows[v][u] = Fraction(-1)
    return MaxPlusMatrix(tuple(tuple(r) for r in rows))


def verify_work_recurrence(trace: FRTrace, neg_a: MaxPlusMatrix) -> bool:
    """-W(t+1) = (-A) ⊗ (-W(t)) at every recorded step."""
    for w0, w1 in zip(trace.work, trace.work[1:]):
        lhs = MaxPlusVector(tuple(-x for x in w1))
        if mat_vec(neg_a, MaxPlusVector(tuple(-x for x in w0))) != lhs:
            return False
    # one more step past the end: the recurrence must reproduce the next vector
    if trace.graphs:
        nxt = _fire(trace.work[-1], trace.graphs[-1].sinks())
        if mat_vec(neg_a, MaxPlusVector(tuple(-x for x in trace.work[-1]))) != MaxPlusVector(tuple(-x for x in nxt)):
            return False
    return True
