"""Maximum cycle mean, critical subgraph, and the weight-derived parameters.

The primary route classifies every elementary cycle exactly.  Karp's
algorithm and a longest-path closure give an independent polynomial route,
used for cross-checks and for oracle runs on graphs too large to enumerate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import lcm
from typing import Optional

from .algebra import NEG_INF, Weight
from .digraph import (
    DEFAULT_NODE_CAP,
    Digraph,
    cyclicity,
    elementary_cycles,
    exploration_penalty,
    is_irreducible_graph,
    longest_simple_path,
    scc,
)
from .errors import InputError


@dataclass(frozen=True)
class CriticalComponent:
    nodes: tuple
    c: int
    ep: int
    cr: int


@dataclass(frozen=True)
class CriticalStructure:
    n_nodes: int
    rho: Fraction
    critical_edges: frozenset
    critical_nodes: frozenset
    critical_subgraph: Digraph
    components: tuple  # of CriticalComponent
    rho_nc: Weight
    rho1: Weight
    f: Optional[Fraction]
    delta: Fraction
    Delta: Fraction
    Delta_nc: Fraction
    cr_c: int
    cd_nc: int
    N_nc: int
    c_of_A: int

    # barred (zero-rate) parameters
    @property
    def Delta_bar(self) -> Fraction:
        return self.Delta - self.rho

    @property
    def delta_bar(self) -> Fraction:
        return self.delta - self.rho

    @property
    def Delta_nc_bar(self) -> Fraction:
        return self.Delta_nc - self.rho

    @property
    def rho_nc_bar(self) -> Weight:
        return NEG_INF if self.rho_nc is NEG_INF else self.rho_nc - self.rho

    @property
    def d_of_Gc(self) -> int:
        return max(h.c for h in self.components)

    @property
    def max_ep(self) -> int:
        return max(h.ep for h in self.components)

    @property
    def max_c(self) -> int:
        return max(h.c for h in self.components)

    @property
    def is_primitive(self) -> bool:
        return self.c_of_A == 1


def _require_irreducible(g: Digraph) -> None:
    if not is_irreducible_graph(g):
        raise InputError("graph must be nontrivial and strongly connected")


def rate(g: Digraph, cap: int = DEFAULT_NODE_CAP) -> Fraction:
    _require_irreducible(g)
    return max(c.mean for c in elementary_cycles(g, cap))


def karp_rate(g: Digraph) -> Fraction:
    """Maximum cycle mean by Karp's algorithm, O(n·m)."""
    _require_irreducible(g)
    n = g.n_nodes
    # D[k][v] = max weight of a walk of length k from node 0 to v
    D = [[None] * n for _ in range(n + 1)]
    D[0][0] = Fraction(0)
    for k in range(1, n + 1):
        prev, cur = D[k - 1], D[k]
        for u, v, w in g.edges:
            if prev[u] is not None:
                s = prev[u] + w
                if cur[v] is None or s > cur[v]:
                    cur[v] = s
    best = None
    for v in range(n):
        if D[n][v] is None:
            continue
        worst = min(Fraction(D[n][v] - D[k][v], n - k) for k in range(n) if D[k][v] is not None)
        if best is None or worst > best:
            best = worst
    return best


def longest_path_closure(g: Digraph, shift: Fraction = Fraction(0)) -> list:
    """Max weight over nonempty walks i -> j after adding ``shift`` to every edge.

    Requires that no cycle has positive shifted weight.  ``None`` = no walk.
    """
    n = g.n_nodes
    D = [[None] * n for _ in range(n)]
    for u, v, w in g.edges:
        D[u][v] = w + shift
    for k in range(n):
        Dk = D[k]
        for i in range(n):
            dik = D[i][k]
            if dik is None:
                continue
            Di = D[i]
            for j in range(n):
                dkj = Dk[j]
                if dkj is not None:
                    s = dik + dkj
                    if Di[j] is None or s > Di[j]:
                        Di[j] = s
    return D


def critical_edges_fast(g: Digraph, rho: Fraction | None = None) -> frozenset:
    """Critical edges without cycle enumeration: (u,v) lies on a zero-weight
    closed walk of the normalized graph."""
    if rho is None:
        rho = karp_rate(g)
    D = longest_path_closure(g, -rho)
    out = set()
    for u, v, w in g.edges:
        if u == v:
            if w == rho:
                out.add((u, v))
        elif D[v][u] is not None and w - rho + D[v][u] == 0:
            out.add((u, v))
    return frozenset(out)


def cyclicity_of_critical(g: Digraph, edges: frozenset) -> int:
    """c(A) = c(G_c) given the critical edge set."""
    gc, _ = _critical_graph(g, edges)
    return cyclicity(gc)[0]


def _critical_graph(g: Digraph, edges: frozenset) -> tuple:
    nodes = sorted({u for u, _ in edges} | {v for _, v in edges})
    full = g.edge_subgraph(edges)
    sub, labels = full.induced(nodes)
    return sub, labels


@lru_cache(maxsize=1024)
def analyze(g: Digraph, cap: int = DEFAULT_NODE_CAP) -> CriticalStructure:
    _require_irreducible(g)
    cycles = elementary_cycles(g, cap)
    rho = max(c.mean for c in cycles)
    critical_cycles = [c for c in cycles if c.mean == rho]
    other_cycles = [c for c in cycles if c.mean != rho]

    crit_edges = frozenset(e for c in critical_cycles for e in c.edges)
    crit_nodes = frozenset(x for c in critical_cycles for x in c.nodes)
    non_critical = [x for x in g.nodes if x not in crit_nodes]

    avoiding = [c for c in other_cycles if not crit_nodes.intersection(c.nodes)]
    rho_nc = max((c.mean for c in avoiding), default=NEG_INF)
    rho1 = max((c.mean for c in other_cycles), default=NEG_INF)
    f = min((c.length * rho - c.weight for c in other_cycles), default=None)

    ws = [w for _, _, w in g.edges]
    nc_set = set(non_critical)
    nc_weights = [w for u, v, w in g.edges if u in nc_set and v in nc_set]
    Delta_nc = max(nc_weights) if nc_weights else rho

    gc, labels = _critical_graph(g, crit_edges)
    decomposition = scc(gc)
    components = []
    for comp in decomposition.components:
        h, _ = gc.induced(comp)
        comp_labels = tuple(labels[x] for x in comp)
        members = set(comp_labels)
        cr_h = max(c.length for c in critical_cycles if members.issuperset(c.nodes))
        components.append(CriticalComponent(comp_labels, cyclicity(h)[0], exploration_penalty(h, cap), cr_h))
    c_of_A = reduce(lcm, (h.c for h in components), 1)

    return CriticalStructure(
        n_nodes=g.n_nodes,
        rho=rho,
        critical_edges=crit_edges,
        critical_nodes=crit_nodes,
        critical_subgraph=g.edge_subgraph(crit_edges),
        components=tuple(components),
        rho_nc=rho_nc,
        rho1=rho1,
        f=f,
        delta=min(ws),
        Delta=max(ws),
        Delta_nc=Delta_nc,
        cr_c=max(c.length for c in critical_cycles),
        cd_nc=longest_simple_path(g, non_critical, cap),
        N_nc=len(non_critical),
        c_of_A=c_of_A,
    )


def normalize(g: Digraph, cap: int = DEFAULT_NODE_CAP) -> Digraph:
    """The zero-rate graph (-rho) ⊗ G."""
    return g.shifted(-rate(g, cap))
