"""Path weights, the Simp and Red path reductions, and realizers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .algebra import NEG_INF, Weight
from .critical import analyze
from .digraph import Digraph, Path
from .errors import CapacityError, InputError

DEFAULT_WALK_CAP = 20


def path_weight(g: Digraph, path: Path) -> tuple:
    """(e-weight, en-weight); the en-weight is None without node weights."""
    path.check_in(g)
    w_star = sum((g.weights[e] for e in path.edges), Fraction(0))
    if g.node_weights is None:
        return w_star, None
    return w_star, w_star + g.node_weights[path.end]


def _shortest_closed_window(nodes: tuple) -> Optional[tuple]:
    """(k, l) with nodes[k] == nodes[l], l - k minimal, then k minimal."""
    last: dict = {}
    best = None
    for l, x in enumerate(nodes):
        if x in last:
            k = last[x]
            if best is None or l - k < best[1] - best[0]:
                best = (k, l)
        last[x] = l
    return best


def simp(path: Path) -> Path:
    """Simple part: strip elementary closed subpaths until the path is simple."""
    nodes = path.nodes
    while True:
        window = _shortest_closed_window(nodes)
        if window is None:
            return Path(nodes)
        k, l = window
        nodes = nodes[:k] + nodes[l:]


@dataclass(frozen=True)
class DisjointClosedMultiset:
    """Non-overlapping closed subpaths of ``host`` as (offset, length) windows."""

    host: Path
    windows: tuple

    def __post_init__(self):
        windows = tuple(sorted(tuple(w) for w in self.windows))
        end = 0
        for offset, length in windows:
            if offset < end or length < 0 or offset + length > self.host.length:
                raise InputError(f"window {(offset, length)} overlaps or leaves the path")
            if self.host.nodes[offset] != self.host.nodes[offset + length]:
                raise InputError(f"window {(offset, length)} is not a closed subpath")
            end = offset + length
        object.__setattr__(self, "windows", windows)

    @property
    def total_length(self) -> int:
        return sum(length for _, length in self.windows)

    def subpaths(self) -> tuple:
        ns = self.host.nodes
        return tuple(Path(ns[o:o + l + 1]) for o, l in self.windows)


def remove_multiset(path: Path, s: DisjointClosedMultiset) -> Path:
    if s.host != path:
        raise InputError("multiset was built for a different path")
    nodes = path.nodes
    out = []
    pos = 0
    for offset, length in s.windows:
        out.extend(nodes[pos:offset])
        pos = offset + length
    out.extend(nodes[pos:])
    return Path(tuple(out))


def _elementary_windows(nodes: tuple) -> list:
    """Every nonempty elementary closed subpath as (offset, length)."""
    out = []
    last: dict = {}
    for l, x in enumerate(nodes):
        if x in last:
            k = last[x]
            if len(set(nodes[k:l])) == l - k:
                out.append((k, l - k))
        last[x] = l
    return sorted(out)


def _best_removal(nodes: tuple, d: int, k: int) -> tuple:
    """L-maximal member of S_{d,k}: windows, L ≡ 0 mod d, k survives.

    Exhaustive include/skip search over windows in offset order; the first
    selection reaching the maximum wins, which fixes ties deterministically.
    """
    windows = _elementary_windows(nodes)
    best = [0, ()]
    n_pos = len(nodes)

    def survives(chosen: tuple) -> bool:
        removed = [False] * n_pos
        for o, l in chosen:
            for p in range(o + 1, o + l):
                removed[p] = True
        return any(nodes[p] == k and not removed[p] for p in range(n_pos))

    def search(i: int, free_from: int, chosen: tuple, total: int) -> None:
        if i == len(windows):
            if total > best[0] and total % d == 0 and survives(chosen):
                best[0], best[1] = total, chosen
            return
        o, l = windows[i]
        if o >= free_from:
            search(i + 1, o + l, chosen + ((o, l),), total + l)
        search(i + 1, free_from, chosen, total)

    search(0, 0, (), 0)
    return tuple(best[1])


def red(path: Path, d: int, k: int, cap: int = DEFAULT_WALK_CAP) -> Path:
    """Red_{d,k}: remove L-maximal collections of elementary closed subpaths
    with total length ≡ 0 (mod d) that keep node ``k``, until none is left."""
    if d < 1:
        raise InputError("modulus must be positive")
    if k not in path.nodes:
        raise InputError(f"node {k} is not on the path")
    if path.length > cap:
        raise CapacityError(f"walk length {path.length} exceeds the search cap of {cap}")
    current = path
    while True:
        chosen = _best_removal(current.nodes, d, k)
        if not chosen:
            return current
        current = remove_multiset(current, DisjointClosedMultiset(current, chosen))


def red_length_bound(d: int, circumference: int, cab_diameter: int) -> int:
    return (d - 1) * circumference + (d + 1) * cab_diameter


# Length-indexed dynamic programming over en-weighted graphs.

def _node_weights(g: Digraph) -> tuple:
    if g.node_weights is None:
        raise InputError("graph has no node weights")
    return g.node_weights


def weight_table(g: Digraph, horizon: int) -> list:
    """``table[n][u]`` = w^n(u→), the max en-weight of length-n paths from u."""
    nw = _node_weights(g)
    table = [list(nw)]
    for _ in range(horizon):
        prev = table[-1]
        row = []
        for u in g.nodes:
            best: Weight = NEG_INF
            for v in g.succ[u]:
                if prev[v] is NEG_INF:
                    continue
                s = g.weights[(u, v)] + prev[v]
                if best is NEG_INF or s > best:
                    best = s
            row.append(best)
        table.append(row)
    return table


def _trace(g: Digraph, table: list, i: int, n: int) -> Path:
    nodes = [i]
    u = i
    for m in range(n, 0, -1):
        target = table[m][u]
        for v in g.succ[u]:
            if target is NEG_INF or (table[m - 1][v] is not NEG_INF and g.weights[(u, v)] + table[m - 1][v] == target):
                break
        u = v
        nodes.append(u)
    return Path(tuple(nodes))


@dataclass(frozen=True)
class RealizerQuery:
    """Either an explicit finite length set, or {n >= n_hat : n ≡ r (mod p)} up to ``horizon``."""

    node: int
    lengths: Optional[frozenset] = None
    n_hat: int = 1
    r: int = 0
    p: int = 1
    horizon: int = 0

    def __post_init__(self):
        if self.lengths is not None:
            object.__setattr__(self, "lengths", frozenset(self.lengths))
            if any(n < 0 for n in self.lengths):
                raise InputError("lengths must be nonnegative")
        else:
            if self.n_hat < 1 or self.p < 1 or not 0 <= self.r < self.p:
                raise InputError("need n_hat >= 1, p >= 1 and 0 <= r < p")
            if self.horizon < self.n_hat:
                raise InputError("horizon must be at least n_hat")

    def members(self) -> list:
        if self.lengths is not None:
            return sorted(self.lengths)
        first = self.n_hat + (self.r - self.n_hat) % self.p
        return list(range(first, self.horizon + 1, self.p))


@dataclass(frozen=True)
class Realizer:
    path: Path
    weight: Weight
    length: int


def realizer(g: Digraph, q: RealizerQuery) -> Realizer:
    """A maximum en-weight path from ``q.node`` among the admissible lengths.

    Ties go to the shortest admissible length.
    """
    members = q.members()
    if not members:
        raise InputError("no admissible length below the horizon")
    table = weight_table(g, members[-1])
    best_n = None
    for n in members:
        if best_n is None or table[n][q.node] > table[best_n][q.node]:
            best_n = n
    return Realizer(_trace(g, table, q.node, best_n), table[best_n][q.node], best_n)


def critical_hit_table(g: Digraph, critical_nodes: Iterable[int], horizon: int) -> tuple:
    """Weights and, per (length, node), whether some maximum-weight path hits a critical node."""
    crit = frozenset(critical_nodes)
    table = weight_table(g, horizon)
    hits = [[u in crit for u in g.nodes]]
    for m in range(1, horizon + 1):
        prev = hits[-1]
        row = []
        for u in g.nodes:
            if u in crit:
                row.append(True)
                continue
            target = table[m][u]
            hit = False
            for v in g.succ[u]:
                below = table[m - 1][v]
                if target is NEG_INF or (below is not NEG_INF and g.weights[(u, v)] + below == target):
                    if prev[v]:
                        hit = True
                        break
            row.append(hit)
        hits.append(row)
    return table, hits


def max_weight_profile(g: Digraph, i: int, n: int, critical_nodes: Iterable[int] | None = None) -> tuple:
    """(w^n(i→), whether some maximum-weight path of length n from i has a critical node)."""
    if critical_nodes is None:
        critical_nodes = analyze(g).critical_nodes
    table, hits = critical_hit_table(g, critical_nodes, n)
    return table[n][i], hits[n][i]
