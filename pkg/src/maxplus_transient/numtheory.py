"""Brauer thresholds, coin-problem membership, and the zero-sum pigeonhole lemma."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Sequence

from .digraph import Digraph, elementary_cycles, girth_circumference
from .errors import InputError


@dataclass(frozen=True)
class GeneratorSet:
    values: tuple

    def __post_init__(self):
        vals = tuple(sorted(int(x) for x in self.values))
        if not vals or vals[0] < 1:
            raise InputError("generators must be a nonempty set of positive integers")
        object.__setattr__(self, "values", vals)

    @property
    def d(self) -> int:
        return reduce(gcd, self.values)


def brauer_threshold(gens: GeneratorSet) -> int:
    """Every multiple of gcd(gens) at or above this value is representable."""
    d = gens.d
    return d * (gens.values[0] // d - 1) * (gens.values[-1] // d - 1)


def representable(n: int, gens: GeneratorSet) -> bool:
    """Is ``n`` a nonnegative integer combination of the generators?"""
    if n < 0:
        return False
    reach = [False] * (n + 1)
    reach[0] = True
    for m in range(1, n + 1):
        reach[m] = any(a <= m and reach[m - a] for a in gens.values)
    return reach[n]


def zero_subset_mod(xs: Sequence[int], d: int) -> tuple:
    """Indices (0-based, contiguous) of a nonempty subsequence summing to 0 mod d.

    Prefix sums S_0 = 0, S_1, ..., S_d take d + 1 values in d residues, so
    the first repeated residue S_k ≡ S_l gives the window k+1 .. l.
    """
    if d < 1:
        raise InputError("modulus must be positive")
    if len(xs) != d:
        raise InputError(f"need exactly {d} integers, got {len(xs)}")
    seen = {0: 0}
    total = 0
    for l, x in enumerate(xs, start=1):
        total = (total + x) % d
        if total in seen:
            return tuple(range(seen[total], l))
        seen[total] = l
    raise AssertionError("unreachable: pigeonhole")


def _bfs(g: Digraph, source: int, reverse: bool = False) -> tuple:
    adj = g.pred if reverse else g.succ
    dist = [None] * g.n_nodes
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def closed_length_generators(g: Digraph, i: int) -> frozenset:
    """Closed-path lengths at ``i`` built around every elementary cycle.

    For each elementary cycle: a shortest path from ``i`` to the cycle, a
    shortest way back, with and without one traversal of the cycle.  These
    lengths generate the gcd of all closed lengths at ``i``.
    """
    dist_from_i = _bfs(g, i)
    dist_to_i = _bfs(g, i, reverse=True)
    out = set()
    for cyc in elementary_cycles(g):
        if i in cyc.nodes:
            out.add(cyc.length)
            continue
        j = min(cyc.nodes, key=lambda x: (dist_from_i[x], x))
        base = dist_from_i[j] + dist_to_i[j]
        out.add(base)
        out.add(base + cyc.length)
    return frozenset(out)


def generator_window(g: Digraph) -> tuple:
    """The range [girth, 2N - 1] that every generator falls into."""
    girth, _ = girth_circumference(g)
    return girth, 2 * g.n_nodes - 1
