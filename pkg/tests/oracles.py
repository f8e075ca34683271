"""Independent brute-force oracles.

Nothing here reuses the package's algorithms: products are explicit path
sums, cycles come from networkx, simple paths from plain DFS, transients
from naive Fraction powering.  Bottom is ``None``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

import networkx as nx


def as_rows(a) -> list:
    """Package matrix -> list of lists with None for bottom."""
    return [[None if str(x) == "-inf" else Fraction(x) for x in row] for row in a.rows]


def naive_mul(a: list, b: list) -> list:
    n, m, k = len(a), len(b[0]), len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            terms = [a[i][t] + b[t][j] for t in range(k) if a[i][t] is not None and b[t][j] is not None]
            row.append(max(terms) if terms else None)
        out.append(row)
    return out


def naive_power(a: list, n: int) -> list:
    size = len(a)
    out = [[Fraction(0) if i == j else None for j in range(size)] for i in range(size)]
    for _ in range(n):
        out = naive_mul(out, a)
    return out


def path_sum_power(a: list, n: int) -> list:
    """A^n by enumerating every node sequence of length n + 1."""
    size = len(a)
    out = [[None] * size for _ in range(size)]
    for seq in itertools.product(range(size), repeat=n + 1):
        total = Fraction(0)
        for u, v in zip(seq, seq[1:]):
            if a[u][v] is None:
                break
            total += a[u][v]
        else:
            i, j = seq[0], seq[-1]
            if out[i][j] is None or total > out[i][j]:
                out[i][j] = total
    return out


def nx_graph(rows: list) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(len(rows)))
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x is not None:
                g.add_edge(i, j, w=x)
    return g


def cycles(rows: list) -> list:
    """(node list, weight) for every elementary cycle, via networkx."""
    g = nx_graph(rows)
    out = []
    for cyc in nx.simple_cycles(g):
        w = sum((rows[u][v] for u, v in zip(cyc, cyc[1:] + cyc[:1])), Fraction(0))
        out.append((cyc, w))
    return out


def max_cycle_mean(rows: list) -> Fraction:
    return max(w / len(c) for c, w in cycles(rows))


def critical_edges(rows: list) -> set:
    rho = max_cycle_mean(rows)
    out = set()
    for c, w in cycles(rows):
        if w / len(c) == rho:
            out.update(zip(c, c[1:] + c[:1]))
    return out


def longest_simple_path(rows: list, allowed=None) -> int:
    n = len(rows)
    allowed = set(range(n)) if allowed is None else set(allowed)
    best = 0

    def dfs(u, seen, length):
        nonlocal best
        best = max(best, length)
        for v in range(n):
            if v in allowed and v not in seen and rows[u][v] is not None:
                dfs(v, seen | {v}, length + 1)

    for s in allowed:
        dfs(s, {s}, 0)
    return best


def closed_lengths(rows: list, node: int, horizon: int) -> set:
    """Lengths n <= horizon of closed walks at ``node`` by boolean powering."""
    n = len(rows)
    reach = {node}
    out = {0}
    for k in range(1, horizon + 1):
        reach = {v for u in reach for v in range(n) if rows[u][v] is not None}
        if node in reach:
            out.add(k)
    return out


def graph_gcd(rows: list) -> int:
    d = 0
    for c, _ in cycles(rows):
        d = gcd(d, len(c))
    return d


def exploration_penalty(rows: list, horizon: int) -> int:
    c = graph_gcd(rows)
    sets = [closed_lengths(rows, i, horizon) for i in range(len(rows))]
    last_gap = -1
    for m in range(0, horizon + 1, c):
        if not all(m in s for s in sets):
            last_gap = m
    return last_gap + 1


def orbit(rows: list, v: list, steps: int) -> list:
    xs = [v]
    for _ in range(steps):
        x = xs[-1]
        nxt = []
        for row in rows:
            terms = [a + b for a, b in zip(row, x) if a is not None and b is not None]
            nxt.append(max(terms) if terms else None)
        xs.append(nxt)
    return xs


def _shift(x, lam):
    if isinstance(x, list):
        return [_shift(y, lam) for y in x]
    return None if x is None else x + lam


def eventual_transient(seq: list, rho: Fraction, max_period: int | None = None) -> tuple:
    """(transient, minimal period) of a sequence that is periodic over its last third.

    For each candidate period q, walk back from the end while
    seq[n + q] = q*rho + seq[n]; keep q if that covers the last third.
    """
    length = len(seq)
    top = length // 3 if max_period is None else min(max_period, length // 3)
    accepted = []
    for q in range(1, top + 1):
        n0 = length - q
        while n0 > 0 and seq[n0 - 1 + q] == _shift(seq[n0 - 1], q * rho):
            n0 -= 1
        if n0 <= length - q - length // 3:
            accepted.append((q, n0))
    assert accepted, "sequence too short to exhibit periodicity"
    return min(n0 for _, n0 in accepted), min(q for q, _ in accepted)


def representable(n: int, gens) -> bool:
    if n == 0:
        return True
    bound = [n // a for a in gens]
    return any(
        sum(k * a for k, a in zip(ks, gens)) == n for ks in itertools.product(*(range(b + 1) for b in bound))
    )
