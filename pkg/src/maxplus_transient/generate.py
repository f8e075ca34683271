"""Seeded random instances: irreducible matrices and Full Reversal graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import NEG_INF, MaxPlusMatrix, MaxPlusVector
from .digraph import from_matrix, is_irreducible_graph
from .errors import InputError
from .full_reversal import ROUTING, SCHEDULING, FRGraph


@dataclass(frozen=True)
class InstanceSpec:
    n_min: int = 1
    n_max: int = 5
    lo: int = -3
    hi: int = 3
    density: float = 0.5
    denominator: int = 1  # weights are k / denominator for integers k in [lo*den, hi*den]

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max:
            raise InputError("need 1 <= n_min <= n_max")
        if self.lo > self.hi:
            raise InputError("empty weight range")
        if not 0 < self.density <= 1:
            raise InputError("density must lie in (0, 1]")
        if self.denominator < 1:
            raise InputError("denominator must be positive")


MAX_ATTEMPTS = 10_000


def random_matrix(rng: random.Random, n: int, config: InstanceSpec) -> MaxPlusMatrix:
    """An irreducible n×n matrix, by rejection sampling on strong connectivity."""
    den = config.denominator
    for _ in range(MAX_ATTEMPTS):
        rows = tuple(
            tuple(
                Fraction(rng.randint(config.lo * den, config.hi * den), den) if rng.random() < config.density else NEG_INF
                for _ in range(n)
            )
            for _ in range(n)
        )
        a = MaxPlusMatrix(rows)
        if is_irreducible_graph(from_matrix(a)):
            return a
    raise InputError(f"no irreducible {n}x{n} matrix at density {config.density} after {MAX_ATTEMPTS} tries")


def random_vector(rng: random.Random, n: int, lo: int, hi: int) -> MaxPlusVector:
    return MaxPlusVector(tuple(Fraction(rng.randint(lo, hi)) for _ in range(n)))


def instances(seed: int, count: int, config: InstanceSpec):
    """Deterministic stream of (matrix, finite vector) pairs."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(config.n_min, config.n_max)
        a = random_matrix(rng, n, config)
        yield a, random_vector(rng, n, config.lo, config.hi)


def _random_tree(rng: random.Random, n: int) -> list:
    order = list(range(n))
    rng.shuffle(order)
    return [(order[rng.randrange(k)], order[k]) for k in range(1, n)]


def _orient(rng: random.Random, n: int, pairs: list) -> set:
    """Acyclic orientation induced by a random topological order."""
    rank = list(range(n))
    rng.shuffle(rank)
    return {(u, v) if rank[u] < rank[v] else (v, u) for u, v in pairs}


def random_fr_graph(rng: random.Random, n: int, mode: str, tree: bool = False, extra: float = 0.3) -> FRGraph:
    """A valid Full Reversal input; non-tree inputs add each missing link with probability ``extra``."""
    if mode not in (ROUTING, SCHEDULING):
        raise InputError(f"unknown mode {mode!r}")
    if mode == SCHEDULING and n < 2:
        raise InputError("scheduling needs at least two nodes")
    pairs = _random_tree(rng, n)
    if not tree:
        present = {frozenset(p) for p in pairs}
        for u in range(n):
            for v in range(u + 1, n):
                if frozenset((u, v)) not in present and rng.random() < extra:
                    pairs.append((u, v))
    edges = _orient(rng, n, pairs)
    if mode == ROUTING:
        k = 1 if tree or n < 3 else rng.randint(1, max(1, n // 3))
        edges |= {(x, x) for x in rng.sample(range(n), k)}
    return FRGraph(n, frozenset(edges), mode)
