"""Randomized invariant harness: every checkable property, on seeded instances."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Callable, Iterator

from .algebra import NEG_INF, MaxPlusMatrix, MaxPlusVector, scale
from .bounds import bounds_report, er_l0, node_weight_norm, v_hat
from .critical import analyze, critical_edges_fast, karp_rate
from .digraph import (
    DEFAULT_NODE_CAP,
    Digraph,
    denardo_bound,
    elementary_cycles,
    ep_bound,
    from_matrix,
    graph_params,
)
from .generate import InstanceSpec, instances
from .io import Instance, serialize_instance
from .oracle import PowerSequence, check_column_identity, check_perron, matrix_transient, mu_exact, system_transient
from .paths import critical_hit_table


@dataclass(frozen=True)
class Violation:
    index: int
    check: str
    detail: str
    instance: str


@dataclass
class Summary:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _structure(g: Digraph, cap: int) -> Iterator[tuple]:
    cs = analyze(g, cap)
    params = graph_params(g, cap)
    yield "karp-rate", karp_rate(g) == cs.rho, f"karp {karp_rate(g)} vs {cs.rho}"
    fast = critical_edges_fast(g, cs.rho)
    yield "critical-edges", fast == cs.critical_edges, f"{sorted(fast)} vs {sorted(cs.critical_edges)}"
    ordered = params.c <= params.girth <= params.circumference <= g.n_nodes and params.d <= params.c <= params.p
    yield "param-order", ordered and params.cab_diameter <= g.n_nodes - 1, str(params)
    yield "rate-sandwich", cs.delta <= cs.rho <= cs.Delta, f"{cs.delta} {cs.rho} {cs.Delta}"
    means = {cyc.mean for cyc in elementary_cycles(cs.critical_subgraph, cap)}
    yield "critical-cycles", means == {cs.rho}, f"cycle means in critical subgraph {means}"
    yield "ep-bound", params.ep <= ep_bound(g.n_nodes, params.girth, params.c), f"ep {params.ep}"
    if params.c == 1:
        yield "ep-denardo", params.ep <= denardo_bound(g.n_nodes, params.girth), f"ep {params.ep}"
    integral = all(w.denominator == 1 for _, _, w in g.edges)
    if integral and cs.rho_nc is not NEG_INF:
        gap = 1 / (cs.rho - cs.rho_nc)
        ok = gap <= (g.n_nodes - cs.N_nc) * cs.N_nc <= Fraction(g.n_nodes ** 2, 4)
        yield "integer-gap", ok, f"1/(rho-rho_nc) = {gap}"


def _transients(a: MaxPlusMatrix, v: MaxPlusVector, cap: int) -> Iterator[tuple]:
    gv = from_matrix(a, v)
    report = bounds_report(gv, cap)
    cs = analyze(gv, cap)
    params = graph_params(gv, cap)
    sys_ = system_transient(a, v, cap=cap)
    mat = matrix_transient(a, cap=cap)
    named = {"B_enp": report.B_enp, "B_ne1": report.B_ne1, "B_ne2": report.B_ne2, "B_ep": report.B_ep}
    for name, bound in named.items():
        if bound is not None:
            yield f"dominance-{name}", sys_.transient <= ceil(bound), f"n_Av {sys_.transient} > {name} {bound}"
    yield "system-below-matrix", sys_.transient <= mat.transient, f"{sys_.transient} > {mat.transient}"
    yield "matrix-bound", mat.transient <= ceil(report.matrix_bound), f"n_A {mat.transient} > {report.matrix_bound}"
    yield "perron", check_perron(a, cap), "power relation fails past the transient"
    yield "column-identity", check_column_identity(a, cap), "n_A differs from max column transient"
    yield "period-divides", cs.c_of_A % mat.minimal_period == 0, f"p0 {mat.minimal_period} vs c(A) {cs.c_of_A}"

    mu = mu_exact(a, cap)
    yield "mu-upper", mu <= report.mu_upper, f"mu {mu} > {report.mu_upper}"
    hat = [system_transient(a, v_hat(a.n_rows, j, mu), cap=cap).transient for j in range(a.n_rows)]
    yield "matrix-vs-system", mat.transient <= max([ceil(report.B_ms)] + hat), f"n_A {mat.transient}, v^j {hat}"

    start = ceil(report.B_c)
    stop = start + 2 * params.p
    _, hits = critical_hit_table(gv, cs.critical_nodes, stop)
    missing = [(n, i) for n in range(start, stop + 1) for i in gv.nodes if not hits[n][i]]
    yield "critical-hit", not missing, f"no critical maximizer at (n, node) {missing[:3]}"

    l0 = er_l0(gv, cs, node_weight_norm(gv))
    if report.er_bound is not None:
        yield "er-dominates-critical", report.B_c <= l0, f"l0 {l0} < B_c {report.B_c}"

    horizon = params.ep + params.c + params.cab_diameter - 1
    seq = PowerSequence(a)
    pattern = lambda n: [[x is None for x in row] for row in seq.int_power(n)]
    ok = all(pattern(n + params.c) == pattern(n) for n in range(max(horizon, 0), max(horizon, 0) + params.c + 1))
    yield "bottom-pattern", ok, "support of powers not periodic past ep + c + cd - 1"


def _homothety(a: MaxPlusMatrix, v: MaxPlusVector, lam: int, cap: int) -> Iterator[tuple]:
    shifted = scale(a, lam)
    same_bounds = bounds_report(from_matrix(a, v), cap) == bounds_report(from_matrix(shifted, v), cap)
    yield "homothety-bounds", same_bounds, f"lambda {lam}"
    t0, t1 = matrix_transient(a, cap=cap), matrix_transient(shifted, cap=cap)
    yield "homothety-matrix", (t0.transient, t0.minimal_period) == (t1.transient, t1.minimal_period), f"lambda {lam}"
    s0, s1 = system_transient(a, v, cap=cap), system_transient(shifted, v, cap=cap)
    yield "homothety-system", s0.transient == s1.transient, f"lambda {lam}"
    c0, c1 = analyze(from_matrix(a), cap), analyze(from_matrix(shifted), cap)
    yield "homothety-critical", c0.critical_edges == c1.critical_edges and c1.rho == c0.rho + lam, f"lambda {lam}"


def check_instance(a: MaxPlusMatrix, v: MaxPlusVector, lam: int, cap: int = DEFAULT_NODE_CAP) -> list:
    """(check name, detail) for every failed property."""
    failures = []
    for group in (_structure(from_matrix(a), cap), _transients(a, v, cap), _homothety(a, v, lam, cap)):
        for name, ok, detail in group:
            if not ok:
                failures.append((name, detail))
    return failures


def run(
    seed: int,
    count: int,
    config: InstanceSpec = InstanceSpec(),
    cap: int = DEFAULT_NODE_CAP,
    on_instance: Callable | None = None,
) -> Summary:
    summary = Summary()
    lam_rng = random.Random(seed ^ 0x5EED)
    for index, (a, v) in enumerate(instances(seed, count, config)):
        lam = lam_rng.randint(-3, 3)
        failures = check_instance(a, v, lam, cap)
        summary.checked += 1
        text = serialize_instance(Instance(a, v))
        for name, detail in failures:
            summary.violations.append(Violation(index, name, detail, text))
        if on_instance is not None:
            on_instance(index, failures)
    return summary
