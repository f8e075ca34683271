"""Exact transients and minimal periods by explicit iteration.

Bounds are only used to size the search horizon.  If the relation
``x(n + c) = c*rho + x(n)`` holds at some ``n`` it holds at every later index
(apply A to both sides), so the transient is the first index where it holds.
Not finding one below the horizon means some bound is wrong, and that is
raised as :class:`HorizonError` instead of being hidden.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, lcm
from typing import Optional

from .algebra import (
    NEG_INF,
    MaxPlusMatrix,
    MaxPlusVector,
    denominator_lcm,
    from_int_rows,
    int_identity,
    int_mat_vec,
    int_mul,
    to_int_rows,
    to_int_vector,
)
from .bounds import b_ms, bounds_report, matrix_bound
from .critical import analyze, critical_edges_fast, cyclicity_of_critical, karp_rate
from .digraph import DEFAULT_NODE_CAP, Digraph, from_matrix, graph_params, is_irreducible_graph
from .errors import HorizonError, InputError


@dataclass(frozen=True)
class TransientResult:
    transient: int
    minimal_period: int
    period_gain: Fraction
    horizon_used: int


@dataclass(frozen=True)
class _Rate:
    rho: Fraction
    c: int


def _irreducible_graph(a: MaxPlusMatrix, v: MaxPlusVector | None = None) -> Digraph:
    g = from_matrix(a, v)
    if not is_irreducible_graph(g):
        raise InputError("matrix is not irreducible")
    return g


def _rate_and_cyclicity(g: Digraph, fast: bool, cap: int) -> _Rate:
    if fast:
        rho = karp_rate(g)
        return _Rate(rho, cyclicity_of_critical(g, critical_edges_fast(g, rho)))
    cs = analyze(g, cap)
    return _Rate(cs.rho, cs.c_of_A)


def _divisors(n: int) -> list:
    return [q for q in range(1, n + 1) if n % q == 0]


def _shifted_equal(later, earlier, gain: int) -> bool:
    """``later == gain + earlier`` entrywise on int/None nested lists or flat lists."""
    if later and isinstance(later[0], list):
        return all(_shifted_equal(x, y, gain) for x, y in zip(later, earlier))
    for x, y in zip(later, earlier):
        if (x is None) != (y is None) or (x is not None and x != y + gain):
            return False
    return True


class PowerSequence:
    """Lazily extended list of max-plus powers of a square matrix on the int engine."""

    def __init__(self, a: MaxPlusMatrix, extra_denominator: int = 1):
        if not a.is_square:
            raise InputError("only square matrices have powers")
        self.scale = lcm(denominator_lcm(a.entries()), extra_denominator)
        self._base, _ = to_int_rows(a, self.scale)
        self._powers = [int_identity(a.n_rows)]

    def int_power(self, n: int) -> list:
        while len(self._powers) <= n:
            self._powers.append(int_mul(self._powers[-1], self._base))
        return self._powers[n]

    def power(self, n: int) -> MaxPlusMatrix:
        return from_int_rows(self.int_power(n), self.scale)

    def to_int(self, x: Fraction) -> int:
        y = x * self.scale
        if y.denominator != 1:
            raise InputError("value is not on the integer grid of this sequence")
        return int(y)


def _first_stable(get, c: int, gain: int, horizon: int) -> Optional[int]:
    for n in range(horizon + 1):
        if _shifted_equal(get(n + c), get(n), gain):
            return n
    return None


def _minimal_period(get, n0: int, c: int, rho_int: int) -> int:
    for q in _divisors(c):
        if _shifted_equal(get(n0 + q), get(n0), q * rho_int):
            return q
    return c


def matrix_horizon(g: Digraph, cap: int = DEFAULT_NODE_CAP) -> int:
    cs = analyze(g, cap)
    return ceil(matrix_bound(cs, graph_params(g, cap), guarded=True)) + cs.c_of_A


@dataclass(frozen=True)
class _MatrixRun:
    result: TransientResult
    seq: PowerSequence
    rho: Fraction
    c: int

    @property
    def gain(self) -> int:
        return self.c * self.seq.to_int(self.rho)


@lru_cache(maxsize=256)
def _matrix_run(a: MaxPlusMatrix, horizon: int | None, cap: int) -> _MatrixRun:
    g = _irreducible_graph(a)
    r = _rate_and_cyclicity(g, horizon is not None, cap)
    H = matrix_horizon(g, cap) if horizon is None else horizon
    seq = PowerSequence(a, r.rho.denominator)
    rho_int = seq.to_int(r.rho)
    n0 = _first_stable(seq.int_power, r.c, r.c * rho_int, H)
    if n0 is None:
        raise HorizonError(f"powers not periodic by index {H}")
    p0 = _minimal_period(seq.int_power, n0, r.c, rho_int)
    return _MatrixRun(TransientResult(n0, p0, p0 * r.rho, H), seq, r.rho, r.c)


def matrix_transient(
    a: MaxPlusMatrix, horizon: int | None = None, cap: int = DEFAULT_NODE_CAP
) -> TransientResult:
    """Transient and minimal period of the power sequence of an irreducible matrix.

    With an explicit ``horizon`` the rate and critical cyclicity come from
    polynomial routines, so matrices beyond the enumeration cap are fine.
    """
    return _matrix_run(a, horizon, cap).result


class _Orbit:
    def __init__(self, a: MaxPlusMatrix, v: MaxPlusVector, extra_denominator: int):
        self.scale = lcm(denominator_lcm(a.entries()), denominator_lcm(v.entries), extra_denominator)
        self._a, _ = to_int_rows(a, self.scale)
        self._xs = [to_int_vector(v, self.scale)]

    def __call__(self, n: int) -> list:
        while len(self._xs) <= n:
            self._xs.append(int_mat_vec(self._a, self._xs[-1]))
        return self._xs[n]


def system_horizon(g: Digraph, cap: int = DEFAULT_NODE_CAP) -> int:
    """Horizon from the system bounds when node weights are finite, else the matrix bound."""
    report = bounds_report(g, cap)
    c = analyze(g, cap).c_of_A
    if report.system_bound is None:
        return matrix_horizon(g.with_node_weights(None), cap)
    return ceil(report.system_bound) + c


def system_transient(
    a: MaxPlusMatrix, v: MaxPlusVector, horizon: int | None = None, cap: int = DEFAULT_NODE_CAP
) -> TransientResult:
    """Transient and minimal period of x(n) = A^n v."""
    if v.dim != a.n_rows:
        raise InputError("vector dimension differs from matrix size")
    if all(x is NEG_INF for x in v.entries):
        raise InputError("initial vector is entirely bottom")
    g = _irreducible_graph(a, v)
    r = _rate_and_cyclicity(g, horizon is not None, cap)
    H = system_horizon(g, cap) if horizon is None else horizon
    orbit = _Orbit(a, v, r.rho.denominator)
    rho_int = int(r.rho * orbit.scale)
    n0 = _first_stable(orbit, r.c, r.c * rho_int, H)
    if n0 is None:
        raise HorizonError(f"orbit not periodic by index {H}")
    p0 = _minimal_period(orbit, n0, r.c, rho_int)
    return TransientResult(n0, p0, p0 * r.rho, H)


def check_perron(a: MaxPlusMatrix, cap: int = DEFAULT_NODE_CAP) -> bool:
    """A^(n+c) = c*rho + A^n for every n in [n_A, n_A + 3c]."""
    run = _matrix_run(a, None, cap)
    n_a = run.result.transient
    return all(
        _shifted_equal(run.seq.int_power(n + run.c), run.seq.int_power(n), run.gain)
        for n in range(n_a, n_a + 3 * run.c + 1)
    )


def column_transients(a: MaxPlusMatrix, cap: int = DEFAULT_NODE_CAP) -> tuple:
    """Transient of A^n e^j for every j, read off the columns of the powers."""
    run = _matrix_run(a, None, cap)
    out = []
    for j in range(a.n_cols):
        column = lambda n, j=j: [row[j] for row in run.seq.int_power(n)]
        n0 = _first_stable(column, run.c, run.gain, run.result.transient)
        if n0 is None:
            raise HorizonError(f"column {j} not periodic by the matrix transient")
        out.append(n0)
    return tuple(out)


def check_column_identity(a: MaxPlusMatrix, cap: int = DEFAULT_NODE_CAP) -> bool:
    """The matrix transient equals the largest transient over unit initial vectors."""
    return matrix_transient(a, cap=cap).transient == max(column_transients(a, cap))


def mu_exact(a: MaxPlusMatrix, cap: int = DEFAULT_NODE_CAP) -> Fraction:
    """Largest in-row spread A^n[i,k] - A^n[i,j] over n past the matrix-vs-system constant.

    Past the transient the spreads repeat with the minimal period, so a finite
    window suffices.
    """
    g = _irreducible_graph(a)
    start = ceil(b_ms(analyze(g, cap), graph_params(g, cap))[0])
    start = max(start, 0)
    run = _matrix_run(a, None, cap)
    stop = max(start, run.result.transient) + run.result.minimal_period
    best = None
    for n in range(start, stop):
        for row in run.seq.int_power(n):
            finite = [x for x in row if x is not None]
            if finite:
                spread = max(finite) - min(finite)
                if best is None or spread > best:
                    best = spread
    return Fraction(best or 0, run.seq.scale)
