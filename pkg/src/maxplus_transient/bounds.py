"""Transience bounds for irreducible max-plus systems and matrices.

All values are exact rationals.  A bound that does not apply to an instance
is ``None``; callers needing an integer threshold take the ceiling.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Optional

from .algebra import NEG_INF, MaxPlusMatrix, MaxPlusVector, weight
from .critical import CriticalStructure, analyze
from .digraph import DEFAULT_NODE_CAP, Digraph, GraphParams, from_matrix, graph_params
from .errors import InputError, PreconditionError


def node_weight_norm(g: Digraph) -> Optional[Fraction]:
    """max w_V - min w_V; 0 without node weights, None if some node weight is bottom."""
    if g.node_weights is None:
        return Fraction(0)
    if any(x is NEG_INF for x in g.node_weights):
        return None
    return max(g.node_weights) - min(g.node_weights)


def b_cnc(cs: CriticalStructure, params: GraphParams, norm: Fraction) -> Fraction:
    """Length beyond which some maximum-weight path from every node meets a critical node."""
    if cs.N_nc == 0:
        return Fraction(0)
    if cs.rho_nc is NEG_INF:
        # non-critical part is acyclic: longer paths cannot avoid critical nodes
        return Fraction(cs.cd_nc + 1)
    gap = -cs.rho_nc_bar
    head = norm + cs.Delta_nc_bar * cs.cd_nc
    via_cd = cs.cd_nc + (head - cs.delta_bar * params.cab_diameter) / gap
    via_count = (head - cs.delta_bar * (cs.N_nc + cs.cr_c - 1)) / gap
    return min(via_cd, via_count)


def b_cnc_simplified(cs: CriticalStructure, n: int, norm: Fraction) -> Fraction:
    """The closed-form relaxation of :func:`b_cnc` using only N, Delta_nc, delta and rho_nc.

    Taken literally: 0 when rho_nc is bottom.  It can fall below :func:`b_cnc`
    when Delta_nc < rho, so sound consumers combine both.
    """
    if cs.rho_nc is NEG_INF:
        return Fraction(0)
    return (norm + (cs.Delta_nc - cs.delta) * (n - 1)) / (cs.rho - cs.rho_nc)


def _explorative_term(cs: CriticalStructure, params: GraphParams) -> int:
    d = cs.d_of_Gc
    return (d - 1) * params.circumference + (d + 1) * params.cab_diameter + cs.max_ep


def b_ep(cs: CriticalStructure, params: GraphParams, norm: Fraction) -> Fraction:
    if not cs.is_primitive:
        raise PreconditionError("critical subgraph is not primitive")
    return max(b_cnc(cs, params, norm), Fraction(2 * params.cab_diameter + cs.max_ep))


def b_enp(cs: CriticalStructure, params: GraphParams, norm: Fraction) -> Fraction:
    return max(b_cnc(cs, params, norm), Fraction(_explorative_term(cs, params)))


def b_ne1(cs: CriticalStructure, params: GraphParams, norm: Fraction) -> Fraction:
    repetitive = (cs.cr_c - 1) * params.circumference + (cs.cr_c + 1) * params.cab_diameter
    return max(b_cnc(cs, params, norm), Fraction(repetitive))


def b_ne2(cs: CriticalStructure, params: GraphParams, norm: Fraction) -> Fraction:
    return max(b_cnc(cs, params, norm), Fraction(params.n_nodes ** 2))


def b_ms(cs: CriticalStructure, params: GraphParams) -> tuple:
    """(matrix-vs-system constant, upper bound on the spread mu(A))."""
    cd, ep = params.cab_diameter, params.ep
    constant = Fraction(2 * cd + ep + cs.max_c + cs.max_ep - 1)
    mu_upper = cs.Delta_bar * cd - cs.delta_bar * (2 * cd + ep + cs.max_c - 1)
    return constant, mu_upper


def mu_upper_simplified(cs: CriticalStructure, params: GraphParams) -> Fraction:
    n = params.n_nodes
    return (cs.Delta - cs.delta) * (n - 1) + (cs.rho - cs.delta) * (2 * (n - 1) + params.ep)


def v_hat(n: int, j: int, mu) -> MaxPlusVector:
    """0 at index ``j`` (0-based), -mu elsewhere."""
    mu = weight(mu)
    if mu is NEG_INF:
        raise InputError("mu must be finite")
    if n < 1 or not 0 <= j < n:
        raise InputError(f"index {j} out of range for dimension {n}")
    return MaxPlusVector(tuple(Fraction(0) if k == j else -mu for k in range(n)))


def matrix_bound(cs: CriticalStructure, params: GraphParams, guarded: bool = False) -> Fraction:
    """Upper bound on the transient of the matrix itself.

    The closed-form first term can undercut the exact critical bound; with
    ``guarded`` the larger of the two is used, which is what the oracle uses
    to size its horizon.
    """
    n = params.n_nodes
    norm = mu_upper_simplified(cs, params)
    first = b_cnc_simplified(cs, n, norm)
    if guarded:
        first = max(first, b_cnc(cs, params, norm))
    d, cr = cs.d_of_Gc, cs.cr_c
    candidates = (
        max(first, Fraction((d - 1) + 2 * d * (n - 1) + cs.max_ep)),
        max(first, Fraction((cr - 1) + 2 * cr * (n - 1))),
        max(first, Fraction(n * n)),
    )
    return max(Fraction(3 * (n - 1) + params.ep + cs.max_ep), min(candidates))


@dataclass(frozen=True)
class ComparisonBounds:
    er: Optional[Fraction]
    syk_system: Optional[Fraction]
    syk_matrix: Optional[Fraction]


def _integral(values) -> bool:
    return all(x is NEG_INF or x.denominator == 1 for x in values)


def comparison_bounds(g: Digraph, cs: CriticalStructure, norm: Optional[Fraction]) -> ComparisonBounds:
    """Earlier bounds from the literature, for side-by-side tables only."""
    n = g.n_nodes
    spread = cs.Delta - cs.delta
    er = None
    node_ok = g.node_weights is None or _integral(g.node_weights)
    if norm is not None and cs.f is not None and node_ok and _integral(w for _, _, w in g.edges):
        er = er_l0(g, cs, norm) + n + 2 * n * n
    syk_system = syk_matrix = None
    if cs.rho1 is not NEG_INF:
        gap = cs.rho - cs.rho1
        if norm is not None:
            syk_system = max((norm + n * spread) / gap, Fraction(2 * n * n))
        syk_matrix = max(n * n * spread / gap, Fraction(2 * n * n))
    return ComparisonBounds(er, syk_system, syk_matrix)


def er_l0(g: Digraph, cs: CriticalStructure, norm: Fraction) -> Optional[Fraction]:
    if cs.f is None:
        return None
    n = g.n_nodes
    return Fraction(n) / cs.f * (norm + (cs.Delta - cs.delta) * (n - 1)) + (n - 1)


@dataclass(frozen=True)
class BoundsReport:
    norm: Optional[Fraction]
    B_c: Optional[Fraction]
    B_c_simplified: Optional[Fraction]
    B_ep: Optional[Fraction]
    B_enp: Optional[Fraction]
    B_ne1: Optional[Fraction]
    B_ne2: Optional[Fraction]
    B_ms: Fraction
    mu_upper: Fraction
    matrix_bound: Fraction
    er_bound: Optional[Fraction]
    syk_system: Optional[Fraction]
    syk_matrix: Optional[Fraction]

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @property
    def system_bound(self) -> Optional[Fraction]:
        """Smallest of the general system bounds."""
        if self.B_enp is None:
            return None
        return min(self.B_enp, self.B_ne1, self.B_ne2)


def bounds_report(g: Digraph, cap: int = DEFAULT_NODE_CAP) -> BoundsReport:
    """Every bound for the (possibly node-weighted) graph ``g``.

    System bounds need finite node weights; with a bottom node weight they
    are reported as not applicable.
    """
    cs = analyze(g, cap)
    params = graph_params(g, cap)
    norm = node_weight_norm(g)
    constant, mu_up = b_ms(cs, params)
    cmp_ = comparison_bounds(g, cs, norm)
    if norm is None:
        system = dict(B_c=None, B_c_simplified=None, B_ep=None, B_enp=None, B_ne1=None, B_ne2=None)
    else:
        system = dict(
            B_c=b_cnc(cs, params, norm),
            B_c_simplified=b_cnc_simplified(cs, g.n_nodes, norm),
            B_ep=b_ep(cs, params, norm) if cs.is_primitive else None,
            B_enp=b_enp(cs, params, norm),
            B_ne1=b_ne1(cs, params, norm),
            B_ne2=b_ne2(cs, params, norm),
        )
    return BoundsReport(
        norm=norm,
        B_ms=constant,
        mu_upper=mu_up,
        matrix_bound=matrix_bound(cs, params),
        er_bound=cmp_.er,
        syk_system=cmp_.syk_system,
        syk_matrix=cmp_.syk_matrix,
        **system,
    )


def bounds_for(a: MaxPlusMatrix, v: MaxPlusVector | None = None, cap: int = DEFAULT_NODE_CAP) -> BoundsReport:
    return bounds_report(from_matrix(a, v), cap)
