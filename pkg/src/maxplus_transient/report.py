"""Assemble analysis documents: graph parameters, critical structure, bounds, transients."""

from __future__ import annotations

from math import ceil
from typing import Optional

from .algebra import MaxPlusMatrix, MaxPlusVector, format_weight
from .bounds import bounds_report
from .critical import analyze
from .digraph import DEFAULT_NODE_CAP, from_matrix, graph_params, is_irreducible_graph
from .errors import InputError
from .oracle import matrix_transient, mu_exact, system_transient

SYSTEM_BOUND_KEYS = ("B_cnc", "B_ep", "B_enp", "B_ne1", "B_ne2")


def graph_section(a: MaxPlusMatrix, cap: int) -> dict:
    p = graph_params(from_matrix(a), cap)
    return {
        "N": p.n_nodes,
        "girth": p.girth,
        "circumference": p.circumference,
        "cd": p.cab_diameter,
        "c": p.c,
        "d": p.d,
        "p": p.p,
        "ep": p.ep,
    }


def critical_section(a: MaxPlusMatrix, cap: int) -> dict:
    cs = analyze(from_matrix(a), cap)
    return {
        "rho": cs.rho,
        "rho_nc": cs.rho_nc,
        "rho1": cs.rho1,
        "f": cs.f,
        "delta": cs.delta,
        "Delta": cs.Delta,
        "Delta_nc": cs.Delta_nc,
        "cr_c": cs.cr_c,
        "cd_nc": cs.cd_nc,
        "N_nc": cs.N_nc,
        "c_A": cs.c_of_A,
        "critical_nodes": sorted(cs.critical_nodes),
        "critical_edges": sorted(cs.critical_edges),
        "components": [{"nodes": list(h.nodes), "c": h.c, "ep": h.ep, "cr": h.cr} for h in cs.components],
    }


def bounds_section(a: MaxPlusMatrix, v: Optional[MaxPlusVector], cap: int) -> dict:
    r = bounds_report(from_matrix(a, v), cap)
    return {
        "norm": r.norm,
        "B_cnc": r.B_c,
        "B_cnc_simplified": r.B_c_simplified,
        "B_ep": r.B_ep,
        "B_enp": r.B_enp,
        "B_ne1": r.B_ne1,
        "B_ne2": r.B_ne2,
        "B_ms": r.B_ms,
        "mu_upper": r.mu_upper,
        "matrix_bound": r.matrix_bound,
        "ER": r.er_bound,
        "SyK_system": r.syk_system,
        "SyK_matrix": r.syk_matrix,
    }


def transient_section(a: MaxPlusMatrix, v: Optional[MaxPlusVector], cap: int) -> dict:
    m = matrix_transient(a, cap=cap)
    out = {"n_A": m.transient, "p0": m.minimal_period, "w0": m.period_gain, "mu": mu_exact(a, cap)}
    if v is not None:
        s = system_transient(a, v, cap=cap)
        out.update({"n_Av": s.transient, "p0_v": s.minimal_period})
    else:
        out.update({"n_Av": None, "p0_v": None})
    return out


def slack_section(bounds: dict, transient: dict) -> dict:
    """Bound minus exact transient, for every applicable bound."""
    out = {}
    n_av = transient.get("n_Av")
    for key in SYSTEM_BOUND_KEYS:
        if n_av is not None and bounds.get(key) is not None and key != "B_cnc":
            out[key] = bounds[key] - n_av
    out["matrix_bound"] = bounds["matrix_bound"] - transient["n_A"]
    return out


def build_report(
    a: MaxPlusMatrix,
    v: Optional[MaxPlusVector] = None,
    sections=("graph", "critical", "bounds", "transient"),
    cap: int = DEFAULT_NODE_CAP,
) -> dict:
    if not a.is_square:
        raise InputError("matrix must be square")
    if v is not None and v.dim != a.n_rows:
        raise InputError("vector dimension differs from matrix size")
    if not is_irreducible_graph(from_matrix(a)):
        raise InputError("matrix is not irreducible")
    doc = {
        "instance": {
            "N": a.n_rows,
            "matrix": [list(r) for r in a.rows],
            "vector": None if v is None else list(v.entries),
        }
    }
    if "graph" in sections:
        doc["graph"] = graph_section(a, cap)
    if "critical" in sections:
        doc["critical"] = critical_section(a, cap)
    if "bounds" in sections:
        doc["bounds"] = bounds_section(a, v, cap)
    if "transient" in sections:
        doc["transient"] = transient_section(a, v, cap)
    if "bounds" in sections and "transient" in sections:
        doc["slack"] = slack_section(doc["bounds"], doc["transient"])
    return doc


def _cell(x) -> str:
    if x is None:
        return "n/a"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_cell(y) for y in x) + "]"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}: {_cell(y)}" for k, y in x.items()) + "}"
    return format_weight(x)


def render_text(doc: dict) -> str:
    lines = []
    for section, body in doc.items():
        if section == "instance":
            continue
        lines.append(f"[{section}]")
        if isinstance(body, dict):
            width = max((len(k) for k in body), default=0)
            for key, value in body.items():
                text = _cell(value)
                if key.startswith("B_") or key in ("matrix_bound", "ER", "SyK_system", "SyK_matrix"):
                    if value is not None and getattr(value, "denominator", 1) != 1:
                        text += f"  (ceil {ceil(value)})"
                lines.append(f"  {key:<{width}}  {text}")
        else:
            lines.append(f"  {_cell(body)}")
    return "\n".join(lines) + "\n"
