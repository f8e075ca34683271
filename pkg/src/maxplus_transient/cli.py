"""Command-line front end.

Exit codes: 0 success, 1 property violation, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from .algebra import MaxPlusVector
from .bounds import bounds_report
from .digraph import DEFAULT_NODE_CAP, from_matrix
from .errors import CapacityError, HorizonError, TransienceError
from .full_reversal import MODES, ROUTING, fr_matrix, fr_run, is_destination_oriented, verify_work_recurrence
from .generate import InstanceSpec, random_fr_graph, random_matrix
from .io import Instance, dumps, parse_fr_graph, parse_instance, parse_vector, serialize_fr_graph, serialize_instance
from .oracle import matrix_transient, system_transient
from .report import build_report, render_text
from . import verify as verify_mod

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


def _weight_range(text: str) -> tuple:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError("LO must not exceed HI")
    return lo, hi


def _density(text: str) -> float:
    p = float(text)
    if not 0 < p <= 1:
        raise argparse.ArgumentTypeError("density must lie in (0, 1]")
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args) -> Instance:
    inst = parse_instance(_read(args.matrix))
    if args.vector:
        inst = Instance(inst.matrix, parse_vector(_read(args.vector), inst.matrix.n_rows))
    return inst


def _emit(args, doc: dict) -> None:
    sys.stdout.write(dumps(doc) + "\n" if args.json else render_text(doc))


def cmd_analyze(args) -> int:
    inst = _load(args)
    _emit(args, build_report(inst.matrix, inst.vector, cap=args.cap))
    return EXIT_OK


def cmd_bounds(args) -> int:
    inst = _load(args)
    _emit(args, build_report(inst.matrix, inst.vector, sections=("graph", "critical", "bounds"), cap=args.cap))
    return EXIT_OK


def cmd_transient(args) -> int:
    inst = _load(args)
    if args.horizon is None:
        doc = build_report(inst.matrix, inst.vector, sections=("transient",), cap=args.cap)
    else:
        m = matrix_transient(inst.matrix, horizon=args.horizon, cap=args.cap)
        body = {"n_A": m.transient, "p0": m.minimal_period, "w0": m.period_gain, "horizon": m.horizon_used}
        if inst.vector is not None:
            s = system_transient(inst.matrix, inst.vector, horizon=args.horizon, cap=args.cap)
            body.update({"n_Av": s.transient, "p0_v": s.minimal_period})
        doc = {"transient": body}
    _emit(args, doc)
    return EXIT_OK


def cmd_verify(args) -> int:
    lo, hi = args.weights
    config = InstanceSpec(n_min=1, n_max=args.nodes, lo=lo, hi=hi, density=args.density)
    summary = verify_mod.run(args.seed, args.count, config, args.cap)
    doc = {
        "verify": {
            "seed": args.seed,
            "count": summary.checked,
            "violations": len(summary.violations),
        },
        "violations": [
            {"index": v.index, "check": v.check, "detail": v.detail, "instance": v.instance}
            for v in summary.violations
        ],
    }
    if args.json:
        print(dumps(doc))
    else:
        print(f"checked {summary.checked} instances (seed {args.seed}): {len(summary.violations)} violation(s)")
        for v in summary.violations:
            print(f"- instance {v.index}: {v.check}: {v.detail}")
            print("  " + v.instance.rstrip().replace("\n", "\n  "))
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def _fr_bounds(g0, cap: int) -> dict:
    """System bounds for the work recurrence started at W(0) = 0."""
    neg_a = fr_matrix(g0)
    zero = MaxPlusVector((Fraction(0),) * g0.n_nodes)
    try:
        r = bounds_report(from_matrix(neg_a, zero), cap)
    except CapacityError as exc:
        return {"skipped": str(exc)}
    return {"B_cnc": r.B_c, "B_ep": r.B_ep, "B_enp": r.B_enp, "B_ne1": r.B_ne1, "B_ne2": r.B_ne2}


def cmd_full_reversal(args) -> int:
    g0 = parse_fr_graph(_read(args.graph), args.mode)
    trace = fr_run(g0, args.horizon)
    n = g0.n_nodes
    neg_a = fr_matrix(g0)
    recurrence = verify_work_recurrence(trace, neg_a)
    tree = len(g0.links) == n - 1
    body = {"mode": g0.mode, "N": n, "tree": tree, "steps": len(trace.work) - 1, "recurrence_holds": recurrence}
    violated = not recurrence
    if g0.mode == ROUTING:
        body["theta"] = trace.theta
        body["destination_oriented"] = is_destination_oriented(trace.graphs[-1])
        ref = {"quadratic": (n - 1) ** 2}
        if tree:
            ref["tree"] = 2 * (n - 1)
        body["reference_bounds"] = ref
        violated |= not body["destination_oriented"]
        if n >= 3:
            violated |= trace.theta > (n - 1) ** 2
        if tree:
            violated |= trace.theta > 2 * (n - 1)
    else:
        body["transient"] = trace.transient
        body["period"] = trace.period
        if tree and n >= 4:
            body["reference_bounds"] = {"tree": 6 * (n - 3)}
            violated |= trace.transient > 6 * (n - 3)
    body["bounds"] = _fr_bounds(g0, args.cap)
    _emit(args, {"full_reversal": body})
    return EXIT_VIOLATION if violated else EXIT_OK


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    if args.mode is not None:
        g = random_fr_graph(rng, args.nodes, args.mode, tree=args.tree)
        sys.stdout.write(serialize_fr_graph(g))
        return EXIT_OK
    lo, hi = args.weights
    config = InstanceSpec(args.nodes, args.nodes, lo, hi, args.density)
    sys.stdout.write(serialize_instance(Instance(random_matrix(rng, args.nodes, config))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxplus-transient", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, instance=True):
        if instance:
            p.add_argument("matrix", help="instance file ('-' for stdin)")
            p.add_argument("--vector", metavar="FILE", help="initial vector file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--cap", type=int, default=DEFAULT_NODE_CAP, metavar="NODES", help="exponential-search node cap")

    p = sub.add_parser("analyze", help="parameters, bounds and exact transients")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="parameters and bounds only")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("transient", help="exact transients and minimal periods")
    common(p)
    p.add_argument("--horizon", type=int, help="explicit search horizon (skips cycle enumeration)")
    p.set_defaults(func=cmd_transient)

    p = sub.add_parser("verify", help="randomized invariant checks")
    common(p, instance=False)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--nodes", type=int, default=5, help="largest instance size")
    p.add_argument("--weights", type=_weight_range, default=(-3, 3), metavar="LO..HI")
    p.add_argument("--density", type=_density, default=0.5, metavar="P")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("full-reversal", help="simulate Full Reversal")
    common(p, instance=False)
    p.add_argument("graph", help="edge-list file ('-' for stdin)")
    p.add_argument("--mode", choices=MODES, default=ROUTING)
    p.add_argument("--horizon", type=int)
    p.set_defaults(func=cmd_full_reversal)

    p = sub.add_parser("gen", help="emit a random instance")
    p.add_argument("--nodes", type=int, default=4)
    p.add_argument("--weights", type=_weight_range, default=(-3, 3), metavar="LO..HI")
    p.add_argument("--density", type=_density, default=0.5, metavar="P")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--mode", choices=MODES, help="emit a Full Reversal graph instead of a matrix")
    p.add_argument("--tree", action="store_true", help="with --mode: tree-shaped support")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except HorizonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (TransienceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
