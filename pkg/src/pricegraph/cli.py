"""Command-line front end: solve, gen, reduce, table, verify."""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .approx import alg_general_k, alg_two_prices, guaranteed_ratio
from .exact import DEFAULT_NODE_LIMIT, brute_force_opt, harmonic, single_price_best
from .generators import (
    gen_clique_harmonic, gen_clique_pk, gen_fig1, gen_nd_pinch, gen_random,
)
from .instance import (
    PriceVector, SizeLimitError, ValidationError, find_violation, normalize,
    parse_instance, parse_price_vector, revenue, serialize_instance,
    serialize_price_vector, validate_prices,
)
from .reductions import (
    TerminalGraph, apx_construct, multi_demand_reduce, parse_terminal_graph,
    serialize_sidecar, serialize_terminal_graph, tc_to_tnc, tnc_to_pricing,
)

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3


def _decimal3(x: Fraction) -> str:
    """Truncate a nonnegative rational at three decimal places."""
    milli = x.numerator * 1000 // x.denominator
    return f"{milli // 1000}.{milli % 1000:03d}"


def _emit(doc: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(doc, indent=2))
    else:
        print(json.dumps(doc, separators=(",", ":")))


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ValidationError(f"cannot read {path}: {e}") from e


# --- solve ----------------------------------------------------------------------

_ALGOS = ("single-price", "vc", "general", "brute")


def _run_algo(inst, algo: str, node_limit: int):
    if algo == "single-price":
        return single_price_best(inst)
    if algo == "vc":
        return alg_two_prices(inst)
    if algo == "general":
        return alg_general_k(inst)
    return brute_force_opt(inst, node_limit)


def _solve_one(path: str, args) -> dict:
    original = parse_instance(_read(path))
    inst = normalize(original)
    removed = set(original.nodes) - set(inst.nodes)

    start = time.perf_counter()
    sol = _run_algo(inst, args.algo, args.node_limit)
    wall_ms = (time.perf_counter() - start) * 1000.0

    report = {
        "n": original.n,
        "m": len(original.edges),
        "k": len(original.prices),
        "algo": sol.tag,
        "revenue": sol.revenue,
        "wall_ms": round(wall_ms, 3),
    }
    if args.oracle:
        opt = sol if args.algo == "brute" else brute_force_opt(inst, args.node_limit)
        report["opt"] = opt.revenue
        ratio = Fraction(sol.revenue, opt.revenue) if opt.revenue else Fraction(1)
        report["ratio"] = float(ratio)
        report["ratio_exact"] = f"{ratio.numerator}/{ratio.denominator}"
    if args.out:
        assignment = dict(sol.pv.assignment)
        for v in removed:
            assignment[v] = None
        Path(args.out).write_text(
            serialize_price_vector(PriceVector(assignment)) + "\n", encoding="utf-8")
    return report


def cmd_solve(args) -> int:
    if args.batch:
        files = sorted(Path(args.batch).glob("*.json"))
        failed = False
        for f in files:
            try:
                report = _solve_one(str(f), args)
                report = {"file": f.name, **report}
            except (ValidationError, SizeLimitError) as e:
                report = {"file": f.name, "error": str(e)}
                failed = True
            _emit(report, args.pretty)
        return EXIT_USAGE if failed else EXIT_OK
    if not args.input:
        raise ValidationError("--in FILE is required (or use --batch DIR)")
    _emit(_solve_one(args.input, args), args.pretty)
    return EXIT_OK


# --- gen ------------------------------------------------------------------------

def _parse_price_spec(spec: str) -> tuple[int, ...]:
    spec = spec.replace("…", "...").strip()
    if ".." in spec:
        parts = [p for p in spec.replace("...", "..").split(",") if p.strip()]
        joined = ",".join(parts)
        lo_s, _, hi_s = joined.partition("..")
        try:
            lo, hi = int(lo_s.rstrip(",. ")), int(hi_s.lstrip(",. ").split(",")[0])
        except ValueError:
            raise ValidationError(f"cannot parse price range {spec!r}") from None
        return validate_prices(range(lo, hi + 1))
    try:
        return validate_prices(int(p) for p in spec.split(","))
    except ValueError:
        raise ValidationError(f"cannot parse price set {spec!r}") from None


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "fig1":
        inst = gen_fig1(args.copies, chain=args.chain)
    elif fam == "clique-harmonic":
        inst = gen_clique_harmonic(args.n)
    elif fam == "clique-pk":
        inst = gen_clique_pk(args.k)
    elif fam == "nd-pinch":
        if not args.input:
            raise ValidationError("--in FILE with the base instance is required")
        inst = gen_nd_pinch(normalize(parse_instance(_read(args.input))))
    else:
        if args.seed is None:
            raise ValidationError("--seed is required for the random family")
        inst = gen_random(args.n, _parse_price_spec(args.prices),
                          args.edge_prob, args.alpha_max, args.seed)
    print(serialize_instance(inst))
    return EXIT_OK


# --- reduce ---------------------------------------------------------------------

def _write_artifacts(args, primary_text: str, sidecar_text: str, combined: dict) -> None:
    if args.out:
        Path(args.out).write_text(primary_text + "\n", encoding="utf-8")
        sidecar_path = args.sidecar or args.out + ".sidecar.json"
        Path(sidecar_path).write_text(sidecar_text + "\n", encoding="utf-8")
    else:
        _emit(combined, args.pretty)


def cmd_reduce(args) -> int:
    if args.type == "multi-demand":
        inst = parse_instance(_read(args.input))
        red = multi_demand_reduce(inst, size_cap=args.size_cap)
    elif args.type == "tnc-to-pricing":
        tg = parse_terminal_graph(_read(args.input))
        if args.q is not None:
            tg = TerminalGraph(tg.nodes, tg.edges, tg.terminals, args.q)
        eps = Fraction(args.scale_epsilon) if args.scale_epsilon else None
        red = tnc_to_pricing(tg, alpha_value=args.alpha, scale_epsilon=eps,
                             size_cap=args.size_cap, price_cap=args.price_cap)
        print(f"R_q = {red.threshold}", file=sys.stderr)
    elif args.type == "apx":
        tg = parse_terminal_graph(_read(args.input))
        red = apx_construct(tg, Fraction(args.r), size_cap=args.size_cap)
    else:  # tc-to-tnc
        tg = parse_terminal_graph(_read(args.input))
        ncr = tc_to_tnc(tg)
        graph_text = serialize_terminal_graph(ncr.target)
        sidecar = {
            "bundle_map": {str(k): list(ncr.bundle_map[k]) for k in sorted(ncr.bundle_map)},
            "subdivision_map": {str(k): list(ncr.subdivision_map[k])
                                for k in sorted(ncr.subdivision_map)},
        }
        sidecar_text = json.dumps(sidecar, indent=2)
        _write_artifacts(args, graph_text, sidecar_text,
                         {"graph": json.loads(graph_text), "sidecar": sidecar})
        return EXIT_OK

    inst_text = serialize_instance(red.instance)
    sidecar_text = serialize_sidecar(red)
    _write_artifacts(args, inst_text, sidecar_text,
                     {"instance": json.loads(inst_text), "sidecar": json.loads(sidecar_text)})
    return EXIT_OK


# --- table ----------------------------------------------------------------------

DEFAULT_TABLE_PRICE_SETS = ("1,2", "1,2,3", "1..100", "10,20,25", "3,6,10,11")


def _format_ratio(x: Fraction, exact: bool) -> str:
    return f"{x.numerator}/{x.denominator}" if exact else _decimal3(x)


def cmd_table(args) -> int:
    specs = args.prices or list(DEFAULT_TABLE_PRICE_SETS)
    price_sets = [_parse_price_spec(s) for s in specs]
    for ps in price_sets:
        if len(ps) < 2:
            raise ValidationError("ratio table needs at least two prices per set")
    if args.alpha == "both":
        alpha_modes = ["worst", "zero"]
    else:
        alpha_modes = [args.alpha]

    writer = csv.writer(sys.stdout)
    writer.writerow(["prices", "alpha", "ratio_hk", "ratio_alg2", "ratio_thm45"])
    for ps in price_sets:
        k = len(ps)
        hk = 1 / harmonic(k)
        consecutive = ps == tuple(range(1, k + 1))
        alg2 = 1 / (harmonic(k) - Fraction(1, 4)) if consecutive else None
        for mode in alpha_modes:
            if mode == "worst":
                alpha = ps[1] - ps[0] - 1
            elif mode == "zero":
                alpha = 0
            else:
                alpha = int(mode)
                if alpha < 0:
                    raise ValidationError("alpha must be nonnegative")
            ratio = guaranteed_ratio(ps, alpha)
            if consecutive and k > 6:
                label = f"{{{ps[0]}..{ps[-1]}}}"
            else:
                label = "{" + ",".join(str(p) for p in ps) + "}"
            writer.writerow([
                label,
                mode,
                _format_ratio(hk, args.exact),
                _format_ratio(alg2, args.exact) if alg2 is not None else "",
                _format_ratio(ratio, args.exact),
            ])
    return EXIT_OK


# --- verify ---------------------------------------------------------------------

def cmd_verify(args) -> int:
    inst = parse_instance(_read(args.input))
    pv = parse_price_vector(_read(args.pv))
    violation = find_violation(inst, pv)
    if violation is not None:
        u, v, pu, pw, cap = violation
        print(f"infeasible: edge ({u}, {v}) has price difference "
              f"{pu} - {pw} > alpha({u}, {v}) = {cap}", file=sys.stderr)
        _emit({"feasible": False,
               "violation": {"u": u, "v": v, "p_u": pu, "p_v": pw, "alpha": cap}},
              args.pretty)
        return EXIT_INFEASIBLE
    _emit({"feasible": True, "revenue": revenue(inst, pv)}, args.pretty)
    return EXIT_OK


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pricegraph",
        description="Graph pricing under neighbor price-difference caps.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run an algorithm on an instance file")
    p.add_argument("--in", dest="input", metavar="FILE")
    p.add_argument("--algo", choices=_ALGOS, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="also compute the exhaustive optimum and the achieved ratio")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--out", metavar="FILE", help="write the price vector here")
    p.add_argument("--batch", metavar="DIR", help="solve every *.json in DIR")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="emit a generated instance as JSON")
    p.add_argument("--family", required=True,
                   choices=("fig1", "clique-harmonic", "clique-pk", "nd-pinch", "random"))
    p.add_argument("--copies", type=int, default=1)
    p.add_argument("--chain", action="store_true")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--in", dest="input", metavar="FILE",
                   help="base instance for nd-pinch")
    p.add_argument("--prices", default="1,2")
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--alpha-max", type=int, default=2)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="run an instance transformer")
    p.add_argument("--type", required=True,
                   choices=("multi-demand", "tc-to-tnc", "tnc-to-pricing", "apx"))
    p.add_argument("--in", dest="input", metavar="FILE", required=True)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--sidecar", metavar="FILE")
    p.add_argument("--q", type=int, help="node-cut budget for tnc-to-pricing")
    p.add_argument("--r", default="1.5", help="approximation target for apx")
    p.add_argument("--alpha", type=int, help="slack override for tnc-to-pricing")
    p.add_argument("--scale-epsilon", metavar="FRACTION",
                   help="build the large-slack scaled variant (construct-only)")
    p.add_argument("--size-cap", type=int, default=100_000)
    p.add_argument("--price-cap", type=int, default=1_000_000)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("table", help="print guaranteed approximation ratios as CSV")
    p.add_argument("--prices", action="append", metavar="SPEC",
                   help="price set such as 1,2 or 1..100 (repeatable)")
    p.add_argument("--alpha", default="both",
                   help="worst, zero, a nonnegative integer, or both (default)")
    p.add_argument("--exact", action="store_true",
                   help="print exact fractions instead of truncated decimals")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check a price vector against an instance")
    p.add_argument("--in", dest="input", metavar="FILE", required=True)
    p.add_argument("--pv", metavar="FILE", required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
