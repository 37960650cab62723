"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .cartan import CartanType, cartan_datum
from .core.graph import DEFAULT_CAP, CrystalGraph, ResourceLimitError, enumerate_crystal, export_graph
from .data import DataFileError
from .perfect_crystal import CrystalError, PerfectCrystal, build_crystal

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _type(value: str) -> CartanType:
    try:
        return CartanType.parse(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def _positive(value: str) -> int:
    n = int(value)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return n


def _window(value: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected LO,HI") from None
    if lo > hi:
        raise argparse.ArgumentTypeError("LO must not exceed HI")
    return lo, hi


def perturbed_crystal(crystal: PerfectCrystal, spec: str) -> PerfectCrystal:
    """Recolor one arrow: ``SOURCE,I,J`` moves the I-arrow leaving SOURCE to color J."""
    try:
        src, i, j = spec.split(",")
        i, j = int(i), int(j)
    except ValueError:
        raise UsageError(f"--perturb-arrow expects SOURCE,I,J, got {spec!r}") from None
    arrows = crystal.arrow_labels()
    hits = [n for n, (s, c, _) in enumerate(arrows) if s == src and c == i]
    if not hits:
        raise UsageError(f"no {i}-arrow leaves {src}")
    s, _, t = arrows[hits[0]]
    arrows[hits[0]] = (s, j, t)
    return crystal.with_arrows(arrows)


# --------------------------------------------------------------------------
# graph


def build_graph(args) -> CrystalGraph:
    from .walls import PROPER, REDUCED, context, enumerate_model, proper_seeds

    t = args.type
    if args.model == "perfect":
        crystal = build_crystal(t)
        depth = len(crystal) if args.depth is None else args.depth
        return enumerate_crystal(crystal, crystal.empty, depth, "both", cap=args.max_nodes, type_tag=t.value)
    depth = 5 if args.depth is None else args.depth
    ctx = context(t)
    if args.model == "path":
        from .paths import path_crystal

        pc = path_crystal(ctx)
        return enumerate_crystal(pc, pc.ground_path(), depth, "f", cap=args.max_nodes, type_tag=t.value)
    model = REDUCED if args.model == "reduced" else PROPER
    seeds = proper_seeds(ctx, args.seed_columns, args.seed_z) if model == PROPER and args.seed_columns else ()
    return enumerate_model(ctx, model, depth, cap=args.max_nodes, seeds=seeds)


def graph_text(g: CrystalGraph) -> bytes:
    lines = [f"# {g.type} anchor {g.anchor}: {len(g.nodes)} nodes, {len(g.arrows)} arrows"]
    lines += [f"node {k}  wt {w}" for k, w in g.nodes.items()]
    lines += [f"arrow {s} -{i}-> {t}" for s, i, t in g.arrows]
    return ("\n".join(lines) + "\n").encode()


def cmd_graph(args) -> int:
    g = build_graph(args)
    data = graph_text(g) if args.format == "text" else export_graph(g, args.format)
    _write(args.output, data)
    return EXIT_OK


# --------------------------------------------------------------------------
# energy


def cmd_energy(args) -> int:
    from .energy import compute_energy, verify_against_golden

    crystal = build_crystal(args.type)
    table = compute_energy(crystal)
    if args.output or not args.verify:
        _write(args.output, table.to_csv().encode())
    if args.verify:
        rep = verify_against_golden(table, args.golden)
        print(str(rep))
        return EXIT_OK if rep.ok else EXIT_FAIL
    return EXIT_OK


# --------------------------------------------------------------------------
# verify


def _run_one(job):
    from .checks import make_suite, run_check

    type_value, perturb, params, name = job
    crystal = build_crystal(type_value)
    if perturb:
        crystal = perturbed_crystal(crystal, perturb)
    suite = make_suite(type_value, crystal=crystal, **params)
    return run_check(suite, name)


def cmd_verify(args) -> int:
    from .checks import CHECKS, make_suite, run_check

    names = list(CHECKS) if not args.checks else args.checks.split(",")
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; available: {', '.join(CHECKS)}")
    params = dict(depth=args.depth, window=args.window, fock_depth=args.fock_depth,
                  seed_columns=args.seed_columns, seed_z=args.seed_z, cap=args.max_nodes)
    if args.perturb_arrow:
        try:
            perturbed_crystal(build_crystal(args.type), args.perturb_arrow)
        except CrystalError as exc:
            print(f"perturbed crystal rejected at construction: {exc}")
            return EXIT_FAIL
    if args.workers > 1:
        jobs = [(args.type.value, args.perturb_arrow, params, n) for n in names]
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        crystal = build_crystal(args.type)
        if args.perturb_arrow:
            crystal = perturbed_crystal(crystal, args.perturb_arrow)
        suite = make_suite(args.type, crystal=crystal, **params)
        results = [run_check(suite, n) for n in names]
    print(f"verify {args.type.value}" + (f" (perturbed: {args.perturb_arrow})" if args.perturb_arrow else ""))
    for r in results:
        print(r.line() + (f" [{r.seconds:.1f}s]" if args.timings else ""))
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} checks passed")
    if any(r.resource_limited for r in results):
        return EXIT_CAP
    return EXIT_OK if passed == len(results) else EXIT_FAIL


# --------------------------------------------------------------------------
# wall display


def cmd_wall(args) -> int:
    from .walls import context

    try:
        with open(args.file) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read wall file: {exc}") from None
    t = CartanType.parse(doc.get("type", args.type.value if args.type else ""))
    ctx = context(t)
    y, model = ctx.from_json(doc)
    print(ctx.render(y))
    print(f"key {y.key()}  wt {ctx.weight(y)}")
    k_red, k_prop = ctx.first_violation(y, "reduced"), ctx.first_violation(y, "proper")
    print(f"reduced: {'yes' if k_red is None else f'no (pair at k={k_red})'}; "
          f"proper: {'yes' if k_prop is None else f'no (pair at k={k_prop})'}")
    violation = ctx.first_violation(y, model)
    return EXIT_OK if violation is None else EXIT_FAIL


# --------------------------------------------------------------------------


def _write(path: Optional[str], data: bytes) -> None:
    if not path or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    with open(path, "wb") as fh:
        fh.write(data)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="youngwalls", description=__doc__.splitlines()[0] if __doc__ else None)
    p.add_argument("--dump-cartan", action="store_true", help="print the Cartan data as JSON and exit")
    p.add_argument("--type", type=_type, help="e6-2 or f4-1 (with --dump-cartan)")
    sub = p.add_subparsers(dest="command")

    def common(sp):
        sp.add_argument("--type", type=_type, required=True, help="e6-2 or f4-1")
        sp.add_argument("--max-nodes", type=_positive, default=DEFAULT_CAP, help="enumeration node cap")

    g = sub.add_parser("graph", help="enumerate a crystal and export it")
    common(g)
    g.add_argument("--model", choices=("perfect", "reduced", "proper", "path"), default="perfect")
    g.add_argument("--depth", type=_nonneg, default=None)
    g.add_argument("--format", choices=("dot", "json", "text"), default="dot")
    g.add_argument("--seed-columns", type=_nonneg, default=0,
                   help="proper model: also seed from proper walls deviating in this many columns")
    g.add_argument("--seed-z", type=_nonneg, default=3)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_graph)

    e = sub.add_parser("energy", help="compute the energy table (rows a, columns b, entry H(b (x) a))")
    common(e)
    e.add_argument("--verify", action="store_true", help="compare with the golden table")
    e.add_argument("--golden", help="golden CSV to compare with (default: shipped table)")
    e.add_argument("--format", choices=("csv",), default="csv")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_energy)

    v = sub.add_parser("verify", help="run the verification suite")
    common(v)
    v.add_argument("--depth", type=_nonneg, default=None, help="reduced-wall enumeration depth")
    v.add_argument("--window", type=_window, default=(-3, 3), help="shift window LO,HI")
    v.add_argument("--fock-depth", type=_nonneg, default=6)
    v.add_argument("--seed-columns", type=_nonneg, default=2)
    v.add_argument("--seed-z", type=_nonneg, default=3)
    v.add_argument("--checks", help="comma-separated subset of checks")
    v.add_argument("--workers", type=_positive, default=1)
    v.add_argument("--timings", action="store_true")
    v.add_argument("--perturb-arrow", metavar="SOURCE,I,J",
                   help="test hook: recolor the I-arrow leaving SOURCE to color J")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("wall", help="render a wall given as JSON and check its model")
    w.add_argument("file")
    w.add_argument("--type", type=_type)
    w.set_defaults(func=cmd_wall)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.dump_cartan:
            types = [args.type] if args.type else list(CartanType)
            doc = [cartan_datum(t).to_json() for t in types]
            print(json.dumps(doc[0] if len(doc) == 1 else doc, indent=1))
            return EXIT_OK
        if not args.command:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"youngwalls: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, DataFileError, OSError, ValueError, KeyError) as exc:
        print(f"youngwalls: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
