"""Command-line front end.

Exit status: 0 success, 1 a checked property or reroot check failed,
2 bad arguments or unreadable/ill-formed input.
"""
from __future__ import annotations

import argparse
import sys
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Sequence, TextIO

from .harness import PROPERTIES, SEED_ENV, Failure, GeneratorConfig, default_seed, replay, run_property
from .metric import Parametrization, d_psi
from .regions import (
    chain_family,
    inaccessibility_violation,
    member,
    parse_region,
    scott_violation,
    upper_set_violation,
    weak_open_witness,
)
from .tangent import tangent_class
from .tree import (
    OrderView,
    Point,
    TreeError,
    TreeSkeleton,
    infimum,
    leq,
    meet,
    parse_point,
    parse_tree,
    reroot,
    root_view,
    segment,
)


class UsageError(Exception):
    pass


def approx(q: Fraction) -> str:
    """Four decimals, round-half-even; presentation only."""
    d = (Decimal(q.numerator) / Decimal(q.denominator)).quantize(Decimal("0.0001"), rounding=ROUND_HALF_EVEN)
    return str(d)


def _load_tree(path: str) -> TreeSkeleton:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise TreeError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_tree(text)


def _view(sk: TreeSkeleton, base: str | None) -> OrderView:
    return root_view(sk) if base is None else reroot(sk, parse_point(sk, base))


def _cmd_meet(args, sk: TreeSkeleton, out: TextIO) -> int:
    view = _view(sk, args.base)
    print(meet(view, parse_point(sk, args.a), parse_point(sk, args.b)), file=out)
    return 0


def _cmd_inf(args, sk: TreeSkeleton, out: TextIO) -> int:
    view = _view(sk, args.base)
    print(infimum(view, [parse_point(sk, p) for p in args.points]), file=out)
    return 0


def _cmd_segment(args, sk: TreeSkeleton, out: TextIO) -> int:
    view = _view(sk, args.base)
    path = segment(view, parse_point(sk, args.a), parse_point(sk, args.b))
    print(path, file=out)
    print(f"length {path.length}", file=out)
    return 0


def _cmd_dist(args, sk: TreeSkeleton, out: TextIO) -> int:
    src = args.src or args.a
    dst = args.dst or args.b
    param = Parametrization(_view(sk, args.base))
    d = d_psi(param, parse_point(sk, src), parse_point(sk, dst))
    print(f"{d} (~{approx(d)})", file=out)
    return 0


def _cmd_tangent(args, sk: TreeSkeleton, out: TextIO) -> int:
    atom = tangent_class(sk, parse_point(sk, args.of), parse_point(sk, args.at))
    print(f"direction {atom.direction} representative {atom.representative}", file=out)
    return 0


def _cmd_reroot_check(args, sk: TreeSkeleton, out: TextIO) -> int:
    view = _view(sk, args.base)
    orig = root_view(sk)
    pts = [Point(vertex=v) for v in sk.vertices]
    least = all(leq(view, view.base, p) for p in pts)
    same = all(segment(view, a, b).same_points(segment(orig, a, b)) for a in pts for b in pts)
    print(f"base {view.base} is least: {str(least).lower()}", file=out)
    print(f"segments agree with the root order on {len(pts) ** 2} vertex pairs: {str(same).lower()}", file=out)
    return 0 if least and same else 1


def _cmd_region(args, sk: TreeSkeleton, out: TextIO) -> int:
    view = _view(sk, args.base)
    region = parse_region(view, args.expr)
    point = parse_point(sk, args.point) if args.point else None
    if args.check == "member":
        print(str(member(region, point)).lower(), file=out)
    elif args.check == "upper":
        bad = upper_set_violation(region, view)
        print(str(bad is None).lower(), file=out)
        if bad:
            print(f"not an upper set: {bad[0]} <= {bad[1]}, {bad[0]} in region, {bad[1]} not", file=out)
    elif args.check == "scott-open":
        bad = scott_violation(region, view)
        print(str(bad is None).lower(), file=out)
        if bad and bad[0] == "upper":
            print(f"not an upper set: {bad[1]} <= {bad[2]}, {bad[1]} in region, {bad[2]} not", file=out)
        elif bad:
            print(f"not inaccessible: {bad[1]} in region, points just below it (e.g. {bad[2]}) not", file=out)
    elif args.check == "inaccessible":
        chains = chain_family(region, view)
        bad = inaccessibility_violation(region, view, chains)
        print(str(bad is None).lower(), file=out)
        if bad:
            print(f"chain {bad} meets the region only at its supremum", file=out)
    else:
        t = weak_open_witness(region, point, view)
        print(f"{t}", file=out)
        print(f"class({point},{t}) is inside the region", file=out)
    return 0


def _validate(args) -> None:
    """Argument checks that need no tree; run before any file is read."""
    if args.command == "dist":
        if (args.src or args.dst) and (args.a or args.b):
            raise UsageError("give the points either positionally or with --from/--to")
        if not (args.src or args.a) or not (args.dst or args.b):
            raise UsageError("dist needs two points (positional or --from/--to)")
    elif args.command == "region" and args.check in ("member", "witness") and not args.point:
        raise UsageError(f"--check {args.check} needs --point")
    elif args.command == "verify":
        if args.samples < 0:
            raise UsageError("--samples must be non-negative")
        if args.replay and (args.property or args.report):
            raise UsageError("--replay cannot be combined with --property or --report")


def _cmd_verify(args, out: TextIO) -> int:
    if args.replay:
        failed = 0
        for line in Path(args.replay).read_text(encoding="utf-8").splitlines():
            if not line.strip() or '"statement"' in line:
                continue
            rep = replay(Failure.from_line(line))
            failed += not rep.ok
            print(f"{'FAIL' if not rep.ok else 'PASS'} replay {rep.property}", file=out)
            for f in rep.failures:
                print(f"  {f.message}", file=out)
        return 1 if failed else 0
    names = args.property or sorted(PROPERTIES)
    for n in names:
        if n not in PROPERTIES:
            raise UsageError(f"unknown property {n!r}; known: {', '.join(sorted(PROPERTIES))}")
    config = GeneratorConfig(
        seed=args.seed if args.seed is not None else default_seed(),
        min_vertices=args.min_vertices,
        max_vertices=args.max_vertices,
        samples=args.samples,
    )
    reports = []
    for n in names:
        rep = run_property(n, config)
        reports.append(rep)
        status = "PASS" if rep.ok else "FAIL"
        line = f"{status} {n}: {rep.cases} cases, {rep.vacuous} vacuous, {len(rep.failures)} failures"
        if args.timing:
            line += f" ({rep.elapsed:.2f}s)"
        print(line, file=out)
        for f in rep.failures[:3]:
            print(f"  case {f.index}: {f.message}", file=out)
    bad = sum(not r.ok for r in reports)
    print(f"{len(reports) - bad}/{len(reports)} properties passed (seed {config.seed}, {config.samples} samples)", file=out)
    if args.report:
        lines = [ln for r in reports for ln in r.to_lines()]
        Path(args.report).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 1 if bad else 0


def _cmd_dot(args, sk: TreeSkeleton, out: TextIO) -> int:
    print(to_dot(sk, [parse_point(sk, p) for p in args.point or []]), file=out, end="")
    return 0


def to_dot(sk: TreeSkeleton, points: Sequence[Point] = ()) -> str:
    """DOT graph of the skeleton; query points become small nodes splitting their edge."""
    lines = ["graph tree {", "  node [shape=circle];"]
    for v in sk.vertices:
        attrs = ' [style=filled, fillcolor=gold, penwidth=2, xlabel="root"]' if v == sk.root else ""
        lines.append(f'  "{v}"{attrs};')
    marks: dict[tuple[str, str], list[Point]] = {}
    for p in points:
        if p.edge is not None:
            marks.setdefault(p.edge, []).append(p)
        elif p.vertex is not None:
            lines.append(f'  "{p.vertex}" [color=red];')
    for edge in sk.edges:
        length = sk.lengths[edge]
        stops = sorted(set(marks.get(edge, [])), key=lambda q: q.offset)
        if not stops:
            lines.append(f'  "{edge[0]}" -- "{edge[1]}" [label="{length}"];')
            continue
        for q in stops:
            lines.append(f'  "{q}" [shape=point, color=red, xlabel="{q}"];')
        prev, prev_off = edge[0], Fraction(0)
        for q in stops:
            lines.append(f'  "{prev}" -- "{q}" [label="{q.offset - prev_off}"];')
            prev, prev_off = str(q), q.offset
        lines.append(f'  "{prev}" -- "{edge[1]}" [label="{length - prev_off}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nmtree", description="Rooted non-metric trees: order, segments, topology.")
    sub = parser.add_subparsers(dest="command", required=True)

    def tree_cmd(name: str, help: str, base: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--tree", required=True, help="tree file (edge list or Newick)")
        if base:
            p.add_argument("--base", help="base point of the order (default: the root)")
        return p

    p = tree_cmd("meet", "greatest lower bound of two points")
    p.add_argument("a")
    p.add_argument("b")
    p = tree_cmd("inf", "infimum of one or more points")
    p.add_argument("points", nargs="+")
    p = tree_cmd("segment", "closed segment between two points")
    p.add_argument("a")
    p.add_argument("b")
    p = tree_cmd("dist", "d_psi distance for psi = 1 + distance from the base")
    p.add_argument("a", nargs="?")
    p.add_argument("b", nargs="?")
    p.add_argument("--from", dest="src")
    p.add_argument("--to", dest="dst")
    p = tree_cmd("tangent", "tangent class [of]_at", base=False)
    p.add_argument("--at", required=True)
    p.add_argument("--of", required=True)
    tree_cmd("reroot-check", "check the rerooted order at --base")
    p = tree_cmd("region", "decide properties of a region expression")
    p.add_argument("--expr", required=True)
    p.add_argument(
        "--check", required=True, choices=["member", "upper", "scott-open", "inaccessible", "witness"]
    )
    p.add_argument("--point")
    p = tree_cmd("dot", "DOT rendering of the skeleton", base=False)
    p.add_argument("--point", action="append", help="query point to annotate (repeatable)")

    p = sub.add_parser("verify", help="run the property harness")
    p.add_argument("--seed", type=int, help=f"generator seed (default: ${SEED_ENV} or 0)")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--min-vertices", type=int, default=4)
    p.add_argument("--max-vertices", type=int, default=12)
    p.add_argument("--property", action="append", help="property name (repeatable; default: all)")
    p.add_argument("--report", help="write line-delimited JSON report here")
    p.add_argument("--replay", help="replay failure records from a report file")
    p.add_argument("--timing", action="store_true", help="append elapsed seconds to each line")
    return parser


COMMANDS = {
    "meet": _cmd_meet,
    "inf": _cmd_inf,
    "segment": _cmd_segment,
    "dist": _cmd_dist,
    "tangent": _cmd_tangent,
    "reroot-check": _cmd_reroot_check,
    "region": _cmd_region,
    "dot": _cmd_dot,
}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _validate(args)
        if args.command == "verify":
            return _cmd_verify(args, out)
        sk = _load_tree(args.tree)
        return COMMANDS[args.command](args, sk, out)
    except (TreeError, UsageError, OSError) as exc:
        print(f"nmtree: error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
