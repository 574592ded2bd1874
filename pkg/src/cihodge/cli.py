"""Command-line interface: ``cihodge {diamond,mhs,verify,trace,table}``.

Exit codes: 0 success, 1 verification failure, 2 usage or schema error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .engine import Engine, SplitPlan, TraceNode, trace_depth
from .errors import HodgeError
from .hodge import graded_F_dims
from .io import (
    diamond_to_csv,
    diamond_to_json,
    dumps,
    format_dims,
    load_ambient,
    mhs_to_csv,
    mhs_to_json,
    parse_ambient_name,
    parse_degrees,
    rows_to_csv,
)
from .variety import AmbientSpec, CISpec
from .verify import run_verification

TERM_NAMES = (
    "H^{n-1}_prim(I2)",
    "H^n_prim(V_d1)",
    "H^n_prim(V_d2)",
    "H^{n-2}(I3)(-1)",
    "H^{n-1}_prim(I2)(-1)",
)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    ambient: AmbientSpec
    degrees: tuple[int, ...] = ()
    split: tuple[int, int] | None = None
    format: str = "pretty"
    max_ambient_dim: int = 6
    max_degree: int = 10

    def spec(self) -> CISpec:
        return CISpec(self.ambient, self.degrees)


def _split(text: str) -> tuple[int, int]:
    parts = parse_degrees(text)
    if len(parts) != 2:
        raise UsageError(f"--split needs two degrees d1,d2, got {text!r}")
    return parts[0], parts[1]


def build_config(args: argparse.Namespace) -> RunConfig:
    if getattr(args, "ambient_file", None):
        ambient = load_ambient(args.ambient_file)
    else:
        ambient = parse_ambient_name(getattr(args, "ambient", None) or "P4")
    degrees = parse_degrees(args.degrees) if getattr(args, "degrees", None) else ()
    split = _split(args.split) if getattr(args, "split", None) else None
    config = RunConfig(
        args.command,
        ambient,
        degrees,
        split,
        getattr(args, "format", "pretty"),
        getattr(args, "max_ambient_dim", 6),
        getattr(args, "max_degree", 10),
    )
    if split is not None:
        if not degrees or sum(split) != max(degrees) or min(split) < 1:
            raise UsageError(f"--split {split} must add up to the largest degree {max(degrees, default=0)}")
    if config.max_ambient_dim < 1 or config.max_degree < 1:
        raise UsageError("ranges must be positive")
    return config


def cmd_diamond(config: RunConfig, engine: Engine) -> str:
    spec = config.spec()
    diamond = engine.diamond(spec, config.split)
    if config.format == "json":
        return dumps(diamond_to_json(diamond))
    if config.format == "csv":
        return diamond_to_csv(diamond)
    header = f"# {spec}, dimension {diamond.dim}, euler characteristic {diamond.euler_characteristic()}"
    return f"{header}\n{diamond}\n"


def _breakdown(engine: Engine, plan: SplitPlan) -> list[dict]:
    terms = engine.middle_terms(plan)
    n = plan.n
    rows = []
    for p in range(n, -1, -1):
        values = terms.at(p, n - p)
        rows.append({"p": p, "q": n - p, "terms": list(values), "total": sum(values)})
    return rows


def cmd_mhs(config: RunConfig, engine: Engine) -> str:
    spec = config.spec()
    plan = SplitPlan.build(spec, config.split)
    mhs = engine.assemble_amhs(plan)
    graded = graded_F_dims(mhs)
    breakdown = _breakdown(engine, plan)
    if config.format == "json":
        obj = mhs_to_json(mhs)
        obj["hodge_numbers"] = [[row["p"], row["q"], row["total"]] for row in breakdown]
        obj["split"] = [plan.d1, plan.d2]
        obj["terms"] = [[row["p"], row["q"], *row["terms"]] for row in breakdown]
        return dumps(obj)
    if config.format == "csv":
        return mhs_to_csv(mhs)
    n = plan.n
    lines = [
        f"# H^{n} of {spec} degenerating to V_{plan.d1} + V_{plan.d2}",
        f"#   I2 = {plan.i2.normalized()}, I3 = {plan.i3.normalized() if plan.i3 else 'empty'}",
    ]
    for w, dims in mhs.pieces:
        lines.append(f"weight {w}: {format_dims(dims)}  (dim {dims.total})")
    lines.append("Gr_F: " + ", ".join(f"p={p}: {v}" for p, v in graded.items()))
    lines.append(f"terms: {' + '.join(TERM_NAMES)}")
    for row in breakdown:
        parts = " + ".join(str(t) for t in row["terms"])
        lines.append(f"h^{{{row['p']},{row['q']}}} = {parts} = {row['total']}")
    return "\n".join(lines) + "\n"


def cmd_verify(config: RunConfig, engine: Engine) -> tuple[str, int]:
    results = run_verification(config.max_ambient_dim, config.max_degree, engine)
    ok = all(r.passed for r in results)
    if config.format == "json":
        out = dumps({"passed": ok, "checks": [r.as_dict() for r in results]})
    else:
        lines = []
        for r in results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.cases} cases)")
            lines.extend(f"      {f}" for f in r.failures[:5])
        lines.append("all checks passed" if ok else "verification FAILED")
        out = "\n".join(lines) + "\n"
    return out, 0 if ok else 1


def _node_obj(node: TraceNode) -> dict:
    return {
        "key": str(node.key),
        "label": node.label,
        "dim": node.dim,
        "rule": node.rule,
        "split": list(node.split) if node.split else None,
        "children": [str(k) for k in node.children],
    }


def cmd_trace(config: RunConfig, engine: Engine) -> str:
    spec = config.spec()
    nodes = engine.trace(spec, config.split)
    root = nodes[0]
    breakdown = []
    if root.rule == "middle":
        breakdown = _breakdown(engine, SplitPlan.build(spec, root.split))
    if config.format == "json":
        return dumps({"nodes": [_node_obj(n) for n in nodes], "depth": trace_depth(nodes), "breakdown": breakdown})
    if config.format == "csv":
        rows = [(str(n.key), n.dim, n.rule, "+".join(map(str, n.split or ())), " ".join(map(str, n.children)))
                for n in nodes]
        return rows_to_csv(["key", "dim", "rule", "split", "children"], rows)
    rules = {"linear": "linear section (tower)", "points": "point count", "middle": "middle formula"}
    lines = [f"# {len(nodes)} nodes, depth {trace_depth(nodes)}"]
    for node in nodes:
        how = rules[node.rule]
        if node.split:
            how += f", split {node.split[0]}+{node.split[1]}, Lefschetz fill"
        kids = f" -> {', '.join(map(str, node.children))}" if node.children else ""
        lines.append(f"{node.key}  dim {node.dim}  [{how}]{kids}")
    for row in breakdown:
        parts = " + ".join(str(t) for t in row["terms"])
        lines.append(f"h^{{{row['p']},{row['q']}}} = {parts} = {row['total']}")
    return "\n".join(lines) + "\n"


def cmd_table(config: RunConfig, engine: Engine) -> str:
    """Middle Hodge numbers of CI(ambient, degrees + [d]) for d = 1 .. max_degree."""
    rows = []
    for d in range(1, config.max_degree + 1):
        spec = CISpec(config.ambient, config.degrees + (d,))
        n = spec.dim
        middle = engine.diamond(spec).degree(n)
        rows.append((d, n, [middle[(p, n - p)] for p in range(n, -1, -1)]))
    if config.format == "json":
        return dumps([{"degree": d, "dim": n, "middle": m} for d, n, m in rows])
    if config.format == "csv":
        return rows_to_csv(["degree", "dim", "middle"], [(d, n, " ".join(map(str, m))) for d, n, m in rows])
    head = f"# middle h^{{p,n-p}}, p descending, of {CISpec(config.ambient, config.degrees)} cut by degree d"
    return "\n".join([head] + [f"d={d:<3} " + " ".join(map(str, m)) for d, n, m in rows]) + "\n"


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cihodge", description="Hodge numbers of complete intersections by splitting degenerations."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, degrees_required=True, split=True):
        where = p.add_mutually_exclusive_group()
        where.add_argument("--ambient", default=None, help="built-in ambient P<N> (default P4)")
        where.add_argument("--ambient-file", default=None, help="custom ambient JSON file")
        p.add_argument("--degrees", required=degrees_required, help="comma-separated multidegree, e.g. 2,3")
        if split:
            p.add_argument("--split", default=None, help="root degeneration d1,d2 of the largest degree")
        p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")

    common(sub.add_parser("diamond", help="full Hodge diamond"))
    common(sub.add_parser("mhs", help="limit mixed Hodge structure on the middle cohomology"))
    common(sub.add_parser("trace", help="memoized recursion DAG"))
    table = sub.add_parser("table", help="middle Hodge numbers for a range of degrees")
    common(table, degrees_required=False, split=False)
    table.add_argument("--max-degree", type=int, default=8)
    verify = sub.add_parser("verify", help="oracle and invariant sweep")
    verify.add_argument("--max-ambient-dim", type=int, default=6)
    verify.add_argument("--max-degree", type=int, default=10)
    verify.add_argument("--format", choices=("pretty", "json"), default="pretty")
    verify.add_argument("--unreduced-points", action="store_true", help=argparse.SUPPRESS)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        config = build_config(args)
        engine = Engine(reduced_points=not getattr(args, "unreduced_points", False))
        if config.command == "verify":
            out, code = cmd_verify(config, engine)
        else:
            handler = {"diamond": cmd_diamond, "mhs": cmd_mhs, "trace": cmd_trace, "table": cmd_table}
            out, code = handler[config.command](config, engine), 0
    except (UsageError, HodgeError, OSError) as exc:
        print(f"cihodge: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
