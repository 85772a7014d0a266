"""Command-line interface: duality, analysis, grid scans, bounds and tables.

All numeric I/O is exact (integers, and rationals rendered as ``p/q``).
Output is deterministic: identical invocations produce identical bytes.
Exit codes: 0 success, 2 input/usage error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .arthur import parse_parameter, render_parameter
from .engine import (
    Assumption,
    FieldKind,
    ScanCell,
    Verdict,
    bounds,
    scan,
    verdict,
)
from .errors import CuspcheckError, InternalInvariantViolation, InvalidArgument
from .partitions import (
    GroupFamily,
    barbasch_vogan_dual,
    parse_partition,
    symplectic_collapse,
)
from .satake import satake_exponent_bound
from .smallrep import (
    conjectured_so_lower_bound,
    grs_minimal_partition,
    hypercuspidal_existence,
    nonsingular_expansion,
    nonsingular_partition,
)

__all__ = ["main", "build_parser"]

_GROUPS = {
    "sp": GroupFamily.C,
    "so-odd": GroupFamily.B,
    "so-even": GroupFamily.D,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspcheck",
        description="Decide when a global Arthur packet of Sp(2n) provably has no cuspidal members.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", metavar="FILE", default=None, help="write output to FILE instead of stdout")

    def field_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--field", choices=[f.value for f in FieldKind], default="general")
        p.add_argument(
            "--assume",
            action="append",
            default=[],
            choices=[a.value for a in Assumption],
            help="activate a conjectural assumption (repeatable)",
        )

    p = sub.add_parser("dual", help="dual of an odd orthogonal partition")
    p.add_argument("partition")
    common(p)

    p = sub.add_parser("collapse", help="symplectic collapse of an even-weight partition")
    p.add_argument("partition")
    common(p)

    p = sub.add_parser("analyze", help="full cuspidality verdict for a parameter")
    p.add_argument("parameter")
    field_flags(p)
    common(p)

    p = sub.add_parser("bounds", help="bound triple for a parameter")
    p.add_argument("parameter")
    common(p)

    p = sub.add_parser("scan", help="verdicts over a parameter template grid")
    p.add_argument("--template", required=True, help="parameter with $name slots, e.g. '(1c,$b1)+(2s,$b2)'")
    p.add_argument(
        "--range",
        action="append",
        default=[],
        dest="ranges",
        metavar="NAME=START:STOP:STEP",
        help="inclusive slot range (repeatable, row-major in flag order)",
    )
    field_flags(p)
    common(p, formats=("text", "json", "csv"))

    p = sub.add_parser("satake", help="Satake exponent bound for Sp(2n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", choices=[f.value for f in FieldKind], default="general")
    common(p)

    p = sub.add_parser("small", help="small-representation tables for one group")
    p.add_argument("--group", choices=sorted(_GROUPS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", choices=[f.value for f in FieldKind], default="general")
    common(p)

    return parser


def _parse_range(spec: str) -> tuple[str, list[int]]:
    name, eq, body = spec.partition("=")
    if not eq or not name:
        raise InvalidArgument(f"range must look like NAME=START:STOP:STEP, got {spec!r}")
    pieces = body.split(":")
    if len(pieces) not in (2, 3):
        raise InvalidArgument(f"range must look like NAME=START:STOP:STEP, got {spec!r}")
    try:
        start, stop = int(pieces[0]), int(pieces[1])
        step = int(pieces[2]) if len(pieces) == 3 else 1
    except ValueError:
        raise InvalidArgument(f"range bounds must be integers in {spec!r}") from None
    if step < 1:
        raise InvalidArgument(f"range step must be positive in {spec!r}")
    return name, list(range(start, stop + 1, step))


def _kv_block(rows: list[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)} = {v}" for k, v in rows)


def _verdict_text(param_text: str, v: Verdict) -> str:
    rows = [
        ("parameter", param_text),
        ("n", str(v.n)),
        ("p_psi", str(v.p_psi)),
        ("eta", str(v.eta)),
        ("N_a", str(v.bounds.n_a)),
        ("N1", f"{v.bounds.n1}  witness {v.bounds.n1_witness}"),
        ("N2", f"{v.bounds.n2}  witness {v.bounds.n2_witness}"),
        ("status", v.status.value),
    ]
    lines = [_kv_block(rows), "firings:"]
    if v.firings:
        for f in v.firings:
            suffix = "" if f.conditional_on is None else f" (requires {f.conditional_on.value})"
            lines.append(f"  {f.rule} {f.name} -> {f.implies.value}{suffix}")
    else:
        lines.append("  (none)")
    for w in v.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def _rules_text(cell: ScanCell) -> str:
    if cell.verdict is None:
        return cell.error or "invalid"
    if not cell.verdict.firings:
        return "-"
    return ";".join(f.rule for f in cell.verdict.firings)


def _scan_text(names: list[str], cells: list[ScanCell]) -> str:
    header = [*names, "status", "rules"]
    rows = [header]
    for cell in cells:
        values = dict(cell.slots)
        rows.append([str(values[n]) for n in names] + [cell.status_text, _rules_text(cell)])
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    out = []
    for r in rows:
        out.append("  ".join(col.ljust(w) for col, w in zip(r, widths)).rstrip())
    return "\n".join(out)


def _scan_csv(names: list[str], cells: list[ScanCell]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([*names, "status", "rules"])
    for cell in cells:
        values = dict(cell.slots)
        writer.writerow([values[n] for n in names] + [cell.status_text, _rules_text(cell)])
    return buf.getvalue().rstrip("\n")


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2)


def _run_dual(args) -> str:
    p = parse_partition(args.partition)
    eta = barbasch_vogan_dual(p)
    t = p.transpose()
    dec = t.decrement()
    if args.format == "json":
        return _json_text(
            {"p": str(p), "p_transpose": str(t), "decremented": str(dec), "eta": str(eta)}
        )
    return _kv_block(
        [("p", str(p)), ("p^t", str(t)), ("(p^t)^-", str(dec)), ("eta", str(eta))]
    )


def _run_collapse(args) -> str:
    p = parse_partition(args.partition)
    c = symplectic_collapse(p)
    if args.format == "json":
        return _json_text({"p": str(p), "collapse": str(c)})
    return _kv_block([("p", str(p)), ("collapse", str(c))])


def _assumptions(args) -> frozenset[Assumption]:
    return frozenset(Assumption(a) for a in args.assume)


def _run_analyze(args) -> str:
    psi = parse_parameter(args.parameter)
    v = verdict(psi, FieldKind(args.field), _assumptions(args))
    if args.format == "json":
        return _json_text(v.to_dict())
    return _verdict_text(render_parameter(psi), v)


def _run_bounds(args) -> str:
    psi = parse_parameter(args.parameter)
    report = bounds(psi)
    if args.format == "json":
        return _json_text(
            {
                "n": psi.n,
                "p_psi": str(psi.attached_partition()),
                "eta": str(psi.dual_partition()),
                "bounds": report.to_dict(),
            }
        )
    return _kv_block(
        [
            ("parameter", render_parameter(psi)),
            ("n", str(psi.n)),
            ("p_psi", str(psi.attached_partition())),
            ("eta", str(psi.dual_partition())),
            ("N_a", str(report.n_a)),
            ("N1", f"{report.n1}  witness {report.n1_witness}"),
            ("N2", f"{report.n2}  witness {report.n2_witness}"),
        ]
    )


def _run_scan(args) -> str:
    ranges = [_parse_range(spec) for spec in args.ranges]
    names = [name for name, _ in ranges]
    cells = scan(args.template, ranges, FieldKind(args.field), _assumptions(args))
    if args.format == "json":
        return _json_text(
            {
                "template": args.template,
                "field": args.field,
                "assumptions": sorted(a.value for a in _assumptions(args)),
                "cells": [c.to_dict() for c in cells],
            }
        )
    if args.format == "csv":
        return _scan_csv(names, cells)
    return _scan_text(names, cells)


def _run_satake(args) -> str:
    bound = satake_exponent_bound(args.n, FieldKind(args.field))
    if args.format == "json":
        return _json_text(bound.to_dict())
    return _kv_block(
        [
            ("n", str(args.n)),
            ("field", args.field),
            ("theta", str(bound.theta)),
            ("sharp", "true" if bound.sharp else "false"),
            ("source", bound.source),
        ]
    )


def _run_small(args) -> str:
    family = _GROUPS[args.group]
    field = FieldKind(args.field)
    n = args.n
    ns = nonsingular_partition(family, n)
    exp = nonsingular_expansion(family, n)
    if family is GroupFamily.C:
        payload: dict = {
            "group": args.group,
            "n": n,
            "nonsingular": str(ns),
            "expansion": str(exp),
            "grs_minimal": str(grs_minimal_partition(2 * n)),
            "hypercuspidal": hypercuspidal_existence(n, field).value,
        }
    else:
        payload = {
            "group": args.group,
            "n": n,
            "nonsingular": str(ns),
            "expansion": str(exp),
            "conjectured_lower_bound": {
                "partition": str(conjectured_so_lower_bound(family, n)),
                "conjectural": True,
            },
        }
    if args.format == "json":
        return _json_text(payload)
    rows = [("group", args.group), ("n", str(n)), ("nonsingular", str(ns)), ("expansion", str(exp))]
    if family is GroupFamily.C:
        rows.append(("grs_minimal", payload["grs_minimal"]))
        rows.append(("hypercuspidal", payload["hypercuspidal"]))
    else:
        rows.append(
            ("conjectured_lower_bound", payload["conjectured_lower_bound"]["partition"] + "  (conjectural)")
        )
    return _kv_block(rows)


_HANDLERS = {
    "dual": _run_dual,
    "collapse": _run_collapse,
    "analyze": _run_analyze,
    "bounds": _run_bounds,
    "scan": _run_scan,
    "satake": _run_satake,
    "small": _run_small,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rendered = _HANDLERS[args.verb](args)
    except InternalInvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except CuspcheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = rendered + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0
