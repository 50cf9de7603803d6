"""Command line interface: ``orbichern {chern,criteria,scan,oracle,generators}``.

Exit codes: 0 when the evaluation ran (whatever the verdict), 1 on bad
input, 2 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import chern, criteria, oracle, scan
from .config import ParseError, load_config
from .core import (
    AmbientSurfaceData,
    ChernNumbers,
    CriterionVerdict,
    Multiplicity,
    OrbichernError,
    SmoothOrbifoldSurface,
    TheoremTag,
    as_multiplicity,
    render_approx,
    render_rational,
)

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class UsageError(OrbichernError, ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Report:
    columns: list[str]
    rows: list[dict[str, Any]] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.rows, indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=self.columns, lineterminator="\n", extrasaction="ignore")
            writer.writeheader()
            for row in self.rows:
                writer.writerow({k: _csv_value(v) for k, v in row.items()})
            return buf.getvalue()
        return "\n".join(self.lines) + "\n"


def _csv_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "; ".join(str(x) for x in v)
    return v


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _verdict_report(verdicts: Sequence[CriterionVerdict], approx: bool) -> Report:
    cols = ["criterion", "lhs", "holds", "citation"] + (["approx"] if approx else [])
    rep = Report(cols)
    for v in verdicts:
        row = {
            "criterion": v.theorem_tag.value,
            "lhs": render_rational(v.lhs),
            "holds": v.holds,
            "citation": v.citation,
        }
        if v.normalization is not None:
            row["normalization"] = render_rational(v.normalization)
        if v.notes:
            row["notes"] = list(v.notes)
        if approx:
            row["approx"] = render_approx(v.lhs)
        rep.rows.append(row)
        line = f"{v.theorem_tag.value}: lhs={render_rational(v.lhs)} holds={_bool(v.holds)}"
        if approx:
            line += f" approx={render_approx(v.lhs)}"
        rep.lines.append(line)
        rep.lines.append(f"  citation: {v.citation}")
        if v.normalization is not None:
            k = 2 if v.theorem_tag is TheoremTag.Jet2 else 3
            rep.lines.append(f"  leading term: lhs * N^{2 * k + 1} / {render_rational(v.normalization)}")
        rep.lines.extend(f"  note: {n}" for n in v.notes)
    return rep


def _quantity_report(items: Sequence[tuple[str, Fraction]], approx: bool, notes=()) -> Report:
    cols = ["quantity", "value"] + (["approx"] if approx else [])
    rep = Report(cols)
    for name, value in items:
        row = {"quantity": name, "value": render_rational(value)}
        line = f"{name} = {render_rational(value)}"
        if approx:
            row["approx"] = render_approx(value)
            line += f"  (approx {render_approx(value)})"
        rep.rows.append(row)
        rep.lines.append(line)
    rep.lines.extend(f"note: {n}" for n in notes)
    return rep


def _chern_items(ch: ChernNumbers) -> list[tuple[str, Fraction]]:
    return [
        ("c1^2", ch.c1_sq),
        ("c2", ch.c2),
        ("c1^2-c2", ch.c1_sq - ch.c2),
        ("sym_chi_N3_coefficient", criteria.sym_chi_leading(ch)),
    ]


def _mult_list(text: str) -> list[Multiplicity]:
    try:
        return [as_multiplicity(t) for t in text.split(",") if t.strip()]
    except OrbichernError as exc:
        raise UsageError(str(exc)) from None


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") if len(n) > 1 else "-" + n for n in missing)
        raise UsageError(f"missing required option(s) for this family: {flags}")
    return [getattr(args, n) for n in names]


# -- configuration objects -> reports ---------------------------------------------


def _surface_of(cfg) -> tuple[SmoothOrbifoldSurface, AmbientSurfaceData | None]:
    if isinstance(cfg, AmbientSurfaceData):
        return chern.surface_from_ambient(cfg), cfg
    return cfg, None


def _chern_for(cfg, approx: bool) -> Report:
    notes: list[str] = []
    items: list[tuple[str, Fraction]] = []
    if isinstance(cfg, (SmoothOrbifoldSurface, AmbientSurfaceData)):
        surf, _ = _surface_of(cfg)
        items += [("log_c1^2", surf.log_c1_sq), ("log_c2", surf.log_c2)]
        ch = chern.stack_chern(surf)
        if surf.has_infinite_components:
            notes.append(criteria.INFINITE_NOTE)
    elif isinstance(cfg, criteria.PlanePairConfig):
        surf = cfg.to_surface()
        items += [("log_c1^2", surf.log_c1_sq), ("log_c2", surf.log_c2)]
        ch = chern.stack_chern(surf)
    elif isinstance(cfg, chern.PlaneNodeCuspCurve):
        ch = chern.plane_nc_curve_chern(cfg)
        if cfg.multiplicity != 5 and cfg.cusps:
            notes.append("cusp orbifold order for m != 5 extrapolates the m = 5 closed formula")
    elif isinstance(cfg, chern.NodalSurface):
        ch = chern.nodal_surface_chern(cfg)
    else:
        raise UsageError(f"no Chern numbers for configuration of type {type(cfg).__name__}")
    return _quantity_report(items + _chern_items(ch), approx, notes)


def _criteria_for(cfg) -> list[CriterionVerdict]:
    if isinstance(cfg, (SmoothOrbifoldSurface, AmbientSurfaceData)):
        surf, amb = _surface_of(cfg)
        out = [criteria.theorem_a_lhs(surf)]
        if amb is not None:
            out.append(criteria.remark_form_lhs(amb))
        return out
    if isinstance(cfg, criteria.PlanePairConfig):
        return [criteria.plane_pair_lhs(cfg), criteria.theorem_a_lhs(cfg.to_surface())]
    if isinstance(cfg, chern.PlaneNodeCuspCurve):
        out = [criteria.bogomolov_stack(chern.plane_nc_curve_chern(cfg))]
        if cfg.multiplicity == 5:
            out.insert(0, criteria.nodes_cusps_lhs(cfg.degree, cfg.nodes, cfg.cusps))
        return out
    if isinstance(cfg, chern.NodalSurface):
        return [criteria.nodal_surface_lhs(cfg.degree, cfg.nodes)]
    if isinstance(cfg, criteria.NevanlinnaConfig):
        return [criteria.nevanlinna_excess(cfg)]
    raise UsageError(f"no criteria for configuration of type {type(cfg).__name__}")


def _family_config(args):
    fam = args.family
    if fam == "plane-pair":
        d1, d2, m1, m2 = _require(args, "d1", "d2", "m1", "m2")
        return criteria.PlanePairConfig(d1, d2, as_multiplicity(m1), as_multiplicity(m2))
    if fam == "nodes-cusps":
        d, n, c = _require(args, "d", "n", "c")
        return chern.PlaneNodeCuspCurve(d, n, c, args.m if args.m is not None else 5)
    if fam == "nodal-surface":
        d, l = _require(args, "d", "l")
        return chern.NodalSurface(d, l)
    if fam == "nevanlinna":
        (mults,) = _require(args, "multiplicities")
        return criteria.NevanlinnaConfig(tuple(_mult_list(mults)))
    raise UsageError(f"unknown family {fam!r}")


def _load(args):
    if args.config is not None and args.family is not None:
        raise UsageError("give either --config or --family, not both")
    if args.config is not None:
        return load_config(args.config)
    if args.family is None:
        raise UsageError("one of --config or --family is required")
    return _family_config(args)


# -- commands ---------------------------------------------------------------------


def cmd_chern(args) -> Report:
    return _chern_for(_load(args), args.approx)


def cmd_criteria(args) -> Report:
    if args.family == "jet":
        if args.config is not None:
            raise UsageError("the jet family takes -k, -d and -l, not --config")
        k, d, l = _require(args, "jet_order", "d", "l")
        return _verdict_report([criteria.jet_h0_coefficient(k, d, l)], args.approx)
    return _verdict_report(_criteria_for(_load(args)), args.approx)


SCAN_FIXED = ("d1", "d2", "m1", "m2", "d", "n", "c", "l", "k")


def cmd_scan(args) -> Report:
    family = scan.ScanFamily(args.family)
    swept = scan.SweptRange.parse(args.sweep)
    fixed: dict[str, Any] = {}
    for name in SCAN_FIXED:
        val = getattr(args, "jet_order" if name == "k" else name)
        if val is None or name == swept.name:
            continue
        if name in scan.MULTIPLICITY_PARAMS:
            val = as_multiplicity(val)
        if name in scan.PARAMETERS[family]:
            fixed[name] = val
    if swept.name == "m":
        fixed.pop("m1", None)
        fixed.pop("m2", None)
    criterion = TheoremTag(args.criterion) if args.criterion else None
    req = scan.ScanRequest(family, swept, fixed, criterion)
    rows = scan.grid_scan(req, workers=args.workers)
    first = next((r.value for r in rows if r.holds), None)

    cols = ["param", "lhs", "holds"] + (["approx"] if args.approx else [])
    rep = Report(cols)
    rep.lines.append(
        f"# family={family.value} criterion={req.criterion.value} "
        + " ".join(f"{k}={v}" for k, v in fixed.items())
    )
    for r in rows:
        row = {"param": str(r.value), "lhs": render_rational(r.lhs), "holds": r.holds}
        line = f"{swept.name}={r.value} lhs={render_rational(r.lhs)} holds={_bool(r.holds)}"
        if args.approx:
            row["approx"] = render_approx(r.lhs)
            line += f" approx={render_approx(r.lhs)}"
        rep.rows.append(row)
        if args.table:
            rep.lines.append(line)
    if first is None:
        rep.lines.append(f"minimal {swept.name} = none in {swept.start}..{swept.stop}")
    else:
        rep.lines.append(f"minimal {swept.name} = {first}")
    return rep


def cmd_oracle(args) -> Report:
    k = args.jet_order
    form, degree = oracle.leading_coefficient(k, max_order=args.max_order)
    scale = math.lcm(form.alpha.denominator, form.beta.denominator)
    a, b = form.alpha * scale, form.beta * scale
    primitive = f"({render_rational(a)}*c1^2 {'-' if b < 0 else '+'} {render_rational(abs(b))}*c2)/{scale}"
    rep = Report(["quantity", "value"])
    rep.rows.append({"quantity": "jet_order", "value": str(k)})
    rep.rows.append({"quantity": "leading_coefficient", "value": str(form)})
    rep.rows.append({"quantity": "degree", "value": str(degree)})
    rep.rows.append({"quantity": "primitive_form", "value": primitive})
    rep.lines.append(f"{form}, degree {degree}")
    rep.lines.append(f"  = {primitive} * N^{degree}")
    for N in args.chi or []:
        val = oracle.chi_jet_exact(k, N)
        rep.rows.append({"quantity": f"chi(E_{k},{N})", "value": str(val)})
        rep.lines.append(f"chi(E_{{{k},{N}}}) = {val}")
    return rep


def cmd_generators(args) -> Report:
    mults = _mult_list(args.multiplicities)
    count, monomials = oracle.count_orbifold_jet_generators(args.jet_order, args.N, mults)
    rep = Report(["exponents", "ceil_powers"])
    rep.lines.append(f"count = {count}")
    for mono in monomials:
        exps = ";".join(",".join(str(a) for a in row) for row in mono.exponents)
        ceil = ",".join(str(c) for c in mono.ceil_powers)
        rep.rows.append({"exponents": exps, "ceil_powers": ceil})
        if args.list:
            rep.lines.append(f"alpha=[{exps}] x-powers=[{ceil}]")
    return rep


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--output", "-o", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--approx", action="store_true", help="add 6-digit decimal approximations")

    params = _Parser(add_help=False)
    params.add_argument("-d", type=int)
    params.add_argument("-n", type=int)
    params.add_argument("-c", type=int)
    params.add_argument("-l", type=int)
    params.add_argument("-m", type=int, help="multiplicity for nodes-cusps (default 5)")
    params.add_argument("--d1", type=int)
    params.add_argument("--d2", type=int)
    params.add_argument("--m1")
    params.add_argument("--m2")

    p = _Parser(prog="orbichern", description="Orbifold Chern numbers and hyperbolicity criteria.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("chern", parents=[common, params], help="stack Chern numbers")
    sp.add_argument("--config", metavar="FILE")
    sp.add_argument("--family", choices=("plane-pair", "nodes-cusps", "nodal-surface"))
    sp.set_defaults(func=cmd_chern)

    sp = sub.add_parser("criteria", parents=[common, params], help="evaluate positivity criteria")
    sp.add_argument("--config", metavar="FILE")
    sp.add_argument("--family", choices=("plane-pair", "nodes-cusps", "nodal-surface", "nevanlinna", "jet"))
    sp.add_argument("--multiplicities", help="comma separated, e.g. 2,3,7 or inf,inf,inf")
    sp.add_argument("-k", "--jet-order", type=int, dest="jet_order")
    sp.set_defaults(func=cmd_criteria)

    sp = sub.add_parser("scan", parents=[common, params], help="sweep one parameter")
    sp.add_argument("--family", required=True, choices=[f.value for f in scan.ScanFamily])
    sp.add_argument("--sweep", required=True, metavar="NAME=LO..HI[,inf]")
    sp.add_argument("--criterion", choices=[t.value for t in TheoremTag])
    sp.add_argument("-k", "--jet-order", type=int, dest="jet_order")
    sp.add_argument("--table", action="store_true", help="print every row in text mode")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("oracle", parents=[common], help="Riemann-Roch leading coefficients of jet bundles")
    sp.add_argument("-k", "--jet-order", type=int, required=True, dest="jet_order")
    sp.add_argument("--max-order", type=int, default=oracle.DEFAULT_MAX_ORDER)
    sp.add_argument("--chi", type=int, nargs="*", metavar="N", help="also print chi(E_{k,N}) exactly")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("generators", parents=[common], help="local generators of orbifold jet sheaves")
    sp.add_argument("-k", "--jet-order", type=int, required=True, dest="jet_order")
    sp.add_argument("-N", type=int, required=True)
    sp.add_argument("--multiplicities", required=True, help="one per variable, e.g. 3,3")
    sp.add_argument("--list", action="store_true", help="list every generator in text mode")
    sp.set_defaults(func=cmd_generators)
    return p


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        report = args.func(args)
        text = report.render(args.format)
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            stdout.write(text)
        return EXIT_OK
    except oracle.OracleInconsistency as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    except AssertionError as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    except ParseError as exc:
        print(f"config error: {exc}", file=stderr)
        return EXIT_INPUT
    except (OrbichernError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
