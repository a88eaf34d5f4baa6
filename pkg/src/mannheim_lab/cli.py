"""Command-line front end.

Exit codes: 0 on success with no failed verdict, 1 on any Fail verdict or
domain error, 2 on usage, curve-spec or expression parse errors.

Curve specs accepted by ``--curve/-c`` and ``--cstar``:

  paper-example-1 | paper-example-2        built-in reference curves
  csv:PATH                                 samples in t,x1,x2,x3 CSV form
  synth:kind=KIND,kappa=EXPR,tau=EXPR[,range=A:B][,step=H]
                                           curve synthesized from scalars

KIND is one of timelike, spacelike+, spacelike-.  Expressions use the
grammar documented in the README (no unary minus; write ``0-x``).

The environment variable MANNHEIM_LAB_FP_MODE=strict is honored as a
reserved switch for bit-stable regression runs; the pure-Python evaluation
paths used here are already free of fused-multiply-add variance, so it
currently changes nothing.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .builtins import BUILTIN_CURVE_NAMES, builtin_curve
from .curve import Curve, CurveSamples, curve_from_samples, load_samples_csv, reparametrize_unit, sample
from .errors import CsvFormatError, ExprSyntaxError, MannheimLabError
from .expr import parse_expr
from .frenet import CurveKind, FrenetFrame, frenet_apparatus, frenet_synthesize
from .indicatrix import indicatrix_of, verify_indicatrix_relations
from .lorentz import Vec3L
from .mannheim import (
    MannheimPair,
    offset_along_binormal,
    offset_along_normal,
    verify_distance,
    verify_frame_relations,
    verify_linear_relation,
    verify_ratio_nonconstant,
    verify_torsion_relation,
    verify_torsion_square,
)
from .reports import VerificationReport, Verdict

FP_MODE = os.environ.get("MANNHEIM_LAB_FP_MODE", "")

_KINDS = {
    "timelike": CurveKind.TIMELIKE,
    "spacelike+": CurveKind.SPACELIKE_EPS_PLUS,
    "spacelike-": CurveKind.SPACELIKE_EPS_MINUS,
}

_DEFAULT_FRAMES = {
    CurveKind.TIMELIKE: (Vec3L(1, 0, 0), Vec3L(0, 1, 0), Vec3L(0, 0, -1)),
    CurveKind.SPACELIKE_EPS_PLUS: (Vec3L(0, 1, 0), Vec3L(0, 0, 1), Vec3L(1, 0, 0)),
    CurveKind.SPACELIKE_EPS_MINUS: (Vec3L(0, 1, 0), Vec3L(1, 0, 0), Vec3L(0, 0, 1)),
}


class SpecError(ValueError):
    """Malformed curve spec on the command line."""


def _synthesize_from_parts(parts: dict[str, str]) -> Curve:
    try:
        kind = _KINDS[parts.pop("kind")]
    except KeyError as exc:
        raise SpecError(f"synth spec needs kind= one of {sorted(_KINDS)} ({exc})")
    try:
        kappa_expr = parse_expr(parts.pop("kappa"))
        tau_expr = parse_expr(parts.pop("tau"))
    except KeyError as exc:
        raise SpecError(f"synth spec is missing {exc}")
    rng = parts.pop("range", "0:1")
    try:
        a, b = (float(x) for x in rng.split(":"))
    except ValueError:
        raise SpecError(f"bad range {rng!r}; expected A:B")
    step = float(parts.pop("step", "1e-3"))
    if parts:
        raise SpecError(f"unknown synth keys: {sorted(parts)}")
    T0, N0, B0 = _DEFAULT_FRAMES[kind]
    frame0 = FrenetFrame(T0, N0, B0, kappa_expr.eval(a), tau_expr.eval(a), kind)
    return frenet_synthesize(
        kind, kappa_expr.eval, tau_expr.eval, frame0, Vec3L(0, 0, 0), (a, b), step
    )


def resolve_curve_spec(spec: str) -> Curve:
    """Turn a curve-spec string into a Curve."""
    if spec in BUILTIN_CURVE_NAMES:
        return builtin_curve(spec)
    head, _, rest = spec.partition(":")
    if head == "csv":
        if not rest:
            raise SpecError("csv spec needs a path: csv:PATH")
        return curve_from_samples(load_samples_csv(rest), label=rest)
    if head == "synth":
        parts: dict[str, str] = {}
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            if not eq:
                raise SpecError(f"bad synth item {item!r}; expected key=value")
            parts[key.strip()] = value.strip()
        return _synthesize_from_parts(parts)
    raise SpecError(
        f"unknown curve spec {spec!r}; expected one of {', '.join(BUILTIN_CURVE_NAMES)}, "
        "csv:PATH or synth:..."
    )


def _ensure_unit(c: Curve) -> Curve:
    if c.unit_speed:
        return c
    return reparametrize_unit(c)


def _write_samples(samples: CurveSamples, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            samples.to_csv(fh)
    else:
        samples.to_csv(sys.stdout)


def _emit_json(payload, out: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _frame_json(f: FrenetFrame, s: float) -> dict:
    return {
        "s": s,
        "kind": f.kind.value,
        "kappa": f.kappa,
        "tau": f.tau,
        "T": list(f.T.as_tuple()),
        "N": list(f.N.as_tuple()),
        "B": list(f.B.as_tuple()),
        "gram_residual": f.gram_residual(),
    }


def _run_pair_suite(pair: MannheimPair, grid_n: int, tol: float | None) -> list[VerificationReport]:
    kw = {} if tol is None else {"tol": tol}
    reports = [
        verify_distance(pair, grid_n, **({} if tol is None else {"tol": tol})),
        verify_torsion_relation(pair, grid_n, **kw),
        verify_linear_relation(pair, grid_n, **kw),
        *verify_frame_relations(pair, grid_n, **kw),
        *verify_torsion_square(pair, grid_n, **kw),
        verify_ratio_nonconstant(pair, grid_n),
        *verify_indicatrix_relations(pair, grid_n, **({} if tol is None else {"tol": tol})),
    ]
    return reports


def _report_lines(pair: MannheimPair, reports: list[VerificationReport]) -> None:
    print(f"pair type: {pair.pair_type.value} ({pair.pair_type.describe()})")
    print(f"lambda: {pair.lam:.17g}")
    for r in reports:
        print(
            f"{r.identity:28s} {r.verdict.value:8s} "
            f"max={r.max_residual:.3e} mean={r.mean_residual:.3e} tol={r.tolerance:.1e}"
        )


def _exit_code(reports: list[VerificationReport]) -> int:
    return 1 if any(r.verdict is Verdict.FAIL for r in reports) else 0


def _cmd_classify(args) -> int:
    from .curve import classify_curve

    c = resolve_curve_spec(args.curve)
    character = classify_curve(c, args.grid)
    _emit_json({"label": c.label, "causal_character": character.value}, args.out)
    return 0


def _cmd_frenet(args) -> int:
    c = _ensure_unit(resolve_curve_spec(args.curve))
    f = frenet_apparatus(c, args.at)
    _emit_json(_frame_json(f, args.at), args.out)
    return 0


def _cmd_offset(args) -> int:
    if (args.curve is None) == (args.cstar is None):
        raise SpecError("offset needs exactly one of --curve (normal) or --cstar (binormal)")
    if args.cstar is not None:
        base = _ensure_unit(resolve_curve_spec(args.cstar))
        off = offset_along_binormal(base, args.lam)
    else:
        base = _ensure_unit(resolve_curve_spec(args.curve))
        off = offset_along_normal(base, args.lam)
    _write_samples(sample(off, args.grid), args.out)
    return 0


def _cmd_synthesize(args) -> int:
    parts = {
        "kind": args.kind,
        "kappa": args.kappa,
        "tau": args.tau,
        "range": args.range,
        "step": repr(args.step),
    }
    c = _synthesize_from_parts(parts)
    _write_samples(sample(c, args.grid), args.out)
    return 0


def _cmd_pair_verify(args) -> int:
    c = resolve_curve_spec(args.c)
    cstar = resolve_curve_spec(args.cstar)
    pair = MannheimPair.from_shared_parameter(c, cstar, args.lam)
    reports = _run_pair_suite(pair, args.grid, args.tol)
    _report_lines(pair, reports)
    if args.out:
        _emit_json([r.to_json_dict() for r in reports], args.out)
    return _exit_code(reports)


def _cmd_indicatrix(args) -> int:
    c = _ensure_unit(resolve_curve_spec(args.curve))
    ind = indicatrix_of(c, args.which)
    _write_samples(ind.samples(args.grid), args.out)
    return 0


def _cmd_examples(args) -> int:
    if args.action != "run":
        raise SpecError(f"unknown examples action {args.action!r}; expected 'run'")
    name = f"paper-example-{args.number}"
    cstar = builtin_curve(name)
    pair = MannheimPair.from_binormal_offset(cstar, args.lam)
    reports = _run_pair_suite(pair, args.grid, None)
    _report_lines(pair, reports)
    if args.out:
        _emit_json([r.to_json_dict() for r in reports], args.out)
    return _exit_code(reports)


def _cmd_export_plot(args) -> int:
    c = resolve_curve_spec(args.curve)
    _write_samples(sample(c, args.grid), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mannheim-lab",
        description="Curve geometry and partner-curve identity audits in Minkowski 3-space.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_curve(p, flag=True):
        if flag:
            p.add_argument("--curve", "-c", required=True, help="curve spec")

    p = sub.add_parser("classify", help="causal character of a curve's tangent")
    add_curve(p)
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("frenet", help="frame, curvature and torsion at a parameter")
    add_curve(p)
    p.add_argument("--at", type=float, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_frenet)

    p = sub.add_parser("offset", help="offset curve along N (--curve) or B (--cstar)")
    p.add_argument("--curve", "-c", help="base curve; offsets along its normal")
    p.add_argument("--cstar", help="base curve; offsets along its binormal")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_offset)

    p = sub.add_parser("synthesize", help="curve from prescribed kappa(s), tau(s)")
    p.add_argument("--kind", required=True, choices=sorted(_KINDS))
    p.add_argument("--kappa", required=True, help="expression in s")
    p.add_argument("--tau", required=True, help="expression in s")
    p.add_argument("--range", default="0:1", help="A:B parameter range")
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_synthesize)

    p = sub.add_parser("pair-verify", help="full identity audit of a corresponded pair")
    p.add_argument("--c", required=True, help="curve spec for C")
    p.add_argument("--cstar", required=True, help="curve spec for C*")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--tol", type=float, default=None, help="override verifier tolerances")
    p.add_argument("--out", help="write the JSON report array here")
    p.set_defaults(func=_cmd_pair_verify)

    p = sub.add_parser("indicatrix", help="spherical image of a frame field")
    add_curve(p)
    p.add_argument("--which", required=True, choices=("T", "N", "B"))
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_indicatrix)

    p = sub.add_parser("examples", help="run the built-in reference pairs")
    p.add_argument("action", choices=("run",))
    p.add_argument("number", type=int, choices=(1, 2))
    p.add_argument("--lambda", dest="lam", type=float, default=20.0)
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--out", help="write the JSON report array here")
    p.set_defaults(func=_cmd_examples)

    p = sub.add_parser("export-plot", help="sample a curve to CSV for plotting")
    add_curve(p)
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_export_plot)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (SpecError, ExprSyntaxError, CsvFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MannheimLabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
