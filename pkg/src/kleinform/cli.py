"""Command-line front end.

Exit codes: 0 success (all selected checks pass), 1 verification failure,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .curve import CurveError, CurveSpec, order_at_infinity, weight_of_c, weight_of_u
from .exactring import Polynomial, X, Y
from .klein import ConstructionOptions, build_g, second_kind_basis
from .verify import CHECK_NAMES, Status, run_all

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2


class InputError(Exception):
    pass


def load_curve(path: str) -> CurveSpec:
    try:
        text = Path(path).read_text() if path != "-" else sys.stdin.read()
    except OSError as exc:
        raise InputError(f"cannot read curve file: {exc}") from exc
    try:
        return CurveSpec.from_json(text)
    except CurveError as exc:
        raise InputError(str(exc)) from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_info(spec: CurveSpec, args) -> tuple[str, int]:
    a, b = spec.a, spec.b
    J = spec.basis_indices
    homog = spec.check_homogeneity()
    homog_s = "not applicable" if homog is None else ("pass" if homog else "fail")
    cw = [(i, j, weight_of_c(a, b, i, j)) for (i, j) in sorted(spec.support)]
    if args.format == "json":
        return _dump({
            "a": a,
            "b": b,
            "genus": spec.genus,
            "J": [
                {"i": i, "j": j, "order": order_at_infinity(a, b, i, j), "weightU": weight_of_u(a, b, i, j)}
                for (i, j) in J
            ],
            "coefficientWeights": [{"i": i, "j": j, "weight": wt} for i, j, wt in cw],
            "homogeneity": homog_s,
        }), EXIT_OK
    lines = [f"a = {a}", f"b = {b}", f"genus = {spec.genus}", "J(a,b):"]
    for (i, j) in J:
        lines.append(f"  ({i},{j})  order {order_at_infinity(a, b, i, j)}  weight(u) {weight_of_u(a, b, i, j)}")
    lines.append("coefficient weights:")
    for i, j, wt in cw:
        lines.append(f"  c_{{{i},{j}}}  {wt}")
    lines.append(f"homogeneity: {homog_s}")
    return "\n".join(lines), EXIT_OK


def cmd_basis(spec: CurveSpec, args) -> tuple[str, int]:
    a, b = spec.a, spec.b
    entries = {
        f"du:{i},{j}": (Polynomial.monomial(1, {X: i, Y: j}), order_at_infinity(a, b, i, j))
        for (i, j) in spec.basis_indices
    }
    if args.format == "json":
        return _dump({
            "denominator": "F_y",
            "basis": {k: p.to_json_obj() for k, (p, _) in entries.items()},
            "orders": {k: o for k, (_, o) in entries.items()},
        }), EXIT_OK
    lines = ["denominator: F_y"]
    lines += [f"{k} = {p.to_text()}  (order {o})" for k, (p, o) in entries.items()]
    return "\n".join(lines), EXIT_OK


def cmd_second_kind(spec: CurveSpec, args) -> tuple[str, int]:
    basis = second_kind_basis(spec, _options(args))
    if args.format == "json":
        return _dump({
            "denominator": basis.denominator,
            "basis": {f"r:{i},{j}": p.to_json_obj() for (i, j), p in basis.entries.items()},
        }), EXIT_OK
    lines = [f"denominator: {basis.denominator}"]
    lines += [f"r:{i},{j} = {p.to_text()}" for (i, j), p in basis.entries.items()]
    return "\n".join(lines), EXIT_OK


def cmd_two_form(spec: CurveSpec, args) -> tuple[str, int]:
    form = build_g(spec, _options(args))
    if args.format == "json":
        return _dump({"numerator": form.numerator.to_json_obj(), "denominator": form.denominator}), EXIT_OK
    return f"denominator: {form.denominator}\nG = {form.numerator.to_text()}", EXIT_OK


def cmd_verify(spec: CurveSpec, args) -> tuple[str, int]:
    checks = None
    if args.checks != "all":
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = set(checks) - set(CHECK_NAMES)
        if unknown:
            raise InputError(f"unknown checks: {', '.join(sorted(unknown))}")
    reports = run_all(spec, _options(args), checks=checks, seed=args.seed)
    ok = all(r.status is not Status.FAIL for r in reports)
    if args.format == "json":
        out = "\n".join(json.dumps(r.to_json_obj(timings=args.timings)) for r in reports)
    else:
        lines = []
        for r in reports:
            line = f"{r.status.value.upper():<13} {r.check} [{r.mode.value}]"
            if args.timings:
                line += f" {r.elapsed_ms} ms"
            lines.append(line)
            for note in r.notes:
                lines.append(f"    note: {note}")
            if r.witness is not None:
                lines.append(f"    witness: {r.witness.to_text()}")
        lines.append("all checks passed" if ok else "verification FAILED")
        out = "\n".join(lines)
    return out, EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "info": cmd_info,
    "basis": cmd_basis,
    "second-kind": cmd_second_kind,
    "two-form": cmd_two_form,
    "verify": cmd_verify,
}


def _options(args) -> ConstructionOptions:
    return ConstructionOptions(region=args.region, modbar=args.modbar)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--curve", required=True, help="curve JSON file ('-' for stdin)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--region", choices=("proof", "printed"), default="proof",
                        help="summation region of the third r-family")
    common.add_argument("--modbar", choices=("beta", "literal"), default="beta",
                        help="value of mod-bar on exact divisibility")

    parser = argparse.ArgumentParser(
        prog="kleinform",
        description="Second-kind differentials and Klein's fundamental 2-form for C_ab curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="genus, basis orders and weights")
    sub.add_parser("basis", parents=[common], help="holomorphic differentials x^i y^j / F_y dx")
    sub.add_parser("second-kind", parents=[common], help="numerators r_{i,j} over F_w")
    sub.add_parser("two-form", parents=[common], help="numerator G of the 2-form")
    v = sub.add_parser("verify", parents=[common], help="run the identity checks")
    v.add_argument("--checks", default="all",
                   help=f"comma-separated subset of: {', '.join(CHECK_NAMES)}")
    v.add_argument("--seed", type=int, default=0, help="seed for sampled identity tuples")
    v.add_argument("--timings", action="store_true", help="report elapsed time per check")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = load_curve(args.curve)
        out, code = COMMANDS[args.command](spec, args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
