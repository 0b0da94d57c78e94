"""Command-line front end.

Exit codes: 0 for true/consistent, 1 for false/refuted, 2 for usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from reesalg import algfile
from reesalg.closure import ClosureOptions, diff_close
from reesalg.coeff import (
    F1,
    F1PRIME,
    coefficient_algebra,
    integral_member_1d,
    lambda_invariant,
    render_value,
)
from reesalg.parse import ParseError, parse_poly
from reesalg.rees import piece_basis
from reesalg.sing import in_sing, sing_points
from reesalg.transforms import Certificate, CertificateError, equal_closure_probe, main_theorem_check

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _emit(report: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(report, indent=2) + "\n")
        return
    for key, value in report.items():
        if isinstance(value, list):
            out.write(f"{key}:\n")
            for item in value:
                out.write(f"  - {item}\n")
        elif isinstance(value, bool):
            out.write(f"{key}: {_bool(value)}\n")
        else:
            out.write(f"{key}: {value}\n")


def _gens_json(G) -> list:
    return [{"weight": wg.n, "poly": wg.g.render()} for wg in G.gens]


def _pieces(G, bound: int) -> list:
    return [
        {"N": N, "basis": [b.render() for b in piece_basis(G, N).basis]}
        for N in range(1, bound + 1)
    ]


def _algebra_text(G, pieces=None, comments=()) -> str:
    text = "".join(f"# {c}\n" for c in comments) + algfile.dumps(G)
    for piece in pieces or ():
        text += f"# piece N={piece['N']}: {'; '.join(piece['basis']) or '0'}\n"
    return text


def _closure_options(args, af) -> ClosureOptions:
    simplify = not args.no_simplify
    if args.variant == "absolute":
        return ClosureOptions.absolute(simplify=simplify, prune=args.prune)
    if args.variant == "relative":
        h = args.h if args.h is not None else (af.split.h if af.split else None)
        if h is None:
            raise UsageError("relative closure needs --h or a split line")
        return ClosureOptions.relative(h, simplify=simplify, prune=args.prune)
    if args.variant == "log":
        names = args.log_vars.split(",") if args.log_vars else list(af.ring.variables)
        return ClosureOptions.logarithmic(names, simplify=simplify, prune=args.prune)
    return ClosureOptions.order_free(simplify=simplify, prune=args.prune)


def cmd_close(args, out) -> int:
    af = algfile.load(args.file)
    opts = _closure_options(args, af)
    C = diff_close(af.algebra, opts)
    pieces = _pieces(C, args.bound) if args.bound else []
    if args.json:
        report = {
            "command": "close",
            "variant": opts.variant,
            "ring": algfile.ring_header(C.ring),
            "generators": _gens_json(C),
        }
        if args.bound:
            report["pieces"] = pieces
        _emit(report, True, out)
    else:
        out.write(_algebra_text(C, pieces, [f"closure variant={opts.variant}"]))
    return EXIT_TRUE


def _parse_point(text: str, ring):
    try:
        coords = [Fraction(c.strip()) for c in text.split(",")]
    except ValueError:
        raise UsageError(f"bad point {text!r}") from None
    if len(coords) != ring.ngens:
        raise UsageError(f"point needs {ring.ngens} coordinates")
    return tuple(ring.field(c) for c in coords)


def _point_str(pt) -> str:
    return "(" + ",".join(render_value(c) for c in pt) + ")"


def cmd_sing(args, out) -> int:
    af = algfile.load(args.file)
    G = af.algebra
    if args.grid:
        if G.ring.characteristic == 0:
            raise UsageError("--grid needs a positive characteristic")
        pts = sing_points(G)
        _emit({"command": "sing", "mode": "grid", "count": len(pts), "points": [_point_str(p) for p in pts]}, args.json, out)
        return EXIT_TRUE
    pt = _parse_point(args.point, G.ring)
    verdict = in_sing(G, pt)
    _emit({"command": "sing", "mode": "point", "point": _point_str(pt), "in_sing": verdict}, args.json, out)
    return EXIT_TRUE if verdict else EXIT_FALSE


def cmd_coeff(args, out) -> int:
    af = algfile.load(args.file)
    if af.split is None:
        raise UsageError("coeff needs a 'split h=<k>' line in the file")
    recipe = F1PRIME if args.recipe == "f1p" else F1
    ca = coefficient_algebra(af.algebra, af.split, recipe)
    A = ca.algebra
    lam = render_value(lambda_invariant(A)) if A.ring.ngens == 1 else None
    if args.json:
        report = {
            "command": "coeff",
            "recipe": recipe,
            "split": af.split.h,
            "ring": algfile.ring_header(A.ring),
            "generators": _gens_json(A),
        }
        if lam is not None:
            report["lambda"] = lam
        _emit(report, True, out)
    else:
        comments = [f"coefficient algebra recipe={recipe} split h={af.split.h}"]
        if lam is not None:
            comments.append(f"lambda={lam}")
        out.write(_algebra_text(A, comments=comments))
    return EXIT_TRUE


def _one_variable(af):
    if af.ring.ngens != 1:
        raise UsageError("this command needs a one-variable algebra")
    return af.algebra


def cmd_lambda(args, out) -> int:
    G = _one_variable(algfile.load(args.file))
    _emit({"command": "lambda", "lambda": render_value(lambda_invariant(G))}, args.json, out)
    return EXIT_TRUE


def cmd_member(args, out) -> int:
    G = _one_variable(algfile.load(args.file))
    try:
        elem = parse_poly(args.elem, G.ring)
    except ParseError as exc:
        raise UsageError(f"--elem: {exc}") from None
    if not elem.is_monomial():
        raise UsageError("--elem must be a monomial t^n")
    if args.weight < 1:
        raise UsageError("--weight must be positive")
    n = elem.degree()
    lam = lambda_invariant(G)
    verdict = integral_member_1d(n, args.weight, G)
    _emit(
        {
            "command": "member",
            "element": f"{elem.render()}*W^{args.weight}",
            "lambda": render_value(lam),
            "ratio": render_value(Fraction(n, args.weight)),
            "integral": verdict,
        },
        args.json,
        out,
    )
    return EXIT_TRUE if verdict else EXIT_FALSE


def _kv_line(d: dict) -> str:
    parts = []
    for key, value in d.items():
        if isinstance(value, bool):
            value = _bool(value)
        elif isinstance(value, list):
            value = "[" + ",".join(value) + "]"
        parts.append(f"{key}={value}")
    return " ".join(parts)


def _verdict_fields(verdict, as_json: bool) -> dict:
    probes = [r.as_dict() for r in verdict.records]
    rep = {
        "verdict": verdict.verdict,
        "note": "refutation is a proof" if verdict.refuted else "consistent (not a proof)",
        "trials_run": len(verdict.records),
        "probes": probes if as_json else [_kv_line(d) for d in probes],
    }
    if verdict.refuted:
        w = verdict.witness.as_dict()
        rep["witness"] = w if as_json else _kv_line(w)
    return rep


def cmd_equal_closure(args, out) -> int:
    A = algfile.load(args.file_a).algebra
    B = algfile.load(args.file_b).algebra
    if A.ring != B.ring:
        raise UsageError("the two files declare different rings")
    verdict = equal_closure_probe(A, B, args.trials, args.seed)
    report = {"command": "equal-closure", "seed": args.seed}
    report.update(_verdict_fields(verdict, args.json))
    _emit(report, args.json, out)
    return EXIT_FALSE if verdict.refuted else EXIT_TRUE


def cmd_main_check(args, out) -> int:
    fa = algfile.load(args.file_a)
    fb = algfile.load(args.file_b)
    if fa.ring != fb.ring:
        raise UsageError("the two files declare different rings")
    cert = Certificate.parse(args.cert)
    split = fa.split or fb.split
    if split is not None and fa.ring.ngens - split.h != 1:
        split = None
    rep = main_theorem_check(fa.algebra, fb.algebra, cert, args.trials, args.seed, args.bound, split)
    J = args.json
    report = {
        "command": "main-check",
        "certificate": rep.certificate,
        "seed": args.seed,
        "verdict": rep.verdict,
        "closure1": _gens_json(rep.closure1) if J else [_kv_line(g) for g in _gens_json(rep.closure1)],
        "closure2": _gens_json(rep.closure2) if J else [_kv_line(g) for g in _gens_json(rep.closure2)],
    }
    probe = _verdict_fields(rep.probe, J)
    report["probe_verdict"] = probe.pop("verdict")
    report["probe_note"] = probe.pop("note")
    report.update(probe)
    if rep.inclusion_ok is not None:
        report["inclusion_bound"] = rep.inclusion_bound
        report["closure_inclusion"] = rep.inclusion_ok
    if rep.coeff_lambdas:
        report["coefficient_lambdas"] = [
            {"of": label, "recipe": recipe, "lambda1": render_value(l1), "lambda2": render_value(l2)}
            if J
            else f"of={label} recipe={recipe} lambda1={render_value(l1)} lambda2={render_value(l2)}"
            for label, recipe, l1, l2 in rep.coeff_lambdas
        ]
    _emit(report, J, out)
    return EXIT_TRUE if rep.consistent else EXIT_FALSE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reesalg", description="Rees algebras, Diff-closures and integral closure probes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        return p

    p = common(sub.add_parser("close", help="Diff-closure of an algebra"))
    p.add_argument("file")
    p.add_argument("--variant", choices=["absolute", "relative", "log", "orderfree"], default="absolute")
    p.add_argument("--h", type=int, help="leading variables for the relative variant")
    p.add_argument("--log-vars", help="comma-separated variables for the log variant (default: all)")
    p.add_argument("--bound", type=int, default=0, help="also print reduced bases of pieces 1..N")
    p.add_argument("--prune", action="store_true", help="drop generators already in the algebra")
    p.add_argument("--no-simplify", action="store_true", help="keep constant-multiple duplicates")
    p.set_defaults(func=cmd_close)

    p = common(sub.add_parser("sing", help="singular locus at a point or over the GF(p) grid"))
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--point")
    g.add_argument("--grid", action="store_true")
    p.set_defaults(func=cmd_sing)

    p = common(sub.add_parser("coeff", help="coefficient algebra along the file's split"))
    p.add_argument("file")
    p.add_argument("--recipe", choices=["f1", "f1p"], default="f1p")
    p.set_defaults(func=cmd_coeff)

    p = common(sub.add_parser("lambda", help="lambda invariant of a one-variable algebra"))
    p.add_argument("file")
    p.set_defaults(func=cmd_lambda)

    p = common(sub.add_parser("member", help="integrality of t^n W^m over a one-variable algebra"))
    p.add_argument("file")
    p.add_argument("--elem", required=True)
    p.add_argument("--weight", type=int, required=True)
    p.set_defaults(func=cmd_member)

    for name, func in (("equal-closure", cmd_equal_closure), ("main-check", cmd_main_check)):
        p = common(sub.add_parser(name))
        p.add_argument("file_a")
        p.add_argument("file_b")
        p.add_argument("--trials", type=int, default=20)
        p.add_argument("--seed", type=int, default=0)
        if name == "main-check":
            p.add_argument("--cert", required=True, help="sat | veronese:M | witness")
            p.add_argument("--bound", type=int, default=0)
        p.set_defaults(func=func)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, algfile.AlgebraFileError, CertificateError, ParseError, ValueError, OSError) as exc:
        sys.stderr.write(f"reesalg {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
