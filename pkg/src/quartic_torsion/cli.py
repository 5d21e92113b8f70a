"""Command line front end: ``verify`` one (curve, automorphism) pair or ``search``.

Exit codes for ``verify``: 0 torsion, 1 inconclusive, 2 invalid curve
(singular, not semi-invariant, wrong degree, ...), 3 usage or parse error.
``search`` exits 0 on a completed run and 3 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .ceresa import (
    CoordinatePoint,
    DiagonalAutomorphism,
    FixedLine,
    FixedLocus,
    TorsionCertificate,
    Verdict,
    certify,
)
from .character import CharacterMultiset
from .errors import ConfigError, CurveValidationError, PolynomialSyntaxError
from .poly import parse_polynomial
from .search import SearchConfig, SearchStats, iter_search

EXIT_TORSION = 0
EXIT_INCONCLUSIVE = 1
EXIT_INVALID = 2
EXIT_USAGE = 3


def certificate_to_dict(cert: TorsionCertificate) -> dict:
    """JSON-ready dict; key order is part of the interface."""
    return {
        "curve": str(cert.curve),
        "order": cert.sigma.order,
        "exponents": list(cert.sigma.exps),
        "lambda_exp": cert.lambda_exp,
        "smooth": cert.smooth,
        "fixed_points": [
            {"axis": p.axis, "on_curve": p.on_curve} for p in cert.fixed_locus.candidates
        ],
        "fixed_lines": [
            {"axis_pair": line.axes, "meets_curve": line.meets_curve}
            for line in cert.fixed_locus.lines
        ],
        "v_character": list(cert.v_character.exponents),
        "h03": list(cert.h03_character.exponents),
        "h12": list(cert.h12_character.exponents),
        "tangent_spectrum": list(cert.tangent_spectrum.exponents),
        "verdict": cert.verdict.value,
        "reasons": list(cert.reasons),
    }


def certificate_to_json(cert: TorsionCertificate) -> str:
    return json.dumps(certificate_to_dict(cert))


def certificate_from_dict(data: dict) -> TorsionCertificate:
    """Rebuild a certificate from its JSON form (no recomputation)."""
    curve = parse_polynomial(data["curve"])
    n = data["order"]
    sigma = DiagonalAutomorphism(n, data["exponents"])
    candidates = []
    for p in data["fixed_points"]:
        # the JSON keeps only membership; the coefficient is re-read from the curve
        coeff = curve.coefficient([4 if v == p["axis"] else 0 for v in "XYZ"])
        point = CoordinatePoint(p["axis"], coeff)
        if point.on_curve != p["on_curve"]:
            raise ValueError(f"fixed point {p['axis']} disagrees with the curve")
        candidates.append(point)
    lines = tuple(FixedLine(l["axis_pair"], l["meets_curve"]) for l in data["fixed_lines"])
    locus = FixedLocus(tuple(candidates), lines, degenerate=len(set(sigma.exps)) == 1)
    return TorsionCertificate(
        curve=curve,
        sigma=sigma,
        smooth=data["smooth"],
        lambda_exp=data["lambda_exp"],
        fixed_locus=locus,
        v_character=CharacterMultiset(n, data["v_character"]),
        h03_character=CharacterMultiset(n, data["h03"]),
        h12_character=CharacterMultiset(n, data["h12"]),
        tangent_spectrum=CharacterMultiset(n, data["tangent_spectrum"]),
        verdict=Verdict(data["verdict"]),
        reasons=tuple(data["reasons"]),
    )


def certificate_from_json(text: str) -> TorsionCertificate:
    return certificate_from_dict(json.loads(text))


def format_certificate(cert: TorsionCertificate) -> str:
    lines = [
        f"curve: {cert.curve}",
        f"automorphism: {cert.sigma}",
        f"lambda exponent: {cert.lambda_exp}",
        f"smooth: {'yes' if cert.smooth else 'no'}",
        "fixed points:",
    ]
    for p in cert.fixed_locus.candidates:
        where = "on C" if p.on_curve else f"not on C ({p.axis}^4 coefficient {p.coefficient})"
        lines.append(f"  {p.coordinates} {where}")
    if cert.fixed_locus.degenerate:
        lines.append("  (sigma is the identity on P^2)")
    lines.append("fixed lines:" + ("" if cert.fixed_locus.lines else " none"))
    for line in cert.fixed_locus.lines:
        meets = "meets C" if line.meets_curve else "does not meet C"
        lines.append(f"  {line.equation} (axes {line.axes}) {meets}")
    lines += [
        f"V character: {cert.v_character}",
        f"wedge2 V* character: {cert.wedge2_dual_character}",
        f"H03 character: {cert.h03_character}",
        f"H12 character: {cert.h12_character}",
        f"tangent spectrum: {cert.tangent_spectrum}",
        f"verdict: {cert.verdict.value}",
        "reasons:",
    ]
    lines += [f"  - {r}" for r in cert.reasons]
    return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_triple(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def _rationals(text: str) -> tuple:
    try:
        return tuple(Fraction(p.strip()) for p in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quartic-torsion", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="certify one curve and diagonal automorphism")
    v.add_argument("--curve", required=True, help='quartic form, e.g. "X^4+X*Z^3+Y^3*Z"')
    v.add_argument("--order", required=True, type=_positive)
    v.add_argument("--exponents", required=True, type=_int_triple, help="a,b,c")
    v.add_argument("--json", action="store_true")

    s = sub.add_parser("search", help="enumerate invariant quartics and certify them")
    s.add_argument("--order-min", required=True, type=int)
    s.add_argument("--order-max", required=True, type=int)
    s.add_argument("--coeffs", type=_rationals, default=(Fraction(0), Fraction(1)))
    s.add_argument("--max-support", type=int, default=None)
    dd = s.add_mutually_exclusive_group()
    dd.add_argument("--dedup", dest="dedup", action="store_true",
                    help="one exponent triple per symmetry orbit")
    dd.add_argument("--no-dedup", dest="dedup", action="store_false",
                    help="all exponent triples (default)")
    s.set_defaults(dedup=False)
    s.add_argument("--json", action="store_true")
    return parser


def cmd_verify(args, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        curve = parse_polynomial(args.curve)
    except PolynomialSyntaxError as exc:
        print(f"error: cannot parse curve: {exc}", file=err)
        return EXIT_USAGE
    sigma = DiagonalAutomorphism(args.order, args.exponents)
    try:
        cert = certify(curve, sigma)
    except CurveValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INVALID
    print(certificate_to_json(cert) if args.json else format_certificate(cert), file=out)
    if not cert.smooth:
        print("error: curve is singular", file=err)
        return EXIT_INVALID
    return EXIT_TORSION if cert.is_torsion else EXIT_INCONCLUSIVE


def cmd_search(args, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        config = SearchConfig(
            order_min=args.order_min,
            order_max=args.order_max,
            coefficient_alphabet=args.coeffs,
            max_support=args.max_support,
            dedup=args.dedup,
        )
    except ConfigError as exc:
        print(f"error: ConfigError: {exc}", file=err)
        return EXIT_USAGE
    stats = SearchStats()
    for hit in iter_search(config, stats):
        if args.json:
            print(certificate_to_json(hit.certificate), file=out, flush=True)
        else:
            n, exps, lam = hit.parameters
            print(f"hit n={n} exponents={','.join(map(str, exps))} lambda={lam}: {hit.curve}",
                  file=out, flush=True)
    if args.json:
        print(json.dumps({"summary": vars(stats)}), file=out)
    else:
        print(f"summary: {stats.summary()}", file=out)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_search(args)


if __name__ == "__main__":
    sys.exit(main())
