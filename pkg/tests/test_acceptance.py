"""Exit criteria for the package. Arithmetic is exact, so every check is equality."""

import io
import json
import time
from argparse import Namespace

import test_ceresa
import test_character
import test_groebner
import test_poly

from quartic_torsion.ceresa import DiagonalAutomorphism, Verdict, certify
from quartic_torsion.character import CharacterMultiset
from quartic_torsion.cli import certificate_from_json, certificate_to_json, cmd_search, cmd_verify
from quartic_torsion.groebner import smoothness_check
from quartic_torsion.poly import Polynomial, parse_polynomial
from quartic_torsion.search import SearchConfig, run_search, triple_orbit

P = parse_polynomial
PAPER = P("X^4 + X*Z^3 + Y^3*Z")


def verify(curve, order, exps, as_json=False):
    out, err = io.StringIO(), io.StringIO()
    args = Namespace(curve=curve, order=order, exponents=exps, json=as_json)
    code = cmd_verify(args, out, err)
    return code, out.getvalue(), err.getvalue()


def test_criterion_1_paper_replay(criterion):
    with criterion("1 paper replay: X^4+XZ^3+Y^3Z, n=9, (0,2,3) is torsion"):
        start = time.perf_counter()
        cert = certify(PAPER, DiagonalAutomorphism(9, (0, 2, 3)))
        code, out, _ = verify("X^4+X*Z^3+Y^3*Z", 9, (0, 2, 3), as_json=True)
        elapsed = time.perf_counter() - start

        assert cert.smooth
        assert cert.lambda_exp == 0
        on_curve = [p.coordinates for p in cert.fixed_locus.points]
        assert on_curve == ["(0:1:0)", "(0:0:1)"]
        assert cert.v_character == CharacterMultiset(9, [5, 7, 8])
        assert cert.h03_character == CharacterMultiset(9, [7])
        assert cert.wedge2_dual_character == CharacterMultiset(9, [3, 5, 6])
        assert len(cert.tangent_spectrum) == 10 and 0 not in cert.tangent_spectrum
        assert cert.verdict is Verdict.TORSION
        assert code == 0 and json.loads(out)["verdict"] == "torsion"
        assert elapsed < 1.0


def test_criterion_2_negative_control(criterion):
    with criterion("2 negative control: Fermat quartic, n=4, (0,1,0) is inconclusive"):
        cert = certify(P("X^4+Y^4+Z^4"), DiagonalAutomorphism(4, (0, 1, 0)))
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.h03_character == CharacterMultiset(4, [0])
        code, out, err = verify("X^4+Y^4+Z^4", 4, (0, 1, 0))
        assert code == 1
        assert "non-torsion" not in (out + err).lower()
        assert {v.value for v in Verdict} == {"torsion", "inconclusive"}


def test_criterion_3_smoothness_suite(criterion):
    with criterion("3 smoothness suite decided by the Groebner cone test, each < 1 s"):
        X, Y, Z = (Polynomial.variable(v) for v in "XYZ")
        cases = [
            (PAPER, True),
            (P("X^4+Y^4+Z^4"), True),
            (P("X^4+Y^4"), False),
            ((X**2 + Y**2 + Z**2) ** 2, False),
        ]
        linears = [X, X + Y, 2 * X - 3 * Z, X + Y + Z]
        cubics = [X**3 + Y**3 + Z**3, X * Y * Z + Y**3, X**3 - Y**2 * Z + 7 * Z**3, Y**3]
        cases += [(l * g, False) for l in linears for g in cubics]
        for f, expected in cases:
            start = time.perf_counter()
            assert smoothness_check(f) is expected, str(f)
            assert time.perf_counter() - start < 1.0


def test_criterion_4_rediscovery(criterion):
    with criterion("4 rediscovery: search 9..9 finds X^4+XZ^3+Y^3Z; full 1..12 run is fast"):
        out, err = io.StringIO(), io.StringIO()
        args = Namespace(order_min=9, order_max=9, coeffs=(0, 1), max_support=None,
                         dedup=False, json=True)
        assert cmd_search(args, out, err) == 0
        records = [json.loads(l) for l in out.getvalue().splitlines()]
        orbit = triple_orbit((0, 2, 3), 9)
        paper = [r for r in records[:-1] if r["curve"] == str(PAPER)]
        assert paper
        assert all(tuple(r["exponents"]) in orbit for r in paper)

        start = time.perf_counter()
        hits = run_search(SearchConfig(1, 12))
        assert time.perf_counter() - start < 180
        assert any(h.curve == PAPER for h in hits)


def test_criterion_5_property_suites(criterion):
    with criterion("5 property suites, >= 1000 randomized cases each"):
        suites = [
            test_poly.test_euler_identity,
            test_groebner.test_groebner_postconditions_and_permutation_invariance,
            test_ceresa.test_lift_invariance,
            test_ceresa.test_relabeling_invariance,
            test_ceresa.test_unit_scaling_invariance,
            test_character.test_dual_is_involution,
            test_character.test_trivial_character_is_tensor_identity,
            test_ceresa.test_order_two_always_inconclusive,
        ]
        for suite in suites:
            assert suite.hypothesis.inner_test is not None
            assert suite._hypothesis_internal_use_settings.max_examples >= 1000, suite.__name__
            suite()


def test_criterion_6_json_round_trip(criterion):
    with criterion("6 JSON round trip is byte-identical; verify and search agree"):
        for text, n, exps in [("X^4+X*Z^3+Y^3*Z", 9, (0, 2, 3)), ("X^4+Y^4+Z^4", 4, (0, 1, 0))]:
            _, encoded, _ = verify(text, n, exps, as_json=True)
            encoded = encoded.rstrip("\n")
            assert json.dumps(json.loads(encoded)) == encoded
            assert certificate_to_json(certificate_from_json(encoded)) == encoded

        out = io.StringIO()
        args = Namespace(order_min=9, order_max=12, coeffs=(0, 1), max_support=None,
                         dedup=True, json=True)
        cmd_search(args, out, io.StringIO())
        hits = out.getvalue().splitlines()[:-1]
        assert hits
        for line in hits:
            hit = json.loads(line)
            code, verified, _ = verify(hit["curve"], hit["order"], tuple(hit["exponents"]),
                                       as_json=True)
            assert code == 0
            assert verified.rstrip("\n") == line
