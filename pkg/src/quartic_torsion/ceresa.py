"""Torsion certificates for the Ceresa class of a smooth plane quartic.

Given a quartic F and a diagonal automorphism sigma = diag(w^a, w^b, w^c) of
order n with F o sigma = w^lam * F, the class of the Ceresa cycle based at a
sigma-fixed point p of C is torsion as soon as sigma has no eigenvalue 1 on
the tangent space of the intermediate Jacobian,

    T_0 = wedge^3 V*  (+)  wedge^2 V* (x) V,      V = H^0(C, K_C).

Everything reduces to exponent arithmetic mod n.  The character of sigma on V
comes from the basis L * (X dZ - Z dX) / F_Y, L a linear form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, NamedTuple, Union

from . import character as ch
from .character import CharacterMultiset
from .errors import NotSemiInvariant, WrongDimension, ZeroPolynomial
from .groebner import smoothness_check, validate_quartic
from .poly import VARIABLES, Polynomial, evaluate_at_coordinate_point, parse_polynomial


@dataclass(frozen=True)
class DiagonalAutomorphism:
    """sigma(X, Y, Z) = (w^a X, w^b Y, w^c Z) for a primitive n-th root of unity w."""

    order: int
    exps: tuple

    def __init__(self, order: int, exps):
        if int(order) < 1:
            raise ValueError(f"order must be positive, got {order}")
        exps = tuple(int(e) for e in exps)
        if len(exps) != 3:
            raise WrongDimension(f"expected three exponents, got {len(exps)}")
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "exps", tuple(e % order for e in exps))

    def character(self, mono) -> int:
        """Exponent of the eigenvalue of sigma on the monomial."""
        a, b, c = self.exps
        return (mono[0] * a + mono[1] * b + mono[2] * c) % self.order

    def is_projective_identity(self) -> bool:
        return len(set(self.exps)) == 1

    def shifted(self, t: int) -> DiagonalAutomorphism:
        return DiagonalAutomorphism(self.order, (e + t for e in self.exps))

    def scaled(self, u: int) -> DiagonalAutomorphism:
        return DiagonalAutomorphism(self.order, (u * e for e in self.exps))

    def relabel(self, perm) -> DiagonalAutomorphism:
        """Companion of Polynomial.relabel: new variable i is old variable perm[i]."""
        return DiagonalAutomorphism(self.order, (self.exps[p] for p in perm))

    def __str__(self) -> str:
        a, b, c = self.exps
        return f"order {self.order}, exponents ({a}, {b}, {c})"


def semi_invariance_exponent(f: Polynomial, sigma: DiagonalAutomorphism) -> int:
    """The residue lam with F o sigma = w^lam * F."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no character")
    first = None
    for m in f.monomials():
        c = sigma.character(m)
        if first is None:
            first = (m, c)
        elif c != first[1]:
            raise NotSemiInvariant(first, (m, c), sigma.order)
    return first[1]


_AXIS_POINTS = {"X": "(1:0:0)", "Y": "(0:1:0)", "Z": "(0:0:1)"}


@dataclass(frozen=True)
class CoordinatePoint:
    axis: str
    coefficient: Fraction  # pure-power coefficient of F, i.e. F at this point

    @property
    def on_curve(self) -> bool:
        return self.coefficient == 0

    @property
    def coordinates(self) -> str:
        return _AXIS_POINTS[self.axis]


@dataclass(frozen=True)
class FixedLine:
    """Coordinate line through two axes, fixed pointwise by sigma."""

    axes: str  # e.g. "XZ" is the line Y = 0
    meets_curve: bool

    @property
    def equation(self) -> str:
        (missing,) = set(VARIABLES) - set(self.axes)
        return f"{missing} = 0"


@dataclass(frozen=True)
class FixedLocus:
    """Fixed points of sigma in P^2 that we can certify on C.

    ``candidates`` holds the three coordinate points (always sigma-fixed) with
    their membership coefficient; ``points`` keeps those lying on C.
    """

    candidates: tuple
    lines: tuple = ()
    degenerate: bool = False

    @property
    def points(self) -> tuple:
        return tuple(p for p in self.candidates if p.on_curve)

    @property
    def pointwise_fixed_lines(self) -> tuple:
        return self.lines

    def has_fixed_point(self) -> bool:
        if self.degenerate:
            return False
        return bool(self.points) or any(line.meets_curve for line in self.lines)


def fixed_locus_on_curve(f: Polynomial, sigma: DiagonalAutomorphism) -> FixedLocus:
    semi_invariance_exponent(f, sigma)
    candidates = tuple(
        CoordinatePoint(v, evaluate_at_coordinate_point(f, v)) for v in VARIABLES
    )
    if sigma.is_projective_identity():
        return FixedLocus(candidates, (), degenerate=True)
    lines = []
    for i in range(3):
        for j in range(i + 1, 3):
            if sigma.exps[i] == sigma.exps[j]:
                # every line meets a plane curve; if F vanishes on it the line lies on C
                lines.append(FixedLine(VARIABLES[i] + VARIABLES[j], meets_curve=True))
    return FixedLocus(candidates, tuple(lines))


def v_character(sigma: DiagonalAutomorphism, lambda_exp: int) -> CharacterMultiset:
    """Character of sigma on H^0(K_C).

    L (X dZ - Z dX) / F_Y picks up chi(L) + (a + c) - (lam - b), so the three
    eigenvalue exponents are e_i + (a + b + c - lam).
    """
    shift = sum(sigma.exps) - lambda_exp
    return CharacterMultiset(sigma.order, (e + shift for e in sigma.exps))


class TangentSpectrum(NamedTuple):
    h03: CharacterMultiset
    h12: CharacterMultiset
    full: CharacterMultiset


def tangent_spectrum(v: CharacterMultiset) -> TangentSpectrum:
    if len(v) != 3:
        raise WrongDimension(f"genus 3 only: V must be 3-dimensional, got {len(v)}")
    h03 = ch.dual(ch.wedge3(v))
    h12 = ch.tensor(ch.dual(ch.wedge2(v)), v)
    return TangentSpectrum(h03, h12, ch.direct_sum(h03, h12))


class Verdict(str, Enum):
    TORSION = "torsion"
    INCONCLUSIVE = "inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TorsionCertificate:
    curve: Polynomial
    sigma: DiagonalAutomorphism
    smooth: bool
    lambda_exp: int
    fixed_locus: FixedLocus
    v_character: CharacterMultiset
    h03_character: CharacterMultiset
    h12_character: CharacterMultiset
    tangent_spectrum: CharacterMultiset
    verdict: Verdict
    reasons: tuple = field(default=())

    @property
    def is_torsion(self) -> bool:
        return self.verdict is Verdict.TORSION

    @property
    def witnesses(self) -> tuple:
        """Coordinate points of C fixed by sigma; any of them can serve as base point."""
        return self.fixed_locus.points

    @property
    def wedge2_dual_character(self) -> CharacterMultiset:
        return ch.dual(ch.wedge2(self.v_character))

    def recomputed_verdict(self) -> Verdict:
        ok = (self.smooth and self.fixed_locus.has_fixed_point()
              and not ch.contains_trivial(self.tangent_spectrum))
        return Verdict.TORSION if ok else Verdict.INCONCLUSIVE


def certify(
    f: Union[Polynomial, str],
    sigma: DiagonalAutomorphism,
    *,
    smoothness: Callable[[Polynomial], bool] = smoothness_check,
) -> TorsionCertificate:
    """Run the full criterion on (f, sigma).

    Raises a CurveValidationError subclass when f is not a nonzero quartic
    form semi-invariant under sigma.  A singular curve, a missing fixed point
    or a trivial tangent eigenvalue give an INCONCLUSIVE certificate; the
    criterion is only sufficient, so nothing is ever declared non-torsion.
    ``smoothness`` may be swapped for a memoised equivalent.
    """
    if isinstance(f, str):
        f = parse_polynomial(f)
    validate_quartic(f)
    smooth = smoothness(f)
    lam = semi_invariance_exponent(f, sigma)
    locus = fixed_locus_on_curve(f, sigma)
    v = v_character(sigma, lam)
    spec = tangent_spectrum(v)

    reasons = []
    if smooth:
        reasons.append("curve is a smooth plane quartic")
    else:
        reasons.append("curve is singular")
    if locus.degenerate:
        reasons.append("sigma acts as the identity on P^2")
    else:
        for p in locus.points:
            reasons.append(f"fixed point {p.coordinates} lies on C")
        for line in locus.lines:
            reasons.append(f"line {line.equation} is fixed pointwise and meets C")
        if not locus.has_fixed_point():
            reasons.append("no fixed point of sigma on C was found")
    if 0 in spec.h03:
        reasons.append("eigenvalue 1 occurs on H^{0,3}")
    if 0 in spec.h12:
        reasons.append("eigenvalue 1 occurs on H^{1,2}")
    if not ch.contains_trivial(spec.full):
        reasons.append("no tangent eigenvalue equals 1")

    torsion = smooth and locus.has_fixed_point() and not ch.contains_trivial(spec.full)
    return TorsionCertificate(
        curve=f,
        sigma=sigma,
        smooth=smooth,
        lambda_exp=lam,
        fixed_locus=locus,
        v_character=v,
        h03_character=spec.h03,
        h12_character=spec.h12,
        tangent_spectrum=spec.full,
        verdict=Verdict.TORSION if torsion else Verdict.INCONCLUSIVE,
        reasons=tuple(reasons),
    )
