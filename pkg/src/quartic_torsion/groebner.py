"""Buchberger's algorithm over Q in degrevlex (X > Y > Z) and the smoothness test.

Internally polynomials are plain dicts ``{(i, j, k): Fraction}``; the public
functions accept and return :class:`~quartic_torsion.poly.Polynomial`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NotHomogeneous, WrongDegree, ZeroPolynomial
from .poly import Monomial, Polynomial, grevlex_key

ORDER = "degrevlex"


def _key(m):
    return (m[0] + m[1] + m[2], -m[2], -m[1])


def _lead(p: dict):
    return max(p, key=_key)


def _divides(a, b) -> bool:
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def _monic(p: dict) -> dict:
    c = p[_lead(p)]
    if c == 1:
        return dict(p)
    return {m: v / c for m, v in p.items()}


def _sub_multiple(p: dict, coeff, shift, g: dict) -> None:
    """In place: p -= coeff * x^shift * g."""
    a, b, c = shift
    for m, v in g.items():
        t = (m[0] + a, m[1] + b, m[2] + c)
        s = p.get(t, 0) - coeff * v
        if s:
            p[t] = s
        else:
            p.pop(t, None)


def _reduce(f: dict, basis: Sequence[tuple]) -> dict:
    """Full reduction of f by monic ``basis`` given as (lead, poly) pairs."""
    p = dict(f)
    rem = {}
    while p:
        m = _lead(p)
        c = p[m]
        for lm, g in basis:
            if _divides(lm, m):
                _sub_multiple(p, c, (m[0] - lm[0], m[1] - lm[1], m[2] - lm[2]), g)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _s_poly(f: dict, g: dict) -> dict:
    lf, lg = _lead(f), _lead(g)
    l = (max(lf[0], lg[0]), max(lf[1], lg[1]), max(lf[2], lg[2]))
    out = {}
    _sub_multiple(out, -1 / f[lf], (l[0] - lf[0], l[1] - lf[1], l[2] - lf[2]), f)
    _sub_multiple(out, 1 / g[lg], (l[0] - lg[0], l[1] - lg[1], l[2] - lg[2]), g)
    return out


def _to_poly(p: dict) -> Polynomial:
    return Polynomial._wrap({Monomial(*m): c for m, c in p.items()})


def _from_poly(f: Polynomial) -> dict:
    return {tuple(m): c for m, c in f.terms.items()}


@dataclass(frozen=True)
class IdealBasis:
    """Generators of an ideal of Q[X, Y, Z]; zero generators are rejected."""

    generators: tuple

    def __init__(self, generators: Iterable[Polynomial]):
        gens = tuple(generators)
        if any(g.is_zero() for g in gens):
            raise ZeroPolynomial("ideal generators must be nonzero")
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced degrevlex Groebner basis, elements sorted by leading monomial (descending)."""

    elements: tuple

    @property
    def order(self) -> str:
        return ORDER

    def leading_monomials(self) -> list[Monomial]:
        return [leading_monomial(g) for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.elements) + "}"


def leading_monomial(f: Polynomial) -> Monomial:
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no leading monomial")
    return max(f.terms, key=grevlex_key)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("S-polynomial of the zero polynomial")
    return _to_poly(_s_poly(_from_poly(f), _from_poly(g)))


def normal_form(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Remainder of multivariate division of f by ``basis`` (in the given order)."""
    pairs = []
    for g in basis:
        if g.is_zero():
            raise ZeroPolynomial("cannot divide by the zero polynomial")
        d = _monic(_from_poly(g))
        pairs.append((_lead(d), d))
    return _to_poly(_reduce(_from_poly(f), pairs))


def _buchberger(gens: list[dict]) -> list[dict]:
    G = [_monic(g) for g in gens if g]
    leads = [_lead(g) for g in G]
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}

    def pair_key(ij):
        i, j = ij
        a, b = leads[i], leads[j]
        return (max(a[0], b[0]) + max(a[1], b[1]) + max(a[2], b[2]), i, j)

    while pairs:
        ij = min(pairs, key=pair_key)
        pairs.discard(ij)
        i, j = ij
        a, b = leads[i], leads[j]
        if not (a[0] and b[0] or a[1] and b[1] or a[2] and b[2]):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        r = _reduce(_s_poly(G[i], G[j]), list(zip(leads, G)))
        if r:
            r = _monic(r)
            G.append(r)
            leads.append(_lead(r))
            k = len(G) - 1
            pairs.update((t, k) for t in range(k))

    # minimise: drop elements whose lead is divisible by another kept lead
    keep = []
    for idx, lm in enumerate(leads):
        redundant = False
        for jdx, other in enumerate(leads):
            if jdx == idx or not _divides(other, lm):
                continue
            if other != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            keep.append(idx)
    minimal = [(leads[i], G[i]) for i in keep]

    reduced = []
    for n, (lm, g) in enumerate(minimal):
        others = [pair for t, pair in enumerate(minimal) if t != n]
        tail = dict(g)
        del tail[lm]
        r = _reduce(tail, others)
        r[lm] = Fraction(1)
        reduced.append(r)
    reduced.sort(key=lambda p: _key(_lead(p)), reverse=True)
    return reduced


def buchberger(ideal: Union[IdealBasis, Iterable[Polynomial]]) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal, degrevlex, deterministic.

    Pairs are processed by the normal strategy (smallest lcm degree first,
    ties broken by pair index); pairs with coprime leading monomials are
    skipped.
    """
    if not isinstance(ideal, IdealBasis):
        ideal = IdealBasis(ideal)
    out = _buchberger([_from_poly(g) for g in ideal.generators])
    return GroebnerBasis(tuple(_to_poly(p) for p in out))


def quotient_is_finite_dimensional(gb: GroebnerBasis) -> bool:
    """Zero-dimensionality: every variable has a pure power among the leading monomials."""
    found = [False, False, False]
    for g in gb.elements:
        lm = leading_monomial(g)
        nonzero = [i for i in range(3) if lm[i]]
        if len(nonzero) == 1:
            found[nonzero[0]] = True
        elif not nonzero:
            return True  # unit ideal
    return all(found)


def is_groebner_basis(elements: Sequence[Polynomial]) -> bool:
    """Every S-polynomial reduces to zero modulo ``elements``."""
    dicts = [_monic(_from_poly(g)) for g in elements]
    pairs = [(_lead(d), d) for d in dicts]
    for j in range(len(dicts)):
        for i in range(j):
            if _reduce(_s_poly(dicts[i], dicts[j]), pairs):
                return False
    return True


def validate_quartic(f: Polynomial) -> None:
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial does not define a curve")
    if not f.is_homogeneous():
        raise NotHomogeneous(f"{f} is not homogeneous")
    if f.degree() != 4:
        raise WrongDegree(f.degree())


def singular_ideal_basis(f: Polynomial) -> GroebnerBasis:
    """Reduced Groebner basis of (f_X, f_Y, f_Z)."""
    partials = [f.derivative(v) for v in range(3)]
    return buchberger([p for p in partials if p])


def smoothness_check(f: Polynomial) -> bool:
    """True iff the plane quartic f = 0 is smooth.

    The partials are homogeneous, so their common zero set in affine 3-space is
    a cone; it is just the origin exactly when the quotient by (f_X, f_Y, f_Z)
    is finite dimensional.  By Euler's identity f itself lies in that ideal.
    """
    validate_quartic(f)
    return quotient_is_finite_dimensional(singular_ideal_basis(f))
