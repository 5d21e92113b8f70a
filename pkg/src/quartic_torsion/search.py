"""Enumerate diagonal automorphisms and invariant quartics, certify each candidate.

A grid cell is (n, exponent triple, lam).  Its candidates are all coefficient
assignments from the alphabet on the degree-4 monomials of character lam.
The tangent spectrum depends only on the cell, so cells whose spectrum
contains the trivial character cannot produce a hit and are skipped whole.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .ceresa import (
    DiagonalAutomorphism,
    TorsionCertificate,
    certify,
    tangent_spectrum,
    v_character,
)
from .character import contains_trivial
from .errors import ConfigError
from .groebner import smoothness_check
from .poly import Monomial, Polynomial, monomials_of_degree

QUARTIC_MONOMIALS = tuple(monomials_of_degree(4))
PERMUTATIONS = tuple(itertools.permutations(range(3)))


@dataclass(frozen=True)
class SearchConfig:
    order_min: int
    order_max: int
    coefficient_alphabet: tuple = (Fraction(0), Fraction(1))
    max_support: Optional[int] = None
    # off by default: reducing triples by coordinate permutations replaces a
    # curve by a relabelled copy, which is not what a user asked to see
    dedup: bool = False

    def __post_init__(self):
        if not (1 <= self.order_min <= self.order_max):
            raise ConfigError(
                f"need 1 <= order_min <= order_max, got {self.order_min}..{self.order_max}"
            )
        alphabet = tuple(sorted({Fraction(c) for c in self.coefficient_alphabet}))
        if not any(alphabet):
            raise ConfigError("coefficient alphabet needs a nonzero value")
        if self.max_support is not None and self.max_support < 1:
            raise ConfigError("max_support must be at least 1")
        object.__setattr__(self, "coefficient_alphabet", alphabet)


@dataclass(frozen=True)
class SearchHit:
    certificate: TorsionCertificate
    parameters: tuple  # (n, exps, lam)
    support: tuple

    @property
    def curve(self) -> Polynomial:
        return self.certificate.curve

    @property
    def sigma(self) -> DiagonalAutomorphism:
        return self.certificate.sigma


@dataclass
class SearchStats:
    cells: int = 0
    pruned_cells: int = 0
    candidates: int = 0
    smooth: int = 0
    hits: int = 0

    def summary(self) -> str:
        return (f"cells={self.cells} pruned_cells={self.pruned_cells} "
                f"candidates={self.candidates} smooth={self.smooth} hits={self.hits}")


def invariant_support(sigma: DiagonalAutomorphism, lambda_exp: int) -> list[Monomial]:
    """Degree-4 monomials of character lam, in canonical order."""
    lam = lambda_exp % sigma.order
    return [m for m in QUARTIC_MONOMIALS if sigma.character(m) == lam]


def units(n: int) -> list[int]:
    return [u for u in range(n) if math.gcd(u, n) == 1]


def triple_orbit(exps, n: int) -> set:
    """Orbit under coordinate permutations, shifts and unit scalings."""
    out = set()
    for p in PERMUTATIONS:
        e = (exps[p[0]], exps[p[1]], exps[p[2]])
        for u in units(n):
            for t in range(n):
                out.add(tuple((u * x + t) % n for x in e))
    return out


@lru_cache(maxsize=None)
def canonical_exponent_triples(n: int) -> tuple:
    """One representative (lexicographically least element) per triple orbit."""
    if n < 1:
        raise ConfigError(f"order must be positive, got {n}")
    seen = set()
    reps = []
    for e in itertools.product(range(n), repeat=3):
        if e in seen:
            continue
        orbit = triple_orbit(e, n)
        seen |= orbit
        reps.append(min(orbit))
    return tuple(sorted(reps))


def _stabilising_permutations(exps, n: int) -> list:
    orbit_maps = []
    for p in PERMUTATIONS:
        e = (exps[p[0]], exps[p[1]], exps[p[2]])
        if any(tuple((u * x + t) % n for x in e) == tuple(exps)
               for u in units(n) for t in range(n)):
            orbit_maps.append(p)
    return orbit_maps


def _triples(n: int, dedup: bool):
    source = canonical_exponent_triples(n) if dedup else itertools.product(range(n), repeat=3)
    for e in source:
        if n > 1 and e[0] == e[1] == e[2]:
            continue
        yield tuple(e)


def iter_search(config: SearchConfig, stats: Optional[SearchStats] = None) -> Iterator[SearchHit]:
    """Yield hits in order (n, triple, lam, coefficient vector)."""
    if stats is None:
        stats = SearchStats()
    smooth_cache: dict[Polynomial, bool] = {}

    def smooth(f):
        r = smooth_cache.get(f)
        if r is None:
            r = smooth_cache[f] = smoothness_check(f)
        return r

    alphabet = config.coefficient_alphabet
    for n in range(config.order_min, config.order_max + 1):
        for exps in _triples(n, config.dedup):
            sigma = DiagonalAutomorphism(n, exps)
            stabiliser = _stabilising_permutations(exps, n) if config.dedup else None
            seen_classes = set()
            lambdas = sorted({sigma.character(m) for m in QUARTIC_MONOMIALS})
            for lam in lambdas:
                support = invariant_support(sigma, lam)
                stats.cells += 1
                if contains_trivial(tangent_spectrum(v_character(sigma, lam)).full):
                    stats.pruned_cells += 1
                    continue
                for coeffs in itertools.product(alphabet, repeat=len(support)):
                    nonzero = sum(1 for c in coeffs if c)
                    if nonzero == 0:
                        continue
                    if config.max_support is not None and nonzero > config.max_support:
                        continue
                    f = Polynomial._wrap({m: c for m, c in zip(support, coeffs) if c})
                    stats.candidates += 1
                    cert = certify(f, sigma, smoothness=smooth)
                    stats.smooth += cert.smooth
                    if not cert.is_torsion:
                        continue
                    if stabiliser is not None:
                        key = min(str(f.relabel(p)) for p in stabiliser)
                        if key in seen_classes:
                            continue
                        seen_classes.add(key)
                    stats.hits += 1
                    yield SearchHit(cert, (n, exps, lam), tuple(f.monomials()))


def run_search(config: SearchConfig, stats: Optional[SearchStats] = None) -> list[SearchHit]:
    return list(iter_search(config, stats))
