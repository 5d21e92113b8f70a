import itertools
import math
from fractions import Fraction

import pytest

from quartic_torsion.ceresa import DiagonalAutomorphism, Verdict, certify, semi_invariance_exponent
from quartic_torsion.errors import ConfigError
from quartic_torsion.poly import parse_polynomial
from quartic_torsion.search import (
    SearchConfig,
    SearchStats,
    canonical_exponent_triples,
    invariant_support,
    iter_search,
    run_search,
)

PAPER = parse_polynomial("X^4 + X*Z^3 + Y^3*Z")


def orbit_classes(n):
    """Independent orbit computation: union-find over the generators
    (adjacent transpositions, shift by one, multiplication by each unit)."""
    triples = list(itertools.product(range(n), repeat=3))
    parent = {t: t for t in triples}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    def union(a, b):
        parent[find(a)] = find(b)

    units = [u for u in range(1, n + 1) if math.gcd(u, n) == 1]
    for a, b, c in triples:
        union((a, b, c), (b, a, c))
        union((a, b, c), (a, c, b))
        union((a, b, c), ((a + 1) % n, (b + 1) % n, (c + 1) % n))
        for u in units:
            union((a, b, c), (u * a % n, u * b % n, u * c % n))
    classes = {}
    for t in triples:
        classes.setdefault(find(t), []).append(t)
    return [sorted(v) for v in classes.values()]


def related(hit_a, hit_b):
    """Brute force: is there (perm, shift, unit) carrying one hit onto the other?"""
    n = hit_a.sigma.order
    if n != hit_b.sigma.order:
        return False
    ea, eb = hit_a.sigma.exps, hit_b.sigma.exps
    for perm in itertools.permutations(range(3)):
        if hit_a.curve.relabel(perm) != hit_b.curve:
            continue
        moved = tuple(ea[p] for p in perm)
        for u in range(n):
            if math.gcd(u, n) != 1:
                continue
            for t in range(n):
                if tuple((u * x + t) % n for x in moved) == eb:
                    return True
    return False


def test_invariant_support_examples():
    assert [str(m) for m in invariant_support(DiagonalAutomorphism(9, (0, 2, 3)), 0)] == [
        "X^4", "Y^3*Z", "X*Z^3"]
    assert len(invariant_support(DiagonalAutomorphism(1, (0, 0, 0)), 0)) == 15
    fermat_support = {str(m) for m in invariant_support(DiagonalAutomorphism(4, (0, 1, 0)), 0)}
    assert fermat_support == {"X^4", "X^3*Z", "X^2*Z^2", "X*Z^3", "Z^4", "Y^4"}


def test_support_is_exactly_the_character_class():
    for n in range(1, 13):
        for exps in itertools.product(range(n), repeat=3):
            sigma = DiagonalAutomorphism(n, exps)
            covered = []
            for lam in range(n):
                support = invariant_support(sigma, lam)
                covered += support
                for m in support:
                    assert semi_invariance_exponent(parse_polynomial(str(m)), sigma) == lam
            assert len(covered) == len(set(covered)) == 15


def test_canonical_triples_small():
    assert canonical_exponent_triples(1) == ((0, 0, 0),)
    assert canonical_exponent_triples(2) == ((0, 0, 0), (0, 0, 1))


@pytest.mark.parametrize("n", range(1, 13))
def test_canonical_triples_match_orbit_oracle(n):
    classes = orbit_classes(n)
    reps = canonical_exponent_triples(n)
    assert sorted(reps) == sorted(cls[0] for cls in classes)
    assert all(rep[0] == 0 for rep in reps)


def test_paper_triple_has_a_representative():
    (cls,) = [c for c in orbit_classes(9) if (0, 2, 3) in c]
    assert cls[0] in canonical_exponent_triples(9)
    assert cls[0] == (0, 1, 3)


@pytest.mark.parametrize("kwargs", [
    dict(order_min=0, order_max=3),
    dict(order_min=5, order_max=4),
    dict(order_min=1, order_max=2, coefficient_alphabet=(0,)),
    dict(order_min=1, order_max=2, max_support=0),
])
def test_config_errors(kwargs):
    with pytest.raises(ConfigError):
        SearchConfig(**kwargs)


def test_paper_curve_rediscovered():
    hits = run_search(SearchConfig(9, 9))
    matches = [h for h in hits if h.curve == PAPER]
    assert (9, (0, 2, 3), 0) in [h.parameters for h in matches]
    (cls,) = [c for c in orbit_classes(9) if (0, 2, 3) in c]
    assert all(h.sigma.exps in cls for h in matches)
    assert all(h.certificate.verdict is Verdict.TORSION for h in hits)


def test_order_one_and_two_yield_nothing():
    stats = SearchStats()
    assert run_search(SearchConfig(1, 1), stats) == []
    assert stats.cells == 1 and stats.pruned_cells == 1
    assert run_search(SearchConfig(2, 2)) == []
    assert run_search(SearchConfig(2, 2, coefficient_alphabet=(0, 1, -1, 2))) == []


def test_hits_recertify_and_are_semi_invariant():
    for hit in run_search(SearchConfig(1, 12)):
        n, exps, lam = hit.parameters
        assert semi_invariance_exponent(hit.curve, hit.sigma) == lam
        assert certify(hit.curve, DiagonalAutomorphism(n, exps)).verdict is Verdict.TORSION
        assert list(hit.support) == hit.curve.monomials()


def test_dedup_leaves_no_related_pairs():
    hits = run_search(SearchConfig(1, 12, dedup=True))
    assert hits
    for a, b in itertools.combinations(hits, 2):
        assert not related(a, b)


def test_dedup_loses_no_class():
    full = run_search(SearchConfig(1, 12))
    reduced = run_search(SearchConfig(1, 12, dedup=True))
    for hit in full:
        assert any(related(hit, rep) for rep in reduced)


def test_dedup_spot_check_small_orders_with_wider_alphabet():
    config = SearchConfig(1, 4, coefficient_alphabet=(0, 1, -1), dedup=True)
    hits = run_search(config)
    for a, b in itertools.combinations(hits, 2):
        assert not related(a, b)


def test_enlarging_alphabet_keeps_hits():
    small = run_search(SearchConfig(9, 9, max_support=4))
    large = run_search(SearchConfig(9, 9, coefficient_alphabet=(0, 1, -1), max_support=4))
    large_keys = {(h.parameters, h.curve) for h in large}
    assert {(h.parameters, h.curve) for h in small} <= large_keys
    assert len(large) > len(small)


def test_deterministic_order():
    config = SearchConfig(9, 12)
    hits = run_search(config)
    keys = []
    for h in hits:
        n, exps, lam = h.parameters
        cell = invariant_support(DiagonalAutomorphism(n, exps), lam)
        keys.append((n, exps, lam, tuple(h.curve.coefficient(m) for m in cell)))
    assert keys == sorted(keys)
    assert [h.certificate for h in run_search(config)] == [h.certificate for h in hits]


def test_max_support_limits_terms():
    hits = run_search(SearchConfig(12, 12, max_support=3))
    assert hits and all(len(h.curve) <= 3 for h in hits)


def test_stats_are_consistent():
    stats = SearchStats()
    hits = list(iter_search(SearchConfig(9, 9, dedup=True), stats))
    assert stats.hits == len(hits) == 1
    assert stats.smooth >= stats.hits
    assert stats.candidates >= stats.smooth
    assert stats.cells >= stats.pruned_cells


def test_rational_alphabet():
    hits = run_search(SearchConfig(9, 9, coefficient_alphabet=(0, Fraction(1, 2)), max_support=3))
    assert any(h.curve == PAPER * Fraction(1, 2) for h in hits)
