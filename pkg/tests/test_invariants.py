"""Invariant ring bases: orbit sums, characters, and generation probes.

Character dimensions are validated against the classical product
formula over positive roots, computed here directly from the root data
as an independent oracle.  Decompositions are validated by round-trip.
"""

import random
from fractions import Fraction

import pytest

from repring.invariants import (character_dimension, decompose_into_orbit_sums,
                                dominance_leq, dominant_weights_in_box,
                                finiteness_probe, fundamental_character_probe,
                                invariants_basis_probe, orbit_sum,
                                weyl_character)
from repring.laurent import LaurentPoly, augmentation, weyl_act
from repring.rootdata import (all_roots, is_dominant, positive_roots,
                              simple_reflections, standard_datum, torus_datum,
                              two_rho, vector_orbit, weyl_group)


def dimension_formula(d, lam):
    """Weyl's product formula, evaluated with doubled weights so all
    pairings stay integral: prod <2(lam+rho), a^> / <2 rho, a^>."""
    rho2 = two_rho(d)
    top = [2 * x + y for x, y in zip(lam, rho2)]
    dim = Fraction(1)
    for _, av in positive_roots(d):
        dim *= Fraction(d.pairing(top, av), d.pairing(rho2, av))
    return dim


def test_orbit_sum_frozen_examples():
    d = standard_datum("A", 1)
    m2 = orbit_sum(d, (2,))
    assert m2.poly == LaurentPoly(1, {(2,): 1, (-2,): 1})
    assert m2.certified_invariant
    m0 = orbit_sum(d, (0,))
    assert m0.poly == LaurentPoly.one(1)
    with pytest.raises(ValueError):
        orbit_sum(d, (-1,))


def test_orbit_sum_matches_manual_symmetrization():
    rng = random.Random(5050)
    for label, rank in [("A", 2), ("C", 2), ("G", 2)]:
        d = standard_datum(label, rank)
        w = weyl_group(d)
        for _ in range(8):
            lam = tuple(rng.randint(0, 3) for _ in range(rank))
            if not is_dominant(d, lam):
                continue
            got = orbit_sum(d, lam).poly
            expected = LaurentPoly(rank, {mu: 1 for mu in vector_orbit(d, lam)})
            assert got == expected
            assert len(got.terms) * 1 == len(set(vector_orbit(d, lam)))


def test_sl2_characters_frozen():
    d = standard_datum("A", 1)
    for m in range(6):
        chi = weyl_character(d, (m,)).poly
        expected = LaurentPoly(1, {(m - 2 * k,): 1 for k in range(m + 1)})
        assert chi == expected
        assert character_dimension(d, (m,)) == m + 1


def test_sl3_adjoint_character_structure():
    d = standard_datum("A", 2)
    chi = weyl_character(d, (1, 1)).poly
    expected_terms = {tuple(a): Fraction(1) for a, _ in all_roots(d)}
    expected_terms[(0, 0)] = Fraction(2)
    assert chi == LaurentPoly(2, expected_terms)
    assert character_dimension(d, (1, 1)) == 8


def test_character_dimensions_against_product_formula():
    cases = [("A", 1), ("A", 2), ("B", 2), ("C", 2), ("G", 2)]
    for label, rank in cases:
        d = standard_datum(label, rank)
        for lam in dominant_weights_in_box(d, 2):
            dim = character_dimension(d, lam)
            assert dim == dimension_formula(d, lam)


def test_g2_fundamental_dimensions():
    d = standard_datum("G", 2)
    dims = sorted([int(character_dimension(d, (1, 0))),
                   int(character_dimension(d, (0, 1)))])
    assert dims == [7, 14]


def test_characters_are_invariant():
    d = standard_datum("C", 2)
    for lam in [(1, 0), (0, 1), (1, 1), (2, 1)]:
        chi = weyl_character(d, lam)
        assert chi.certified_invariant
        for s in simple_reflections(d):
            assert weyl_act([list(r) for r in s], chi.poly) == chi.poly


def test_character_dimension_is_augmentation():
    d = standard_datum("A", 2)
    for lam in [(1, 0), (2, 0), (1, 1)]:
        chi = weyl_character(d, lam)
        assert augmentation(chi.poly) == character_dimension(d, lam)


def test_dominant_weights_in_box():
    d1 = standard_datum("A", 1)
    assert dominant_weights_in_box(d1, 3) == [(0,), (1,), (2,), (3,)]
    d2 = standard_datum("A", 2)
    got = dominant_weights_in_box(d2, 1)
    assert got == [(0, 0), (0, 1), (1, 0), (1, 1)]
    for lam in got:
        assert is_dominant(d2, lam)


def test_decompose_round_trip():
    rng = random.Random(246810)
    for label, rank in [("A", 1), ("A", 2), ("C", 2)]:
        d = standard_datum(label, rank)
        weights = dominant_weights_in_box(d, 2)
        for _ in range(10):
            coeffs = {lam: Fraction(rng.randint(-4, 4)) for lam in weights
                      if rng.random() < 0.5}
            f = LaurentPoly.zero(rank)
            for lam, c in coeffs.items():
                if c:
                    f = f + orbit_sum(d, lam).poly * c
            dec = decompose_into_orbit_sums(d, f)
            assert dec == {lam: c for lam, c in coeffs.items() if c}


def test_decompose_adjoint_character():
    d = standard_datum("A", 2)
    chi = weyl_character(d, (1, 1)).poly
    dec = decompose_into_orbit_sums(d, chi)
    assert dec == {(1, 1): Fraction(1), (0, 0): Fraction(2)}


def test_decompose_rejects_non_invariant():
    d = standard_datum("A", 1)
    with pytest.raises(ValueError):
        decompose_into_orbit_sums(d, LaurentPoly.monomial([1]))


def test_invariants_basis_probe():
    d = standard_datum("A", 1)
    assert invariants_basis_probe(d, 2) == [(0,), (1,), (2,)]
    d2 = standard_datum("A", 2)
    assert invariants_basis_probe(d2, 1) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_fundamental_character_probe_sl2():
    d = standard_datum("A", 1)
    report = fundamental_character_probe(d, 3)
    assert report.all_passed
    assert report.independent and report.spanning
    assert report.weights == ((0,), (1,), (2,), (3,))


def test_fundamental_character_probe_transition_is_unitriangular():
    for label, rank, bound in [("A", 2, 2), ("C", 2, 2)]:
        d = standard_datum(label, rank, "simply_connected")
        report = fundamental_character_probe(d, bound)
        assert report.all_passed
        cols = {lam: j for j, lam in enumerate(report.column_weights)}
        for i, k in enumerate(report.weights):
            row = report.transition[i]
            assert row[cols[k]] == 1
            for lam, j in cols.items():
                if row[j] != 0:
                    assert dominance_leq(d, lam, k)
                    if lam != k:
                        assert dominance_leq(d, lam, k) and not dominance_leq(d, k, lam)


def test_fundamental_character_probe_rejects_adjoint():
    with pytest.raises(ValueError):
        fundamental_character_probe(standard_datum("A", 1, "adjoint"), 2)


def test_dominance_order():
    d = standard_datum("A", 1)
    assert dominance_leq(d, (1,), (3,))
    assert not dominance_leq(d, (3,), (1,))
    assert dominance_leq(d, (1,), (2,))
    assert dominance_leq(d, (0,), (2,))
    d2 = standard_datum("A", 2)
    assert dominance_leq(d2, (0, 0), (1, 1))
    assert not dominance_leq(d2, (1, 1), (0, 0))
    assert dominance_leq(d2, (1, 1), (1, 1))
    assert not dominance_leq(d2, (0, 0), (1, -1))
    assert not dominance_leq(d2, (1, -1), (0, 0))


def test_finiteness_probe_torus_over_invariants():
    d = standard_datum("A", 1)
    gens = [LaurentPoly.one(1), LaurentPoly.monomial([1])]
    assert finiteness_probe(d, gens, 3)
    assert not finiteness_probe(d, [LaurentPoly.one(1)], 2)


def test_finiteness_probe_rank_two():
    torus = torus_datum(2)
    assert finiteness_probe(torus, [LaurentPoly.one(2)], 2)
    d = standard_datum("A", 2)
    gens = [LaurentPoly.one(2), LaurentPoly.monomial([1, 0]),
            LaurentPoly.monomial([0, 1]), LaurentPoly.monomial([1, 1])]
    assert not finiteness_probe(d, gens, 1)
