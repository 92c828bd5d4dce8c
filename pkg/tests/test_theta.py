import cmath
from fractions import Fraction

import pytest

from theta_forms.theta import (BetaMatrix, GramMatrix, WhittakerPoint, e8_gram,
                               eisenstein_check, enumerate_vectors,
                               enumerate_with_norms, fourier_assemble,
                               naive_rep_numbers, rep_numbers, sigma3,
                               whittaker)


def test_gram_validation():
    with pytest.raises(ValueError):
        GramMatrix([[1, 2], [3, 4]])       # not symmetric
    with pytest.raises(ValueError):
        GramMatrix([[1, 2], [2, 1]])       # not positive definite
    with pytest.raises(ValueError):
        GramMatrix([[1, 0], [0, 1], [0, 0]])


def test_enumerate_rank_one():
    L = GramMatrix([[2]])
    assert enumerate_vectors(L, 1) == [(-1,), (0,), (1,)]


def test_enumerate_rank_two():
    L = GramMatrix([[2, 0], [0, 2]])
    assert len(enumerate_vectors(L, 1)) == 5


def test_enumeration_symmetric_under_negation():
    L = GramMatrix([[2, 1], [1, 4]])
    vs = set(enumerate_vectors(L, 3))
    assert all(tuple(-t for t in v) in vs for v in vs)


def test_norms_exact():
    L = GramMatrix([[2, 1], [1, 2]])
    for v, h in enumerate_with_norms(L, 4):
        assert h == L.half_norm(v)


def test_rep_numbers_examples():
    L = GramMatrix([[2]])
    assert rep_numbers(L, 1) == {0: 1, 1: 2}


def test_rep_numbers_match_brute_force():
    cases = [([[2]], 4), ([[2, 1], [1, 2]], 4),
             ([[2, 0, 0], [0, 4, 1], [0, 1, 2]], 4),
             ([[2, 1, 0, 0], [1, 2, 0, 0], [0, 0, 4, 1], [0, 0, 1, 6]], 4),
             ([[Fraction(3, 2), Fraction(1, 2)], [Fraction(1, 2), Fraction(5, 2)]], 4)]
    for entries, cap in cases:
        L = GramMatrix(entries)
        assert rep_numbers(L, cap) == naive_rep_numbers(L, cap)


def test_e8_properties():
    L = e8_gram()
    assert L.determinant() == 1
    assert all(L.entries[i][i] == 2 for i in range(8))


def test_e8_roots():
    assert len(enumerate_vectors(e8_gram(), 1)) == 241  # zero plus 240 roots


def test_e8_rep_numbers():
    counts = rep_numbers(e8_gram(), 3)
    assert counts == {0: 1, 1: 240, 2: 2160, 3: 6720}


def test_eisenstein_check():
    report = eisenstein_check(3)
    assert report.passed
    assert report.rows[0] == (1, 240, 240)
    with pytest.raises(ValueError):
        eisenstein_check(21)


def test_eisenstein_check_flags_non_e8():
    assert not eisenstein_check(2, GramMatrix([[2]])).passed


def test_sigma3():
    assert [sigma3(n) for n in range(1, 7)] == [1, 9, 28, 73, 126, 252]


def test_whittaker_beta_zero():
    g = WhittakerPoint.of([[2.0]], [[0.0]])
    assert whittaker(BetaMatrix.scalar(0), g, 3) == 2.0 ** 1.5


def test_whittaker_literal_formula():
    g = WhittakerPoint.standard(1)
    w = whittaker(BetaMatrix.scalar(1), g, 2)
    assert abs(w - cmath.exp(1j)) < 1e-15


def test_whittaker_classical_convention():
    g = WhittakerPoint.standard(1)
    w = whittaker(BetaMatrix.scalar(1), g, 2, convention="classical")
    assert abs(w - cmath.exp(2j * cmath.pi * 1j)) < 1e-15
    with pytest.raises(ValueError):
        whittaker(BetaMatrix.scalar(1), g, 2, convention="bogus")


def test_whittaker_scaling_homogeneity():
    r = 2
    g1 = WhittakerPoint.of([[1.0, 0.0], [0.0, 1.0]], [[0.0, 0.0], [0.0, 0.0]])
    t = 3.0
    g2 = WhittakerPoint.of([[t, 0.0], [0.0, t]], [[0.0, 0.0], [0.0, 0.0]])
    beta0 = BetaMatrix.from_real([[0, 0], [0, 0]])
    pq = 4
    ratio = whittaker(beta0, g2, pq) / whittaker(beta0, g1, pq)
    assert abs(ratio - t ** (r * pq / 2)) < 1e-12


def test_whittaker_b_independence_at_beta_zero():
    g1 = WhittakerPoint.of([[1.0]], [[0.0]])
    g2 = WhittakerPoint.of([[1.0]], [[7.5]])
    beta0 = BetaMatrix.scalar(0)
    assert whittaker(beta0, g1, 2) == whittaker(beta0, g2, 2)


def test_fourier_assemble_counts():
    L = GramMatrix([[2]])
    g = WhittakerPoint.standard(1)
    out = fourier_assemble(L, {}, g, 2, weight_dim=1, default=Fraction(1))
    w1 = whittaker(BetaMatrix.scalar(1), g, 1)
    assert abs(out[1] - 2 * w1) < 1e-14


def test_fourier_assemble_zero_weights():
    L = GramMatrix([[2]])
    g = WhittakerPoint.standard(1)
    out = fourier_assemble(L, {}, g, 2, weight_dim=1)
    assert all(v == 0 for v in out.values())


def test_fourier_assemble_linear_in_weights():
    L = GramMatrix([[2]])
    g = WhittakerPoint.standard(1)
    base = fourier_assemble(L, {}, g, 3, weight_dim=1, default=Fraction(1))
    tripled = fourier_assemble(L, {}, g, 3, weight_dim=1, default=Fraction(3))
    for n in base:
        assert abs(tripled[n] - 3 * base[n]) < 1e-12


def test_fourier_assemble_dict_weights():
    L = GramMatrix([[2]])
    g = WhittakerPoint.standard(1)
    weights = {(1,): Fraction(5), (-1,): Fraction(5)}
    out = fourier_assemble(L, weights, g, 1, weight_dim=1)
    w1 = whittaker(BetaMatrix.scalar(1), g, 1)
    assert abs(out[1] - 10 * w1) < 1e-14
    assert out[0] == 0


def test_beta_matrix():
    B = BetaMatrix.from_real([[1, 1], [1, 1]])
    assert B.rank() == 1
    assert B.is_positive_semidefinite()
    assert not BetaMatrix.from_real([[1, 2], [2, 1]]).is_positive_semidefinite()
    with pytest.raises(ValueError):
        BetaMatrix(((
            (Fraction(1), Fraction(0)), (Fraction(1), Fraction(1))),
            ((Fraction(1), Fraction(1)), (Fraction(1), Fraction(0)))))
