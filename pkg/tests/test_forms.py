from fractions import Fraction

import pytest

from theta_forms.exterior import Form, xi, xibar
from theta_forms.forms import (FactorizationError, GKCochain, SplitSpec,
                               build_km_explicit, build_km_nabla, build_mixed,
                               build_psi_cup, build_psi_orth, build_psi_q,
                               coefficient_at, cup_product, cup_sign,
                               euler_chern_form, evaluate_at_zero,
                               forms_proportional, gk_curvature,
                               gk_differential, k_invariance_residual,
                               restrict_form, strongly_primitive_monomial)
from theta_forms.models import ORTHOGONAL, Signature, fock_model
from theta_forms.poly import Polynomial, X, Xbar, Y
from theta_forms.scalars import Scalar

x = lambda i, j: Polynomial.variable(X(i, j))
xb = lambda i, j: Polynomial.variable(Xbar(i, j))


# -- psi constructions -------------------------------------------------------

def test_psi_q_smallest():
    c = build_psi_q(Signature(1, 1, 1, 0))
    assert c.form == Form({(xibar(1, 1),): x(1, 1)})


def test_psi_q_two_rows():
    c = build_psi_q(Signature(2, 1, 1, 0))
    assert c.form.coefficient([xibar(1, 1)]) == x(1, 1)
    assert c.form.coefficient([xibar(2, 1)]) == x(2, 1)


def test_psi_q_repeated_row():
    c = build_psi_q(Signature(1, 2, 1, 0))
    assert c.form.coefficient([xibar(1, 1), xibar(1, 2)]) == x(1, 1) ** 2


def test_psi_q_column_bound():
    with pytest.raises(ValueError):
        build_psi_q(Signature(1, 1, 1, 0), column=2)


def test_psi_cup_unit_and_vanishing():
    assert build_psi_cup(Signature(2, 1, 0, 0)).form == Form.unit()
    assert build_psi_cup(Signature(2, 1, 3, 0)).form.is_zero()
    assert build_psi_cup(Signature(2, 2, 0, 3)).form.is_zero()


def test_psi_cup_determinant_coefficient():
    c = build_psi_cup(Signature(2, 1, 2, 0))
    got = c.form.coefficient([xibar(1, 1), xibar(2, 1)])
    assert got == x(1, 1) * x(2, 2) - x(2, 1) * x(1, 2)


def test_psi_orth_matches_shape():
    c = build_psi_orth(Signature(2, 1, 1, 0, ORTHOGONAL))
    assert c.form.coefficient([xi(1, 1)]) == x(1, 1)
    assert c.form.coefficient([xi(2, 1)]) == x(2, 1)
    assert build_psi_orth(Signature(2, 1, 0, 0, ORTHOGONAL)).form == Form.unit()
    assert build_psi_orth(Signature(2, 1, 3, 0, ORTHOGONAL)).form.is_zero()


def test_psi_orth_family_check():
    with pytest.raises(ValueError):
        build_psi_orth(Signature(2, 1, 1, 0))
    with pytest.raises(ValueError):
        build_psi_cup(Signature(2, 1, 1, 0, ORTHOGONAL))


# -- Kudla-Millson forms ------------------------------------------------------

def test_km_nabla_smallest():
    c = build_km_nabla(Signature(1, 1, 1, 1))
    got = coefficient_at(c, [xibar(1, 1), xi(1, 1)])
    expect = x(1, 1) * xb(1, 1) - Polynomial.constant(Scalar.of(Fraction(1, 2), 0, -1))
    assert got == expect


def test_km_needs_r_equal_s():
    with pytest.raises(ValueError):
        build_km_nabla(Signature(1, 1, 1, 0))


def test_km_equals_explicit():
    for sig in (Signature(1, 1, 1, 1), Signature(2, 1, 1, 1), Signature(1, 2, 1, 1)):
        assert build_km_nabla(sig).form == build_km_explicit(sig).form
    for sig in (Signature(2, 1, 1, 0, ORTHOGONAL), Signature(2, 2, 1, 0, ORTHOGONAL),
                Signature(1, 3, 1, 0, ORTHOGONAL)):
        assert build_km_nabla(sig).form == build_km_explicit(sig).form


def test_km_reality_up_to_degree_sign():
    # conjugation fixes the form up to the (-1)^(d(d-1)/2) reversal sign of
    # a degree-d form; d = 2rq here
    for sig in (Signature(1, 1, 1, 1), Signature(2, 1, 1, 1)):
        c = build_km_nabla(sig)
        d = 2 * sig.r * sig.q
        sign = (-1) ** (d * (d - 1) // 2)
        assert c.form.conjugate() == c.form.scale(sign)


def test_km_unit_boundary():
    assert build_km_nabla(Signature(2, 1, 0, 0)).form == Form.unit()


def test_mixed_boundaries():
    assert build_mixed(Signature(2, 1, 2, 0)).form == build_psi_cup(Signature(2, 1, 2, 0)).form
    assert build_mixed(Signature(1, 1, 1, 1)).form == build_km_nabla(Signature(1, 1, 1, 1)).form
    assert build_mixed(Signature(2, 1, 2, 1)).bidegree_support() == {(1, 2)}
    with pytest.raises(ValueError):
        build_mixed(Signature(2, 1, 1, 2))


# -- differential -------------------------------------------------------------

def test_differential_of_unit_cochain():
    sig = Signature(2, 1, 1, 0)
    unit = GKCochain(Form.unit(), fock_model(0), sig)
    d = gk_differential(unit)
    # the Laplacian half kills constants; the multiplication half survives on
    # the antiholomorphic generators
    for i in (1, 2):
        got = d.form.coefficient([xibar(i, 1)])
        assert got == (x(i, 1) * Polynomial.variable(Y(1, 1))).scale(Scalar.i_unit())
    assert d.form.bidegree_part(1, 0).is_zero()


def test_closedness_of_constructions():
    for sig in (Signature(1, 1, 1, 0), Signature(2, 1, 1, 1),
                Signature(2, 2, 2, 0), Signature(3, 1, 1, 1)):
        assert gk_differential(build_psi_cup(sig)).form.is_zero()
    assert gk_differential(build_psi_q(Signature(2, 1, 1, 0))).form.is_zero()


def test_q_zero_degenerate():
    sig = Signature(2, 0, 1, 0)
    c = build_psi_cup(sig)
    assert c.form == Form.unit()
    assert gk_differential(c).form.is_zero()


def test_dd_equals_curvature():
    sig = Signature(2, 1, 1, 0)
    c = GKCochain(Form({(xi(1, 1),): x(1, 1)}), fock_model(0), sig)
    dd = gk_differential(gk_differential(c))
    assert dd.form == gk_curvature(c).form
    assert not dd.form.is_zero()  # the curvature obstruction is real


def test_dd_zero_on_invariant_forms():
    for sig in (Signature(2, 1, 1, 0), Signature(2, 2, 1, 1)):
        c = build_psi_cup(sig)
        assert gk_differential(gk_differential(c)).form.is_zero()


def test_orthogonal_closedness():
    for sig in (Signature(2, 1, 1, 0, ORTHOGONAL), Signature(2, 2, 2, 0, ORTHOGONAL)):
        assert gk_differential(build_psi_orth(sig)).form.is_zero()


# -- cup products --------------------------------------------------------------

def test_cup_product_concatenates_columns():
    sig1 = Signature(2, 1, 1, 0)
    prod = cup_product(build_psi_cup(sig1), build_psi_cup(sig1))
    assert prod.sig.r == 2
    assert prod.form == build_psi_cup(Signature(2, 1, 2, 0)).form


def test_cup_sign_convention():
    sig1 = Signature(2, 1, 0, 1)
    sig2 = Signature(2, 1, 1, 0)
    prod = cup_product(build_psi_cup(sig1), build_psi_cup(sig2))
    combined = build_psi_cup(Signature(2, 1, 1, 1))
    sgn = cup_sign(sig1, sig2)
    assert sgn == -1
    assert prod.form == combined.form.scale(sgn)


def test_cup_requires_matching_pq():
    with pytest.raises(ValueError):
        cup_product(build_psi_cup(Signature(2, 1, 1, 0)),
                    build_psi_cup(Signature(2, 2, 1, 0)))


# -- K-invariance ---------------------------------------------------------------

def test_k_invariance_of_constructions():
    for c in (build_psi_cup(Signature(2, 1, 1, 0)),
              build_psi_cup(Signature(2, 2, 1, 1)),
              build_km_nabla(Signature(2, 1, 1, 1)),
              build_psi_orth(Signature(2, 2, 1, 0, ORTHOGONAL))):
        assert k_invariance_residual(c).is_zero()


def test_k_invariance_negative_control():
    c = build_psi_cup(Signature(2, 1, 1, 0))
    w, poly = next(iter(c.form.terms.items()))
    bad = GKCochain(Form(dict(c.form.terms) | {w: -poly}), c.model, c.sig)
    assert not k_invariance_residual(bad).is_zero()


def test_unit_cochain_invariant_only_without_central_character():
    # r = 0 wrapping has no det^r twist: unit is invariant there
    unit0 = GKCochain(Form.unit(), fock_model(0), Signature(2, 1, 0, 0))
    assert k_invariance_residual(unit0).is_zero()
    unit1 = GKCochain(Form.unit(), fock_model(0), Signature(2, 1, 1, 0))
    assert not k_invariance_residual(unit1).is_zero()


# -- Euler/Chern and evaluation at zero -----------------------------------------

def test_chern_odd_orthogonal_vanishes():
    assert euler_chern_form(Signature(2, 1, 1, 0, ORTHOGONAL)).is_zero()
    assert euler_chern_form(Signature(3, 3, 1, 0, ORTHOGONAL)).is_zero()


def test_chern_unitary_q1():
    sig = Signature(2, 1, 1, 0)
    cq = euler_chern_form(sig)
    for l in (1, 2):
        assert cq.coefficient([xibar(l, 1), xi(l, 1)]) == Polynomial.one()


def test_km_at_zero_proportional_to_chern():
    sig = Signature(1, 1, 1, 1)
    at0 = evaluate_at_zero(build_km_nabla(sig))
    ratio = forms_proportional(at0, euler_chern_form(sig))
    assert ratio == Scalar.of(Fraction(-1, 2), 0, -1)


def test_km_orthogonal_zero_at_origin_odd_q():
    for q in (1, 3):
        sig = Signature(3, q, 1, 0, ORTHOGONAL)
        assert evaluate_at_zero(build_km_nabla(sig)).is_zero()


def test_km_orthogonal_even_q_origin_proportional_to_omega_product():
    sig = Signature(2, 2, 1, 0, ORTHOGONAL)
    at0 = evaluate_at_zero(build_km_nabla(sig))
    ratio = forms_proportional(at0, euler_chern_form(sig))
    assert ratio is not None and not ratio.is_zero()


# -- restriction -----------------------------------------------------------------

def test_restrict_identity_and_step():
    c = build_psi_q(Signature(2, 1, 1, 0))
    assert restrict_form(c, SplitSpec(0)).form == c.form
    down = restrict_form(c, SplitSpec(1))
    assert down.sig.p == 1
    assert down.form == build_psi_q(Signature(1, 1, 1, 0)).form


def test_restrict_to_zero_rows():
    c = build_psi_cup(Signature(2, 1, 1, 0))
    assert restrict_form(c, SplitSpec(2)).form.is_zero()


def test_restrict_factorization_failure():
    sig = Signature(2, 1, 1, 0)
    bad = GKCochain(Form({(xibar(2, 1),): x(1, 1)}), fock_model(0), sig)
    with pytest.raises(FactorizationError):
        restrict_form(bad, SplitSpec(1))


# -- coefficient probes -----------------------------------------------------------

def test_coefficient_at_unit_and_missing():
    unit = GKCochain(Form.unit(), fock_model(0), Signature(1, 1, 0, 0))
    assert coefficient_at(unit, []) == Polynomial.one()
    assert coefficient_at(unit, [xi(1, 1)]).is_zero()


def test_strongly_primitive_witness():
    sig = Signature(2, 1, 2, 0)
    pol = coefficient_at(build_psi_cup(sig), strongly_primitive_monomial(sig))
    assert pol == x(1, 1) * x(2, 2) - x(2, 1) * x(1, 2)
    sig = Signature(2, 1, 1, 1)
    assert not coefficient_at(build_psi_cup(sig), strongly_primitive_monomial(sig)).is_zero()
