from itertools import product

from hypothesis import given, settings, strategies as st

from theta_forms.models import ladder_op
from theta_forms.operators import LinOp
from theta_forms.poly import Polynomial, X, Zvar, monomial
from theta_forms.scalars import Scalar

x = Polynomial.variable(X(1, 1))
dx = LinOp.partial(X(1, 1))
mx = LinOp.mul_by(x)


def test_apply_derivative():
    assert dx.apply(x ** 2) == x * 2


def test_euler_operator_kills_constants():
    euler = mx.compose(dx)
    assert euler.apply(Polynomial.one()).is_zero()
    assert euler.apply(x ** 3) == x ** 3 * 3


def test_heisenberg_commutator():
    assert dx.commutator(mx) == LinOp.identity()


def test_normal_order_merges():
    a = mx.compose(dx) + mx.compose(dx)
    assert a == mx.compose(dx).scale(2)
    assert len(a.terms) == 1


def test_composition_via_leibniz():
    # d/dx after x-multiplication = identity + x d/dx, in normal order
    assert dx.compose(mx) == LinOp.identity() + mx.compose(dx)


def test_ladder_commutators_vanish_off_diagonal():
    ap1 = ladder_op("Aplus", 1, 2)
    am2 = ladder_op("Aminus", 2, 2)
    assert ap1.commutator(am2).is_zero()


def test_ladder_commutator_diagonal():
    ap = ladder_op("Aplus", 1, 1)
    am = ladder_op("Aminus", 1, 1)
    assert ap.commutator(am) == LinOp.identity().scale(Scalar.of(-4, 0, 1))


def _monomials_up_to(deg):
    vars_ = [Zvar(1), Zvar(2)]
    for exps in product(range(deg + 1), repeat=2):
        if sum(exps) <= deg:
            yield Polynomial({monomial(list(zip(vars_, exps))): Scalar.one()})


def test_commutator_agrees_with_application():
    # [A, B] applied to m equals A(B m) - B(A m) for all monomials, deg <= 4
    ops = [ladder_op("Aplus", 1, 2), ladder_op("Aminus", 2, 2),
           ladder_op("H", 1, 2),
           LinOp.mul_by(Polynomial.variable(Zvar(1))).compose(LinOp.partial(Zvar(2)))]
    for a in ops:
        for b in ops:
            c = a.commutator(b)
            for m in _monomials_up_to(4):
                direct = a.apply(b.apply(m)) - b.apply(a.apply(m))
                assert c.apply(m) == direct


_ops = st.sampled_from([dx, mx, LinOp.identity(), mx.compose(dx),
                        LinOp.partial(X(1, 1), 2), LinOp.mul_by(x ** 2)])


@settings(max_examples=40, deadline=None)
@given(_ops, _ops, _ops)
def test_composition_associative(a, b, c):
    assert a.compose(b).compose(c) == a.compose(b.compose(c))


@settings(max_examples=40, deadline=None)
@given(_ops, _ops)
def test_composition_matches_application(a, b):
    f = x ** 3 + x * 2 + Polynomial.one()
    assert a.compose(b).apply(f) == a.apply(b.apply(f))
