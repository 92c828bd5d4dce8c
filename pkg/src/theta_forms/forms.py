"""Special cohomology cochains: the Fock forms psi, their cup products, the
Kudla-Millson Schwartz forms in nabla and explicit shape, the relative Lie
algebra differential, K-invariance residuals, Euler/Chern forms, and the
restriction map that peels off positive-definite rows.

Column layout convention: for a unitary signature with dual-pair size (r, s),
columns 1..s carry both holomorphic and conjugate variables (doubled Fock
columns for the psi cup products, gaussian-conjugated Schrodinger columns for
the Schwartz forms) and columns s+1..r are purely holomorphic.  Cup products
concatenate column blocks; conjugate-carrying blocks have even total degree
2q, so re-sorting blocks into column order costs no sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .exterior import Form, WedgeGen, wedge_all, wedge_monomial, xi, xibar
from .models import (ModelTag, ORTHOGONAL, Signature, UNITARY,
                     calibrate_structure, fock_model, mixed_model,
                     upq_op_model)
from .operators import LinOp, op_sum
from .poly import Polynomial, VariableId, X, Xbar, Y
from .scalars import Scalar


@dataclass(frozen=True)
class GKCochain:
    form: Form
    model: ModelTag
    sig: Signature

    def is_zero(self) -> bool:
        return self.form.is_zero()

    def bidegree_support(self):
        return self.form.bidegree_support()


@dataclass(frozen=True)
class SplitSpec:
    """Peel the first l rows (a positive-definite subspace of dimension l)."""

    l: int

    def __post_init__(self):
        if self.l < 0:
            raise ValueError("peeled dimension must be non-negative")


class FactorizationError(RuntimeError):
    """Restriction found surviving coefficients that depend on peeled rows;
    the positive-gaussian factorization failed, which signals a bug."""


# ---------------------------------------------------------------------------
# psi factors
# ---------------------------------------------------------------------------

def _psi_factor(sig: Signature, column: int, conjugate: bool, gen_kind) -> Form:
    """sum over (i_1..i_q) of X_{i_1,col} ... X_{i_q,col}
    gen_{i_1,1} ^ ... ^ gen_{i_q,q}; conjugate swaps variables to Xbar."""
    p, q = sig.p, sig.q
    out = Form.zero()
    var = Xbar if conjugate else X
    for idx in product(range(1, p + 1), repeat=q):
        coeff = Polynomial.one()
        for i in idx:
            coeff = coeff * Polynomial.variable(var(i, column))
        sign, w = wedge_monomial([gen_kind(i, j) for j, i in enumerate(idx, start=1)])
        if sign == 0:
            continue
        out = out + Form({w: coeff if sign > 0 else -coeff})
    return out


def build_psi_q(sig: Signature, column: int = 1) -> GKCochain:
    """The antiholomorphic Fock form of one column: bidegree (0, q)."""
    if not (1 <= column <= sig.r):
        raise ValueError(f"column {column} out of range for r={sig.r}")
    if sig.q < 1:
        raise ValueError("build_psi_q needs q >= 1")
    gen = xi if sig.family == ORTHOGONAL else xibar
    form = _psi_factor(sig, column, conjugate=False, gen_kind=gen)
    return GKCochain(form, fock_model(0), sig)


def build_psi_cup(sig: Signature) -> GKCochain:
    """Cup product psi_1 ^ ... ^ psi_r ^ psibar_1 ^ ... ^ psibar_s.

    Holomorphic factors occupy columns 1..r, conjugate factors columns 1..s
    (columns 1..min(r, s) are doubled).  Zero when r > p or s > p, forced by
    alternation."""
    if sig.family != UNITARY:
        raise ValueError("build_psi_cup is the unitary construction; see build_psi_orth")
    model = fock_model(min(sig.r, sig.s))
    if sig.q == 0:
        return GKCochain(Form.unit(), model, sig)
    blocks = [_psi_factor(sig, k, conjugate=False, gen_kind=xibar)
              for k in range(1, sig.r + 1)]
    blocks += [_psi_factor(sig, k, conjugate=True, gen_kind=xi)
               for k in range(1, sig.s + 1)]
    return GKCochain(wedge_all(blocks), model, sig)


def cup_embed(c: GKCochain, target: Signature, holo_offset: int,
              conj_offset: int) -> Form:
    """Relabel dual-pair columns into a larger signature: holomorphic
    variable columns shift by holo_offset, conjugate ones by conj_offset.
    (Wedge generators carry no dual-pair column and do not move.)"""

    def relabel(v: VariableId) -> VariableId:
        if v.kind in ("X", "Y"):
            return VariableId(v.kind, v.row, v.col + holo_offset)
        if v.kind in ("Xbar", "Ybar"):
            return VariableId(v.kind, v.row, v.col + conj_offset)
        return v

    return c.form.map_coefficients(lambda P: P.map_variables(relabel))


def cup_product(c1: GKCochain, c2: GKCochain) -> GKCochain:
    """Wedge of two psi cup cochains under the column re-indexing embedding:
    factor 1 keeps columns 1..r1 / 1..s1, factor 2 shifts by (r1, s1)."""
    s1, s2 = c1.sig, c2.sig
    if (s1.p, s1.q, s1.family) != (s2.p, s2.q, s2.family):
        raise ValueError("cup factors must share (p, q) and family")
    sig = Signature(s1.p, s1.q, s1.r + s2.r, s1.s + s2.s, s1.family)
    f1 = cup_embed(c1, sig, 0, 0)
    f2 = cup_embed(c2, sig, s1.r, s1.s)
    return GKCochain(f1.wedge(f2), fock_model(min(sig.r, sig.s)), sig)


def cup_sign(c1_sig: Signature, c2_sig: Signature) -> int:
    """Graded sign relating cup_product to the combined construction:
    moving factor 1's s1 conjugate blocks (degree q each) past factor 2's
    r2 holomorphic blocks gives (-1)^(q * s1 * r2)."""
    return -1 if (c1_sig.q * c1_sig.s * c2_sig.r) % 2 else 1


def build_psi_orth(sig: Signature) -> GKCochain:
    """psi_1 ^ ... ^ psi_r over the real Fock model (orthogonal family)."""
    if sig.family != ORTHOGONAL:
        raise ValueError("build_psi_orth needs the orthogonal family")
    if sig.q == 0:
        return GKCochain(Form.unit(), fock_model(0), sig)
    blocks = [_psi_factor(sig, k, conjugate=False, gen_kind=xi)
              for k in range(1, sig.r + 1)]
    return GKCochain(wedge_all(blocks), fock_model(0), sig)


# ---------------------------------------------------------------------------
# Kudla-Millson Schwartz forms
# ---------------------------------------------------------------------------

_HALF_PI_INV = Scalar.of(Fraction(1, 2), 0, -1)     # 1 / (2 pi)
_QUARTER_PI_INV = Scalar.of(Fraction(1, 4), 0, -1)  # 1 / (4 pi)


def _nabla(sig: Signature, k: int, j: int, conjugate: bool) -> list[tuple[WedgeGen, LinOp]]:
    """The form-valued operator nabla_{k,j}: wedge gen on the left, creation
    operator on the coefficients.  Unitary normalization X - (1/2pi) d/dXbar."""
    out = []
    for l in range(1, sig.p + 1):
        if conjugate:
            gen = xi(l, j)
            op = LinOp.mul_by(Polynomial.variable(Xbar(l, k))) \
                - LinOp.partial(X(l, k)).scale(_HALF_PI_INV)
        else:
            gen = xibar(l, j)
            op = LinOp.mul_by(Polynomial.variable(X(l, k))) \
                - LinOp.partial(Xbar(l, k)).scale(_HALF_PI_INV)
        out.append((gen, op))
    return out


def _nabla_orth(sig: Signature, k: int, j: int) -> list[tuple[WedgeGen, LinOp]]:
    """Orthogonal analogue: real variables, normalization X - (1/4pi) d/dX."""
    out = []
    for l in range(1, sig.p + 1):
        op = LinOp.mul_by(Polynomial.variable(X(l, k))) \
            - LinOp.partial(X(l, k)).scale(_QUARTER_PI_INV)
        out.append((xi(l, j), op))
    return out


def _apply_form_op(pairs: list[tuple[WedgeGen, LinOp]], f: Form) -> Form:
    out = Form.zero()
    for gen, op in pairs:
        g = f.apply_op(op)
        if not g.is_zero():
            out = out + Form.generator(gen).wedge(g)
    return out


def _km_column(sig: Signature, k: int) -> Form:
    """prod_j nabla_{k,j} nablabar_{k,j} applied to the vacuum (poly 1)."""
    f = Form.unit()
    for j in range(sig.q, 0, -1):
        f = _apply_form_op(_nabla(sig, k, j, conjugate=True), f)
        f = _apply_form_op(_nabla(sig, k, j, conjugate=False), f)
    return f


def _km_column_orth(sig: Signature, k: int) -> Form:
    f = Form.unit()
    for j in range(sig.q, 0, -1):
        f = _apply_form_op(_nabla_orth(sig, k, j), f)
    return f


def build_km_nabla(sig: Signature) -> GKCochain:
    """Kudla-Millson cochain from the nabla operators applied to the vacuum.

    Unitary needs r = s (all columns Schrodinger); orthogonal uses r columns
    of the real model.  Coefficients are polynomials with the gaussian
    implicit."""
    if sig.family == UNITARY:
        if sig.r != sig.s:
            raise ValueError("the unitary Kudla-Millson form needs r = s")
        cols = range(1, sig.r + 1)
        factors = [_km_column(sig, k) for k in cols]
        return GKCochain(wedge_all(factors), mixed_model(sig.r), sig)
    factors = [_km_column_orth(sig, k) for k in range(1, sig.r + 1)]
    return GKCochain(wedge_all(factors), mixed_model(sig.r), sig)


def _omega_form(sig: Signature, k: int, j: int, conjugate: bool) -> Form:
    """omega(k,j) = sum_l X_{l,k} xibar_{l,j} (or the conjugate)."""
    out = Form.zero()
    for l in range(1, sig.p + 1):
        if conjugate:
            out = out + Form.generator(xi(l, j), Polynomial.variable(Xbar(l, k)))
        else:
            out = out + Form.generator(xibar(l, j), Polynomial.variable(X(l, k)))
    return out


def _omega_form_orth(sig: Signature, k: int, j: int) -> Form:
    out = Form.zero()
    for l in range(1, sig.p + 1):
        out = out + Form.generator(xi(l, j), Polynomial.variable(X(l, k)))
    return out


def _big_omega(sig: Signature, i: int, j: int) -> Form:
    """Omega(i,j) = sum_l xibar_{l,i} ^ xi_{l,j}."""
    out = Form.zero()
    for l in range(1, sig.p + 1):
        out = out + Form.generator(xibar(l, i)).wedge(Form.generator(xi(l, j)))
    return out


def _big_omega_orth(sig: Signature, i: int, j: int) -> Form:
    """Omega(i,j) = sum_l xi_{l,i} ^ xi_{l,j} (orthogonal)."""
    out = Form.zero()
    for l in range(1, sig.p + 1):
        out = out + Form.generator(xi(l, i)).wedge(Form.generator(xi(l, j)))
    return out


def _c_unitary(q: int, lam: int) -> Scalar:
    """C(q, lambda) = (-1/2pi)^lambda (q!)^2 / (lambda! ((q-lambda)!)^2)."""
    from math import factorial
    base = Scalar.of(Fraction(-1, 2), 0, -1) ** lam
    return base * Fraction(factorial(q) ** 2,
                           factorial(lam) * factorial(q - lam) ** 2)


def _c_orth(q: int, lam: int) -> Scalar:
    """C(q, lambda) = (-1/4pi)^lambda q! / (2^lambda lambda! (q-2 lambda)!)."""
    from math import factorial
    base = Scalar.of(Fraction(-1, 4), 0, -1) ** lam
    return base * Fraction(factorial(q),
                           (2 ** lam) * factorial(lam) * factorial(q - 2 * lam))


def _km_explicit_column(sig: Signature, k: int) -> Form:
    """Antisymmetrized lambda-sum for one unitary column."""
    q = sig.q
    from math import factorial
    total = Form.zero()
    for lam in range(q + 1):
        acc = Form.zero()
        for sigma in permutations(range(1, q + 1)):
            for sigbar in permutations(range(1, q + 1)):
                sgn = _perm_sign(sigma) * _perm_sign(sigbar)
                fac = Form.unit()
                for t in range(q - lam):
                    fac = fac.wedge(_omega_form(sig, k, sigma[t], conjugate=False))
                    fac = fac.wedge(_omega_form(sig, k, sigbar[t], conjugate=True))
                for t in range(q - lam, q):
                    fac = fac.wedge(_big_omega(sig, sigma[t], sigbar[t]))
                acc = acc + fac.scale(sgn)
        norm = Fraction(1, factorial(q) ** 2)
        total = total + acc.scale(_c_unitary(q, lam) * norm)
    return total


def _km_explicit_column_orth(sig: Signature, k: int) -> Form:
    q = sig.q
    from math import factorial
    total = Form.zero()
    for lam in range(q // 2 + 1):
        acc = Form.zero()
        for sigma in permutations(range(1, q + 1)):
            sgn = _perm_sign(sigma)
            fac = Form.unit()
            for t in range(q - 2 * lam):
                fac = fac.wedge(_omega_form_orth(sig, k, sigma[t]))
            for t in range(q - 2 * lam, q, 2):
                fac = fac.wedge(_big_omega_orth(sig, sigma[t], sigma[t + 1]))
            acc = acc + fac.scale(sgn)
        norm = Fraction(1, factorial(q))
        total = total + acc.scale(_c_orth(q, lam) * norm)
    return total


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def build_km_explicit(sig: Signature) -> GKCochain:
    """Kudla-Millson cochain from the explicit C(q, lambda) expansion."""
    if sig.family == UNITARY:
        if sig.r != sig.s:
            raise ValueError("the unitary Kudla-Millson form needs r = s")
        factors = [_km_explicit_column(sig, k) for k in range(1, sig.r + 1)]
        return GKCochain(wedge_all(factors), mixed_model(sig.r), sig)
    factors = [_km_explicit_column_orth(sig, k) for k in range(1, sig.r + 1)]
    return GKCochain(wedge_all(factors), mixed_model(sig.r), sig)


def build_mixed(sig: Signature) -> GKCochain:
    """Fock/Schwartz mixed form: Schrodinger factors on columns 1..s, Fock
    psi factors on columns s+1..r."""
    if sig.family != UNITARY:
        raise ValueError("the mixed construction is unitary")
    if sig.s > sig.r:
        raise ValueError("mixed model needs r >= s")
    model = mixed_model(sig.s)
    if sig.q == 0:
        return GKCochain(Form.unit(), model, sig)
    blocks = []
    for k in range(1, sig.s + 1):
        blocks.append(_km_column(sig, k))
    for k in range(sig.s + 1, sig.r + 1):
        blocks.append(_psi_factor(sig, k, conjugate=False, gen_kind=xibar))
    return GKCochain(wedge_all(blocks), model, sig)


# ---------------------------------------------------------------------------
# The relative Lie algebra differential
# ---------------------------------------------------------------------------

def _pair_ops(sig: Signature, model: ModelTag):
    """Calibrated operators omega(x+_{ij}) and omega(x-_{ij}) for the model.

    x+_{ij} is the abstract raising vector dual to xi_{ij} (acting by the
    column Laplacians on holomorphic factors); x-_{ij} is dual to xibar_{ij}
    (acting by multiplication).  Orthogonal family: the single p-block, dual
    to xi_{ij}, combines both parts."""
    if sig.q == 0 or sig.r == 0 or sig.p == 0:
        return {}, {}
    cal = calibrate_structure(sig)
    plus_ops = {}
    minus_ops = {}
    for i in range(1, sig.p + 1):
        for j in range(1, sig.q + 1):
            mult = upq_op_model(sig, model, "pplus", i, j, cal.c_plus, cal.c_minus)
            lap = upq_op_model(sig, model, "pminus", i, j, cal.c_plus, cal.c_minus)
            if sig.family == ORTHOGONAL:
                plus_ops[(i, j)] = mult + lap
            else:
                plus_ops[(i, j)] = lap
                minus_ops[(i, j)] = mult
    return plus_ops, minus_ops


def gk_differential(c: GKCochain) -> GKCochain:
    """d = sum over the p-basis of (left wedge by the dual generator) after
    (the calibrated module action on coefficients).  The bracket-contraction
    term is absent: for a symmetric pair [p, p] lies in k, so its projection
    to p vanishes identically; the Kostant curvature identity is certified in
    the verification suites."""
    sig, model = c.sig, c.model
    plus_ops, minus_ops = _pair_ops(sig, model)
    out = Form.zero()
    for (i, j), op in plus_ops.items():
        g = c.form.apply_op(op)
        if not g.is_zero():
            out = out + Form.generator(xi(i, j)).wedge(g)
    for (i, j), op in minus_ops.items():
        g = c.form.apply_op(op)
        if not g.is_zero():
            out = out + Form.generator(xibar(i, j)).wedge(g)
    return GKCochain(out, model, sig)


def gk_curvature(c: GKCochain) -> GKCochain:
    """The Kostant curvature sum xi_{ij} ^ xibar_{kl} (delta_jl k_gl_p(i,k)
    - delta_ik k_gl_q(l,j)) c, built from the k-blocks (an independent code
    path from d).  d(d(c)) equals this exactly; it vanishes on K-invariant
    cochains.  Unitary models only."""
    sig, model = c.sig, c.model
    if sig.family != UNITARY:
        raise ValueError("curvature comparison implemented for the unitary family")
    if sig.q == 0 or sig.r == 0:
        return GKCochain(Form.zero(), model, sig)
    cal = calibrate_structure(sig)
    out = Form.zero()
    for i in range(1, sig.p + 1):
        for j in range(1, sig.q + 1):
            for k in range(1, sig.p + 1):
                for l in range(1, sig.q + 1):
                    op = LinOp.zero()
                    if j == l:
                        op = op + upq_op_model(sig, model, "k_gl_p", i, k, cal.c_plus, cal.c_minus)
                    if i == k:
                        op = op - upq_op_model(sig, model, "k_gl_q", l, j, cal.c_plus, cal.c_minus)
                    if op.is_zero():
                        continue
                    g = c.form.apply_op(op)
                    if g.is_zero():
                        continue
                    lead = Form.generator(xi(i, j)).wedge(Form.generator(xibar(k, l)))
                    out = out + lead.wedge(g)
    return GKCochain(out, model, sig)


# ---------------------------------------------------------------------------
# K-invariance
# ---------------------------------------------------------------------------

def _k_basis(sig: Signature):
    """Basis of the complexified k with labels, unitary: all elementary
    gl(p) and gl(q) matrices; orthogonal: antisymmetric pairs."""
    out = []
    if sig.family == UNITARY:
        for a in range(1, sig.p + 1):
            for b in range(1, sig.p + 1):
                out.append(("k_gl_p", a, b))
        for a in range(1, sig.q + 1):
            for b in range(1, sig.q + 1):
                out.append(("k_gl_q", a, b))
    else:
        for a in range(1, sig.p + 1):
            for b in range(a + 1, sig.p + 1):
                out.append(("so_p", a, b))
        for a in range(1, sig.q + 1):
            for b in range(a + 1, sig.q + 1):
                out.append(("so_q", a, b))
    return out


def _coadjoint_rule(sig: Signature, kappa):
    """Action of a k-basis element on wedge generators, as Scalar combos."""
    block, a, b = kappa
    one = Scalar.one()

    def rule(g: WedgeGen):
        out = []
        if block == "k_gl_p":
            if g.kind == "xi" and g.row == a:
                out.append((-one, xi(b, g.col)))
            if g.kind == "xibar" and g.row == b:
                out.append((one, xibar(a, g.col)))
        elif block == "k_gl_q":
            if g.kind == "xi" and g.col == b:
                out.append((one, xi(g.row, a)))
            if g.kind == "xibar" and g.col == a:
                out.append((-one, xibar(g.row, b)))
        elif block == "so_p":
            if g.row == a:
                out.append((-one, WedgeGen(g.kind, b, g.col)))
            if g.row == b:
                out.append((one, WedgeGen(g.kind, a, g.col)))
        elif block == "so_q":
            if g.col == b:
                out.append((one, WedgeGen(g.kind, g.row, a)))
            if g.col == a:
                out.append((-one, WedgeGen(g.kind, g.row, b)))
        return out

    return rule


def _k_module_op(sig: Signature, model: ModelTag, kappa) -> LinOp:
    block, a, b = kappa
    if sig.family == UNITARY:
        cal = calibrate_structure(sig) if (sig.p and sig.q and sig.r) else None
        cp = cal.c_plus if cal else Scalar.i_unit()
        cm = cal.c_minus if cal else Scalar.i_unit()
        return upq_op_model(sig, model, block, a, b, cp, cm)
    # orthogonal: antisymmetrized geometric action (no central twist)
    parts = []
    for col in range(1, sig.r + 1):
        if block == "so_p":
            parts.append(-(LinOp.mul_by(Polynomial.variable(X(b, col))).compose(LinOp.partial(X(a, col)))))
            parts.append(LinOp.mul_by(Polynomial.variable(X(a, col))).compose(LinOp.partial(X(b, col))))
        else:
            parts.append(-(LinOp.mul_by(Polynomial.variable(Y(b, col))).compose(LinOp.partial(Y(a, col)))))
            parts.append(LinOp.mul_by(Polynomial.variable(Y(a, col))).compose(LinOp.partial(Y(b, col))))
    return op_sum(parts)


def k_invariance_residual(c: GKCochain) -> Form:
    """Largest residual (omega(kappa) + coadjoint(kappa)) c over the k-basis;
    the zero form iff the cochain is K-invariant."""
    worst = Form.zero()
    for kappa in _k_basis(c.sig):
        op = _k_module_op(c.sig, c.model, kappa)
        res = c.form.apply_op(op) + c.form.gen_derivation(_coadjoint_rule(c.sig, kappa))
        if res.max_term_count() > worst.max_term_count():
            worst = res
    return worst


# ---------------------------------------------------------------------------
# Euler / Chern forms and evaluation at zero
# ---------------------------------------------------------------------------

def euler_chern_form(sig: Signature) -> Form:
    """c_q: unitary (1/q!) sum over sigma, sigbar of sgn Omega(...); the
    orthogonal form vanishes for odd q and pairs indices for even q."""
    from math import factorial
    q = sig.q
    if sig.family == ORTHOGONAL:
        if q % 2:
            return Form.zero()
        half = q // 2
        acc = Form.zero()
        for sigma in permutations(range(1, q + 1)):
            fac = Form.unit()
            for t in range(0, q, 2):
                fac = fac.wedge(_big_omega_orth(sig, sigma[t], sigma[t + 1]))
            acc = acc + fac.scale(_perm_sign(sigma))
        return acc.scale(Fraction(1, factorial(half)))
    acc = Form.zero()
    for sigma in permutations(range(1, q + 1)):
        for sigbar in permutations(range(1, q + 1)):
            fac = Form.unit()
            for t in range(q):
                fac = fac.wedge(_big_omega(sig, sigma[t], sigbar[t]))
            acc = acc + fac.scale(_perm_sign(sigma) * _perm_sign(sigbar))
    return acc.scale(Fraction(1, factorial(q)))


def evaluate_at_zero(c: GKCochain) -> Form:
    """Set all model variables to zero (the constant term of each coefficient)."""
    out = {}
    for w, p in c.form.terms.items():
        const = p.constant_term()
        if not const.is_zero():
            out[w] = Polynomial.constant(const)
    return Form(out)


def forms_proportional(f: Form, g: Form):
    """Return a Scalar c with f = c g when one exists (g != 0), else None."""
    if g.is_zero():
        return Scalar.zero() if f.is_zero() else None
    w0, p0 = next(iter(g.sorted_terms()))
    m0, c0 = next(iter(p0.sorted_terms()))
    p_f = f.terms.get(w0, Polynomial.zero())
    c_f = p_f.coefficient(m0)
    try:
        ratio = c_f * c0.inverse()
    except ZeroDivisionError:
        return None
    return ratio if f == g.scale(ratio) else None


# ---------------------------------------------------------------------------
# Restriction and coefficient probes
# ---------------------------------------------------------------------------

def restrict_form(c: GKCochain, split: SplitSpec) -> GKCochain:
    """Restrict along the peeling of the first l positive rows: wedge
    generators and variables on rows <= l die, surviving coefficients must
    not depend on the peeled rows (the positive gaussian factor carries no
    polynomial part), and the remainder re-indexes to signature (p-l, q)."""
    l = split.l
    sig = c.sig
    if l > sig.p:
        raise ValueError("cannot peel more rows than p")
    if l == 0:
        return c
    new_sig = Signature(sig.p - l, sig.q, sig.r, sig.s, sig.family)

    def row_dead_var(v: VariableId) -> bool:
        return v.kind in ("X", "Xbar") and v.row <= l

    out = {}
    for w, p in c.form.terms.items():
        if any(g.row <= l for g in w):
            continue
        for v in p.variables():
            if row_dead_var(v):
                raise FactorizationError(
                    f"surviving coefficient depends on peeled variable {v}")
        ww = tuple(WedgeGen(g.kind, g.row - l, g.col) for g in w)
        pp = p.map_variables(
            lambda v: VariableId(v.kind, v.row - l, v.col)
            if v.kind in ("X", "Xbar") else v)
        out[ww] = pp
    return GKCochain(Form(out), c.model, new_sig)


def coefficient_at(c: GKCochain, gens) -> Polynomial:
    """Exact coefficient polynomial at a wedge monomial (any gen order)."""
    return c.form.coefficient(list(gens))


def strongly_primitive_monomial(sig: Signature):
    """The wedge monomial dual to the minimal K-type vector: xibar over rows
    1..r (all columns) wedged with xi over the bottom s rows (all columns)."""
    gens = [xibar(i, j) for i in range(1, sig.r + 1) for j in range(1, sig.q + 1)]
    gens += [xi(sig.p - i + 1, sig.q - j + 1)
             for i in range(1, sig.s + 1) for j in range(1, sig.q + 1)]
    return gens
