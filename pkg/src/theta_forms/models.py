"""Infinitesimal oscillator actions in the Schrodinger, Fock, and mixed models.

Conventions fixed here and used everywhere downstream:

* Gaussians are never expanded.  A SchrodingerElement stores only the
  polynomial factor; all operators on it are pre-conjugated by the vacuum
  gaussian exp(-pi * |x|^2).  Concretely d/dx_j acts on the polynomial part
  as (d/dx_j - 2 pi x_j), so the conjugated ladder operators are
  A+_j = d/dx_j and A-_j = d/dx_j - 4 pi x_j.

* The Fock -> Schrodinger intertwiner T is pinned by T(1) = vacuum and
  T(z_j v) = (-A-_j) T(v); on monomials T(z^m) = (-A-)^m applied to 1.

* In the matrix Fock model P(M_{p x r} + M_{q x r}) the complexified
  u(p,q) acts through:
      k_gl_p(a,b) = -sum_nu X_{b,nu} d/dX_{a,nu}
      k_gl_q(a,b) = (#holomorphic columns) delta_ab + sum_nu Y_{a,nu} d/dY_{b,nu}
      pplus(i,j)  = c_plus  * sum_nu X_{i,nu} Y_{j,nu}          (degree +2)
      pminus(i,j) = c_minus * sum_nu d^2/dX_{i,nu} dY_{j,nu}    (degree -2)
  with (c_plus, c_minus) determined by calibrate_structure so that the
  family closes onto gl(p+q) structure constants (this forces
  c_plus * c_minus = -1; the symmetric representative c_plus = c_minus = i
  is recorded).  Conjugate columns carry the complex-conjugate operators;
  intertwined (Schrodinger) columns carry M_V = V - (1/2pi) d/dVbar in
  place of multiplication by V and plain d/dV in place of d/dz.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .operators import LinOp, op_sum
from .poly import Polynomial, VariableId, X, Xbar, Y, Ybar, Zvar
from .scalars import Scalar


# ---------------------------------------------------------------------------
# Signatures and model tags
# ---------------------------------------------------------------------------

UNITARY = "unitary"
ORTHOGONAL = "orthogonal"


@dataclass(frozen=True)
class Signature:
    p: int
    q: int
    r: int = 0
    s: int = 0
    family: str = UNITARY

    def __post_init__(self):
        # Standing convention is p >= q; the p < q corner is tolerated so the
        # restriction map can peel all the way down to p = 0.
        if self.p < 0 or self.q < 0 or self.r < 0 or self.s < 0:
            raise ValueError("signature entries must be non-negative")
        if self.family not in (UNITARY, ORTHOGONAL):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == ORTHOGONAL and self.s != 0:
            raise ValueError("orthogonal family forces s = 0")


@dataclass(frozen=True)
class ModelTag:
    """Which realization the coefficients live in.

    which = "fock":        columns 1..split are doubled Fock columns
                           (holomorphic and conjugate polynomial factors),
                           the rest are purely holomorphic.
    which = "mixed":       columns 1..split are gaussian-conjugated
                           Schrodinger columns, the rest Fock.
    which = "schrodinger": the scalar model on S(R^N) (Z-kind variables).
    """

    which: str = "fock"
    split: int = 0

    def __post_init__(self):
        if self.which not in ("fock", "schrodinger", "mixed"):
            raise ValueError(f"unknown model {self.which!r}")

    def token(self) -> str:
        return f"{self.which}:{self.split}"

    @classmethod
    def from_token(cls, tok: str) -> "ModelTag":
        which, split = tok.split(":")
        return cls(which, int(split))


FOCK = ModelTag("fock", 0)
SCHRODINGER = ModelTag("schrodinger", 0)


def mixed_model(split: int) -> ModelTag:
    return ModelTag("mixed", split)


def fock_model(conj_cols: int = 0) -> ModelTag:
    return ModelTag("fock", conj_cols)


@dataclass(frozen=True)
class SchrodingerElement:
    """poly * gaussian, with the gaussian implicit."""

    poly: Polynomial

    def is_zero(self) -> bool:
        return self.poly.is_zero()


# ---------------------------------------------------------------------------
# Scalar oscillator: Heisenberg generators and the ladder calculus
# ---------------------------------------------------------------------------

_I = Scalar.i_unit()
_2PI = Scalar.of(2, 0, 1)
_4PI = Scalar.of(4, 0, 1)


def _zmul(j: int) -> LinOp:
    return LinOp.mul_by(Polynomial.variable(Zvar(j)))


def _zd(j: int) -> LinOp:
    return LinOp.partial(Zvar(j))


def heisenberg_op(model: ModelTag, gen: str, j: int, dim: int) -> LinOp:
    """Heisenberg generators e_j, f_j, w'_j, w''_j in the given scalar model.

    Fock:        rho(e_j) = (z_j - 4pi d_j)/2, rho(f_j) = -i (z_j + 4pi d_j)/2,
                 rho(w'_j) = -4pi d_j, rho(w''_j) = z_j.
    Schrodinger (gaussian-conjugated, acting on the polynomial factor):
                 rho(e_j) = 2pi x_j - d_j, rho(f_j) = -2 i pi x_j,
                 rho(w'_j) = -d_j, rho(w''_j) = 4pi x_j - d_j.
    """
    if not (1 <= j <= dim):
        raise IndexError(f"generator index {j} out of range 1..{dim}")
    if model.which == "fock":
        z, d = _zmul(j), _zd(j)
        if gen == "wp":
            return d.scale(Scalar.of(-4, 0, 1))
        if gen == "wpp":
            return z
        if gen == "e":
            return (z - d.scale(_4PI)).scale(Fraction(1, 2))
        if gen == "f":
            return (z + d.scale(_4PI)).scale(Scalar.of(0, Fraction(-1, 2)))
        raise ValueError(f"unknown generator {gen!r}")
    if model.which == "schrodinger":
        x, d = _zmul(j), _zd(j)
        if gen == "wp":
            return -d
        if gen == "wpp":
            return x.scale(_4PI) - d
        if gen == "e":
            return x.scale(_2PI) - d
        if gen == "f":
            return x.scale(Scalar.of(0, -2, 1))
        raise ValueError(f"unknown generator {gen!r}")
    raise ValueError("heisenberg_op is defined for the scalar fock/schrodinger models")


def ladder_op(kind: str, j: int, dim: int) -> LinOp:
    """Gaussian-conjugated ladder operators on polynomial factors."""
    if not (1 <= j <= dim):
        raise IndexError(f"ladder index {j} out of range 1..{dim}")
    d = _zd(j)
    x = _zmul(j)
    if kind == "Aplus":
        return d
    if kind == "Aminus":
        return d - x.scale(_4PI)
    if kind == "H":
        ap = d
        am = d - x.scale(_4PI)
        return ap.compose(am) + am.compose(ap)
    raise ValueError(f"unknown ladder kind {kind!r}")


def vacuum() -> SchrodingerElement:
    return SchrodingerElement(Polynomial.one())


def sp_op(model: ModelTag, block: str, j: int, k: int, dim: int) -> LinOp:
    """Generators of the full symplectic algebra in the scalar models.

    Fock: k11 -> -i (z_k d_j + d_j z_k), p20 -> i z_j z_k, p02 -> 4i d_j d_k.
    The Schrodinger versions are the Fock ones pushed through the
    intertwiner dictionary z_j -> 4pi x_j - d_j, d_j -> d_j / 4pi.
    """
    if not (1 <= j <= dim and 1 <= k <= dim):
        raise IndexError("sp_op index out of range")
    z = {i: _zmul(i) for i in (j, k)}
    d = {i: _zd(i) for i in (j, k)}
    if block == "k11":
        op = (z[k].compose(d[j]) + d[j].compose(z[k])).scale(Scalar.of(0, -1))
    elif block == "p20":
        op = z[j].compose(z[k]).scale(_I)
    elif block == "p02":
        op = d[j].compose(d[k]).scale(Scalar.of(0, 4))
    else:
        raise ValueError(f"unknown sp block {block!r}")
    if model.which == "fock":
        return op
    if model.which == "schrodinger":
        zimg = lambda v: LinOp.mul_by(Polynomial.variable(v)).scale(_4PI) - LinOp.partial(v)
        dimg = lambda v: LinOp.partial(v).scale(Scalar.of(Fraction(1, 4), 0, -1))
        return op.substitute(zimg, dimg)
    raise ValueError("sp_op is defined for the scalar fock/schrodinger models")


# ---------------------------------------------------------------------------
# Intertwiner and the gaussian-relative inner product
# ---------------------------------------------------------------------------

def intertwine(fock_elem: Polynomial, dim: int) -> SchrodingerElement:
    """Image of a Fock polynomial in z_1..z_N under the unique intertwiner
    sending 1 to the vacuum; z^m goes to (-A-)^m applied to the vacuum."""
    out = Polynomial.zero()
    for mono, c in fock_elem.terms.items():
        img = Polynomial.constant(c)
        for v, e in mono:
            if v.kind != "Z" or v.row > dim:
                raise ValueError(f"not a Fock variable of dimension {dim}: {v}")
            neg_am = LinOp.mul_by(Polynomial.variable(v)).scale(_4PI) - LinOp.partial(v)
            for _ in range(e):
                img = neg_am.apply(img)
        out = out + img
    return SchrodingerElement(out)


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def _moment(n: int) -> Scalar:
    """Gaussian-relative moment of x^n: odd vanish, even are
    (n-1)!! / (4 pi)^(n/2)."""
    if n % 2:
        return Scalar.zero()
    k = n // 2
    return Scalar.of(Fraction(_double_factorial(n - 1), 4 ** k), 0, -k)


def inner_product_rel(a: SchrodingerElement, b: SchrodingerElement) -> Scalar:
    """<a, b> / <vacuum, vacuum>, conjugate-linear in b, via exact moments."""
    total = Scalar.zero()
    for m1, c1 in a.poly.terms.items():
        for m2, c2 in b.poly.terms.items():
            exps: dict[VariableId, int] = {}
            for v, e in m1:
                exps[v] = exps.get(v, 0) + e
            for v, e in m2:
                exps[v] = exps.get(v, 0) + e
            factor = c1 * c2.conjugate()
            for e in exps.values():
                factor = factor * _moment(e)
                if factor.is_zero():
                    break
            total = total + factor
    return total


# ---------------------------------------------------------------------------
# u(p,q) operators in the matrix models
# ---------------------------------------------------------------------------

C_PLUS = Scalar.i_unit()
C_MINUS = Scalar.i_unit()


def column_kinds(sig: Signature, model: ModelTag) -> list[str]:
    """Per-column realization over columns 1..max(r, s):

    'doubled'     Fock holomorphic (x) conjugate tensor factor,
    'schrodinger' the gaussian-conjugated intertwined version of 'doubled',
    'pure'        holomorphic only,
    'conj'        conjugate only (occurs when s > r).
    """
    if model.which == "schrodinger":
        raise ValueError("matrix operators need a fock or mixed model tag")
    kinds = []
    for col in range(1, max(sig.r, sig.s) + 1):
        if col <= model.split:
            kinds.append("doubled" if model.which == "fock" else "schrodinger")
        elif col <= sig.r:
            kinds.append("pure")
        else:
            kinds.append("conj")
    return kinds


def _mult(v: VariableId) -> LinOp:
    return LinOp.mul_by(Polynomial.variable(v))


def _m_op(v: VariableId) -> LinOp:
    """Schrodinger-column creation factor M_V = V - (1/2pi) d/dVbar."""
    return _mult(v) - LinOp.partial(v.conjugate()).scale(Scalar.of(Fraction(1, 2), 0, -1))


def upq_op_model(sig: Signature, model: ModelTag, block: str, a: int, b: int,
                 c_plus: Scalar = C_PLUS, c_minus: Scalar = C_MINUS) -> LinOp:
    """The u(p,q) operator for the given block, summed over all columns of
    the model.  Blocks: k_gl_p(a,b), k_gl_q(a,b), pplus(i,j), pminus(i,j)."""
    p, q = sig.p, sig.q
    if block in ("k_gl_p",):
        if not (1 <= a <= p and 1 <= b <= p):
            raise IndexError("k_gl_p index out of range")
    elif block in ("k_gl_q",):
        if not (1 <= a <= q and 1 <= b <= q):
            raise IndexError("k_gl_q index out of range")
    else:
        if not (1 <= a <= p and 1 <= b <= q):
            raise IndexError("p-block index out of range")
    cbar_plus = c_plus.conjugate()
    cbar_minus = c_minus.conjugate()
    parts = []
    for col, kind in enumerate(column_kinds(sig, model), start=1):
        holo = kind in ("pure", "doubled", "schrodinger")
        conj = kind in ("doubled", "schrodinger", "conj")
        intertwined = kind == "schrodinger"
        if block == "k_gl_p":
            if holo:
                parts.append(-(_mult(X(b, col)).compose(LinOp.partial(X(a, col)))))
            if conj:
                parts.append(_mult(Xbar(a, col)).compose(LinOp.partial(Xbar(b, col))))
        elif block == "k_gl_q":
            if holo:
                op = _mult(Y(a, col)).compose(LinOp.partial(Y(b, col)))
                if a == b:
                    op = op + LinOp.identity()
                parts.append(op)
            if conj:
                op = -(_mult(Ybar(b, col)).compose(LinOp.partial(Ybar(a, col))))
                if a == b:
                    op = op - LinOp.identity()
                parts.append(op)
        elif block == "pplus":
            if intertwined:
                parts.append(_m_op(X(a, col)).compose(_m_op(Y(b, col))).scale(c_plus))
                parts.append(LinOp.partial(Xbar(a, col)).compose(LinOp.partial(Ybar(b, col))).scale(cbar_minus))
            else:
                if holo:
                    parts.append(LinOp.mul_by(
                        Polynomial.variable(X(a, col)) * Polynomial.variable(Y(b, col))).scale(c_plus))
                if conj:
                    parts.append(LinOp.partial(Xbar(a, col)).compose(LinOp.partial(Ybar(b, col))).scale(cbar_minus))
        elif block == "pminus":
            if intertwined:
                parts.append(LinOp.partial(X(a, col)).compose(LinOp.partial(Y(b, col))).scale(c_minus))
                parts.append(_m_op(Xbar(a, col)).compose(_m_op(Ybar(b, col))).scale(cbar_plus))
            else:
                if holo:
                    parts.append(LinOp.partial(X(a, col)).compose(LinOp.partial(Y(b, col))).scale(c_minus))
                if conj:
                    parts.append(LinOp.mul_by(
                        Polynomial.variable(Xbar(a, col)) * Polynomial.variable(Ybar(b, col))).scale(cbar_plus))
        else:
            raise ValueError(f"unknown u(p,q) block {block!r}")
    return op_sum(parts)


def upq_op(sig: Signature, block: str, a: int, b: int) -> LinOp:
    """Calibrated operator in the pure Fock model on P(M_{p x r} + M_{q x r})."""
    cal = calibrate_structure(sig)
    return upq_op_model(sig, FOCK, block, a, b, cal.c_plus, cal.c_minus)


# ---------------------------------------------------------------------------
# Calibration: pin (c_plus, c_minus) and certify the bracket relations
# ---------------------------------------------------------------------------

class CalibrationError(RuntimeError):
    """Raised when no scaling of the p-blocks closes the bracket relations —
    this signals an implementation bug, not bad input data."""


@dataclass(frozen=True)
class CalibrationReport:
    sig: Signature
    c_plus: Scalar
    c_minus: Scalar
    verified: tuple[str, ...] = field(default_factory=tuple)

    def lines(self) -> list[str]:
        out = [f"calibration p={self.sig.p} q={self.sig.q} r={self.sig.r}: "
               f"c_plus={self.c_plus!r} c_minus={self.c_minus!r}"]
        out.extend(f"  verified {v}" for v in self.verified)
        return out


_CAL_CACHE: dict[tuple[int, int, int], CalibrationReport] = {}
_CAL_LOCK = threading.Lock()


def _abstract_image(sig: Signature, a: int, b: int, c_plus, c_minus) -> LinOp:
    """Phi(E_{a,b}) for the (p+q) x (p+q) elementary matrix, under the fixed
    labeling: gl(p) block -> k_gl_p, gl(q) block -> k_gl_q,
    E_{i,p+j} -> pminus(i,j), E_{p+j,i} -> pplus(i,j)."""
    p = sig.p
    if a <= p and b <= p:
        return upq_op_model(sig, FOCK, "k_gl_p", a, b, c_plus, c_minus)
    if a > p and b > p:
        return upq_op_model(sig, FOCK, "k_gl_q", a - p, b - p, c_plus, c_minus)
    if a <= p < b:
        return upq_op_model(sig, FOCK, "pminus", a, b - p, c_plus, c_minus)
    return upq_op_model(sig, FOCK, "pplus", b, a - p, c_plus, c_minus)


def calibrate_structure(sig: Signature) -> CalibrationReport:
    """Determine (c_plus, c_minus) making Phi a Lie algebra homomorphism onto
    the u(p,q) operator family, and certify every bracket [E_ab, E_cd].

    The product c_plus * c_minus is forced; the scale between the two is free
    (rescaling c_plus by t and c_minus by 1/t preserves all brackets), and the
    symmetric representative c_plus = c_minus = i is recorded.  Results are
    cached per (p, q, r)."""
    key = (sig.p, sig.q, sig.r)
    with _CAL_LOCK:
        if key in _CAL_CACHE:
            return _CAL_CACHE[key]
    if sig.p < 1 or sig.q < 1 or sig.r < 1:
        raise ValueError("calibration needs p, q, r >= 1")

    # Force the product from one mixed bracket, starting at the ansatz shape
    # i * (z z) and i * (dd): [pminus(1,1), pplus(1,1)] must equal
    # Phi(E_{1,p+1} E_{p+1,1} bracket) = k_gl_p(1,1) - k_gl_q(1,1).
    one = Scalar.one()
    target = (upq_op_model(sig, FOCK, "k_gl_p", 1, 1, one, one)
              - upq_op_model(sig, FOCK, "k_gl_q", 1, 1, one, one))
    raw = upq_op_model(sig, FOCK, "pminus", 1, 1, one, one).commutator(
        upq_op_model(sig, FOCK, "pplus", 1, 1, one, one))
    product = None
    for cand in (Scalar.of(-1), Scalar.of(1), Scalar.of(0, 1), Scalar.of(0, -1)):
        if raw.scale(cand) == target:
            product = cand
            break
    if product is None:
        raise CalibrationError("no scalar makes [pminus, pplus] close onto the k blocks")
    if product != Scalar.of(-1):
        raise CalibrationError(f"unexpected bracket normalization {product!r}")
    c_plus = Scalar.i_unit()
    c_minus = Scalar.i_unit()   # i * i = -1 = forced product

    # Certify the whole family on elementary matrices.
    n = sig.p + sig.q
    verified = []
    img = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            img[(a, b)] = _abstract_image(sig, a, b, c_plus, c_minus)
    checked = 0
    for (a, b), op1 in img.items():
        for (c, d), op2 in img.items():
            expect = LinOp.zero()
            if b == c:
                expect = expect + img[(a, d)]
            if d == a:
                expect = expect - img[(c, b)]
            if op1.commutator(op2) != expect:
                raise CalibrationError(
                    f"bracket [E{a}{b}, E{c}{d}] fails to close for p={sig.p} q={sig.q} r={sig.r}")
            checked += 1
    verified.append(f"all {checked} elementary brackets of gl({n}) close exactly")
    report = CalibrationReport(sig=sig, c_plus=c_plus, c_minus=c_minus,
                               verified=tuple(verified))
    with _CAL_LOCK:
        _CAL_CACHE.setdefault(key, report)
        return _CAL_CACHE[key]
