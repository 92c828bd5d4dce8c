"""Numeric companion: exact lattice enumeration, representation numbers,
Whittaker factors, Fourier-coefficient assembly, and the one-class
Siegel-Weil sanity check (E8 theta against the divisor-sum Eisenstein
coefficients).

Floating point appears only in the Whittaker exponentials; everything that
feeds an equality check is exact integer or Fraction arithmetic.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Mapping, Sequence


# ---------------------------------------------------------------------------
# Exact Gram matrices
# ---------------------------------------------------------------------------

class GramMatrix:
    """Exact rational symmetric positive-definite matrix."""

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        self.entries = rows
        self.dim = n
        self._ldl = _ldl(rows)  # also certifies positive definiteness

    def quad(self, x: Sequence[int]) -> Fraction:
        """x^T L x, exact."""
        n = self.dim
        total = Fraction(0)
        for i in range(n):
            if x[i] == 0:
                continue
            row = self.entries[i]
            acc = Fraction(0)
            for j in range(n):
                if x[j]:
                    acc += row[j] * x[j]
            total += x[i] * acc
        return total

    def half_norm(self, x: Sequence[int]) -> Fraction:
        return self.quad(x) / 2

    def determinant(self) -> Fraction:
        d = Fraction(1)
        for di in self._ldl[0]:
            d *= di
        return d

    def inverse_diagonal(self) -> list[Fraction]:
        inv = _invert(self.entries)
        return [inv[i][i] for i in range(self.dim)]


def _ldl(rows) -> tuple[list[Fraction], list[list[Fraction]]]:
    """A = U^T D U with U unit upper triangular; requires A positive definite."""
    n = len(rows)
    a = [list(r) for r in rows]
    d = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise ValueError("matrix is not positive definite")
        u[i][i] = Fraction(1)
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(j, n):
                a[j][k] -= d[i] * u[i][j] * u[i][k]
                a[k][j] = a[j][k]
    return d, u


def _invert(rows) -> list[list[Fraction]]:
    n = len(rows)
    a = [list(r) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i, r in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


# ---------------------------------------------------------------------------
# Vector enumeration (Fincke-Pohst with exact bound propagation)
# ---------------------------------------------------------------------------

def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a // gcd(a, b) * b


def enumerate_with_norms(L: GramMatrix, max_norm) -> list[tuple[tuple[int, ...], Fraction]]:
    """All x in Z^n with x^T L x <= 2 * max_norm, with their exact half-norms.

    Fincke-Pohst on the exact LDL factorization, run entirely in integer
    arithmetic: the per-level identity x^T L x = sum_i d_i (x_i + c_i)^2 is
    cleared to a common denominator RD, so bound propagation is exact."""
    max_norm = Fraction(max_norm)
    if max_norm < 0:
        raise ValueError("max_norm must be non-negative")
    bound = 2 * max_norm
    d, u = L._ldl
    n = L.dim
    m = [1] * n
    for i in range(n):
        for j in range(i + 1, n):
            m[i] = _lcm(m[i], u[i][j].denominator)
    w = [[int(u[i][j] * m[i]) for j in range(n)] for i in range(n)]
    rd = bound.denominator
    for i in range(n):
        rd = _lcm(rd, d[i].denominator * m[i] * m[i])
    scale = [rd // (d[i].denominator * m[i] * m[i]) for i in range(n)]
    dn = [d[i].numerator for i in range(n)]
    rem0 = bound.numerator * (rd // bound.denominator)

    out: list[tuple[tuple[int, ...], Fraction]] = []
    x = [0] * n

    def descend(i: int, rem: int):
        if i < 0:
            out.append((tuple(x), (rem0 - rem) / Fraction(2 * rd)))
            return
        cn = 0
        wi = w[i]
        for j in range(i + 1, n):
            if x[j]:
                cn += wi[j] * x[j]
        cap = dn[i] * scale[i]
        k = isqrt(rem // cap)
        mi = m[i]
        lo = -((cn + k) // mi)
        hi = (k - cn) // mi
        for t in range(lo, hi + 1):
            uu = t * mi + cn
            x[i] = t
            descend(i - 1, rem - cap * uu * uu)
        x[i] = 0

    descend(n - 1, rem0)
    out.sort()
    return out


def enumerate_vectors(L: GramMatrix, max_norm) -> list[tuple[int, ...]]:
    """All x in Z^n with x^T L x <= 2 * max_norm, deterministic order."""
    return [x for x, _ in enumerate_with_norms(L, max_norm)]


def rep_numbers(L: GramMatrix, n_max: int) -> dict[int, int]:
    """r_L(n) = #{x : (1/2) x^T L x = n} for integer n = 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    counts = {n: 0 for n in range(n_max + 1)}
    for _, h in enumerate_with_norms(L, n_max):
        if h.denominator == 1 and h <= n_max:
            counts[int(h)] += 1
    return counts


def naive_rep_numbers(L: GramMatrix, n_max: int) -> dict[int, int]:
    """Independent brute-force oracle: full box scan with direct evaluation
    of the quadratic form (no Cholesky recursion).  Small dimensions only."""
    inv_diag = L.inverse_diagonal()
    bounds = []
    for idx in range(L.dim):
        b2 = 2 * n_max * inv_diag[idx]
        k = isqrt(b2.numerator // b2.denominator) + 1
        while k * k * b2.denominator > b2.numerator:
            k -= 1
        bounds.append(k)
    counts = {n: 0 for n in range(n_max + 1)}

    def scan(i: int, vec: list[int]):
        if i == L.dim:
            h = L.half_norm(vec)
            if h.denominator == 1 and 0 <= h <= n_max:
                counts[int(h)] += 1
            return
        for t in range(-bounds[i], bounds[i] + 1):
            scan(i + 1, vec + [t])

    scan(0, [])
    return counts


# ---------------------------------------------------------------------------
# Whittaker functions and Fourier assembly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BetaMatrix:
    """Exact hermitian matrix: entries[(i, j)] = (re, im) fractions."""

    entries: tuple[tuple[tuple[Fraction, Fraction], ...], ...]

    @classmethod
    def from_real(cls, rows: Sequence[Sequence]) -> "BetaMatrix":
        return cls(tuple(tuple((Fraction(x), Fraction(0)) for x in row) for row in rows))

    @classmethod
    def scalar(cls, value) -> "BetaMatrix":
        return cls.from_real([[value]])

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __post_init__(self):
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("beta matrix must be square")
        for i in range(n):
            for j in range(n):
                re1, im1 = self.entries[i][j]
                re2, im2 = self.entries[j][i]
                if re1 != re2 or im1 != -im2:
                    raise ValueError("beta matrix must be hermitian")

    def rank(self) -> int:
        """Exact rank over Q(i) by fraction Gaussian elimination."""
        rows = []
        for row in self.entries:
            c = {}
            for j, (re, im) in enumerate(row):
                if re or im:
                    c[j] = (re, im)
            rows.append(c)
        rank = 0
        while rows:
            row = rows.pop(0)
            if not row:
                continue
            key = min(row)
            piv = row[key]
            rank += 1
            rows = [_elim(r, row, key, piv) for r in rows]
            rows = [r for r in rows if r]
        return rank

    def is_positive_semidefinite(self) -> bool:
        """Exact check on the real part for real beta; leading principal
        minors all >= 0 with a symmetric PSD completion test."""
        n = self.dim
        a = [[Fraction(self.entries[i][j][0]) for j in range(n)] for i in range(n)]
        if any(self.entries[i][j][1] != 0 for i in range(n) for j in range(n)):
            raise NotImplementedError("psd check implemented for real beta")
        # exact LDL with pivoting-free PSD tolerance: all pivots >= 0
        for i in range(n):
            if a[i][i] < 0:
                return False
            if a[i][i] == 0:
                if any(a[i][j] != 0 for j in range(i + 1, n)):
                    return False
                continue
            for j in range(i + 1, n):
                f = a[i][j] / a[i][i]
                for k in range(j, n):
                    a[j][k] -= f * a[i][k]
                    a[k][j] = a[j][k]
        return True


def _cdiv(a, b):
    (ar, ai), (br, bi) = a, b
    n = br * br + bi * bi
    return ((ar * br + ai * bi) / n, (ai * br - ar * bi) / n)


def _cmul(a, b):
    (ar, ai), (br, bi) = a, b
    return (ar * br - ai * bi, ar * bi + ai * br)


def _elim(r, pivot_row, key, piv):
    if key not in r:
        return r
    f = _cdiv(r[key], piv)
    out = dict(r)
    for k, v in pivot_row.items():
        fr, fi = _cmul(f, v)
        cr, ci = out.get(k, (Fraction(0), Fraction(0)))
        cr, ci = cr - fr, ci - fi
        if cr or ci:
            out[k] = (cr, ci)
        elif k in out:
            del out[k]
    return out


@dataclass(frozen=True)
class WhittakerPoint:
    """Iwasawa data g' = n'(b) m'(a): a real invertible, b real symmetric."""

    a: tuple[tuple[float, ...], ...]
    b: tuple[tuple[float, ...], ...]

    @classmethod
    def of(cls, a, b) -> "WhittakerPoint":
        return cls(tuple(tuple(float(x) for x in row) for row in a),
                   tuple(tuple(float(x) for x in row) for row in b))

    @classmethod
    def standard(cls, r: int) -> "WhittakerPoint":
        eye = tuple(tuple(1.0 if i == j else 0.0 for j in range(r)) for i in range(r))
        zero = tuple(tuple(0.0 for _ in range(r)) for _ in range(r))
        return cls(eye, zero)

    @property
    def dim(self) -> int:
        return len(self.a)

    def tau(self) -> list[list[complex]]:
        """tau = u + i v with u = b and v = a a^T (Siegel upper half space)."""
        r = self.dim
        v = [[sum(self.a[i][k] * self.a[j][k] for k in range(r)) for j in range(r)]
             for i in range(r)]
        return [[complex(self.b[i][j], v[i][j]) for j in range(r)] for i in range(r)]

    def det_a(self) -> float:
        m = [list(row) for row in self.a]
        n = self.dim
        det = 1.0
        for col in range(n):
            piv = max(range(col, n), key=lambda r_: abs(m[r_][col]))
            if abs(m[piv][col]) == 0.0:
                raise ValueError("singular a block")
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det *= m[col][col]
            for r_ in range(col + 1, n):
                f = m[r_][col] / m[col][col]
                for c_ in range(col, n):
                    m[r_][c_] -= f * m[col][c_]
        return det


LITERAL = "literal"
CLASSICAL = "classical"


def whittaker(beta: BetaMatrix, g: WhittakerPoint, weight_dim: int,
              convention: str = LITERAL) -> complex:
    """W_beta(g') = |det a|^((p+q)/2) * exp(tr beta tau).

    convention="literal" evaluates the displayed formula as printed;
    "classical" inserts the usual 2 pi i in the exponent.  The discrepancy is
    exposed, not silently resolved.
    """
    if beta.dim != g.dim:
        raise ValueError("beta and g must share the matrix size")
    tau = g.tau()
    tr = 0j
    for i in range(beta.dim):
        for j in range(beta.dim):
            re, im = beta.entries[i][j]
            tr += complex(re, im) * tau[j][i]
    if convention == CLASSICAL:
        tr = 2j * cmath.pi * tr
    elif convention != LITERAL:
        raise ValueError(f"unknown Whittaker convention {convention!r}")
    return abs(g.det_a()) ** (weight_dim / 2) * cmath.exp(tr)


def fourier_assemble(L: GramMatrix, weights, g: WhittakerPoint, n_max: int,
                     weight_dim: int | None = None, default=Fraction(0),
                     convention: str = LITERAL) -> dict[int, complex]:
    """Rank-one Fourier skeleton: coefficient(n) = (sum of weights over the
    norm-n shell) * W_n(g').  weights is a mapping vector -> rational (with
    the given default) or a callable."""
    if weight_dim is None:
        weight_dim = L.dim
    if isinstance(weights, Mapping):
        lookup: Callable = lambda v: weights.get(v, default)
    else:
        lookup = weights
    shells: dict[int, Fraction] = {n: Fraction(0) for n in range(n_max + 1)}
    for x, h in enumerate_with_norms(L, n_max):
        if h.denominator == 1 and h <= n_max:
            shells[int(h)] += Fraction(lookup(x))
    out = {}
    for n in range(n_max + 1):
        w = whittaker(BetaMatrix.scalar(n), g, weight_dim, convention)
        out[n] = complex(shells[n]) * w
    return out


# ---------------------------------------------------------------------------
# E8 and the Eisenstein check
# ---------------------------------------------------------------------------

# Gram matrix of the E8 root lattice (Cartan matrix, Bourbaki labeling):
# even diagonal, determinant 1.
E8_GRAM_ENTRIES = (
    (2, 0, -1, 0, 0, 0, 0, 0),
    (0, 2, 0, -1, 0, 0, 0, 0),
    (-1, 0, 2, -1, 0, 0, 0, 0),
    (0, -1, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, 0, 0, -1, 2),
)


def e8_gram() -> GramMatrix:
    L = GramMatrix(E8_GRAM_ENTRIES)
    if L.determinant() != 1:
        raise AssertionError("E8 gram determinant must be 1")
    if any(L.entries[i][i] % 2 for i in range(8)):
        raise AssertionError("E8 gram diagonal must be even")
    return L


def sigma3(n: int) -> int:
    """Divisor sum sigma_3(n), the Eisenstein-side oracle."""
    return sum(d ** 3 for d in range(1, n + 1) if n % d == 0)


@dataclass(frozen=True)
class EisensteinReport:
    rows: tuple[tuple[int, int, int], ...]  # (n, theta side, eisenstein side)

    @property
    def passed(self) -> bool:
        return all(a == b for _, a, b in self.rows)

    def lines(self) -> list[str]:
        out = []
        for n, a, b in self.rows:
            status = "ok" if a == b else "MISMATCH"
            out.append(f"n={n}: r_E8(n)={a}  240*sigma3(n)={b}  [{status}]")
        return out


def eisenstein_check(n_max: int, L: GramMatrix | None = None) -> EisensteinReport:
    """One-class genus instance of Siegel-Weil: the theta coefficients of the
    lattice (E8 by default) against the Eisenstein side 240 sigma_3(n).
    Both sides exact integers; a non-E8 lattice reports its mismatches."""
    if n_max > 20:
        raise ValueError("desk-scale check: n_max <= 20")
    counts = rep_numbers(L if L is not None else e8_gram(), n_max)
    rows = tuple((n, counts[n], 240 * sigma3(n)) for n in range(1, n_max + 1))
    return EisensteinReport(rows)
