"""Canonical multivariate polynomials over the exact Scalar coefficients.

Variables are matrix slots X_{i,nu}, Y_{j,nu}, their conjugates, and a
reserved Z kind for the one-column coordinates of the scalar oscillator
models.  The global variable order is (kind, col, row) lexicographic with
kinds ranked X < Y < Xbar < Ybar < Z; it is fixed once per process so that
canonical forms and downstream wedge signs are reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from .scalars import Scalar

KINDS = ("X", "Y", "Xbar", "Ybar", "Z")
_KIND_RANK = {k: i for i, k in enumerate(KINDS)}
_CONJ_KIND = {"X": "Xbar", "Xbar": "X", "Y": "Ybar", "Ybar": "Y", "Z": "Z"}


class VariableId(NamedTuple):
    kind: str
    row: int
    col: int

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.col, self.row)

    def conjugate(self) -> "VariableId":
        return VariableId(_CONJ_KIND[self.kind], self.row, self.col)

    def token(self) -> str:
        return f"{self.kind}:{self.row}:{self.col}"

    @classmethod
    def from_token(cls, tok: str) -> "VariableId":
        kind, row, col = tok.split(":")
        if kind not in KINDS:
            raise ValueError(f"unknown variable kind {kind!r}")
        return cls(kind, int(row), int(col))


def X(i: int, nu: int) -> VariableId:
    return VariableId("X", i, nu)


def Y(j: int, nu: int) -> VariableId:
    return VariableId("Y", j, nu)


def Xbar(i: int, nu: int) -> VariableId:
    return VariableId("Xbar", i, nu)


def Ybar(j: int, nu: int) -> VariableId:
    return VariableId("Ybar", j, nu)


def Zvar(j: int) -> VariableId:
    return VariableId("Z", j, 1)


# A monomial is a tuple of (VariableId, exponent>0) pairs sorted by the
# global variable order.  The empty tuple is the constant monomial.
Monomial = tuple


def monomial(pairs: Iterable[tuple[VariableId, int]]) -> Monomial:
    acc: dict[VariableId, int] = {}
    for v, e in pairs:
        if e:
            acc[v] = acc.get(v, 0) + e
    items = [(v, e) for v, e in acc.items() if e != 0]
    if any(e < 0 for _, e in items):
        raise ValueError("negative exponent in monomial")
    items.sort(key=lambda p: p[0].sort_key())
    return tuple(items)


def monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return monomial(list(m1) + list(m2))


def monomial_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_key(m: Monomial):
    return tuple((v.sort_key(), e) for v, e in m)


class Polynomial:
    """Immutable canonical polynomial: {Monomial: nonzero Scalar}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(c, Scalar):
                    c = Scalar.of(c)
                if not c.is_zero():
                    clean[m] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls({(): Scalar.one()})

    @classmethod
    def constant(cls, c) -> "Polynomial":
        if not isinstance(c, Scalar):
            c = Scalar.of(c)
        return cls({(): c})

    @classmethod
    def variable(cls, v: VariableId) -> "Polynomial":
        return cls({monomial([(v, 1)]): Scalar.one()})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                out[m] = out[m] + c
            else:
                out[m] = c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        out: dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                c = c1 * c2
                if m in out:
                    out[m] = out[m] + c
                else:
                    out[m] = c
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        if not isinstance(c, Scalar):
            c = Scalar.of(c)
        return Polynomial({m: c0 * c for m, c0 in self.terms.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((m, c) for m, c in self.terms.items()))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def variables(self) -> set[VariableId]:
        out: set[VariableId] = set()
        for m in self.terms:
            out.update(v for v, _ in m)
        return out

    def constant_term(self) -> Scalar:
        return self.terms.get((), Scalar.zero())

    def coefficient(self, m: Monomial) -> Scalar:
        return self.terms.get(m, Scalar.zero())

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]))

    # -- calculus and substitution ------------------------------------------

    def partial(self, v: VariableId) -> "Polynomial":
        out: dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            for idx, (var, e) in enumerate(m):
                if var == v:
                    rest = list(m)
                    if e == 1:
                        del rest[idx]
                    else:
                        rest[idx] = (var, e - 1)
                    mm = tuple(rest)
                    cc = c * e
                    out[mm] = out.get(mm, Scalar.zero()) + cc
                    break
        return Polynomial(out)

    def subs_zero(self, dead) -> "Polynomial":
        """Set every variable v with dead(v) true to zero."""
        out: dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            if any(dead(v) for v, _ in m):
                continue
            out[m] = out.get(m, Scalar.zero()) + c
        return Polynomial(out)

    def map_variables(self, fn) -> "Polynomial":
        """Apply an injective relabeling VariableId -> VariableId."""
        out: dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            mm = monomial([(fn(v), e) for v, e in m])
            out[mm] = out.get(mm, Scalar.zero()) + c
        return Polynomial(out)

    def conjugate(self) -> "Polynomial":
        """Complex conjugation: swap X<->Xbar, Y<->Ybar, conjugate Scalars."""
        out: dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            mm = monomial([(v.conjugate(), e) for v, e in m])
            out[mm] = out.get(mm, Scalar.zero()) + c.conjugate()
        return Polynomial(out)

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"{v.kind}{v.row}{v.col}^{e}" if e > 1 else f"{v.kind}{v.row}{v.col}"
                            for v, e in m) or "1"
            bits.append(f"({c!r})*{mono}")
        return "Poly(" + " + ".join(bits) + ")"
