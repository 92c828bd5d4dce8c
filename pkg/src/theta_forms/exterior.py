"""Exterior algebra on the tangent generators xi_{i,j}, xibar_{i,j}.

Wedge monomials are strictly increasing tuples of generators under the
fixed order: every xi before every xibar, then (col, row) lexicographic.
A Form maps wedge monomials to nonzero Polynomial coefficients.  Signs come
from counting transpositions against this order, never from conventions
chosen per call site.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from .poly import Polynomial
from .scalars import Scalar

_GEN_KIND_RANK = {"xi": 0, "xibar": 1}
_GEN_CONJ = {"xi": "xibar", "xibar": "xi"}


class WedgeGen(NamedTuple):
    kind: str   # "xi" | "xibar"
    row: int
    col: int

    def sort_key(self):
        return (_GEN_KIND_RANK[self.kind], self.col, self.row)

    def conjugate(self) -> "WedgeGen":
        return WedgeGen(_GEN_CONJ[self.kind], self.row, self.col)

    def token(self) -> str:
        return f"{self.kind}:{self.row}:{self.col}"

    @classmethod
    def from_token(cls, tok: str) -> "WedgeGen":
        kind, row, col = tok.split(":")
        if kind not in _GEN_KIND_RANK:
            raise ValueError(f"unknown wedge generator kind {kind!r}")
        return cls(kind, int(row), int(col))


def xi(i: int, j: int) -> WedgeGen:
    return WedgeGen("xi", i, j)


def xibar(i: int, j: int) -> WedgeGen:
    return WedgeGen("xibar", i, j)


WedgeMonomial = tuple  # strictly increasing tuple of WedgeGen


def wedge_monomial(gens: Iterable[WedgeGen]):
    """Sort generators into canonical order.

    Returns (sign, monomial) or (0, ()) when a generator repeats.
    """
    gens = list(gens)
    sign = 1
    # insertion sort, counting transpositions; n is tiny
    for i in range(1, len(gens)):
        j = i
        while j > 0 and gens[j - 1].sort_key() > gens[j].sort_key():
            gens[j - 1], gens[j] = gens[j], gens[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(gens, gens[1:]):
        if a == b:
            return 0, ()
    return sign, tuple(gens)


def merge_monomials(w1: WedgeMonomial, w2: WedgeMonomial):
    """Merge two canonical monomials; (sign, merged) or (0, ()) on repeats."""
    out = []
    sign = 1
    i = j = 0
    while i < len(w1) and j < len(w2):
        a, b = w1[i], w2[j]
        if a == b:
            return 0, ()
        if a.sort_key() < b.sort_key():
            out.append(a)
            i += 1
        else:
            out.append(b)
            j += 1
            if (len(w1) - i) % 2:
                sign = -sign
    out.extend(w1[i:])
    out.extend(w2[j:])
    return sign, tuple(out)


def bidegree(w: WedgeMonomial) -> tuple[int, int]:
    a = sum(1 for g in w if g.kind == "xi")
    return (a, len(w) - a)


class Form:
    """Exterior-algebra element with Polynomial coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, p in terms.items():
                if not p.is_zero():
                    clean[w] = p
        self.terms = clean

    @classmethod
    def zero(cls) -> "Form":
        return cls()

    @classmethod
    def unit(cls) -> "Form":
        return cls({(): Polynomial.one()})

    @classmethod
    def of_poly(cls, p: Polynomial) -> "Form":
        return cls({(): p})

    @classmethod
    def generator(cls, g: WedgeGen, coeff: Polynomial | None = None) -> "Form":
        return cls({(g,): coeff if coeff is not None else Polynomial.one()})

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "Form") -> "Form":
        out = dict(self.terms)
        for w, p in other.terms.items():
            out[w] = out.get(w, Polynomial.zero()) + p
        return Form(out)

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __neg__(self) -> "Form":
        return Form({w: -p for w, p in self.terms.items()})

    def scale(self, c) -> "Form":
        if isinstance(c, (int, Fraction)):
            c = Scalar.of(c)
        if isinstance(c, Scalar):
            return Form({w: p.scale(c) for w, p in self.terms.items()})
        return Form({w: p * c for w, p in self.terms.items()})  # Polynomial

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar, Polynomial)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Form) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    # -- exterior product ----------------------------------------------------

    def wedge(self, other: "Form") -> "Form":
        out: dict[WedgeMonomial, Polynomial] = {}
        for w1, p1 in self.terms.items():
            for w2, p2 in other.terms.items():
                sign, w = merge_monomials(w1, w2)
                if sign == 0:
                    continue
                p = p1 * p2
                if sign < 0:
                    p = -p
                out[w] = out.get(w, Polynomial.zero()) + p
        return Form(out)

    # -- queries -------------------------------------------------------------

    def coefficient(self, gens) -> Polynomial:
        """Coefficient at a wedge monomial, given in any generator order."""
        sign, ww = wedge_monomial(gens)
        if sign == 0:
            return Polynomial.zero()
        p = self.terms.get(ww, Polynomial.zero())
        return -p if sign < 0 else p

    def bidegree_support(self) -> set[tuple[int, int]]:
        return {bidegree(w) for w in self.terms}

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def bidegree_part(self, a: int, b: int) -> "Form":
        return Form({w: p for w, p in self.terms.items() if bidegree(w) == (a, b)})

    def max_term_count(self) -> int:
        return sum(len(p.terms) for p in self.terms.values())

    # -- coefficient-wise transforms ------------------------------------------

    def map_coefficients(self, fn) -> "Form":
        out: dict[WedgeMonomial, Polynomial] = {}
        for w, p in self.terms.items():
            q = fn(p)
            if not q.is_zero():
                out[w] = out.get(w, Polynomial.zero()) + q
        return Form(out)

    def apply_op(self, op) -> "Form":
        return self.map_coefficients(op.apply)

    def map_generators(self, fn) -> "Form":
        """Relabel generators through an injective map; recompute signs."""
        out: dict[WedgeMonomial, Polynomial] = {}
        for w, p in self.terms.items():
            sign, ww = wedge_monomial([fn(g) for g in w])
            if sign == 0:
                continue
            q = p if sign > 0 else -p
            out[ww] = out.get(ww, Polynomial.zero()) + q
        return Form(out)

    def gen_derivation(self, rule) -> "Form":
        """Extend a linear action on generators as a derivation of the wedge.

        rule(g) returns a list of (Scalar, WedgeGen) pairs.
        """
        out = Form.zero()
        for w, p in self.terms.items():
            for t, g in enumerate(w):
                for c, g2 in rule(g):
                    sign, ww = wedge_monomial(w[:t] + (g2,) + w[t + 1:])
                    if sign == 0:
                        continue
                    q = p.scale(c if sign > 0 else -c)
                    out = out + Form({ww: q})
        return out

    def conjugate(self) -> "Form":
        """Swap xi<->xibar and conjugate coefficients; signs recomputed."""
        out = Form.zero()
        for w, p in self.terms.items():
            sign, ww = wedge_monomial([g.conjugate() for g in w])
            if sign == 0:
                continue
            q = p.conjugate()
            out = out + Form({ww: q if sign > 0 else -q})
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: tuple(g.sort_key() for g in t[0]))

    def __repr__(self):
        if not self.terms:
            return "Form(0)"
        bits = []
        for w, p in self.sorted_terms():
            ws = "^".join(f"{g.kind}{g.row}{g.col}" for g in w) or "1"
            bits.append(f"({p!r}) {ws}")
        return "Form(" + " + ".join(bits) + ")"


def wedge_all(forms: Iterable[Form]) -> Form:
    out = Form.unit()
    for f in forms:
        out = out.wedge(f)
    return out
