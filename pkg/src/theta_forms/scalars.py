"""Exact coefficient arithmetic: Gaussian rationals times Laurent monomials in a formal pi.

Every identity in the symbolic layer is stated over the ring Q(i)[pi, 1/pi],
where pi is an uninterpreted invertible symbol.  A Scalar is stored as a map
from pi-exponent to a nonzero Gaussian rational (re, im), both fractions in
lowest terms.  Zero is the empty map; equality is structural.
"""

from __future__ import annotations

from fractions import Fraction


def _gauss(re, im) -> tuple[Fraction, Fraction]:
    return (Fraction(re), Fraction(im))


class Scalar:
    """An element of Q(i)[pi, 1/pi] in canonical form."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: {pi_exponent: (re, im)} with (re, im) != (0, 0)
        clean = {}
        if terms:
            for k, (re, im) in terms.items():
                re, im = Fraction(re), Fraction(im)
                if re or im:
                    clean[int(k)] = (re, im)
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def of(cls, re, im=0, pi_exp: int = 0) -> "Scalar":
        return cls({pi_exp: _gauss(re, im)})

    @classmethod
    def zero(cls) -> "Scalar":
        return cls()

    @classmethod
    def one(cls) -> "Scalar":
        return cls.of(1)

    @classmethod
    def i_unit(cls) -> "Scalar":
        return cls.of(0, 1)

    @classmethod
    def pi(cls, exp: int = 1) -> "Scalar":
        return cls.of(1, 0, exp)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        """True when the value lies in Q (single pi^0 term, no imaginary part)."""
        if not self.terms:
            return True
        if set(self.terms) != {0}:
            return False
        return self.terms[0][1] == 0

    def as_fraction(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_rational():
            raise ValueError(f"not a plain rational: {self!r}")
        return self.terms[0][0]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        out = dict(self.terms)
        for k, (re, im) in other.terms.items():
            r0, i0 = out.get(k, (Fraction(0), Fraction(0)))
            out[k] = (r0 + re, i0 + im)
        return Scalar(out)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        return Scalar({k: (-re, -im) for k, (re, im) in self.terms.items()})

    def __mul__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            other = Scalar.of(other)
        out: dict[int, tuple[Fraction, Fraction]] = {}
        for k1, (a, b) in self.terms.items():
            for k2, (c, d) in other.terms.items():
                k = k1 + k2
                re = a * c - b * d
                im = a * d + b * c
                r0, i0 = out.get(k, (Fraction(0), Fraction(0)))
                out[k] = (r0 + re, i0 + im)
        return Scalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            return self * Scalar.of(Fraction(1, 1) / Fraction(other))
        return self * other.inverse()

    def inverse(self) -> "Scalar":
        """Inverse of a one-term scalar c*pi^k; raises otherwise."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("only monomial scalars are invertible here")
        (k, (re, im)), = self.terms.items()
        n = re * re + im * im
        return Scalar({-k: (re / n, -im / n)})

    def conjugate(self) -> "Scalar":
        return Scalar({k: (re, -im) for k, (re, im) in self.terms.items()})

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar.one()
        for _ in range(n):
            out = out * self
        return out

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.of(other)
        return isinstance(other, Scalar) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if self.is_zero():
            return "Scalar(0)"
        bits = []
        for k in sorted(self.terms):
            re, im = self.terms[k]
            part = f"({re}{'+' if im >= 0 else ''}{im}i)" if im else f"{re}"
            bits.append(part if k == 0 else f"{part}*pi^{k}")
        return "Scalar(" + " + ".join(bits) + ")"

    def latex(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for k in sorted(self.terms):
            re, im = self.terms[k]
            if im == 0:
                coef = str(re)
            elif re == 0:
                coef = f"{im} i"
            else:
                coef = f"({re} {'+' if im > 0 else '-'} {abs(im)} i)"
            if k == 0:
                bits.append(coef)
            elif k == 1:
                bits.append(f"{coef} \\pi")
            else:
                bits.append(f"{coef} \\pi^{{{k}}}")
        return " + ".join(bits)


ZERO = Scalar.zero()
ONE = Scalar.one()
I = Scalar.i_unit()
PI = Scalar.pi()
