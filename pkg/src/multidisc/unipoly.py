"""Dense univariate polynomials with exact rational coefficients.

``Rational`` is an alias for :class:`fractions.Fraction`: always reduced,
positive denominator, arbitrary precision.  ``UniPoly`` stores coefficients
ascending by power; the zero polynomial is the empty coefficient tuple so
that ``degree`` is never silently queried on it.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm, perm
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]


class UniPoly:
    """Immutable a0 + a1*x + ... + an*x^n with Fraction coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_descending(cls, coeffs: Iterable[Scalar]) -> "UniPoly":
        """Build from a coefficient sequence given highest power first."""
        return cls(list(coeffs)[::-1])

    def descending_coeffs(self) -> tuple[Fraction, ...]:
        return self.coeffs[::-1]

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        """Coefficient of x^i, zero beyond the degree."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def derivative(self, order: int = 1) -> "UniPoly":
        """Formal derivative of the given order; zero when order exceeds degree."""
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        if order == 0:
            return self
        if order >= len(self.coeffs):
            return UniPoly()
        return UniPoly(
            self.coeffs[i] * perm(i, order)
            for i in range(order, len(self.coeffs))
        )

    def mul_power(self, k: int) -> "UniPoly":
        """Multiply by x^k (shift coefficients up by k)."""
        if k < 0:
            raise ValueError("power must be nonnegative")
        if self.is_zero or k == 0:
            return self
        return UniPoly((Fraction(0),) * k + self.coeffs)

    def eval(self, point: Scalar) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def clear_denominators(self) -> tuple["UniPoly", Fraction]:
        """Return (G, c) with G = c * self, G integer-coefficient, content 1, c > 0."""
        if self.is_zero:
            raise ValueError("cannot clear denominators of the zero polynomial")
        den_lcm = lcm(*(c.denominator for c in self.coeffs))
        ints = [c.numerator * (den_lcm // c.denominator) for c in self.coeffs]
        content = gcd(*(abs(v) for v in ints))
        scaled = UniPoly(v // content for v in ints)
        return scaled, Fraction(den_lcm, content)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return UniPoly(summed)

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = UniPoly([1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if not isinstance(other, UniPoly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading
        quo = [Fraction(0)] * max(len(rem) - d, 0)
        for i in range(len(rem) - d - 1, -1, -1):
            factor = rem[i + d] / lead
            if factor:
                quo[i] = factor
                for j, c in enumerate(other.coeffs):
                    rem[i + j] -= factor * c
        return UniPoly(quo), UniPoly(rem[:d])

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)
