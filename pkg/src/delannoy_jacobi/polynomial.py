"""Exact univariate polynomial arithmetic over the rationals.

A polynomial is a dense tuple of Fraction coefficients, index k holding the
coefficient of x**k.  The zero polynomial is the empty tuple and has degree
-1.  Trailing zero coefficients are stripped on construction, so equality is
plain coefficient comparison and instances are safely hashable.

Everything is immutable and exact: no floats, no rounding, ever.  The
transforms every other module leans on live here: affine composition,
derivative and zero-based antiderivative, definite integration, division by
x, and the denominator-clearing substitution x -> x/(x-1).
"""

import math
from fractions import Fraction

# The ground field.  Fraction already guarantees lowest terms and a positive
# denominator, which is exactly the normalization the rest of the code needs.
Rational = Fraction

Scalar = int | Fraction


class NonzeroConstantTerm(ValueError):
    """Division by x was requested for a polynomial with p(0) != 0."""


class DegreeTooLarge(ValueError):
    """A substitution was requested with a clearing exponent below deg(p)."""


def binom(r: int, k: int) -> int:
    """Generalized binomial coefficient C(r, k) = r(r-1)...(r-k+1)/k!.

    Defined for any integer r; k < 0 yields 0 (the usual summation
    convention).  For negative r this is (-1)**k * C(k-r-1, k), always an
    integer.
    """
    if k < 0:
        return 0
    if r >= 0:
        return math.comb(r, k)
    return (-1) ** k * math.comb(k - r - 1, k)


def pochhammer(a: Scalar, n: int) -> Fraction:
    """Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer requires n >= 0")
    out = Fraction(1)
    a = Fraction(a)
    for i in range(n):
        out *= a + i
    return out


class Poly:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        return cls((value,))

    @classmethod
    def monomial(cls, k: int, coeff: Scalar = 1) -> "Poly":
        """coeff * x**k."""
        return cls((0,) * k + (coeff,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of x**k (0 beyond the stored degree)."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self!r}")
        return self._coeffs[0] if self._coeffs else Fraction(0)

    # -- ring structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self._coeffs)

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation and transforms ------------------------------------------

    def __call__(self, x: Scalar) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def compose_affine(self, a: Scalar, b: Scalar) -> "Poly":
        """Expand p(a*x + b) exactly."""
        inner = Poly((b, a))
        acc = ZERO
        for c in reversed(self._coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self._coeffs) if k >= 1)

    def antiderivative(self) -> "Poly":
        """The antiderivative vanishing at 0, i.e. x |-> integral from 0 to x."""
        return Poly([Fraction(0)] + [c / (k + 1) for k, c in enumerate(self._coeffs)])

    def integrate(self, lo: Scalar, hi: Scalar) -> Fraction:
        """Exact value of the definite integral over [lo, hi]."""
        anti = self.antiderivative()
        return anti(hi) - anti(lo)

    def div_x(self) -> "Poly":
        """Return q with x*q = p; p must have zero constant term."""
        if self._coeffs and self._coeffs[0] != 0:
            raise NonzeroConstantTerm(f"constant term is {self._coeffs[0]}, not 0")
        return Poly(self._coeffs[1:])

    def cayley(self, n: int) -> "Poly":
        """Clear denominators in p(x/(x-1)): return (x-1)**n * p(x/(x-1)).

        Requires n >= deg(p) so the result is a genuine polynomial; built
        from the substitution pair (x, x-1), never from rational functions.
        """
        if self.degree > n:
            raise DegreeTooLarge(f"degree {self.degree} exceeds clearing exponent {n}")
        shift = Poly((-1, 1))
        pows = [ONE]
        for _ in range(n):
            pows.append(pows[-1] * shift)
        total = ZERO
        for k, c in enumerate(self._coeffs):
            if c != 0:
                total = total + c * X ** k * pows[n - k]
        return total

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self._coeffs]})"


def _coerce(value) -> "Poly":
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    return NotImplemented


def as_poly(value) -> Poly:
    """Coerce an int, Fraction, or Poly to a Poly."""
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a polynomial")
    return out


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))
