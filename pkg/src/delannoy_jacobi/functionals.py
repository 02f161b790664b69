"""Moment functionals, exact inner products, Gram/Hankel matrices, and
three-term recurrence fitting.

A moment functional is represented by its finite moment sequence and fails
loudly when applied past its last defined moment: the finite functionals
here are only defined up to a degree bound, and silent extrapolation would
hide exactly the boundary effects the Hankel-extension machinery probes.

Matrices are plain lists of Fraction rows; determinants use fraction-free
(Bareiss) elimination, so integer inputs never leave the integers.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Poly, Scalar, X


class DegreeOutOfRange(ValueError):
    """A functional was applied to a polynomial past its defined moments."""


class NonpositiveCofactor(ArithmeticError):
    """The leading principal minor that should certify positivity is not
    positive; indicates an internal inconsistency, not a user error."""


class NotInRecurrence(ValueError):
    """No exact (c, lambda) pair reproduces the polynomial at this index."""

    def __init__(self, index: int):
        super().__init__(f"family member {index} does not satisfy a three-term recurrence")
        self.index = index


Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class MomentFunctional:
    """Linear functional on polynomials, given by moments[k] = value on x^k."""

    moments: tuple[Fraction, ...]

    @property
    def max_degree(self) -> int:
        return len(self.moments) - 1

    def moment(self, k: int) -> Fraction:
        if not 0 <= k <= self.max_degree:
            raise DegreeOutOfRange(f"moment {k} undefined (max degree {self.max_degree})")
        return self.moments[k]

    def __call__(self, p: Poly) -> Fraction:
        if p.degree > self.max_degree:
            raise DegreeOutOfRange(
                f"degree {p.degree} exceeds defined moments (max {self.max_degree})"
            )
        return sum(
            (c * self.moments[k] for k, c in enumerate(p.coeffs)), Fraction(0)
        )

    def extended(self, value: Scalar) -> "MomentFunctional":
        """Append one more moment."""
        return MomentFunctional(self.moments + (Fraction(value),))


def factorial_functional(max_degree: int) -> MomentFunctional:
    """The functional with k-th moment k!; on polynomials it agrees with
    integration against exp(-x) over the positive half-line."""
    return MomentFunctional(
        tuple(Fraction(math.factorial(k)) for k in range(max_degree + 1))
    )


def lbeta_functional(beta: int) -> MomentFunctional:
    """Moments k! (beta-2-k)! / (beta-1)! for k <= beta-2.

    These are the moments of the weight (1+x)^(-beta) on the positive
    half-line, which only has finite moments up to degree beta-2.
    """
    if beta < 2:
        raise ValueError("beta must be at least 2")
    top = math.factorial(beta - 1)
    return MomentFunctional(
        tuple(
            Fraction(math.factorial(k) * math.factorial(beta - 2 - k), top)
            for k in range(beta - 1)
        )
    )


def inner_weighted(f: Poly, g: Poly, alpha: int = 0, beta: int = 0) -> Fraction:
    """Exact integral of f*g*(1-x)^alpha*x^beta over [0, 1]."""
    weight = Poly((1, -1)) ** alpha * X ** beta
    return (f * g * weight).integrate(0, 1)


def gram_matrix(family, inner) -> Matrix:
    """G[i][j] = inner(family[i], family[j]), computed exactly."""
    family = list(family)
    return [[inner(p, q) for q in family] for p in family]


def is_diagonal(matrix: Matrix) -> bool:
    return all(
        matrix[i][j] == 0
        for i in range(len(matrix))
        for j in range(len(matrix))
        if i != j
    )


def hankel_mbeta(beta: int, top: Scalar) -> Matrix:
    """The (beta+1)/2 square Hankel matrix of lbeta moments, with the one
    out-of-range moment (on x^(beta-1), the bottom-right corner) set to `top`."""
    if beta < 3 or beta % 2 == 0:
        raise ValueError("beta must be an odd integer >= 3")
    functional = lbeta_functional(beta)
    size = (beta + 1) // 2
    top = Fraction(top)
    return [
        [
            top if i + j == beta - 1 else functional.moment(i + j)
            for j in range(size)
        ]
        for i in range(size)
    ]


def det_exact(matrix: Matrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if n == 0:
        return Fraction(1)
    m = [[Fraction(v) for v in row] for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[i], m[k] = m[k], m[i]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact by construction: prev divides every 2x2 cross-product.
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def leading_principal_minors(matrix: Matrix) -> list[Fraction]:
    """Determinants of the upper-left k x k blocks, k = 1..n."""
    return [
        det_exact([row[:k] for row in matrix[:k]]) for k in range(1, len(matrix) + 1)
    ]


def lbeta_extension_threshold(beta: int) -> Fraction:
    """The exact value t* with det(M_beta(t)) > 0 iff t > t*.

    The determinant is linear in the corner moment t; its coefficient is
    the largest proper leading principal minor, which must be positive
    because the functional restricted below the boundary degree is positive
    definite.  The threshold is then read off the linear function.
    """
    size = (beta + 1) // 2
    base = hankel_mbeta(beta, 0)
    cofactor = det_exact([row[: size - 1] for row in base[: size - 1]])
    if cofactor <= 0:
        raise NonpositiveCofactor(
            f"leading principal minor {cofactor} of the moment matrix is not positive"
        )
    at_zero = det_exact(base)
    return -at_zero / cofactor


def favard_fit(family) -> list[tuple[Fraction, Fraction]]:
    """Fit the three-term recurrence p_n = (x - c_n) p_{n-1} - lambda_n p_{n-2}.

    The family must be monic with deg(p_n) = n and p_0 = 1.  Each (c, lambda)
    pair is confirmed by full polynomial identity, not just two coefficients;
    lambda_1 is reported as 0 (p_{-1} = 0 leaves it unconstrained).
    """
    family = list(family)
    if not family or family[0] != Poly((1,)):
        raise ValueError("family must start with the constant polynomial 1")
    for i, p in enumerate(family):
        if p.degree != i or p.leading != 1:
            raise ValueError(f"family member {i} is not monic of degree {i}")
    out: list[tuple[Fraction, Fraction]] = []
    for i in range(1, len(family)):
        residual = X * family[i - 1] - family[i]  # equals c*p_{i-1} + lambda*p_{i-2}
        c = residual.coefficient(i - 1)
        residual = residual - c * family[i - 1]
        if i == 1:
            lam = Fraction(0)
        else:
            lam = residual.coefficient(i - 2)
            residual = residual - lam * family[i - 2]
        if residual:
            raise NotInRecurrence(i)
        out.append((c, lam))
    return out
