"""Constructors for the classical polynomial families, via explicit sums.

All parameters are integers (negative values allowed where noted), so every
coefficient comes out of generalized binomials and stays an exact rational.
Where two independent formulas exist for the same family, both are exposed
(composition route and direct coefficient sum) and their agreement is a
standing check in the identity suite.
"""

from fractions import Fraction
from functools import lru_cache

from .polynomial import ONE, Poly, X, ZERO, binom


class InvalidIndex(ValueError):
    """The family is not defined at the requested index."""


@lru_cache(maxsize=None)
def jacobi(n: int, alpha: int = 0, beta: int = 0) -> Poly:
    """Jacobi polynomial P_n^(alpha,beta), extended to all integer parameters.

    Defined by the explicit sum
        sum_j C(n+alpha+beta+j, j) C(n+alpha, n-j) ((x-1)/2)^j,
    which agrees with the classical polynomials for alpha, beta > -1.  For
    negative integer parameters the degree may drop below n.
    """
    if n < 0:
        raise InvalidIndex("n must be nonnegative")
    half = Poly((Fraction(-1, 2), Fraction(1, 2)))  # (x-1)/2
    total = ZERO
    power = ONE
    for j in range(n + 1):
        coeff = binom(n + alpha + beta + j, j) * binom(n + alpha, n - j)
        if coeff:
            total = total + coeff * power
        power = power * half
    return total


@lru_cache(maxsize=None)
def shifted_jacobi(n: int, alpha: int = 0, beta: int = 0) -> Poly:
    """Shifted Jacobi polynomial: the Jacobi polynomial composed with 2x-1."""
    return jacobi(n, alpha, beta).compose_affine(2, -1)


@lru_cache(maxsize=None)
def romanovski(n: int, alpha: int = 0, beta: int = 0) -> Poly:
    """Romanovski-Jacobi polynomial: the Jacobi polynomial composed with 2x+1.

    For alpha = 0 and negative integer second parameter these form finite
    orthogonal sequences; the definition itself is valid for all n.
    """
    return jacobi(n, alpha, beta).compose_affine(2, 1)


def romanovski_sum(n: int, alpha: int = 0, beta: int = 0) -> Poly:
    """Independent route: sum_j C(n+alpha+beta+j, j) C(n+alpha, n-j) x^j."""
    if n < 0:
        raise InvalidIndex("n must be nonnegative")
    return Poly(
        binom(n + alpha + beta + j, j) * binom(n + alpha, n - j)
        for j in range(n + 1)
    )


@lru_cache(maxsize=None)
def legendre(n: int) -> Poly:
    """Legendre polynomial P_n, the (0,0) Jacobi polynomial."""
    return jacobi(n, 0, 0)


@lru_cache(maxsize=None)
def shifted_legendre(n: int) -> Poly:
    """Shifted Legendre polynomial: P_n composed with 2x-1."""
    return legendre(n).compose_affine(2, -1)


def shifted_legendre_sum(n: int) -> Poly:
    """Independent route: sum_k (-1)^(n-k) C(n,k) C(n+k,k) x^k."""
    if n < 0:
        raise InvalidIndex("n must be nonnegative")
    return Poly(
        (-1) ** (n - k) * binom(n, k) * binom(n + k, k) for k in range(n + 1)
    )


@lru_cache(maxsize=None)
def laguerre(n: int) -> Poly:
    """Rook-normalized Laguerre polynomial sum_k (-1)^k C(n,k)^2 k! x^(n-k).

    This is the rook polynomial of the full n x n board; it equals
    (-1)^n n! times the conventionally normalized Laguerre polynomial.
    """
    return laguerre_gen(n, 0)


@lru_cache(maxsize=None)
def laguerre_gen(n: int, beta: int = 0) -> Poly:
    """Generalized Laguerre sum_k (-1)^k C(n+beta,k) C(n,k) k! x^(n-k),
    the rook polynomial of the (n+beta) x n rectangular board."""
    if n < 0 or beta < 0:
        raise InvalidIndex("n and beta must be nonnegative")
    coeffs = [Fraction(0)] * (n + 1)
    fact = 1
    for k in range(n + 1):
        coeffs[n - k] = (-1) ** k * binom(n + beta, k) * binom(n, k) * fact
        fact *= k + 1
    return Poly(coeffs)


def sj_product_expansion(n: int, alpha: int, beta: int) -> Poly:
    """(x-1)^alpha times the shifted Jacobi polynomial, as one direct sum:

        sum_k (-1)^(n+alpha-k) x^k C(n+alpha, k) C(n+beta+k, n),

    valid for natural alpha and any integer beta.
    """
    if n < 0:
        raise InvalidIndex("n must be nonnegative")
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    return Poly(
        (-1) ** (n + alpha - k) * binom(n + alpha, k) * binom(n + beta + k, n)
        for k in range(n + alpha + 1)
    )


@lru_cache(maxsize=None)
def schroder_poly(n: int) -> Poly:
    """Schroeder polynomial S_n: the weighted Schroeder total at (1, x, -1).

    Closed form: sum_j (-1)^(n-j)/(j+1) C(2j,j) C(n+j,n-j) x^j, the j-east
    arrangements below the diagonal being counted by a Catalan number.
    """
    if n < 0:
        raise InvalidIndex("n must be nonnegative")
    return Poly(
        Fraction((-1) ** (n - j) * binom(2 * j, j) * binom(n + j, n - j), j + 1)
        for j in range(n + 1)
    )


@lru_cache(maxsize=None)
def narayana(n: int) -> Poly:
    """Narayana polynomial N_n(x) = sum_{k=1..n} (1/n) C(n,k-1) C(n,k) x^k.

    Indexed from n = 1; the coefficients are the (integer) Narayana numbers.
    """
    if n < 1:
        raise InvalidIndex("Narayana polynomials are indexed from n = 1")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        coeffs[k] = Fraction(binom(n, k - 1) * binom(n, k), n)
    return Poly(coeffs)


def monic_legendre(n: int) -> Poly:
    """Monic Legendre variant 2^n P_n / C(2n, n)."""
    return Fraction(2 ** n, binom(2 * n, n)) * legendre(n)


def legendre_q(n: int) -> Poly:
    """The non-monic variant 2^n (2n-1)!! P_n / C(2n, n); its three-term
    recurrence has integer connecting coefficients."""
    dfact = 1
    for odd in range(1, 2 * n, 2):
        dfact *= odd
    return Fraction(2 ** n * dfact, binom(2 * n, n)) * legendre(n)


def monic_schroder(n: int) -> Poly:
    """Monic family (1/C(2n,n)) ((x-1)/x) times the (1,-1) shifted Jacobi
    polynomial; equal to (n+1) S_n / C(2n,n) for n >= 1."""
    if n == 0:
        return ONE
    cleared = (X - 1) * shifted_jacobi(n, 1, -1)
    return Fraction(1, binom(2 * n, n)) * cleared.div_x()
