"""Registry of named identity checks, run over finite parameter grids.

Every check compares exact rationals or exact polynomial coefficient
sequences; there is no tolerance anywhere.  A report records pass/fail, the
number of cases run, the first failing grid point (grids are iterated in
lexicographic parameter order, so a reported counterexample is minimal),
and optional free-form notes for observations that are recorded rather
than asserted.

Family constructors are reached through the config's `families` namespace,
which tests may replace with a corrupting wrapper to confirm that the
registry actually detects wrong coefficients.
"""

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import families as _families
from . import functionals as fn
from . import paths as lp
from .polynomial import Poly, X, binom, pochhammer
from .render import format_poly


class UnknownIdentity(ValueError):
    """The requested id is not in the registry."""


@dataclass(frozen=True, eq=False)
class SuiteConfig:
    """Grid caps and seams for the identity suite.

    max_n clamps every entry's index range (None keeps the defaults, which
    are sized so the whole registry runs in seconds).  weight_grid supplies
    the rational substitution points for (u, v, w).  families is the
    namespace the verifiers build polynomial families from; tests swap in a
    fault-injecting wrapper to exercise the harness itself.
    """

    max_n: int | None = None
    weight_grid: tuple[Fraction, ...] = (Fraction(1), Fraction(2), Fraction(3))
    enumeration_cap: int = lp.DEFAULT_ENUMERATION_CAP
    pair_cap: int = lp.DEFAULT_PAIR_CAP
    families: Any = _families

    def cap(self, default: int) -> int:
        if self.max_n is None:
            return default
        return min(default, self.max_n)


DEFAULT_CONFIG = SuiteConfig()


@dataclass
class IdentityReport:
    id: str
    status: str  # "pass" | "fail"
    cases_run: int
    counterexample: dict | None
    millis: int
    notes: str | None = None

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "cases_run": self.cases_run,
            "counterexample": self.counterexample,
            "millis": self.millis,
            "notes": self.notes,
        }


class _CaseFailed(Exception):
    pass


class _Recorder:
    """Counts cases and stops a verifier at its first failing grid point."""

    def __init__(self):
        self.cases = 0
        self.counterexample: dict | None = None
        self.notes: list[str] = []

    def check(self, lhs, rhs, **params) -> None:
        self.cases += 1
        if lhs != rhs:
            self.counterexample = {
                "params": params,
                "lhs": _show(lhs),
                "rhs": _show(rhs),
            }
            raise _CaseFailed

    def check_true(self, condition: bool, claim: str, **params) -> None:
        self.cases += 1
        if not condition:
            self.counterexample = {"params": params, "claim": claim}
            raise _CaseFailed

    def note(self, text: str) -> None:
        self.notes.append(text)


def _show(value) -> str:
    if isinstance(value, Poly):
        return format_poly(value)
    return str(value)


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    description: str
    grid: str  # human-readable summary of the default parameter grid
    verifier: Callable[[SuiteConfig, _Recorder], None]


REGISTRY: dict[str, IdentityCheck] = {}


def _register(id: str, description: str, grid: str):
    def wrap(fn_):
        REGISTRY[id] = IdentityCheck(id, description, grid, fn_)
        return fn_

    return wrap


def run_identity(id: str, config: SuiteConfig = DEFAULT_CONFIG) -> IdentityReport:
    """Run one registry entry and report the outcome."""
    try:
        entry = REGISTRY[id]
    except KeyError:
        known = ", ".join(sorted(REGISTRY))
        raise UnknownIdentity(f"unknown identity {id!r}; known ids: {known}") from None
    rec = _Recorder()
    start = time.perf_counter()
    try:
        entry.verifier(config, rec)
    except _CaseFailed:
        pass
    except Exception as exc:  # a broken input should fail the entry, not the runner
        rec.counterexample = {
            "params": {"after_cases": rec.cases},
            "error": f"{type(exc).__name__}: {exc}",
        }
    millis = int((time.perf_counter() - start) * 1000)
    return IdentityReport(
        id=id,
        status="fail" if rec.counterexample is not None else "pass",
        cases_run=rec.cases,
        counterexample=rec.counterexample,
        millis=millis,
        notes="; ".join(rec.notes) if rec.notes else None,
    )


def run_all(config: SuiteConfig = DEFAULT_CONFIG) -> list[IdentityReport]:
    """Run every registry entry; reports are sorted by id."""
    return [run_identity(id, config) for id in sorted(REGISTRY)]


def _weight_points(cfg: SuiteConfig):
    grid = tuple(Fraction(v) for v in cfg.weight_grid)
    return [
        (u, v, w)
        for u in grid
        for v in grid
        for w in grid
        if u != 0 and v != 0 and w != 0
    ]


def _wt(u, v, w) -> lp.WeightTriple:
    return lp.WeightTriple.of(u, v, w)


_POLY_X_WT = lp.WeightTriple.of(1, X, -1)


# --------------------------------------------------------------------------
# Weighted Delannoy counts
# --------------------------------------------------------------------------


@_register(
    "wd-closed-vs-dp-vs-enum",
    "Closed binomial sum, DP recursion, and explicit path enumeration give "
    "the same weighted Delannoy totals",
    "m,n <= 6 on the weight grid; enumeration leg for m+n <= 8",
)
def _wd_closed_vs_dp_vs_enum(cfg: SuiteConfig, rec: _Recorder) -> None:
    top = cfg.cap(6)
    points = _weight_points(cfg)
    for m in range(top + 1):
        for n in range(top + 1):
            for u, v, w in points:
                wt = _wt(u, v, w)
                rec.check(
                    lp.delannoy_weighted(m, n, wt),
                    lp.delannoy_closed(m, n, wt),
                    m=m, n=n, u=str(u), v=str(v), w=str(w),
                )
            # Polynomial weights exercise the same code path symbolically.
            rec.check(
                lp.delannoy_weighted(m, n, _POLY_X_WT),
                lp.delannoy_closed(m, n, _POLY_X_WT),
                m=m, n=n, weights="(1, x, -1)",
            )
    for m in range(top + 1):
        for n in range(top + 1):
            if m + n > min(8, cfg.enumeration_cap):
                continue
            for u, v, w in [(Fraction(1), Fraction(1), Fraction(1)),
                            (Fraction(2), Fraction(3), Fraction(5)),
                            (Fraction(1, 2), Fraction(-1, 3), Fraction(7))]:
                wt = _wt(u, v, w)
                total = sum(
                    (lp.path_weight(p, wt) for p in lp.delannoy_enumerate(m, n)),
                    Poly(),
                )
                rec.check(
                    total, lp.delannoy_weighted(m, n, wt),
                    m=m, n=n, u=str(u), v=str(v), w=str(w), route="enumeration",
                )


@_register(
    "wcd-legendre",
    "Diagonal weighted Delannoy totals match the shifted Legendre value "
    "(-w)^n P~_n(-uv/w)",
    "n <= 6; (u,v,w) on the weight grid; plus the v = x polynomial form",
)
def _wcd_legendre(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n in range(cfg.cap(6) + 1):
        for u, v, w in _weight_points(cfg):
            lhs = lp.delannoy_weighted(n, n, _wt(u, v, w)).constant_value()
            rhs = (-w) ** n * F.shifted_legendre(n)(-u * v / w)
            rec.check(lhs, rhs, n=n, u=str(u), v=str(v), w=str(w))
        for u, w in [(a, b) for a in cfg.weight_grid for b in cfg.weight_grid]:
            lhs = lp.delannoy_weighted(n, n, _wt(u, X, w))
            rhs = Fraction(-w) ** n * F.shifted_legendre(n).compose_affine(
                -Fraction(u) / Fraction(w), 0
            )
            rec.check(lhs, rhs, n=n, u=str(u), w=str(w), v="x")


@_register(
    "wcd-legendre-swap",
    "Diagonal weighted Delannoy totals match the swapped form "
    "w^n P~_n(uv/w + 1)",
    "n <= 6; (u,v,w) on the weight grid; plus the v = x polynomial form",
)
def _wcd_legendre_swap(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n in range(cfg.cap(6) + 1):
        for u, v, w in _weight_points(cfg):
            lhs = lp.delannoy_weighted(n, n, _wt(u, v, w)).constant_value()
            rhs = w ** n * F.shifted_legendre(n)(u * v / w + 1)
            rec.check(lhs, rhs, n=n, u=str(u), v=str(v), w=str(w))
        for u, w in [(a, b) for a in cfg.weight_grid for b in cfg.weight_grid]:
            lhs = lp.delannoy_weighted(n, n, _wt(u, X, w))
            rhs = Fraction(w) ** n * F.shifted_legendre(n).compose_affine(
                Fraction(u) / Fraction(w), 1
            )
            rec.check(lhs, rhs, n=n, u=str(u), w=str(w), v="x")


@_register(
    "wd-jacobi",
    "Weighted Delannoy totals to (n+beta, n) match "
    "u^beta (-w)^n P~_n^(0,beta)(-uv/w)",
    "n <= 6, beta in [-n, 4], (u,v,w) on the weight grid",
)
def _wd_jacobi(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n in range(cfg.cap(6) + 1):
        for beta in range(-n, 5):
            for u, v, w in _weight_points(cfg):
                lhs = lp.delannoy_weighted(n + beta, n, _wt(u, v, w)).constant_value()
                rhs = u ** beta * (-w) ** n * F.shifted_jacobi(n, 0, beta)(-u * v / w)
                rec.check(lhs, rhs, n=n, beta=beta, u=str(u), v=str(v), w=str(w))


@_register(
    "wd-jacobi-swap",
    "Weighted Delannoy totals to (n+beta, n) match the swapped form "
    "u^beta w^n P~_n^(beta,0)(uv/w + 1)",
    "n <= 6, beta in [-n, 4], (u,v,w) on the weight grid",
)
def _wd_jacobi_swap(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n in range(cfg.cap(6) + 1):
        for beta in range(-n, 5):
            for u, v, w in _weight_points(cfg):
                lhs = lp.delannoy_weighted(n + beta, n, _wt(u, v, w)).constant_value()
                rhs = u ** beta * w ** n * F.shifted_jacobi(n, beta, 0)(u * v / w + 1)
                rec.check(lhs, rhs, n=n, beta=beta, u=str(u), v=str(v), w=str(w))


@_register(
    "dp1",
    "Plain Delannoy numbers equal Jacobi values at 3: "
    "d_{n+alpha,n} = P_n^(alpha,0)(3), negative alpha included",
    "n <= 8, alpha in [-n, 5]",
)
def _dp1(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n in range(cfg.cap(8) + 1):
        for alpha in range(-n, 6):
            rec.check(
                lp.delannoy_weighted(n + alpha, n).constant_value(),
                F.jacobi(n, alpha, 0)(3),
                n=n, alpha=alpha,
            )


@_register(
    "llp",
    "Shifted Jacobi polynomials are the weighted path totals at "
    "(u,v,w) = (1, x, -1), as exact polynomials",
    "n <= 6, beta in [-n, 4]",
)
def _llp(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n in range(cfg.cap(6) + 1):
        for beta in range(-n, 5):
            rec.check(
                F.shifted_jacobi(n, 0, beta),
                lp.delannoy_weighted(n + beta, n, _POLY_X_WT),
                n=n, beta=beta,
            )


@_register(
    "modified-delannoy",
    "Strictly-upward lattice path counts equal Jacobi values at 3: "
    "d~_{n+beta,n} = P_n^(0,beta)(3)",
    "n <= 6, beta in [0, 4]",
)
def _modified_delannoy(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n in range(cfg.cap(6) + 1):
        for beta in range(5):
            rec.check(
                Fraction(lp.modified_delannoy(n + beta, n, cap=cfg.enumeration_cap)),
                F.jacobi(n, 0, beta)(3),
                n=n, beta=beta,
            )


# --------------------------------------------------------------------------
# Orthogonality
# --------------------------------------------------------------------------


@_register(
    "orth-0beta",
    "Monomials of lower order are orthogonal to P~_n^(0,beta) under the "
    "x^beta weight on [0,1]",
    "m < n <= 6, beta in [0, 4]",
)
def _orth_0beta(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for beta in range(5):
        for n in range(cfg.cap(6) + 1):
            for m in range(n):
                value = (X ** (m + beta) * F.shifted_jacobi(n, 0, beta)).integrate(0, 1)
                rec.check(value, Fraction(0), beta=beta, n=n, m=m)


@_register(
    "orth-full",
    "Gram matrices of the shifted Jacobi families under the "
    "(1-x)^alpha x^beta weight on [0,1] are diagonal with positive diagonal",
    "n <= 6, alpha and beta in [0, 3]",
)
def _orth_full(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    top = cfg.cap(6)
    for alpha in range(4):
        for beta in range(4):
            polys = [F.shifted_jacobi(n, alpha, beta) for n in range(top + 1)]
            for m in range(top + 1):
                for n in range(top + 1):
                    value = fn.inner_weighted(polys[m], polys[n], alpha, beta)
                    if m != n:
                        rec.check(value, Fraction(0), alpha=alpha, beta=beta, m=m, n=n)
                    else:
                        rec.check_true(
                            value > 0, "diagonal Gram entry must be positive",
                            alpha=alpha, beta=beta, n=n,
                        )


@_register(
    "epl",
    "The weighted-integral and factorial-sum sides of the pair-counting "
    "identity agree, vanish for m < n, and match the brute-force signed "
    "pair enumeration where the cap allows",
    "n, m, beta <= 5; pair oracle up to 8 elements",
)
def _epl(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    top = cfg.cap(5)
    oracle_cap = min(8, cfg.pair_cap)
    for n in range(top + 1):
        for m in range(top + 1):
            for beta in range(top + 1):
                lhs = math.factorial(n + m + beta + 1) * (
                    X ** (m + beta) * F.shifted_jacobi(n, 0, beta)
                ).integrate(0, 1)
                rhs = sum(
                    (-1) ** k
                    * binom(n + beta, k)
                    * binom(n, k)
                    * math.factorial(k)
                    * math.factorial(n + m + beta - k)
                    for k in range(n + 1)
                )
                rec.check(lhs, Fraction(rhs), n=n, m=m, beta=beta)
                if m < n:
                    rec.check(Fraction(rhs), Fraction(0), n=n, m=m, beta=beta,
                              claim="vanishes below the diagonal")
                if n + m + beta + 1 <= oracle_cap:
                    rec.check(
                        Fraction(lp.valid_pair_signed_sum(n, m, beta, cap=oracle_cap)),
                        Fraction(rhs),
                        n=n, m=m, beta=beta, route="pair enumeration",
                    )


@_register(
    "abdec",
    "(x-1)^alpha P~_n^(alpha,beta) decomposes as the alternating sum of "
    "x^(alpha-i) P~_n^(0,alpha+beta-i)",
    "n <= 6, alpha in [0, 4], beta in [0, 3]",
)
def _abdec(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for alpha in range(5):
        for beta in range(4):
            for n in range(cfg.cap(6) + 1):
                lhs = Poly((-1, 1)) ** alpha * F.shifted_jacobi(n, alpha, beta)
                rhs = sum(
                    (
                        binom(alpha, i)
                        * (-1) ** i
                        * X ** (alpha - i)
                        * F.shifted_jacobi(n, 0, alpha + beta - i)
                        for i in range(alpha + 1)
                    ),
                    Poly(),
                )
                rec.check(lhs, rhs, alpha=alpha, beta=beta, n=n)


@_register(
    "laguerre-orth",
    "The factorial functional annihilates off-diagonal Laguerre products, "
    "plain and x^beta-weighted; the integral and factorial sides of the "
    "monomial bridge agree; diagonal values are recorded, not asserted",
    "m, n <= 6 off-diagonal; bridge for n, m, beta <= 5",
)
def _laguerre_orth(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    top = cfg.cap(6)
    functional = fn.factorial_functional(2 * top + 6)
    for m in range(top + 1):
        for n in range(top + 1):
            if m != n:
                rec.check(
                    functional(F.laguerre(m) * F.laguerre(n)), Fraction(0), m=m, n=n
                )
    for beta in range(5):
        for m in range(top + 1):
            for n in range(top + 1):
                if m != n:
                    rec.check(
                        functional(
                            X ** beta * F.laguerre_gen(m, beta) * F.laguerre_gen(n, beta)
                        ),
                        Fraction(0),
                        beta=beta, m=m, n=n,
                    )
    bridge_top = cfg.cap(5)
    for n in range(bridge_top + 1):
        for m in range(bridge_top + 1):
            lhs = math.factorial(n + m + 1) * (
                X ** m * F.shifted_legendre(n)
            ).integrate(0, 1)
            rec.check(lhs, functional(X ** m * F.laguerre(n)), n=n, m=m, form="plain")
            for beta in range(bridge_top + 1):
                lhs = math.factorial(n + m + beta + 1) * (
                    X ** (m + beta) * F.shifted_jacobi(n, 0, beta)
                ).integrate(0, 1)
                rec.check(
                    lhs,
                    functional(X ** (m + beta) * F.laguerre_gen(n, beta)),
                    n=n, m=m, beta=beta, form="weighted",
                )
    diag = [str(functional(F.laguerre(n) * F.laguerre(n))) for n in range(top + 1)]
    rec.note(
        "diagonal values L(l_n^2) for n = 0.. are "
        + ", ".join(diag)
        + " = (n!)^2; the often-quoted normalization delta_{m,n} n! does not "
        "match this computation, so the diagonal is recorded, not asserted"
    )


# --------------------------------------------------------------------------
# Negative second parameter and Romanovski sequences
# --------------------------------------------------------------------------


@_register(
    "bneg",
    "Above the symmetry band the negative-parameter polynomials are monomial "
    "multiples: P~_n^(0,-beta) = x^beta P~_{n-beta}^(0,beta)",
    "beta <= 6, beta <= n <= 10",
)
def _bneg(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for beta in range(7):
        for n in range(beta, cfg.cap(10) + 1):
            rec.check(
                F.shifted_jacobi(n, 0, -beta),
                Poly.monomial(beta) * F.shifted_jacobi(n - beta, 0, beta),
                beta=beta, n=n,
            )
    rec.note(
        "right-hand side carries the (0, beta) parameter pair; the plain "
        "shifted Legendre variant fails already at n=2, beta=1"
    )


@_register(
    "bneg-symmetry",
    "The first beta entries of the negative-parameter sequence are "
    "symmetric: index n matches index beta-1-n, in both the 2x+1 and 2x-1 "
    "transformed forms",
    "beta <= 12, 0 <= n <= beta-1",
)
def _bneg_symmetry(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for beta in range(1, 13):
        for n in range(beta):
            rec.check(
                F.romanovski(n, 0, -beta),
                F.romanovski(beta - 1 - n, 0, -beta),
                beta=beta, n=n, form="2x+1",
            )
            rec.check(
                F.shifted_jacobi(n, 0, -beta),
                F.shifted_jacobi(beta - 1 - n, 0, -beta),
                beta=beta, n=n, form="2x-1",
            )


_TABLE_BETA6 = (
    Poly((1,)),
    Poly((5, -4)),
    Poly((10, -12, 3)),
    Poly((10, -12, 3)),
    Poly((5, -4)),
    Poly((1,)),
    Poly.monomial(6),
)


@_register(
    "bneg-table1",
    "The seven lowest-index shifted polynomials with second parameter -6 "
    "match the reference table exactly",
    "n = 0..6 at beta = -6",
)
def _bneg_table1(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n, expected in enumerate(_TABLE_BETA6):
        rec.check(F.shifted_jacobi(n, 0, -6), expected, n=n)


@_register(
    "romanovski-orth",
    "The finite Romanovski sequences are orthogonal under the finite moment "
    "functional; for odd beta the extra boundary polynomial joins the "
    "sequence and the extended Hankel matrix is positive definite",
    "beta = 4..12 even part; odd beta = 3..11 extension with top moment t*+1",
)
def _romanovski_orth(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for beta in range(4, 13):
        functional = fn.lbeta_functional(beta)
        top = (beta - 2) // 2
        polys = [F.romanovski(n, 0, -beta) for n in range(top + 1)]
        for m in range(top + 1):
            for n in range(top + 1):
                value = functional(polys[m] * polys[n])
                if m != n:
                    rec.check(value, Fraction(0), beta=beta, m=m, n=n)
                else:
                    rec.check_true(
                        value > 0, "diagonal entry must be positive",
                        beta=beta, n=n,
                    )
    for beta in range(3, 12, 2):
        functional = fn.lbeta_functional(beta)
        boundary = (beta - 1) // 2
        extra = F.romanovski(boundary, 0, -beta)
        for m in range(boundary):
            rec.check(
                functional(F.romanovski(m, 0, -beta) * extra),
                Fraction(0),
                beta=beta, m=m, n=boundary, claim="extension orthogonality",
            )
        threshold = fn.lbeta_extension_threshold(beta)
        if beta == 3:
            rec.check(threshold, Fraction(1, 2), beta=3, claim="threshold value")
        matrix = fn.hankel_mbeta(beta, threshold + 1)
        for k, minor in enumerate(fn.leading_principal_minors(matrix), start=1):
            rec.check_true(
                minor > 0, "leading principal minor must be positive",
                beta=beta, order=k,
            )
        rec.check(fn.det_exact(fn.hankel_mbeta(beta, threshold)), Fraction(0),
                  beta=beta, claim="determinant vanishes at the threshold")


@_register(
    "borth2",
    "The alternating triple-binomial sum vanishes below the diagonal "
    "(the multiset-cancellation identity)",
    "beta <= 14, m < n <= (beta-2)/2",
)
def _borth2(cfg: SuiteConfig, rec: _Recorder) -> None:
    for beta in range(4, 15):
        for n in range(1, (beta - 2) // 2 + 1):
            for m in range(n):
                total = sum(
                    (-1) ** j
                    * binom(n, j)
                    * binom(m + j, m)
                    * binom(beta - 2 - m - j, n - m - 1)
                    for j in range(n + 1)
                )
                rec.check(total, 0, beta=beta, n=n, m=m)


# --------------------------------------------------------------------------
# Schroeder numbers, antiderivatives, Narayana polynomials
# --------------------------------------------------------------------------


@_register(
    "schroder",
    "All Schroeder routes agree: path DP at (1,x,-1), the closed Catalan "
    "sum, the division form from the (1,-1) family, the weighted "
    "specializations, and the value 2/(n+1) P_n^(-1,1)(3)",
    "n <= 8 polynomial forms; n <= 6 weight grid; n <= 10 value form",
)
def _schroder(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n, expected in enumerate((1, 2, 6, 22, 90)):
        count = sum(1 for _ in lp.schroder_enumerate(n, cap=cfg.enumeration_cap))
        rec.check(count, expected, n=n, route="enumeration")
        rec.check(
            lp.schroder_weighted(n).constant_value(), Fraction(expected),
            n=n, route="dp",
        )
    for n in range(cfg.cap(8) + 1):
        sn = F.schroder_poly(n)
        rec.check(lp.schroder_weighted(n, _POLY_X_WT), sn, n=n, route="dp vs closed")
        if n >= 1:
            cleared = (X - 1) * F.shifted_jacobi(n, 1, -1)
            rec.check(cleared.coefficient(0), Fraction(0), n=n,
                      claim="constant term vanishes before division")
            rec.check(
                sn, Fraction(1, n + 1) * cleared.div_x(), n=n, route="division form",
            )
    for n in range(1, cfg.cap(10) + 1):
        rec.check(
            lp.schroder_weighted(n).constant_value(),
            Fraction(2, n + 1) * F.jacobi(n, -1, 1)(3),
            n=n, route="value at 3",
        )
    for n in range(cfg.cap(6) + 1):
        for u, v, w in _weight_points(cfg):
            sn = lp.schroder_weighted(n, _wt(u, v, w)).constant_value()
            rec.check(
                sn,
                (-w) ** n * F.schroder_poly(n)(-u * v / w),
                n=n, u=str(u), v=str(v), w=str(w), route="scaled value",
            )
            if n >= 2:
                rec.check(
                    sn,
                    (-w) ** n / (n + 1) * (1 + w / (u * v))
                    * F.shifted_jacobi(n, 1, -1)(-u * v / w),
                    n=n, u=str(u), v=str(v), w=str(w), route="(1,-1) form",
                )
            if n >= 1:
                rec.check(
                    sn,
                    w ** n / (n + 1) * (1 + w / (u * v))
                    * F.shifted_jacobi(n, -1, 1)(u * v / w + 1),
                    n=n, u=str(u), v=str(v), w=str(w), route="(-1,1) form",
                )


@_register(
    "cdrec",
    "The last-diagonal-contact recursion ties diagonal Delannoy totals to "
    "Schroeder totals, and its exact polynomial consequences hold",
    "n <= 8 on the weight grid; polynomial forms for n <= 8",
)
def _cdrec(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    top = cfg.cap(8)
    for n in range(1, top + 1):
        for u, v, w in _weight_points(cfg):
            wt = _wt(u, v, w)
            lhs = lp.delannoy_weighted(n, n, wt).constant_value()
            rhs = 2 * u * v * sum(
                lp.delannoy_weighted(k, k, wt).constant_value()
                * lp.schroder_weighted(n - k - 1, wt).constant_value()
                for k in range(n)
            ) + w * lp.delannoy_weighted(n - 1, n - 1, wt).constant_value()
            rec.check(lhs, rhs, n=n, u=str(u), v=str(v), w=str(w))
    for n in range(1, top + 1):
        lhs = F.shifted_legendre(n)
        rhs = 2 * X * sum(
            (F.shifted_legendre(k) * F.schroder_poly(n - k - 1) for k in range(n)),
            Poly(),
        ) - F.shifted_legendre(n - 1)
        rec.check(lhs, rhs, n=n, form="shifted, Schroeder factors")
        rhs = 2 * sum(
            (
                F.shifted_legendre(k)
                * (X - 1)
                * Fraction(1, n - k)
                * F.shifted_jacobi(n - k - 1, 1, -1)
                for k in range(n - 1)
            ),
            Poly(),
        ) + Poly((-1, 2)) * F.shifted_legendre(n - 1)
        rec.check(lhs, rhs, n=n, form="shifted, (1,-1) factors")
        rhs = sum(
            (
                F.legendre(k)
                * (X - 1)
                * Fraction(1, n - k)
                * F.jacobi(n - k - 1, 1, -1)
                for k in range(n - 1)
            ),
            Poly(),
        ) + X * F.legendre(n - 1)
        rec.check(F.legendre(n), rhs, n=n, form="plain, (1,-1) factors")


@_register(
    "antideriv",
    "x S_n is the antiderivative of P~_n, and the alpha-fold antiderivative "
    "of P~_n equals (x-1)^alpha P~_n^(alpha,-alpha) / (n+1)_alpha for "
    "alpha <= n, with the out-of-range pairs verified to fail",
    "n <= 10 for the bridge; n <= 8, 1 <= alpha <= 4 for the iterated form",
)
def _antideriv(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n in range(1, cfg.cap(10) + 1):
        rec.check(
            X * F.schroder_poly(n),
            F.shifted_legendre(n).antiderivative(),
            n=n, form="bridge",
        )
    for n in range(1, cfg.cap(8) + 1):
        for alpha in range(1, 5):
            iterated = F.shifted_legendre(n)
            for _ in range(alpha):
                iterated = iterated.antiderivative()
            closed = (
                (X - 1) ** alpha
                * F.shifted_jacobi(n, alpha, -alpha)
                * Fraction(1, pochhammer(n + 1, alpha))
            )
            if alpha <= n:
                rec.check(iterated, closed, n=n, alpha=alpha, form="iterated")
                expansion = sum(
                    (
                        Fraction((-1) ** (n - j) * binom(n, j) * binom(n + j, n))
                        / pochhammer(j + 1, alpha)
                        * Poly.monomial(j + alpha)
                        for j in range(n + 1)
                    ),
                    Poly(),
                )
                rec.check(iterated, expansion, n=n, alpha=alpha, form="expansion")
            else:
                rec.check_true(
                    iterated != closed,
                    "identity must fail when the antiderivative order exceeds n",
                    n=n, alpha=alpha,
                )
    rec.note(
        "the iterated-antiderivative identity requires order <= n: the "
        "intermediate polynomials (x-1)^a P~_n^(a,-a) have nonzero value at "
        "0 once a > n (first residual: constant 1/6 at n=1, a=2); the "
        "out-of-range pairs are checked to fail"
    )


@_register(
    "narayana",
    "Narayana polynomials come from the (1,-1) family through the x/(x-1) "
    "substitution, and from the antiderivative of P~_n the same way",
    "n = 1..10",
)
def _narayana(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n in range(1, cfg.cap(10) + 1):
        rec.check(
            (n + 1) * F.narayana(n),
            F.shifted_jacobi(n, 1, -1).cayley(n),
            n=n, form="cleared substitution",
        )
        rec.check(
            F.narayana(n),
            F.shifted_legendre(n).antiderivative().cayley(n + 1),
            n=n, form="antiderivative route",
        )


# --------------------------------------------------------------------------
# Dual routes, swap rules, three-term recurrences, Motzkin moments
# --------------------------------------------------------------------------


@_register(
    "sj-expansion",
    "The one-line product expansion agrees with (x-1)^alpha times the "
    "composed shifted Jacobi polynomial, and with the direct alpha = 0 sum",
    "n <= 8, alpha in [0, 4], beta in [-4, 4]",
)
def _sj_expansion(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n in range(cfg.cap(8) + 1):
        for alpha in range(5):
            for beta in range(-4, 5):
                rec.check(
                    F.sj_product_expansion(n, alpha, beta),
                    (X - 1) ** alpha * F.shifted_jacobi(n, alpha, beta),
                    n=n, alpha=alpha, beta=beta,
                )


@_register(
    "swap-rules",
    "Parameter swaps hold as polynomial identities: reflecting x swaps "
    "(alpha, beta), for the plain, shifted, and Legendre forms",
    "n <= 8, alpha and beta in [-3, 3]",
)
def _swap_rules(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n in range(cfg.cap(8) + 1):
        rec.check(
            (-1) ** n * F.shifted_legendre(n).compose_affine(-1, 0),
            F.shifted_legendre(n).compose_affine(1, 1),
            n=n, rule="legendre shift",
        )
        for alpha in range(-3, 4):
            for beta in range(-3, 4):
                rec.check(
                    (-1) ** n * F.jacobi(n, alpha, beta).compose_affine(-1, 0),
                    F.jacobi(n, beta, alpha),
                    n=n, alpha=alpha, beta=beta, rule="plain",
                )
                rec.check(
                    (-1) ** n * F.shifted_jacobi(n, alpha, beta).compose_affine(-1, 0),
                    F.shifted_jacobi(n, beta, alpha).compose_affine(1, 1),
                    n=n, alpha=alpha, beta=beta, rule="shifted",
                )


@_register(
    "dual-routes",
    "Families defined twice agree: composition versus direct sum for the "
    "shifted Legendre and 2x+1-transformed families",
    "n <= 12; transformed parameters in [-3, 3]",
)
def _dual_routes(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    for n in range(cfg.cap(12) + 1):
        rec.check(
            F.shifted_legendre(n), F.shifted_legendre_sum(n), n=n, family="legendre"
        )
        for alpha in range(-3, 4):
            for beta in range(-3, 4):
                rec.check(
                    F.romanovski(n, alpha, beta),
                    F.romanovski_sum(n, alpha, beta),
                    n=n, alpha=alpha, beta=beta, family="2x+1 transform",
                )


@_register(
    "favard-legendre",
    "The monic Legendre family fits the three-term recurrence with c = 0 "
    "and lambda = (n-1)^2/((2n-1)(2n-3)); the double-factorial variant "
    "satisfies its all-integer recurrence",
    "n <= 12",
)
def _favard_legendre(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    top = cfg.cap(12)
    family = [F.monic_legendre(n) for n in range(top + 1)]
    fitted = fn.favard_fit(family)
    for n, (c, lam) in enumerate(fitted, start=1):
        rec.check(c, Fraction(0), n=n, coefficient="c")
        expected = Fraction(0) if n == 1 else Fraction(
            (n - 1) ** 2, (2 * n - 1) * (2 * n - 3)
        )
        rec.check(lam, expected, n=n, coefficient="lambda")
    qs = [F.legendre_q(n) for n in range(top + 1)]
    for n, q in enumerate(qs):
        rec.check_true(
            all(c.denominator == 1 for c in q.coeffs),
            "coefficients must be integers",
            n=n,
        )
    for n in range(2, top + 1):
        rec.check(
            qs[n],
            (2 * n - 1) * X * qs[n - 1] - (n - 1) ** 2 * qs[n - 2],
            n=n, form="integer recurrence",
        )


@_register(
    "favard-schroder",
    "The monic Schroeder-derived family fits the three-term recurrence with "
    "c = 1/2 and lambda = n(n-2)/(4(2n-1)(2n-3)), so lambda_2 = 0 and the "
    "induced moment functional is not quasi-definite",
    "2 <= n <= 10",
)
def _favard_schroder(cfg: SuiteConfig, rec: _Recorder) -> None:
    F = cfg.families
    top = max(cfg.cap(10), 2)
    family = [F.monic_schroder(n) for n in range(top + 1)]
    fitted = fn.favard_fit(family)
    for n in range(2, top + 1):
        c, lam = fitted[n - 1]
        rec.check(c, Fraction(1, 2), n=n, coefficient="c")
        rec.check(
            lam,
            Fraction(n * (n - 2), 4 * (2 * n - 1) * (2 * n - 3)),
            n=n, coefficient="lambda",
        )
    rec.note(
        "recurrence verified numerically on the grid; lambda_2 = 0 exactly, "
        "so no quasi-definite moment functional exists for this family"
    )


@_register(
    "motzkin-moments",
    "The height-weighted Motzkin path totals reproduce the flat moments: "
    "0 for odd length, 1/(n+1) for even length",
    "n <= 12",
)
def _motzkin_moments(cfg: SuiteConfig, rec: _Recorder) -> None:
    for n in range(cfg.cap(12) + 1):
        expected = Fraction(0) if n % 2 else Fraction(1, n + 1)
        rec.check(
            lp.motzkin_legendre_moment(n, cap=max(cfg.enumeration_cap, 12)),
            expected,
            n=n,
        )
    rec.note(
        "extends a reported numerical experiment; the even-length value "
        "1/(n+1) is verified on this grid, not proved"
    )
