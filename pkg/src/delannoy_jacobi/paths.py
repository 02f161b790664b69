"""Lattice path enumeration and weighted counting.

Delannoy paths go from (0,0) to (m,n) by east (1,0), north (0,1), and
northeast (1,1) steps; a path's weight is the product of its step weights
(u for east, v for north, w for northeast).  Schroeder paths are the
Delannoy paths to (n,n) that never rise above the diagonal y = x.

Each quantity is computed two ways wherever feasible: explicit enumeration
(the ground-truth oracle, guarded by a step cap) and dynamic programming or
a closed binomial sum.  Weights may be rational constants or polynomials in
a single variable, so substituting v = x turns the same DP into a
polynomial-family constructor.
"""

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .polynomial import Poly, as_poly, binom

DEFAULT_ENUMERATION_CAP = 16  # max total steps for explicit path enumeration
DEFAULT_PAIR_CAP = 9          # max element count for bijection enumeration


class CapExceeded(ValueError):
    """The instance is too large for explicit enumeration."""


class Step(Enum):
    EAST = (1, 0)
    NORTH = (0, 1)
    DIAG = (1, 1)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]


@dataclass(frozen=True)
class WeightTriple:
    """Step weights (u east, v north, w northeast), each a polynomial."""

    u: Poly
    v: Poly
    w: Poly

    @classmethod
    def of(cls, u, v, w) -> "WeightTriple":
        return cls(as_poly(u), as_poly(v), as_poly(w))

    def is_constant(self) -> bool:
        return self.u.is_constant() and self.v.is_constant() and self.w.is_constant()

    def values(self):
        """The three weights, as Fractions when all are constant."""
        if self.is_constant():
            return (
                self.u.constant_value(),
                self.v.constant_value(),
                self.w.constant_value(),
            )
        return (self.u, self.v, self.w)

    def weight(self, step: Step) -> Poly:
        return {Step.EAST: self.u, Step.NORTH: self.v, Step.DIAG: self.w}[step]


UNIT_WEIGHTS = WeightTriple.of(1, 1, 1)


def delannoy_enumerate(
    m: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[tuple[Step, ...]]:
    """Yield every Delannoy path from (0,0) to (m,n) exactly once."""
    _require_quadrant(m, n)
    if m + n > cap:
        raise CapExceeded(f"enumeration of ({m},{n}) exceeds cap of {cap} steps")

    def rec(i: int, j: int, prefix: list[Step]) -> Iterator[tuple[Step, ...]]:
        if i == m and j == n:
            yield tuple(prefix)
            return
        if i < m:
            prefix.append(Step.EAST)
            yield from rec(i + 1, j, prefix)
            prefix.pop()
        if j < n:
            prefix.append(Step.NORTH)
            yield from rec(i, j + 1, prefix)
            prefix.pop()
        if i < m and j < n:
            prefix.append(Step.DIAG)
            yield from rec(i + 1, j + 1, prefix)
            prefix.pop()

    return rec(0, 0, [])


def schroder_enumerate(
    n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[tuple[Step, ...]]:
    """Yield every Schroeder path to (n,n): Delannoy paths with y <= x throughout."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if 2 * n > cap:
        raise CapExceeded(f"enumeration of Schroeder paths to ({n},{n}) exceeds cap")

    def rec(i: int, j: int, prefix: list[Step]) -> Iterator[tuple[Step, ...]]:
        if i == n and j == n:
            yield tuple(prefix)
            return
        if i < n:
            prefix.append(Step.EAST)
            yield from rec(i + 1, j, prefix)
            prefix.pop()
        if j < i:
            prefix.append(Step.NORTH)
            yield from rec(i, j + 1, prefix)
            prefix.pop()
        if i < n and j < i + 1:
            prefix.append(Step.DIAG)
            yield from rec(i + 1, j + 1, prefix)
            prefix.pop()

    return rec(0, 0, [])


def path_weight(path: tuple[Step, ...], wt: WeightTriple = UNIT_WEIGHTS) -> Poly:
    """Product of the step weights along a path."""
    out = as_poly(1)
    for step in path:
        out = out * wt.weight(step)
    return out


def delannoy_table(m: int, n: int, wt: WeightTriple = UNIT_WEIGHTS) -> list[list[Poly]]:
    """Full DP table of weighted path totals for every corner (i,j) <= (m,n).

    Entry (0,0) is 1 and each entry satisfies
    d[i][j] = u*d[i-1][j] + v*d[i][j-1] + w*d[i-1][j-1].
    """
    _require_quadrant(m, n)
    u, v, w = wt.u, wt.v, wt.w
    table: list[list[Poly]] = []
    for i in range(m + 1):
        row: list[Poly] = []
        for j in range(n + 1):
            if i == 0 and j == 0:
                row.append(as_poly(1))
                continue
            acc = Poly()
            if i > 0:
                acc = acc + u * table[i - 1][j]
            if j > 0:
                acc = acc + v * row[j - 1]
            if i > 0 and j > 0:
                acc = acc + w * table[i - 1][j - 1]
            row.append(acc)
        table.append(row)
    return table


@lru_cache(maxsize=None)
def delannoy_weighted(m: int, n: int, wt: WeightTriple = UNIT_WEIGHTS) -> Poly:
    """Weighted Delannoy total by dynamic programming."""
    _require_quadrant(m, n)
    u, v, w = wt.values()
    zero = 0 * u
    prev = [zero] * (n + 1)
    row = [zero] * (n + 1)
    for i in range(m + 1):
        for j in range(n + 1):
            if i == 0 and j == 0:
                row[j] = zero + 1
                continue
            acc = zero
            if i > 0:
                acc = acc + u * prev[j]
            if j > 0:
                acc = acc + v * row[j - 1]
            if i > 0 and j > 0:
                acc = acc + w * prev[j - 1]
            row[j] = acc
        prev, row = row, prev
    return as_poly(prev[n])


@lru_cache(maxsize=None)
def delannoy_closed(m: int, n: int, wt: WeightTriple = UNIT_WEIGHTS) -> Poly:
    """Weighted Delannoy total by the closed binomial sum.

    sum_k C(m+n-k, k) C(m+n-2k, n-k) u^(m-k) v^(n-k) w^k, k up to min(m,n);
    a path with k northeast steps has m-k east and n-k north steps, and the
    steps interleave in multinomial(m+n-k; k, m-k, n-k) ways.
    """
    _require_quadrant(m, n)
    u, v, w = wt.values()
    total = 0 * u
    for k in range(min(m, n) + 1):
        coeff = binom(m + n - k, k) * binom(m + n - 2 * k, n - k)
        total = total + coeff * u ** (m - k) * v ** (n - k) * w ** k
    return as_poly(total)


@lru_cache(maxsize=None)
def schroder_weighted(n: int, wt: WeightTriple = UNIT_WEIGHTS) -> Poly:
    """Weighted Schroeder total by DP restricted to cells with j <= i."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    u, v, w = wt.values()
    zero = 0 * u
    table: list[list] = []
    for i in range(n + 1):
        row = []
        for j in range(i + 1):
            if i == 0 and j == 0:
                row.append(zero + 1)
                continue
            acc = zero
            if i > 0 and j <= i - 1:
                acc = acc + u * table[i - 1][j]
            if j > 0:
                acc = acc + v * row[j - 1]
            if i > 0 and j > 0:
                acc = acc + w * table[i - 1][j - 1]
            row.append(acc)
        table.append(row)
    return as_poly(table[n][n])


def modified_delannoy(m: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Count lattice paths from (0,0) to (m, n+1) with steps from N x P.

    Every step (a,b) has a >= 0 and b >= 1, so a path is a sequence of
    strictly-upward moves; the count is by DP over the landing point of the
    last step.
    """
    _require_quadrant(m, n)
    if m + n > cap:
        raise CapExceeded(f"modified Delannoy ({m},{n}) exceeds cap {cap}")
    height = n + 1
    table = [[0] * (height + 1) for _ in range(m + 1)]
    table[0][0] = 1
    for i in range(m + 1):
        for j in range(height + 1):
            if i == 0 and j == 0:
                continue
            table[i][j] = sum(
                table[ip][jp] for ip in range(i + 1) for jp in range(j)
            )
    return table[m][height]


def modified_delannoy_enumerate(m: int, n: int, cap: int = 8) -> int:
    """Brute-force count of the same paths, by recursion over the first step."""
    _require_quadrant(m, n)
    if m + n > cap:
        raise CapExceeded(f"enumeration of modified Delannoy ({m},{n}) exceeds cap")

    def count_to(i: int, j: int) -> int:
        if i == 0 and j == 0:
            return 1
        total = 0
        for a in range(i + 1):
            for b in range(1, j + 1):
                total += count_to(i - a, j - b)
        return total

    return count_to(m, n + 1)


@lru_cache(maxsize=None)
def motzkin_legendre_moment(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Fraction:
    """Total weight of Motzkin paths of length n under the Legendre weights.

    Up steps weigh 1, level steps weigh 0, and a down step starting at
    height k weighs k^2/(4k^2 - 1).  Computed by explicit enumeration of
    all Motzkin paths (level steps included, contributing zero weight).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise CapExceeded(f"Motzkin enumeration length {n} exceeds cap {cap}")

    def rec(remaining: int, height: int, weight: Fraction) -> Fraction:
        if height > remaining:
            return Fraction(0)
        if remaining == 0:
            return weight
        total = rec(remaining - 1, height + 1, weight)
        total += rec(remaining - 1, height, weight * 0)
        if height > 0:
            down = Fraction(height * height, 4 * height * height - 1)
            total += rec(remaining - 1, height - 1, weight * down)
        return total

    return rec(n, 0, Fraction(1))


def valid_pair_signed_sum(
    n: int, m: int, beta: int, cap: int = DEFAULT_PAIR_CAP
) -> int:
    """Signed count of valid path/bijection pairs, by brute force.

    A pair is a Delannoy path L to (n+beta, n) together with a bijection
    sigma from {r, a_1..a_{n+beta}, b_1..b_m} onto {1..m+n+beta+1} such that
    sigma(r) < sigma(a_i) whenever L has an east step crossing column i, and
    sigma(r) < sigma(b_j) for every j.  The weight of a pair is
    (-1)**(number of northeast steps of L).

    Paths are enumerated explicitly; bijections are counted by enumerating
    permutations (the count depends only on how many elements are
    constrained to exceed sigma(r), so classes are tallied once each).
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    total_items = n + m + beta + 1
    if total_items > cap:
        raise CapExceeded(
            f"pair enumeration needs {total_items} elements, cap is {cap}"
        )
    if n + beta < 0:
        raise ValueError("path endpoint (n+beta, n) leaves the quadrant")

    counts: Counter[tuple[int, int]] = Counter()
    for path in delannoy_enumerate(n + beta, n, cap=2 * cap):
        east = sum(1 for s in path if s is Step.EAST)
        diag = sum(1 for s in path if s is Step.DIAG)
        counts[(east, diag)] += 1

    total = 0
    for (east, diag), npaths in sorted(counts.items()):
        total += (-1) ** diag * npaths * _count_leader_orders(total_items, east + m)
    return total


@lru_cache(maxsize=None)
def _count_leader_orders(total: int, constrained: int) -> int:
    """Permutations of `total` items where item 0 gets a smaller value than
    each of items 1..constrained, counted by exhaustive enumeration."""
    count = 0
    for perm in itertools.permutations(range(total)):
        first = perm[0]
        if all(first < perm[i] for i in range(1, constrained + 1)):
            count += 1
    return count


def _require_quadrant(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise ValueError("lattice endpoints must be in the first quadrant")
