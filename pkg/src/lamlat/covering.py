"""Cyclic-cover reductions of a Hermitian form and double-cover lifts.

A rank-n form over the Laurent ring reduces, for each fold count m, to an
integer lattice of rank m*n on the classes t^j e_i (i = 1..n, j = 0..m-1).
The double-cover projection sends the level-2m class (i, j) to (i, j mod m);
its kernel is the sublattice spanned by t^j e_i - t^(j+m) e_i, and finding
the shortest preimage of a class is an exact closest-vector search over
that kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import DimensionMismatch, NotDefinite
from .hermitian import HermitianForm, LambdaVector
from .zlattice import (
    IntegralLattice,
    _congruent,
    _gso,
    _QfEnumerator,
    is_positive_definite,
    lll_transform,
)


@dataclass(frozen=True)
class ReductionBasis:
    """Index bookkeeping for the rank m*n reduction.

    Row order is fixed: class (i, j), meaning t^j applied to the i-th basis
    vector, sits at row (i-1)*m + j for 1-based i and 0 <= j < m.
    """

    m: int
    n: int

    def row(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 0 <= j < self.m):
            raise DimensionMismatch(f"index ({i},{j}) outside basis range")
        return (i - 1) * self.m + j

    def unrow(self, row: int) -> Tuple[int, int]:
        if not (0 <= row < self.m * self.n):
            raise DimensionMismatch(f"row {row} outside basis range")
        return (row // self.m + 1, row % self.m)

    @property
    def rank(self) -> int:
        return self.m * self.n


def reduce_mod_m(form: HermitianForm, m: int) -> IntegralLattice:
    """Gram matrix of the m-fold cyclic reduction (rank m*n).

    The entry pairing (i, j) with (i', j') is the sum of the coefficients of
    a_{i i'} in degrees congruent to j - j' mod m; for m = 1 this is
    entrywise evaluation at t = 1.
    """
    if m < 1:
        raise ValueError("fold count m must be >= 1")
    n = form.n
    rb = ReductionBasis(m, n)
    size = rb.rank
    gram = [[0] * size for _ in range(size)]
    # wrapped coefficient table per (i, i') to avoid recomputing per (j, j')
    for i in range(n):
        for i2 in range(n):
            entry = form.entries[i][i2]
            wraps = [entry.coeff_wrap(m, r) for r in range(m)]
            for j in range(m):
                row = i * m + j
                for j2 in range(m):
                    gram[row][i2 * m + j2] = wraps[(j - j2) % m]
    return IntegralLattice(gram)


def window_gram(form: HermitianForm, J: int) -> IntegralLattice:
    """Gram of the finite window spanned by t^j e_i for |j| <= J.

    Rank n*(2J+1); the pairing of (i, j) with (i', j') is the coefficient of
    t^(j-j') in a_{i i'}.  Row order: (i-1)*(2J+1) + (j+J).
    """
    if J < 0:
        raise ValueError("window radius J must be >= 0")
    n = form.n
    w = 2 * J + 1
    size = n * w
    gram = [[0] * size for _ in range(size)]
    for i in range(n):
        for i2 in range(n):
            entry = form.entries[i][i2]
            for j in range(-J, J + 1):
                row = i * w + (j + J)
                for j2 in range(-J, J + 1):
                    gram[row][i2 * w + (j2 + J)] = entry.coeff(j - j2)
    return IntegralLattice(gram)


def reduce_vector(v: LambdaVector, m: int) -> List[int]:
    """Coordinates of the vector's image in the rank m*n reduction.

    The coefficient of t^d in the i-th coordinate lands on class (i, d mod m).
    """
    if m < 1:
        raise ValueError("fold count m must be >= 1")
    n = len(v)
    out = [0] * (m * n)
    for i, poly in enumerate(v.coords):
        for d, c in poly.coeffs.items():
            out[i * m + (d % m)] += c
    return out


class LiftContext:
    """Cached double-cover lift data for one (form, m) pair.

    Holds the level-2m Gram, the kernel basis of the projection to level m,
    and the reduced/orthogonalized kernel Gram used by the closest-vector
    search.  Building this once and reusing it across many lift queries
    avoids re-running basis reduction.
    """

    def __init__(self, form: HermitianForm, m: int):
        if m < 1:
            raise ValueError("fold count m must be >= 1")
        self.form = form
        self.m = m
        self.n = form.n
        self.low_rank = m * self.n
        self.high_rank = 2 * m * self.n
        self.high = reduce_mod_m(form, 2 * m)
        if not is_positive_definite(self.high):
            raise NotDefinite("level-2m reduction is not positive definite")
        # kernel basis rows: t^j e_i - t^(j+m) e_i, indexed like the level-m basis
        self.kernel: List[List[int]] = []
        for i in range(self.n):
            for j in range(m):
                row = [0] * self.high_rank
                row[i * 2 * m + j] = 1
                row[i * 2 * m + j + m] = -1
                self.kernel.append(row)
        k = self.kernel
        r = self.low_rank
        self.kgram = [
            [self.high.inner(k[a], k[b]) for b in range(r)] for a in range(r)
        ]
        self.u = lll_transform(self.kgram)
        self.red = _congruent(self.u, self.kgram)
        self.gso = _gso(self.red)
        # rows of u expressed back in ambient level-2m coordinates
        self.u_ambient = [
            [sum(self.u[a][b] * k[b][c] for b in range(r)) for c in range(self.high_rank)]
            for a in range(r)
        ]

    def canonical_lift(self, v: Sequence[int]) -> List[int]:
        """The lift supported on classes (i, j) with j < m."""
        if len(v) != self.low_rank:
            raise DimensionMismatch("vector length does not match level-m rank")
        out = [0] * self.high_rank
        for i in range(self.n):
            for j in range(self.m):
                out[i * 2 * self.m + j] = int(v[i * self.m + j])
        return out

    def project(self, x: Sequence[int]) -> List[int]:
        """Image of a level-2m vector at level m: (i, j) -> (i, j mod m)."""
        if len(x) != self.high_rank:
            raise DimensionMismatch("vector length does not match level-2m rank")
        out = [0] * self.low_rank
        for i in range(self.n):
            for j in range(2 * self.m):
                out[i * self.m + (j % self.m)] += int(x[i * 2 * self.m + j])
        return out

    def min_norm_lift(self, v: Sequence[int]) -> Tuple[int, List[int]]:
        """Minimum squared length over all level-2m preimages of v.

        Exact branch-and-bound closest-vector search over the kernel
        sublattice; ties are broken toward the lexicographically smallest
        witness, so the result is deterministic.
        """
        x0 = self.canonical_lift(v)
        c0 = self.high.norm(x0)
        r = self.low_rank
        # minimize f(z) = z H z^T + 2 z.b + c0 over integer z (kernel coords)
        b = [self.high.inner(k, x0) for k in self.kernel]
        bred = [sum(self.u[a][j] * b[j] for j in range(r)) for a in range(r)]
        center = _solve_neg_center(self.red, bred)
        # f(z') = Q(z' - center) + const with const = c0 + center.bred
        const = Fraction(c0)
        for a in range(r):
            const += center[a] * bred[a]
        best_val = c0
        best_wit = tuple(x0)
        cap = [Fraction(best_val) - const]
        for coords, q in _enumerate_qf(self.mu, self.bstar, center, lambda: cap[0]):
            val_f = q + const
            assert val_f.denominator == 1
            val = int(val_f)
            wit_list = list(x0)
            for a in range(r):
                if coords[a]:
                    row = self.u_ambient[a]
                    for c in range(self.high_rank):
                        wit_list[c] += coords[a] * row[c]
            wit = tuple(wit_list)
            if val < best_val or (val == best_val and wit < best_wit):
                best_val = val
                best_wit = wit
                cap[0] = Fraction(best_val) - const
        return best_val, list(best_wit)


def _solve_neg_center(h: Sequence[Sequence[int]], b: Sequence[int]) -> List[Fraction]:
    """Solution of H x = -b in exact rationals (H symmetric positive definite)."""
    n = len(h)
    a = [[Fraction(h[i][j]) for j in range(n)] + [Fraction(-b[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def lift_min_norm(form: HermitianForm, m: int, v: Sequence[int]) -> Tuple[int, List[int]]:
    """Minimum norm over the level-2m preimage coset of v, with witness.

    Convenience wrapper over :class:`LiftContext`; callers doing repeated
    lifts for one (form, m) should hold the context themselves.
    """
    return LiftContext(form, m).min_norm_lift(v)
