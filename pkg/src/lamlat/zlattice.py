"""Exact algorithms on positive definite integral lattices.

A lattice is given purely by its Gram matrix.  Everything here is exact:
determinants via fraction-free elimination, basis reduction and vector
enumeration in rational arithmetic, spans via integer Hermite normal form.
Outputs are canonical (sign-normalized, sorted), so results do not depend
on traversal order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch, GeneratorsInsufficient, NotDefinite, ZeroVector

Vec = Tuple[int, ...]


class IntegralLattice:
    """Finite-rank bilinear form with a symmetric integer Gram matrix."""

    __slots__ = ("rank", "gram")

    def __init__(self, gram: Sequence[Sequence[int]]):
        g = [[int(x) for x in row] for row in gram]
        r = len(g)
        if any(len(row) != r for row in g):
            raise DimensionMismatch("Gram matrix must be square")
        for i in range(r):
            for j in range(i + 1, r):
                if g[i][j] != g[j][i]:
                    raise DimensionMismatch(f"Gram matrix not symmetric at ({i},{j})")
        self.rank = r
        self.gram = tuple(tuple(row) for row in g)

    def norm(self, x: Sequence[int]) -> int:
        return self.inner(x, x)

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        if len(x) != self.rank or len(y) != self.rank:
            raise DimensionMismatch("vector length does not match rank")
        g = self.gram
        total = 0
        for i, xi in enumerate(x):
            if xi:
                row = g[i]
                total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
        return total

    def to_obj(self) -> dict:
        return {"rank": self.rank, "gram": [list(r) for r in self.gram]}

    @classmethod
    def from_obj(cls, obj: dict) -> "IntegralLattice":
        lat = cls(obj["gram"])
        if "rank" in obj and int(obj["rank"]) != lat.rank:
            raise DimensionMismatch("declared rank does not match Gram size")
        return lat

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegralLattice):
            return NotImplemented
        return self.gram == other.gram

    def __hash__(self) -> int:
        return hash(self.gram)

    def __repr__(self) -> str:
        return f"IntegralLattice(rank={self.rank})"


@dataclass(frozen=True)
class ShortVectorSet:
    """All vectors of norm <= bound, one representative per +-pair.

    Representatives have positive first nonzero coordinate; the list is
    sorted by (norm, coordinates) and complete for the stated bound.
    """

    bound: int
    vectors: Tuple[Tuple[Vec, int], ...]

    def count_with_signs(self, norm: int) -> int:
        return 2 * sum(1 for _, q in self.vectors if q == norm)

    def to_obj(self) -> dict:
        return {
            "bound": self.bound,
            "vectors": [{"coords": list(v), "norm": q} for v, q in self.vectors],
        }


@dataclass(frozen=True)
class Component:
    """One orthogonal summand found by :func:`decompose`."""

    generators: Tuple[Vec, ...]
    rank: int
    determinant: int

    def to_obj(self) -> dict:
        return {
            "rank": self.rank,
            "determinant": self.determinant,
            "generators": [list(g) for g in self.generators],
        }


# ---------------------------------------------------------------------------
# fraction-free integer elimination


def bareiss_determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _all_leading_minors_positive(m: Sequence[Sequence[int]]) -> bool:
    """Sylvester test by fraction-free elimination without row swaps."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    prev = 1
    for k in range(n):
        if a[k][k] <= 0:
            return False
        if k == n - 1:
            break
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return True


def _first_nonzero(row: Sequence[int]) -> int:
    for i, x in enumerate(row):
        if x:
            return i
    return -1


def hnf_rows(rows: Iterable[Sequence[int]], width: int) -> List[List[int]]:
    """Row-style Hermite normal form of the subgroup spanned by the rows.

    Returns a canonical basis: pivots positive and strictly to the right as
    rows descend, entries above each pivot reduced into [0, pivot).
    """
    pivot_rows: dict[int, List[int]] = {}
    for r0 in rows:
        row = list(map(int, r0))
        while True:
            p = _first_nonzero(row)
            if p < 0:
                break
            if p not in pivot_rows:
                pivot_rows[p] = row
                break
            b = pivot_rows[p]
            while row[p]:
                q = b[p] // row[p]
                for k in range(p, width):
                    b[k] -= q * row[k]
                b, row = row, b
            pivot_rows[p] = b
    basis = [pivot_rows[p] for p in sorted(pivot_rows)]
    for r in basis:
        if r[_first_nonzero(r)] < 0:
            for k in range(width):
                r[k] = -r[k]
    for i in range(len(basis) - 1, -1, -1):
        p = _first_nonzero(basis[i])
        for j in range(i):
            if basis[j][p]:
                q = basis[j][p] // basis[i][p]
                for k in range(width):
                    basis[j][k] -= q * basis[i][k]
    return basis


def span_index(rows: Iterable[Sequence[int]], width: int) -> Optional[int]:
    """Index in Z^width of the subgroup spanned by rows; None if not full rank."""
    basis = hnf_rows(rows, width)
    if len(basis) != width:
        return None
    idx = 1
    for r in basis:
        idx *= r[_first_nonzero(r)]
    return idx


# ---------------------------------------------------------------------------
# rational Gram-Schmidt, LLL on a Gram matrix, exact enumeration


def _congruent(u: Sequence[Sequence[int]], gram: Sequence[Sequence[int]]) -> List[List[int]]:
    """U * G * U^T for integer matrices."""
    n = len(gram)
    ug = [[sum(u[i][k] * gram[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [[sum(ug[i][k] * u[j][k] for k in range(n)) for j in range(n)] for i in range(n)]


def _gso(gram: Sequence[Sequence[int]]) -> tuple[List[List[Fraction]], List[Fraction]]:
    """Gram-Schmidt data (mu lower-triangular, squared norms b*) of a Gram matrix."""
    n = len(gram)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            s = Fraction(gram[i][j])
            for k in range(j):
                s -= mu[i][k] * mu[j][k] * bstar[k]
            mu[i][j] = s / bstar[j]
        s = Fraction(gram[i][i])
        for k in range(i):
            s -= mu[i][k] * mu[i][k] * bstar[k]
        if s <= 0:
            raise NotDefinite("Gram matrix is not positive definite")
        bstar[i] = s
    return mu, bstar


def lll_transform(
    gram: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)
) -> List[List[int]]:
    """Unimodular U with U * G * U^T LLL-reduced; exact rationals throughout."""
    n = len(gram)
    if n <= 1:
        return [[1]] if n else []
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    mu, bstar = _gso(gram)

    def red(k: int, l: int) -> None:
        q = mu[k][l]
        if 2 * abs(q) > 1:
            r = math.floor(q + Fraction(1, 2))
            for i in range(n):
                u[k][i] -= r * u[l][i]
            mu[k][l] -= r
            for i in range(l):
                mu[k][i] -= r * mu[l][i]

    k = 1
    while k < n:
        red(k, k - 1)
        if bstar[k] < (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            u[k], u[k - 1] = u[k - 1], u[k]
            m = mu[k][k - 1]
            big = bstar[k] + m * m * bstar[k - 1]
            mu[k][k - 1] = m * bstar[k - 1] / big
            bstar[k] = bstar[k - 1] * bstar[k] / big
            bstar[k - 1] = big
            for j in range(k - 1):
                mu[k - 1][j], mu[k][j] = mu[k][j], mu[k - 1][j]
            for i in range(k + 1, n):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - m * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return u


class _QfEnumerator:
    """Exact enumeration of integer points of bounded quadratic value.

    Enumerates x in Z^n with Q(x - center) <= cap for the form
    Q(y) = sum_j bstar[j] * (y_j + sum_{i>j} mu[i][j] * y_i)^2.

    All per-node arithmetic is plain integer arithmetic: every rational in
    sight is premultiplied onto a common scale, so values compare exactly
    without gcd reduction.  The cap may be lowered between emissions
    (branch and bound); traversal order is fixed, hence deterministic.
    """

    def __init__(
        self,
        mu: List[List[Fraction]],
        bstar: List[Fraction],
        center: List[Fraction],
    ):
        n = len(bstar)
        self.n = n
        w_den = math.lcm(*(c.denominator for c in center)) if n else 1
        self.w_den = w_den
        self.w_num = [int(c * w_den) for c in center]
        col_den = [
            math.lcm(*(mu[i][j].denominator for i in range(j + 1, n)), 1)
            for j in range(n)
        ]
        self.mu_num = [
            [int(mu[i][j] * col_den[j]) for i in range(n)] for j in range(n)
        ]
        self.wd = [w_den * col_den[j] for j in range(n)]
        scale = 1
        for j in range(n):
            scale = math.lcm(scale, (bstar[j].denominator * self.wd[j] ** 2))
        self.scale = scale
        # term at level j is factor[j] * (x_j * wd_j - A_j)^2 on the common scale
        self.factor = [
            bstar[j].numerator * (scale // (bstar[j].denominator * self.wd[j] ** 2))
            for j in range(n)
        ]
        self.is_centered = any(self.w_num)

    def run(self, cap: Fraction, emit: Callable[[List[int], Fraction], Optional[Fraction]]) -> None:
        """Visit every point with scaled value <= cap * scale.

        `emit` receives (coords, exact Q value) and may return a new, smaller
        cap (as a Fraction) to tighten the search.
        """
        n = self.n
        if n == 0:
            emit([], Fraction(0))
            return
        x = [0] * n
        scale = self.scale
        cap_scaled = [math.floor(cap * scale)]
        w_num, w_den = self.w_num, self.w_den
        mu_num, wd, factor = self.mu_num, self.wd, self.factor
        sym = not self.is_centered

        def visit(j: int, acc: int, all_zero: bool) -> None:
            if j < 0:
                value = Fraction(acc, scale)
                new_cap = emit(list(x), value)
                if new_cap is not None:
                    cap_scaled[0] = math.floor(new_cap * scale)
                return
            a = w_num[j] * (wd[j] // w_den)
            col = mu_num[j]
            for i in range(j + 1, n):
                if x[i] or w_num[i]:
                    a -= col[i] * (x[i] * w_den - w_num[i])
            wdj = wd[j]
            base = (2 * a + wdj) // (2 * wdj)
            fj = factor[j]
            lo = 0 if (sym and all_zero) else None
            cand = base if lo is None or base >= lo else lo
            while True:
                t = cand * wdj - a
                term = fj * t * t
                if acc + term > cap_scaled[0]:
                    break
                x[j] = cand
                visit(j - 1, acc + term, all_zero and cand == 0)
                cand += 1
            if lo is None:
                cand = base - 1
                while True:
                    t = cand * wdj - a
                    term = fj * t * t
                    if acc + term > cap_scaled[0]:
                        break
                    x[j] = cand
                    visit(j - 1, acc + term, False)
                    cand -= 1
            x[j] = 0

        visit(n - 1, 0, True)


def _check_definite(lat: IntegralLattice) -> None:
    if not is_positive_definite(lat):
        raise NotDefinite("lattice is not positive definite")


# ---------------------------------------------------------------------------
# public operations


def is_positive_definite(lat: IntegralLattice) -> bool:
    """True iff every leading principal minor is positive."""
    if lat.rank == 0:
        return True
    return _all_leading_minors_positive(lat.gram)


def determinant(lat: IntegralLattice) -> int:
    return bareiss_determinant(lat.gram)


def parity(lat: IntegralLattice) -> str:
    """'even' when every norm is even (all diagonal entries even), else 'odd'."""
    return "even" if all(lat.gram[i][i] % 2 == 0 for i in range(lat.rank)) else "odd"


def enumerate_up_to(lat: IntegralLattice, bound: int) -> ShortVectorSet:
    """All nonzero vectors of norm <= bound, up to sign; complete and canonical."""
    _check_definite(lat)
    if bound < 1 or lat.rank == 0:
        return ShortVectorSet(bound, ())
    n = lat.rank
    u = lll_transform(lat.gram)
    red = _congruent(u, lat.gram)
    mu, bstar = _gso(red)
    found: dict[Vec, int] = {}

    def emit(coords: List[int], q: Fraction) -> None:
        if not any(coords):
            return None
        orig = tuple(sum(coords[i] * u[i][j] for i in range(n)) for j in range(n))
        found[_sign_canonical(orig)] = int(q)
        return None

    _QfEnumerator(mu, bstar, [Fraction(0)] * n).run(Fraction(bound), emit)
    vecs = tuple(sorted(found.items(), key=lambda kv: (kv[1], kv[0])))
    return ShortVectorSet(bound, vecs)


def _sign_canonical(v: Vec) -> Vec:
    for x in v:
        if x > 0:
            return v
        if x < 0:
            return tuple(-y for y in v)
    return v


def _gram_product(lat: IntegralLattice, v: Sequence[int]) -> List[int]:
    g = lat.gram
    return [sum(g[i][j] * vj for j, vj in enumerate(v) if vj) for i in range(lat.rank)]


def is_minimal(lat: IntegralLattice, x: Sequence[int]) -> bool:
    """True iff x is not a sum y + z with both norms strictly smaller.

    Decided exactly: writing z = x - y, the condition ||x - y||^2 < ||x||^2
    is |2<x, y>| > ||y||^2 for y or -y, and any such y appears (up to sign)
    in the complete enumeration below ||x||^2.
    """
    _check_definite(lat)
    xv = tuple(int(c) for c in x)
    if not any(xv):
        raise ZeroVector("the zero vector is not eligible")
    nx = lat.norm(xv)
    if nx <= 1:
        return True
    gx = _gram_product(lat, xv)
    for y, q in enumerate_up_to(lat, nx - 1).vectors:
        if abs(2 * sum(gx[i] * yi for i, yi in enumerate(y) if yi)) > q:
            return False
    return True


def decompose(lat: IntegralLattice, max_doublings: int = 4) -> List[Component]:
    """Orthogonal indecomposable components via minimal-vector connectivity.

    Enumerates vectors up to the largest diagonal entry of a reduced Gram,
    keeps the minimal ones, joins two when their inner product is nonzero,
    and returns connected components.  Components must account for the whole
    lattice (ranks add up, determinants multiply to the lattice determinant);
    otherwise the bound doubles, and a few failed doublings raise.
    """
    _check_definite(lat)
    n = lat.rank
    u = lll_transform(lat.gram)
    red = _congruent(u, lat.gram)
    bound = max(red[i][i] for i in range(n))
    det = determinant(lat)
    for _ in range(max_doublings + 1):
        comps = _try_decompose(lat, bound, det)
        if comps is not None:
            return comps
        bound *= 2
    raise GeneratorsInsufficient(bound)


def _try_decompose(lat: IntegralLattice, bound: int, det: int) -> Optional[List[Component]]:
    svs = enumerate_up_to(lat, bound)
    vecs = [v for v, _ in svs.vectors]
    norms = [q for _, q in svs.vectors]
    gv = [_gram_product(lat, v) for v in vecs]

    def ip(a: int, b: int) -> int:
        gb = gv[b]
        return sum(gb[i] * vi for i, vi in enumerate(vecs[a]) if vi)

    mins: List[int] = []
    for a in range(len(vecs)):
        na = norms[a]
        for b in range(len(vecs)):
            if norms[b] < na and abs(2 * ip(a, b)) > norms[b]:
                break
        else:
            mins.append(a)
    if not mins:
        return None
    parent = list(range(len(mins)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(len(mins)):
        for j in range(i + 1, len(mins)):
            if ip(mins[i], mins[j]) != 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[Vec]] = {}
    for i, m in enumerate(mins):
        groups.setdefault(find(i), []).append(vecs[m])
    comps: List[Component] = []
    for vs in groups.values():
        basis = hnf_rows(vs, lat.rank)
        gram = [[lat.inner(a, b) for b in basis] for a in basis]
        comps.append(Component(tuple(sorted(vs)), len(basis), bareiss_determinant(gram)))
    if sum(c.rank for c in comps) != lat.rank:
        return None
    prod = 1
    for c in comps:
        prod *= c.determinant
    if prod != det:
        return None
    comps.sort(key=lambda c: (c.rank, c.determinant, c.generators))
    return comps


def is_standard(lat: IntegralLattice) -> bool:
    """True iff the lattice splits into rank-many unimodular rank-1 pieces."""
    return all(c.rank == 1 and c.determinant == 1 for c in decompose(lat))


def theta_prefix(lat: IntegralLattice, bound: int) -> List[int]:
    """Vector counts (with signs) for each norm 0..bound."""
    _check_definite(lat)
    counts = [0] * (bound + 1)
    counts[0] = 1
    for _, q in enumerate_up_to(lat, bound).vectors:
        counts[q] += 2
    return counts
