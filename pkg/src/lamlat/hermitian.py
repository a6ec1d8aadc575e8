"""Hermitian matrices over the Laurent ring and vectors paired against them.

The pairing is conjugate-linear in the first slot and linear in the second:
h(u, v) = sum_ij bar(u_i) * a_ij * v_j.  Everything downstream (covering
reductions, criteria) inherits that convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DimensionMismatch, HermitianViolation, NotAUnit
from .laurent import LaurentPoly


def _coerce_row(row: Sequence) -> tuple[LaurentPoly, ...]:
    return tuple(LaurentPoly.coerce(x) for x in row)


class LambdaVector:
    """Coordinate vector over the Laurent ring, relative to a form's basis."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        self.coords = _coerce_row(coords)

    @classmethod
    def basis(cls, n: int, i: int) -> "LambdaVector":
        """The i-th standard basis vector (0-based) of length n."""
        return cls([LaurentPoly.one() if k == i else LaurentPoly.zero() for k in range(n)])

    def __len__(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def scale(self, p) -> "LambdaVector":
        p = LaurentPoly.coerce(p)
        return LambdaVector([p * c for c in self.coords])

    def __add__(self, other: "LambdaVector") -> "LambdaVector":
        if len(other) != len(self):
            raise DimensionMismatch("vector lengths differ")
        return LambdaVector([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "LambdaVector") -> "LambdaVector":
        if len(other) != len(self):
            raise DimensionMismatch("vector lengths differ")
        return LambdaVector([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "LambdaVector":
        return LambdaVector([-a for a in self.coords])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def to_obj(self) -> list:
        return [c.to_pairs() for c in self.coords]

    @classmethod
    def from_obj(cls, obj: Iterable) -> "LambdaVector":
        return cls([LaurentPoly.from_pairs(p) for p in obj])

    def __repr__(self) -> str:
        return "LambdaVector([" + ", ".join(str(c) for c in self.coords) + "])"


class HermitianForm:
    """Square matrix A over the Laurent ring with a_ij(t) = a_ji(1/t).

    Symmetry is checked at construction; use :meth:`from_entries` to build
    from a plain nested list (ints are coerced to constants).
    """

    __slots__ = ("n", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [_coerce_row(r) for r in entries]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square")
        for i in range(n):
            for j in range(i, n):
                if rows[i][j] != rows[j][i].involute():
                    raise HermitianViolation(i + 1, j + 1)
        self.n = n
        self.entries = tuple(rows)

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence]) -> "HermitianForm":
        return cls(entries)

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]

    # -- pairing and lengths ------------------------------------------

    def pairing(self, u: LambdaVector, v: LambdaVector) -> LaurentPoly:
        """h(u, v), conjugate-linear in u and linear in v."""
        if len(u) != self.n or len(v) != self.n:
            raise DimensionMismatch("vector length does not match form rank")
        acc = LaurentPoly.zero()
        for i, ui in enumerate(u.coords):
            if ui.is_zero():
                continue
            ubar = ui.involute()
            for j, vj in enumerate(v.coords):
                if vj.is_zero():
                    continue
                acc = acc + ubar * self.entries[i][j] * vj
        return acc

    def sq_profile(self, v: LambdaVector) -> tuple[LaurentPoly, int, Optional[int]]:
        """(full self-pairing, its constant term, its top degree or None).

        The constant term is the square length of the class; the top degree
        is its exponent (None for the zero polynomial).
        """
        lam = self.pairing(v, v)
        bounds = lam.degree_bounds()
        return (lam, lam.constant_term, None if bounds is None else bounds[1])

    # -- determinant, inverse, base change -----------------------------

    def determinant(self) -> LaurentPoly:
        """Exact determinant, by expansion over column subsets."""
        return _det(self.entries)

    def inverse(self) -> "HermitianForm":
        """Inverse over the ring; requires the determinant to be +-t^k."""
        det = self.determinant()
        if not det.is_unit():
            raise NotAUnit(det)
        ((k, s),) = det.coeffs.items()
        det_inv = LaurentPoly({-k: s})
        n = self.n
        inv = [[LaurentPoly.zero()] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [
                    [self.entries[r][c] for c in range(n) if c != j]
                    for r in range(n)
                    if r != i
                ]
                cof = _det(tuple(tuple(r) for r in minor))
                if (i + j) % 2:
                    cof = -cof
                inv[j][i] = cof * det_inv
        return HermitianForm(inv)

    def change_basis(self, p_rows: Sequence[Sequence]) -> "HermitianForm":
        """Gram of the basis whose rows (over the Laurent ring) are p_rows.

        Returns bar(P) * A * P^T, so entry (i, j) is the pairing of the
        i-th and j-th new basis vectors.
        """
        rows = [_coerce_row(r) for r in p_rows]
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise DimensionMismatch("change of basis matrix must match form rank")
        vecs = [LambdaVector(r) for r in rows]
        out = [[self.pairing(vecs[i], vecs[j]) for j in range(self.n)] for i in range(self.n)]
        return HermitianForm(out)

    # -- serialization --------------------------------------------------

    def to_obj(self, name: str = "") -> dict:
        return {
            "name": name,
            "rank": self.n,
            "entries": [[p.to_pairs() for p in row] for row in self.entries],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "HermitianForm":
        entries = [[LaurentPoly.from_pairs(p) for p in row] for row in obj["entries"]]
        form = cls(entries)
        if "rank" in obj and int(obj["rank"]) != form.n:
            raise DimensionMismatch("declared rank does not match entries")
        return form

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermitianForm):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(p) for p in row) for row in self.entries)
        return f"HermitianForm[{body}]"


def identity_form(n: int) -> HermitianForm:
    return HermitianForm([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def _det(entries: Tuple[Tuple[LaurentPoly, ...], ...]) -> LaurentPoly:
    """Determinant by Laplace expansion with memoization on column subsets.

    Exponential in rank but exact, and fast for the ranks this package
    handles (n <= ~10).
    """
    n = len(entries)
    if n == 0:
        return LaurentPoly.one()
    cache: dict[tuple[int, ...], LaurentPoly] = {}

    def rec(row: int, cols: tuple[int, ...]) -> LaurentPoly:
        if not cols:
            return LaurentPoly.one()
        key = cols
        got = cache.get(key)
        if got is not None:
            return got
        acc = LaurentPoly.zero()
        for idx, c in enumerate(cols):
            e = entries[row][c]
            if e.is_zero():
                continue
            sub = rec(row + 1, cols[:idx] + cols[idx + 1 :])
            term = e * sub
            acc = acc + (term if idx % 2 == 0 else -term)
        cache[key] = acc
        return acc

    return rec(0, tuple(range(n)))
