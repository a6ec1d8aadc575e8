"""Exact integer Laurent polynomials in one variable t.

The scalar ring for everything else in this package: coefficients are
arbitrary-precision ints, the representation is a sparse map from degree
to nonzero coefficient, and the bar-involution t -> 1/t is a first-class
operation.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Tuple


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    The zero polynomial is the empty map and has no degrees; callers that
    need degree extrema must handle that case themselves.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for d, v in coeffs.items():
                if v != 0:
                    c[int(d)] = int(v)
        self._c = c

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, degree: int = 0) -> "LaurentPoly":
        return cls({degree: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "LaurentPoly":
        c: dict[int, int] = {}
        for d, v in pairs:
            c[int(d)] = c.get(int(d), 0) + int(v)
        return cls(c)

    @staticmethod
    def coerce(value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly({0: value})
        raise TypeError(f"cannot coerce {value!r} to LaurentPoly")

    # -- basic queries -----------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        """Copy of the degree -> coefficient map."""
        return dict(self._c)

    def coeff(self, degree: int) -> int:
        return self._c.get(degree, 0)

    @property
    def constant_term(self) -> int:
        return self._c.get(0, 0)

    def is_zero(self) -> bool:
        return not self._c

    def degree_bounds(self) -> Optional[Tuple[int, int]]:
        """(min_degree, max_degree) over nonzero terms, or None when zero."""
        if not self._c:
            return None
        return (min(self._c), max(self._c))

    @property
    def is_symmetric(self) -> bool:
        """True when fixed by the bar-involution t -> 1/t."""
        return all(self._c.get(-d, 0) == v for d, v in self._c.items())

    def is_unit(self) -> bool:
        """True for +-t^k."""
        if len(self._c) != 1:
            return False
        (v,) = self._c.values()
        return v in (1, -1)

    # -- ring operations ---------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        c = dict(self._c)
        for d, v in other._c.items():
            c[d] = c.get(d, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({d: -v for d, v in self._c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        c: dict[int, int] = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                d = d1 + d2
                c[d] = c.get(d, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are only defined for units; use shift")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({d + k: v for d, v in self._c.items()})

    def involute(self) -> "LaurentPoly":
        """Apply the bar-involution t -> 1/t."""
        return LaurentPoly({-d: v for d, v in self._c.items()})

    def coeff_wrap(self, m: int, r: int) -> int:
        """Sum of the coefficients in the degree residue class r mod m.

        Summing over all residues recovers the value at t = 1.
        """
        if m < 1:
            raise ValueError("m must be >= 1")
        r %= m
        return sum(v for d, v in self._c.items() if d % m == r)

    # -- comparison, hashing, rendering ------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def to_pairs(self) -> list[list[int]]:
        """Serialized form: [degree, coefficient] pairs sorted by degree."""
        return [[d, self._c[d]] for d in sorted(self._c)]

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for d in sorted(self._c):
            v = self._c[d]
            if d == 0:
                term = str(abs(v))
            else:
                mag = "" if abs(v) == 1 else str(abs(v)) + "*"
                term = f"{mag}t" if d == 1 else f"{mag}t^{d}"
            if not parts:
                parts.append(("-" if v < 0 else "") + term)
            else:
                parts.append(("- " if v < 0 else "+ ") + term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"


def t_power(k: int = 1) -> LaurentPoly:
    """The monomial t^k."""
    return LaurentPoly({k: 1})
