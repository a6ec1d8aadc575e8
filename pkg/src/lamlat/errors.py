"""Exception types shared across the package."""

from __future__ import annotations


class LamlatError(Exception):
    """Base class for all package-specific errors."""


class HermitianViolation(LamlatError):
    """Matrix entry (i, j) breaks the bar-symmetry a_ij(t) = a_ji(1/t).

    Indices are 1-based in the message, matching the positions reported
    to CLI users.
    """

    def __init__(self, i: int, j: int):
        self.i = i
        self.j = j
        super().__init__(f"entry ({i},{j}) violates Hermitian symmetry")


class DimensionMismatch(LamlatError):
    pass


class NotAUnit(LamlatError):
    """Determinant is not of the form +-t^k, so no inverse exists over the ring."""

    def __init__(self, det):
        self.det = det
        super().__init__(f"determinant {det} is not a unit")


class NotSymmetric(LamlatError):
    """Polynomial is not fixed by t -> 1/t."""


class NegativeConstant(LamlatError):
    """Constant term is negative (or not positive where positivity is required)."""


class NotDefinite(LamlatError):
    """Gram matrix is not positive definite."""


class ZeroVector(LamlatError):
    pass


class GeneratorsInsufficient(LamlatError):
    """Minimal vectors up to the norm bound do not generate the lattice."""

    def __init__(self, bound: int):
        self.bound = bound
        super().__init__(
            f"minimal vectors of norm <= {bound} do not generate; retry with a larger bound"
        )


class UnknownName(LamlatError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown corpus name {name!r}")
