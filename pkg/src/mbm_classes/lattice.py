"""Exact arithmetic in the rank-2 reference lattice <x> + <e>.

A class f*x + c*e lives in the second cohomology of a K3^[n]-type or
Kummer-type manifold, where x is a primitive vector of the unimodular part
with q(x) = 2d and e is half the exceptional divisor with q(e) = -t.
Everything the classifier needs (squares, divisibility, discriminant image,
dual class) has a closed form in these two coordinates, so the rank-23 (or
rank-7) lattice is never built.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class LatticeError(ValueError):
    """Invalid input to a lattice operation."""


class FamilyKind(enum.Enum):
    K3 = "k3"
    KUMMER = "kummer"


@dataclass(frozen=True)
class Family:
    kind: FamilyKind
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise LatticeError(f"n must be an integer >= 2, got {self.n!r}")

    @classmethod
    def k3(cls, n: int) -> Family:
        return cls(FamilyKind.K3, n)

    @classmethod
    def kummer(cls, n: int) -> Family:
        return cls(FamilyKind.KUMMER, n)

    @classmethod
    def parse(cls, kind: str, n: int) -> Family:
        try:
            fk = FamilyKind(kind.lower())
        except ValueError:
            raise LatticeError(f"unknown family type {kind!r} (expected 'k3' or 'kummer')")
        return cls(fk, n)

    @property
    def is_k3(self) -> bool:
        return self.kind is FamilyKind.K3

    @property
    def t(self) -> int:
        """Minus the square of e: 2(n-1) for K3 type, 2(n+1) for Kummer type."""
        return 2 * (self.n - 1) if self.is_k3 else 2 * (self.n + 1)

    def __str__(self):
        return f"{self.kind.value}[n={self.n}]"


@dataclass(frozen=True)
class PicClass:
    """The class f*x + c*e, with q(x) = 2d."""

    f: int
    c: int
    d: int
    family: Family

    @property
    def t(self) -> int:
        return self.family.t

    @property
    def is_primitive(self) -> bool:
        return gcd(self.f, self.c) == 1

    def __neg__(self) -> PicClass:
        return PicClass(-self.f, -self.c, self.d, self.family)


@dataclass(frozen=True)
class DualClass:
    """A rational class f_hat*x + c_hat*e; d is carried along to evaluate q."""

    f_hat: Fraction
    c_hat: Fraction
    d: int
    family: Family

    def square(self) -> Fraction:
        return 2 * self.d * self.f_hat**2 - self.family.t * self.c_hat**2

    def pairing(self, other: PicClass) -> Fraction:
        _check_compatible(self.family, self.d, other.family, other.d)
        return 2 * self.d * self.f_hat * other.f - self.family.t * self.c_hat * other.c


@dataclass(frozen=True)
class DiscriminantElement:
    """A residue in the cyclic discriminant group Z/tZ."""

    value: int
    t: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.t)

    @property
    def signed_rep(self) -> int:
        """Representative of {delta, -delta} in [0, t/2]."""
        return min(self.value, self.t - self.value) if self.value else 0


def exceptional(family: Family, d: int = 0) -> PicClass:
    return PicClass(0, 1, d, family)


def bb_square(alpha: PicClass) -> int:
    return 2 * alpha.d * alpha.f**2 - alpha.t * alpha.c**2


def _check_compatible(fam1: Family, d1: int, fam2: Family, d2: int) -> None:
    if fam1 != fam2 or d1 != d2:
        raise LatticeError(
            f"classes live in different lattices: ({fam1}, d={d1}) vs ({fam2}, d={d2})"
        )


def bb_pairing(alpha: PicClass, beta: PicClass) -> int:
    _check_compatible(alpha.family, alpha.d, beta.family, beta.d)
    return 2 * alpha.d * alpha.f * beta.f - alpha.t * alpha.c * beta.c


def _require_primitive(alpha: PicClass) -> None:
    if alpha.f == 0 and alpha.c == 0:
        raise LatticeError("the zero class has no divisibility")
    if not alpha.is_primitive:
        raise LatticeError(f"class ({alpha.f}, {alpha.c}) is not primitive")


def divisibility(alpha: PicClass) -> int:
    """Positive generator of the ideal q(alpha, L).

    x pairs to 1 with some vector of the unimodular part, and e is orthogonal
    to that part, so the ideal is generated by f and c*t.
    """
    _require_primitive(alpha)
    return gcd(alpha.f, alpha.c * alpha.t)


def delta(alpha: PicClass) -> DiscriminantElement:
    """Image of alpha/div(alpha) in L^v/L = Z/t, generated by e/t."""
    div = divisibility(alpha)
    return DiscriminantElement(alpha.c * alpha.t // div, alpha.t)


def dual_class(alpha: PicClass) -> DualClass:
    div = divisibility(alpha)
    return DualClass(Fraction(alpha.f, div), Fraction(alpha.c, div), alpha.d, alpha.family)


def dual_square(alpha: PicClass) -> Fraction:
    return Fraction(bb_square(alpha), divisibility(alpha) ** 2)
