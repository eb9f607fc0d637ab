"""Monodromy orbits of MBM classes.

An orbit is labelled by integers (a, b): b = +-delta of the class (as an
integer in [0, t/2]) and q of the dual class equals 2a - b^2/t. The valid
labels are

    K3 type:      0 <= b <= n-1,  -2 <= 2a < b^2/t
    Kummer type:  1 <= b <= n+1,   0 <= 2a < b^2/t

Membership of an arbitrary class is decided by moving it with monodromy to
the normal form r*x - b_norm*e (r = gcd(f, t), 0 <= b_norm <= r/2) and
checking the square of x there.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .lattice import (
    Family,
    LatticeError,
    PicClass,
    bb_square,
    delta,
)


class InternalConsistencyError(RuntimeError):
    """A bound guaranteed by the classification theorems was violated."""


class TorusClassError(LatticeError):
    """Kummer class whose normal form has b_norm = 0; such classes are never MBM."""


@dataclass(frozen=True)
class OrbitDescriptor:
    family: Family
    a: int
    b: int

    @property
    def t(self) -> int:
        return self.family.t

    @property
    def q_hat(self) -> Fraction:
        return 2 * self.a - Fraction(self.b**2, self.t)

    @property
    def delta_abs(self) -> int:
        return self.b

    @property
    def canonical_rep(self) -> PicClass:
        return canonical_representative(self.family, self.a, self.b)

    def key(self) -> tuple:
        return (self.q_hat, self.delta_abs)


@dataclass(frozen=True)
class NormalizedClass:
    """Normal form r*x - b_norm*e of a class, with q(x) = q_x.

    ``shift`` is the integer l used to bring c into [-r/2, r/2].
    """

    r: int
    b_norm: int
    q_x: int
    shift: int
    family: Family

    @property
    def b(self) -> int:
        """Orbit-level b = b_norm * t / r."""
        return self.b_norm * (self.family.t // self.r)

    def as_class(self) -> PicClass:
        return PicClass(self.r, -self.b_norm, self.q_x // 2, self.family)


class Verdict(enum.Enum):
    MBM = "MBM"
    NOT_MBM = "NotMBM"
    NON_NEGATIVE_SQUARE = "NonNegativeSquare"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    orbit: Optional[OrbitDescriptor] = None
    normalized: Optional[NormalizedClass] = None
    reason: str = ""

    @property
    def is_mbm(self) -> bool:
        return self.verdict is Verdict.MBM


def _a_range(family: Family, b: int) -> range:
    # largest a with 2a*t < b^2
    t = family.t
    a_hi = -((-(b * b)) // (2 * t)) - 1
    a_lo = -1 if family.is_k3 else 0
    return range(a_lo, a_hi + 1)


def _b_range(family: Family) -> range:
    if family.is_k3:
        return range(0, family.n)
    return range(1, family.n + 2)


def orbit_params_valid(family: Family, a: int, b: int) -> bool:
    t = family.t
    if b not in _b_range(family):
        return False
    lower = -2 if family.is_k3 else 0
    return lower <= 2 * a and 2 * a * t < b * b


def enumerate_mbm_orbits(family: Family) -> list[OrbitDescriptor]:
    """All MBM orbits of the family, ordered by (b, a)."""
    return [OrbitDescriptor(family, a, b) for b in _b_range(family) for a in _a_range(family, b)]


def canonical_representative(family: Family, a: int, b: int) -> PicClass:
    """The class (t/g)*z - (b/g)*e with q(z) = 2a and g = gcd(b, t)."""
    if not orbit_params_valid(family, a, b):
        raise LatticeError(f"(a, b) = ({a}, {b}) is not an MBM orbit label for {family}")
    t = family.t
    g = gcd(b, t)
    return PicClass(t // g, -(b // g), a, family)


def normalize(alpha: PicClass) -> NormalizedClass:
    """Monodromy normal form of a primitive class of negative square.

    With r = gcd(f, t), f = r*m, t = r*s, the class is equivalent to
    r*y' + c*e with q(y') = m^2 q(x), and then to r*x' + (c - l*r)*e for
    every integer l, provided q(x') = q(y') + t*l^2 - 2*c*l*s.
    """
    if not alpha.is_primitive:
        raise LatticeError(f"class ({alpha.f}, {alpha.c}) is not primitive")
    sq = bb_square(alpha)
    if sq >= 0:
        raise LatticeError(f"class has non-negative square {sq}")
    family = alpha.family
    t = family.t
    r = gcd(alpha.f, t)
    m = alpha.f // r
    s = t // r
    c = alpha.c
    b_prime = c % r
    if 2 * b_prime > r:
        b_prime -= r
    l = (c - b_prime) // r
    q_x = m * m * 2 * alpha.d + t * l * l - 2 * c * l * s
    norm = NormalizedClass(r, abs(b_prime), q_x, l, family)
    if not family.is_k3 and norm.b_norm == 0:
        raise TorusClassError(
            "normal form has b_norm = 0: the class comes from the torus, whose curves "
            "have non-negative squares, so it is never MBM"
        )
    return norm


def classify(alpha: PicClass) -> Classification:
    if not alpha.is_primitive:
        raise LatticeError(f"class ({alpha.f}, {alpha.c}) is not primitive")
    if bb_square(alpha) >= 0:
        return Classification(Verdict.NON_NEGATIVE_SQUARE, reason="q(alpha) >= 0")
    family = alpha.family
    try:
        norm = normalize(alpha)
    except TorusClassError as exc:
        return Classification(Verdict.NOT_MBM, reason=f"torus class: {exc}")

    threshold = -2 if family.is_k3 else 0
    if norm.q_x < threshold:
        return Classification(
            Verdict.NOT_MBM,
            normalized=norm,
            reason=f"q(x) = {norm.q_x} < {threshold} in the normal form",
        )

    orbit = OrbitDescriptor(family, norm.q_x // 2, norm.b)
    if not orbit_params_valid(family, orbit.a, orbit.b):
        raise InternalConsistencyError(f"normal form {norm} gives invalid orbit label")
    return Classification(Verdict.MBM, orbit=orbit, normalized=norm)


def same_orbit(alpha: PicClass, beta: PicClass) -> bool:
    """Orbit equality through the complete invariants q and +-delta."""
    if alpha.family != beta.family:
        raise LatticeError(f"family mismatch: {alpha.family} vs {beta.family}")
    return (
        bb_square(alpha) == bb_square(beta)
        and delta(alpha).signed_rep == delta(beta).signed_rep
    )


def orbit_of_invariants(family: Family, q_hat: Fraction, delta_abs: int) -> Optional[OrbitDescriptor]:
    """Look up the orbit label matching (q of the dual class, +-delta), if any."""
    two_a = q_hat + Fraction(delta_abs**2, family.t)
    if two_a.denominator != 1 or two_a.numerator % 2:
        return None
    a = two_a.numerator // 2
    if orbit_params_valid(family, a, delta_abs):
        return OrbitDescriptor(family, a, delta_abs)
    return None

