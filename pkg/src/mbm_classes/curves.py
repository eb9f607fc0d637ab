"""Rational curves realizing MBM orbits, and their numerical bookkeeping.

On the model Hilb^n(S) (or Kum^n(A)) with Pic(S) = Z*x, a smooth curve C in
|x| of genus g = x^2/2 + 1 carrying a pencil g^1_k maps to a rational curve
numerically equivalent to C - (g-1+k)*e_hat, where e_hat = e/t. Its MBM locus
has dimension 2n - k + g and is covered by (k - g)-dimensional fibres.

The orbit (a, b) = (0, 1) is the orbit of e itself; its curve is the ruling
of the exceptional divisor, not a pencil on a surface curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .lattice import DualClass, Family, LatticeError
from .orbits import InternalConsistencyError, OrbitDescriptor, orbit_params_valid


@dataclass(frozen=True)
class CurveRealization:
    orbit: OrbitDescriptor
    genus: int
    k: int
    r: int
    b_norm: int
    homology_class: DualClass
    locus_dim: int
    fiber_dim: int
    exceptional: bool = False

    @property
    def codimension(self) -> int:
        return 2 * self.orbit.family.n - self.locus_dim


def genus_bound(family: Family) -> int:
    shift = 3 if family.is_k3 else 5
    return -(-(family.n + shift) // 4) - 1


def extremal_qhat(family: Family) -> Fraction:
    if family.is_k3:
        return Fraction(-(family.n + 3), 2)
    return Fraction(-(family.n + 1), 2)


def k_range(family: Family) -> range:
    """Pencil degrees allowed by the Riemann-Hurwitz construction."""
    if family.is_k3:
        return range(1, family.n + 1)
    return range(2, family.n + 2)


def gonality_ok(genus: int, k: int) -> bool:
    if genus == 0:
        return k >= 1
    if genus == 1:
        return k >= 2
    return (genus + 1) // 2 + 1 <= k


def _check(cond: bool, what: str, orbit: OrbitDescriptor) -> None:
    if not cond:
        raise InternalConsistencyError(f"{what} fails for orbit (a={orbit.a}, b={orbit.b}) of {orbit.family}")


def realize_orbit(orbit: OrbitDescriptor) -> CurveRealization:
    family = orbit.family
    if not orbit_params_valid(family, orbit.a, orbit.b):
        raise LatticeError(f"({orbit.a}, {orbit.b}) is not a valid orbit label for {family}")
    n, t = family.n, family.t
    g_bt = gcd(orbit.b, t)
    r = t // g_bt
    b_norm = orbit.b // g_bt

    if (orbit.a, orbit.b) == (0, 1):
        # P^1 fibre of the exceptional divisor over the diagonal; its dual class is e/t
        hom = DualClass(Fraction(0), Fraction(1, t), orbit.a, family)
        # not a Riemann-Hurwitz pencil, so only the gonality guard applies (k = 1 even for Kummer)
        real = CurveRealization(orbit, 0, 1, r, b_norm, hom, 2 * n - 1, 1, exceptional=True)
        _check(gonality_ok(real.genus, real.k), "gonality bound", orbit)
    else:
        genus = orbit.a + 1
        k = b_norm * t // r - genus + 1
        hom = DualClass(Fraction(1), Fraction(-b_norm, r), orbit.a, family)
        real = CurveRealization(orbit, genus, k, r, b_norm, hom, 2 * n - k + genus, k - genus)
        _check(k in k_range(family), "k range", orbit)
        _check(k > 2 * genus - 2, "k > 2g - 2", orbit)
        _check(gonality_ok(genus, k), "gonality bound", orbit)
        # same class written as C - (g - 1 + k) e_hat
        _check(hom.c_hat * t == -(genus - 1 + k), "Riemann-Hurwitz class", orbit)

    _check(real.genus <= genus_bound(family), "genus bound", orbit)
    _check(real.fiber_dim == real.codimension, "fibre dimension = codimension", orbit)
    _check(real.homology_class.square() == orbit.q_hat, "q(homology class) = q_hat", orbit)
    return real
