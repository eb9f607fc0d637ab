"""Bayer-Macri / Yoshioka walls and their match with MBM orbits.

A Mukai vector a = (u, kappa, s) is only ever paired with v = (1, 0, 1-n)
(K3) or (1, 0, -1-n) (Kummer) and with itself, so it is stored as
(u, kappa^2, s). Mukai pairing: (r1, k1, s1).(r2, k2, s2) = k1.k2 - r1 s2 - r2 s1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .lattice import Family, LatticeError
from .orbits import OrbitDescriptor, enumerate_mbm_orbits, orbit_params_valid


@dataclass(frozen=True)
class AbstractMukaiVector:
    u: int
    kappa_sq: int
    s: int
    family: Family

    def __post_init__(self):
        if self.kappa_sq % 2:
            raise LatticeError(f"kappa^2 must be even, got {self.kappa_sq}")

    @property
    def square(self) -> int:
        return self.kappa_sq - 2 * self.u * self.s

    @property
    def pairing_v(self) -> int:
        return self.family.t * self.u // 2 - self.s

    @property
    def pairing_e(self) -> int:
        """Pairing with e = (1, 0, n-1) (K3) or (1, 0, n+1) (Kummer)."""
        return -self.s - self.family.t * self.u // 2


def v_square(family: Family) -> int:
    return family.t


def wall_predicate(a: AbstractMukaiVector) -> bool:
    t = a.family.t
    pv = a.pairing_v
    if a.family.is_k3:
        return a.square >= -2 and 0 <= pv and 2 * pv <= t
    return a.square >= 0 and 0 < pv and 2 * pv <= t


def wall_to_orbit(a: AbstractMukaiVector) -> Optional[tuple[int, int]]:
    """Orbit label of the projection of a to v^perp, or None if it cuts no wall.

    The projection is t*kappa - b*e up to monodromy, with q(x) = a^2 and
    b = (v, a); it is negative exactly when 2a < b^2/t.
    """
    if not wall_predicate(a):
        raise LatticeError(f"{a} does not satisfy the wall condition")
    a_param = a.square // 2
    b_param = a.pairing_v
    if 2 * a_param * a.family.t >= b_param * b_param:
        return None
    return a_param, b_param


def orbit_to_wall(family: Family, a_param: int, b_param: int, u: int) -> AbstractMukaiVector:
    if not orbit_params_valid(family, a_param, b_param):
        raise LatticeError(f"({a_param}, {b_param}) is not an MBM orbit label for {family}")
    s = family.t * u // 2 - b_param
    return AbstractMukaiVector(u, 2 * a_param + 2 * u * s, s, family)


def projection_qhat(a_param: int, b_param: int, family: Family) -> Fraction:
    return 2 * a_param - Fraction(b_param**2, family.t)


def scan_wall_orbits(family: Family, u_bound: int, s_bound: int, kappa_bound: int) -> set[tuple[int, int]]:
    """Orbit labels hit by all wall vectors with |u|, |s|, |kappa^2| within bounds."""
    if min(u_bound, s_bound, kappa_bound) < 0:
        raise LatticeError("scan bounds must be non-negative")
    t = family.t
    lo_sq = -2 if family.is_k3 else 0
    k_lo = -kappa_bound + (kappa_bound % 2)
    found = set()
    for u in range(-u_bound, u_bound + 1):
        for s in range(-s_bound, s_bound + 1):
            b = t * u // 2 - s
            if b < 0 or 2 * b > t or (b == 0 and not family.is_k3):
                continue
            # a^2 = kappa^2 - 2us runs over an arithmetic progression of even numbers
            for kappa_sq in range(k_lo, kappa_bound + 1, 2):
                sq = kappa_sq - 2 * u * s
                if sq < lo_sq:
                    continue
                hit = wall_to_orbit(AbstractMukaiVector(u, kappa_sq, s, family))
                if hit is not None:
                    found.add(hit)
    return found


def bm_check(family: Family, u_bound: int, s_bound: int, kappa_bound: int) -> dict:
    """Compare the wall-scan orbit set against the enumerated orbit set."""
    from_walls = scan_wall_orbits(family, u_bound, s_bound, kappa_bound)
    from_theorem = {(o.a, o.b) for o in enumerate_mbm_orbits(family)}
    return {
        "wall_orbits": sorted(from_walls, key=lambda ab: (ab[1], ab[0])),
        "theorem_orbits": sorted(from_theorem, key=lambda ab: (ab[1], ab[0])),
        "match": from_walls == from_theorem,
    }


def round_trip_failures(family: Family, us: Iterable[int]) -> list[tuple[int, int, int]]:
    bad = []
    for o in enumerate_mbm_orbits(family):
        for u in us:
            w = orbit_to_wall(family, o.a, o.b, u)
            if not wall_predicate(w) or wall_to_orbit(w) != (o.a, o.b):
                bad.append((o.a, o.b, u))
    return bad


def matched_orbit(a: AbstractMukaiVector) -> Optional[OrbitDescriptor]:
    hit = wall_to_orbit(a)
    return None if hit is None else OrbitDescriptor(a.family, *hit)
