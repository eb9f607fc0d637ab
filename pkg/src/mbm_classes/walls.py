"""MBM walls in the positive cone of a rank-2 Picard lattice <x> + <e>.

With q(x) = 2d > 0 and q(e) = -t the positive cone is the sector
{p*x + q*e : p > 0, |q/p| < sqrt(2d/t)}. Every MBM class of negative square
is orthogonal to exactly one ray of that sector, spanned by (t*c, 2d*f) up to
scaling. Walls accumulate toward the boundary rays, so a scan is complete
only up to its coefficient bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .lattice import Family, LatticeError, PicClass, bb_pairing, bb_square
from .orbits import OrbitDescriptor, classify


@dataclass(frozen=True)
class ScanWindow:
    """Bounds on the ray slope q/p; ``None`` leaves that side open."""

    coeff_bound: int
    slope_lo: Optional[Fraction] = None
    slope_hi: Optional[Fraction] = None

    def __post_init__(self):
        if self.coeff_bound < 1:
            raise LatticeError(f"coefficient bound must be >= 1, got {self.coeff_bound}")
        if self.slope_lo is not None and self.slope_hi is not None and self.slope_lo >= self.slope_hi:
            raise LatticeError(f"empty slope window [{self.slope_lo}, {self.slope_hi}]")

    def contains(self, slope: Fraction) -> bool:
        if self.slope_lo is not None and slope < self.slope_lo:
            return False
        if self.slope_hi is not None and slope > self.slope_hi:
            return False
        return True


@dataclass(frozen=True)
class WallRay:
    p: int
    q: int
    source: PicClass
    orbit: OrbitDescriptor

    @property
    def slope(self) -> Fraction:
        return Fraction(self.q, self.p)

    def generator(self) -> PicClass:
        return PicClass(self.p, self.q, self.source.d, self.source.family)


@dataclass(frozen=True)
class Chamber:
    lower: Optional[WallRay]
    upper: Optional[WallRay]
    probe: PicClass
    on_wall: bool
    coeff_bound: int
    complete: str = "complete only within the scan bound"


def orthogonal_ray(source: PicClass) -> tuple[int, int]:
    """Primitive (p, q) with p > 0 spanning the orthogonal of ``source``.

    Only meaningful for d > 0 and q(source) < 0, where this ray is positive.
    """
    p, q = source.t * source.c, 2 * source.d * source.f
    g = gcd(p, q)
    p, q = p // g, q // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return p, q


def iter_negative_sources(family: Family, d: int, bound: int):
    """Primitive classes with |f|, |c| <= bound and q < 0, one per sign pair."""
    for f in range(0, bound + 1):
        for c in range(-bound, bound + 1):
            if f == 0 and c <= 0:
                continue
            if gcd(f, c) != 1:
                continue
            alpha = PicClass(f, c, d, family)
            if bb_square(alpha) < 0:
                yield alpha


def scan_walls(family: Family, d: int, window: ScanWindow) -> list[WallRay]:
    """Wall rays from MBM sources with coefficients bounded by the window.

    For d <= 0 there is no positive cone; sources are still classified but
    no rays are emitted.
    """
    rays = []
    for alpha in iter_negative_sources(family, d, window.coeff_bound):
        verdict = classify(alpha)
        if not verdict.is_mbm or d <= 0:
            continue
        p, q = orthogonal_ray(alpha)
        ray = WallRay(p, q, alpha, verdict.orbit)
        if window.contains(ray.slope):
            rays.append(ray)
    rays.sort(key=lambda w: w.slope)
    return rays


def classify_sources(family: Family, d: int, bound: int) -> dict[str, int]:
    counts = {"negative": 0, "mbm": 0}
    for alpha in iter_negative_sources(family, d, bound):
        counts["negative"] += 1
        counts["mbm"] += classify(alpha).is_mbm
    return counts


def check_ray(ray: WallRay) -> bool:
    gen = ray.generator()
    return (
        bb_pairing(gen, ray.source) == 0
        and bb_square(gen) > 0
        and gcd(ray.p, ray.q) == 1
        and ray.p > 0
    )


def chamber_of(family: Family, d: int, probe: PicClass, window: ScanWindow) -> Chamber:
    """Nearest scanned walls on either side of the probe's ray.

    A probe lying on a wall gets that wall as its lower bound.
    """
    if d <= 0:
        raise LatticeError("chamber queries need d > 0 (no positive cone otherwise)")
    if probe.family != family or probe.d != d:
        raise LatticeError("probe lives in a different lattice")
    if bb_square(probe) <= 0 or probe.f <= 0:
        raise LatticeError(f"probe ({probe.f}, {probe.c}) is not in the positive cone")
    slope = Fraction(probe.c, probe.f)
    lower = upper = None
    for ray in scan_walls(family, d, window):
        if ray.slope <= slope:
            lower = ray
        elif upper is None:
            upper = ray
    on_wall = lower is not None and lower.slope == slope
    return Chamber(lower, upper, probe, on_wall, window.coeff_bound)
