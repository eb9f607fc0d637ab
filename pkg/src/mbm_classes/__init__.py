"""Exact classification of MBM classes on K3^[n]- and Kummer-type manifolds."""

from .curves import CurveRealization, extremal_qhat, genus_bound, realize_orbit
from .lattice import (
    DiscriminantElement,
    DualClass,
    Family,
    FamilyKind,
    LatticeError,
    PicClass,
    bb_pairing,
    bb_square,
    delta,
    divisibility,
    dual_class,
    exceptional,
)
from .mukai import AbstractMukaiVector, orbit_to_wall, wall_predicate, wall_to_orbit
from .orbits import (
    Classification,
    InternalConsistencyError,
    NormalizedClass,
    OrbitDescriptor,
    TorusClassError,
    Verdict,
    canonical_representative,
    classify,
    enumerate_mbm_orbits,
    normalize,
    orbit_params_valid,
    same_orbit,
)
from .walls import ScanWindow, WallRay, chamber_of, scan_walls

__version__ = "0.1.0"
