from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mbm_classes.lattice import Family, LatticeError
from mbm_classes.mukai import (
    AbstractMukaiVector,
    bm_check,
    orbit_to_wall,
    projection_qhat,
    round_trip_failures,
    scan_wall_orbits,
    wall_predicate,
    wall_to_orbit,
)
from mbm_classes.orbits import enumerate_mbm_orbits

from strategies import families

K3_2 = Family.k3(2)
KUM_2 = Family.kummer(2)


def mukai_pairing(x, y):
    # explicit (r, kappa, s) vectors with kappa given by its coordinates in a
    # hyperbolic plane U: kappa = (k1, k2), kappa.kappa' = k1 k2' + k2 k1'
    (r1, (a1, b1), s1), (r2, (a2, b2), s2) = x, y
    return a1 * b2 + b1 * a2 - r1 * s2 - r2 * s1


@given(families(20), st.integers(-10, 10), st.integers(-30, 30), st.integers(-100, 100))
def test_pairings_against_explicit_vectors(fam, u, k, s):
    n, t = fam.n, fam.t
    a = (u, (1, k), s)  # kappa has square 2k
    v = (1, (0, 0), 1 - n if fam.is_k3 else -1 - n)
    e = (1, (0, 0), n - 1 if fam.is_k3 else n + 1)
    abstract = AbstractMukaiVector(u, 2 * k, s, fam)
    assert abstract.square == mukai_pairing(a, a)
    assert abstract.pairing_v == mukai_pairing(v, a)
    assert abstract.pairing_e == mukai_pairing(e, a)
    assert mukai_pairing(v, v) == t
    assert mukai_pairing(e, e) == -t
    assert mukai_pairing(v, e) == 0

    # projection z = v^2 a - (v, a) v equals t*kappa - (a, e) e coordinatewise
    pv = mukai_pairing(v, a)
    z = (t * u - pv, (t, t * k), t * s - pv * v[2])
    ae = mukai_pairing(a, e)
    assert z == (-ae, (t, t * k), -ae * e[2])
    assert mukai_pairing(z, v) == 0
    # and has the square of t*x - b*e with q(x) = a^2, b = (v, a)
    assert mukai_pairing(z, z) == t * t * abstract.square - t * pv * pv


def test_wall_predicate_examples():
    assert wall_predicate(AbstractMukaiVector(0, -2, 0, K3_2))
    assert wall_predicate(AbstractMukaiVector(1, 0, 0, K3_2))
    assert not wall_predicate(AbstractMukaiVector(0, -2, 0, KUM_2))
    assert not wall_predicate(AbstractMukaiVector(0, -4, 0, K3_2))
    assert not wall_predicate(AbstractMukaiVector(0, 0, -2, K3_2))  # (v, a) = 2 > t/2
    assert not wall_predicate(AbstractMukaiVector(0, 0, 0, KUM_2))  # (v, a) = 0


def test_odd_kappa_rejected():
    with pytest.raises(LatticeError):
        AbstractMukaiVector(0, 3, 0, K3_2)


def test_wall_to_orbit_examples():
    assert wall_to_orbit(AbstractMukaiVector(0, -2, 0, K3_2)) == (-1, 0)
    assert wall_to_orbit(AbstractMukaiVector(1, 0, 0, K3_2)) == (0, 1)
    assert wall_to_orbit(AbstractMukaiVector(0, 2, 0, K3_2)) is None
    with pytest.raises(LatticeError):
        wall_to_orbit(AbstractMukaiVector(0, -4, 0, K3_2))


def test_orbit_to_wall_examples():
    assert orbit_to_wall(K3_2, 0, 1, 1) == AbstractMukaiVector(1, 0, 0, K3_2)
    assert orbit_to_wall(K3_2, -1, 0, 0) == AbstractMukaiVector(0, -2, 0, K3_2)
    w = orbit_to_wall(KUM_2, 0, 3, 0)
    assert w == AbstractMukaiVector(0, 0, -3, KUM_2)
    assert w.square == 0 and w.pairing_v == 3
    with pytest.raises(LatticeError):
        orbit_to_wall(K3_2, 0, 0, 1)


@pytest.mark.parametrize("kind", ["k3", "kummer"])
@pytest.mark.parametrize("n", range(2, 11))
def test_round_trip(kind, n):
    assert round_trip_failures(Family.parse(kind, n), range(-5, 6)) == []


@pytest.mark.parametrize("kind", ["k3", "kummer"])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_scan_hits_exactly_the_orbits(kind, n):
    fam = Family.parse(kind, n)
    t = fam.t
    hits = scan_wall_orbits(fam, 5, 5 * t, 8 * t * t)
    assert hits == {(o.a, o.b) for o in enumerate_mbm_orbits(fam)}
    by_label = {(o.a, o.b): o for o in enumerate_mbm_orbits(fam)}
    for a, b in hits:
        assert projection_qhat(a, b, fam) == by_label[(a, b)].q_hat


def test_scan_with_small_bounds_is_a_subset():
    fam = Family.k3(6)
    hits = scan_wall_orbits(fam, 1, 2, 2)
    assert hits < {(o.a, o.b) for o in enumerate_mbm_orbits(fam)}
    assert not bm_check(fam, 1, 2, 2)["match"]


def test_non_negative_projection_filtered():
    # a^2 = 2, (v, a) = 1 for K3 n=3 (t = 4): 2a = 2 >= 1/4
    a = AbstractMukaiVector(0, 2, -1, Family.k3(3))
    assert wall_predicate(a)
    assert wall_to_orbit(a) is None
    assert projection_qhat(1, 1, Family.k3(3)) == Fraction(7, 4)
