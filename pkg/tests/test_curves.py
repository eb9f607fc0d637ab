from fractions import Fraction

import pytest

from mbm_classes.curves import extremal_qhat, genus_bound, gonality_ok, k_range, realize_orbit
from mbm_classes.lattice import Family, LatticeError
from mbm_classes.orbits import OrbitDescriptor, enumerate_mbm_orbits


def orbit(fam, a, b):
    return OrbitDescriptor(fam, a, b)


def test_k3_n2_extremal_orbit():
    cr = realize_orbit(orbit(Family.k3(2), -1, 1))
    assert (cr.genus, cr.r, cr.b_norm, cr.k) == (0, 2, 1, 2)
    assert (cr.locus_dim, cr.fiber_dim) == (2, 2)
    # C - (g - 1 + k) e_hat = C - e_hat, e_hat = e/2
    assert (cr.homology_class.f_hat, cr.homology_class.c_hat) == (1, Fraction(-1, 2))


@pytest.mark.parametrize("n", range(2, 15))
def test_k3_line_in_lagrangian(n):
    cr = realize_orbit(orbit(Family.k3(n), -1, n - 1))
    assert (cr.genus, cr.k) == (0, n)
    t = 2 * (n - 1)
    assert cr.homology_class.c_hat * t == -(n - 1)


def test_kummer_n2_extremal_orbit():
    cr = realize_orbit(orbit(Family.kummer(2), 0, 3))
    assert (cr.genus, cr.r, cr.b_norm, cr.k) == (1, 2, 1, 3)
    assert cr.homology_class.c_hat * 6 == -3


@pytest.mark.parametrize("fam", [Family.k3(5), Family.kummer(5)])
def test_exceptional_orbit(fam):
    cr = realize_orbit(orbit(fam, 0, 1))
    assert cr.exceptional
    assert (cr.genus, cr.k, cr.fiber_dim, cr.locus_dim) == (0, 1, 1, 2 * fam.n - 1)
    assert cr.homology_class.square() == Fraction(-1, fam.t)


def test_invalid_orbit_rejected():
    with pytest.raises(LatticeError):
        realize_orbit(orbit(Family.k3(2), 0, 0))


@pytest.mark.parametrize(
    "fam, expected",
    [(Family.k3(2), 1), (Family.k3(13), 3), (Family.kummer(3), 1), (Family.k3(5), 1), (Family.k3(6), 2)],
)
def test_genus_bound(fam, expected):
    assert genus_bound(fam) == expected


def test_extremal_qhat():
    assert extremal_qhat(Family.k3(2)) == Fraction(-5, 2)
    assert extremal_qhat(Family.kummer(2)) == Fraction(-3, 2)
    assert extremal_qhat(Family.k3(3)) == -3


def test_gonality_guard():
    assert gonality_ok(0, 1) and not gonality_ok(0, 0)
    assert gonality_ok(1, 2) and not gonality_ok(1, 1)
    assert gonality_ok(2, 2) and not gonality_ok(2, 1)
    assert gonality_ok(3, 3) and not gonality_ok(3, 2)


@pytest.mark.parametrize("kind", ["k3", "kummer"])
@pytest.mark.parametrize("n", range(2, 21))
def test_feasibility_all_orbits(kind, n):
    fam = Family.parse(kind, n)
    orbs = enumerate_mbm_orbits(fam)
    reals = [realize_orbit(o) for o in orbs]
    for o, cr in zip(orbs, reals):
        assert cr.genus <= genus_bound(fam)
        assert cr.k <= (n if fam.is_k3 else n + 1)
        assert cr.k > 2 * cr.genus - 2
        assert gonality_ok(cr.genus, cr.k)
        assert cr.fiber_dim == cr.codimension
        assert cr.fiber_dim + cr.locus_dim == 2 * n
        assert cr.homology_class.square() == o.q_hat
        if not cr.exceptional:
            assert cr.genus == o.a + 1
            assert cr.k == cr.b_norm * fam.t // cr.r - cr.genus + 1
            assert cr.k >= (1 if fam.is_k3 else 2)

    lowest = min(reals, key=lambda cr: cr.orbit.q_hat)
    assert lowest.orbit.q_hat == extremal_qhat(fam)
    expected = (0, n) if fam.is_k3 else (1, n + 1)
    assert (lowest.genus, lowest.k) == expected
    assert [cr for cr in reals if cr.orbit.q_hat == extremal_qhat(fam)] == [lowest]


def test_kummer_exceptional_outside_pencil_range():
    fam = Family.kummer(4)
    cr = realize_orbit(orbit(fam, 0, 1))
    assert cr.k == 1 and cr.k not in k_range(fam)
    assert gonality_ok(cr.genus, cr.k)
