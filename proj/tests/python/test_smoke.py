import math

import pytest

import zetasphere as zs


def test_zeta_at_two():
    assert zs.zeta(2) == pytest.approx(math.pi**2 / 6, rel=1e-13)


def test_pole_raises():
    with pytest.raises(zs.PoleError):
        zs.zeta(1)


def test_completed_zeta_is_symmetric():
    s = complex(0.3, 5.0)
    assert abs(zs.completed_zeta(s) - zs.completed_zeta(1 - s)) < 1e-12


def test_gamma_quarter():
    assert zs.gamma(0.25).real == pytest.approx(3.6256099082219083, rel=1e-13)


def test_table_rational():
    assert zs.even_zeta_rational(20) == "174611/1531329465290625"


def test_scan_finds_first_zeros():
    zeros = zs.scan_zeros(10.0, 30.0)
    assert [round(z.ordinate, 6) for z in zeros] == [14.134725, 21.02204, 25.010858]
    assert all(abs(z.criterion - 1) < 1e-6 for z in zeros)


def test_rectangle_count():
    assert zs.count_zeros_rectangle(-0.5, 1.5, 1.0, 30.0) == 3


def test_sphere_round_trip():
    z0, w0 = zs.stereo_lift(complex(3, -4))
    assert abs(zs.stereo_project(z0, w0) - complex(3, -4)) < 1e-12
    assert zs.stereo_lift(None) == (0j, 2.0)
    assert zs.chordal_distance(0, None) == pytest.approx(2.0)


def test_zeta_hat():
    hat = zs.build_zeta_hat(14.1347, -0.05438)
    assert hat["constant"].real == pytest.approx(6.80465359316733e-5, rel=1e-9)
    assert hat["degree"] == 2
    assert hat["b"] == 2


def test_bad_argument():
    with pytest.raises(zs.DomainError):
        zs.build_zeta_hat(-1.0, 1.0)
