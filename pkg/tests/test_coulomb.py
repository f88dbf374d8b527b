import math

import pytest

from kummerbessel import (CoulombParams, DomainError, coulomb_wave_exact,
                          coulomb_wave_tra, f0_norm, p_coefficients,
                          schrodinger_residual, tra_coefficients)
from kummerbessel.bessel import bessel_j
from kummerbessel.coulomb import default_terms

PARAM_SETS = [(1, 0.5, 0), (-1, 0.5, 0), (1, 2, 1), (2, 1, 2)]


def test_params():
    p = CoulombParams(1.0, 2.0, 1)
    assert p.k == 2.0 and p.sigma == 0.5
    for bad in [(1, 0.0, 0), (1, -1.0, 0), (1, 0.5, -1), (1, 0.5, 0.5)]:
        with pytest.raises(DomainError):
            CoulombParams(*bad)


def test_tra_coefficients():
    assert tra_coefficients(0, 0, 0.7)[1] == 0.0
    assert tra_coefficients(3, 1, 0.0)[0] == 0.0
    assert tra_coefficients(1, 0, 0.3)[1] == pytest.approx(4 / 3, rel=1e-15)


@pytest.mark.parametrize("Z,E,l", PARAM_SETS)
def test_tra_recursion_matches_p_coefficients(Z, E, l):
    p = CoulombParams(Z, E, l)
    y = 4 * p.sigma
    alpha = tra_coefficients(0, l, p.sigma)[0]
    assert alpha == -y
    # alpha_n f_n + gamma_{n+1} f_{n+1} + gamma_{n-1} f_{n-1} = 0
    f = [1.0]
    for n in range(40):
        g_up = tra_coefficients(n + 1, l, p.sigma)[1]
        g_down = tra_coefficients(n - 1, l, p.sigma)[1] if n > 0 else 0.0
        prev = f[n - 1] if n > 0 else 0.0
        f.append(-(alpha * f[n] + g_down * prev) / g_up)
    ref = p_coefficients(2 * l + 2, y, 40).values
    for fn, pn in zip(f, ref):
        assert abs(fn - pn.real) <= 1e-13 * max(abs(pn), 1e-300)


def test_f0_norm():
    root = math.sqrt(math.pi / 2)
    assert f0_norm(CoulombParams(0, 0.7, 0)) == pytest.approx(root, rel=1e-15)
    assert f0_norm(CoulombParams(0, 0.7, 2)) == pytest.approx(root, rel=1e-14)
    # sigma = 1: |Gamma(1+i)| = sqrt(pi/sinh(pi))
    expected = root * math.exp(-math.pi / 2) * math.sqrt(math.pi / math.sinh(math.pi))
    assert f0_norm(CoulombParams(1, 0.5, 0)) == pytest.approx(expected, rel=1e-13)


def test_free_particle():
    p = CoulombParams(0, 0.5, 0)
    assert coulomb_wave_tra(p, math.pi / 2).psi == pytest.approx(1.0, rel=1e-15)
    assert coulomb_wave_exact(p, math.pi / 2).psi == pytest.approx(1.0, rel=1e-15)
    for r in (0.3, 2.0, 7.7):
        assert coulomb_wave_tra(p, r).psi == pytest.approx(math.sin(r), abs=1e-14)


def test_zero_charge_collapses_to_single_bessel():
    for l in (0, 1, 3):
        p = CoulombParams(0, 1.3, l)
        assert p_coefficients(2 * l + 2, 0.0, 50).values[1:] == (0,) * 50
        r = 2.4
        kr = p.k * r
        single = math.sqrt(math.pi * kr / 2) * bessel_j(l + 0.5, kr).real
        assert coulomb_wave_tra(p, r).psi == pytest.approx(single, rel=1e-14)


@pytest.mark.parametrize("l", [0, 1, 2])
def test_small_r_behaviour(l):
    p = CoulombParams(1, 0.5, l)
    ratios = [coulomb_wave_tra(p, r).psi / r ** (l + 1) for r in (1e-3, 1e-4)]
    assert ratios[0] != 0 and ratios[0] == pytest.approx(ratios[1], rel=1e-2)
    assert coulomb_wave_exact(p, 1e-4).psi == pytest.approx(0.0, abs=1e-4)


def test_series_matches_closed_form():
    p = CoulombParams(1, 0.5, 0)
    assert coulomb_wave_tra(p, 3, 60).psi == pytest.approx(
        coulomb_wave_exact(p, 3).psi, rel=1e-8)
    p = CoulombParams(1, 0.5, 1)
    assert coulomb_wave_tra(p, 5, 80).psi == pytest.approx(
        coulomb_wave_exact(p, 5).psi, rel=1e-8)


def test_schrodinger_residual():
    assert schrodinger_residual(CoulombParams(1, 0.5, 0), 4.0) <= 1e-6
    assert schrodinger_residual(CoulombParams(0, 0.5, 0), math.pi) <= 1e-6
    p = CoulombParams(1, 0.5, 0)
    r1 = schrodinger_residual(p, 4.0, 1e-3)
    r2 = schrodinger_residual(p, 4.0, 5e-4)
    assert r2 <= r1 + 1e-8


def test_domain_errors():
    p = CoulombParams(1, 0.5, 0)
    with pytest.raises(DomainError):
        coulomb_wave_tra(p, 0.0)
    with pytest.raises(DomainError):
        coulomb_wave_tra(p, 100.0)
    with pytest.raises(DomainError):
        schrodinger_residual(p, 1e-3)


def test_default_terms():
    assert default_terms(1.0) == 40
    assert default_terms(20.0) == 60
