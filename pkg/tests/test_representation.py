import cmath
import math
import random

import pytest

from kummerbessel import (DomainError, HypergeometricParams, eq20_residual,
                          eval_rep18, eval_rep18_real_path, eval_rep19,
                          hyp1f1, p_coefficients, r_coefficients, relative_deviation)
from kummerbessel.bessel import bessel_j
from kummerbessel.errors import DegenerateDenominatorError
from kummerbessel.gamma import gamma_complex

# Series truncated after n = 20 at a = 2.5, b = 3.7, evaluated with
# 50-digit mpmath: x -> (rep18, rep19)
TRUNCATED_N20 = {
    1: (2.0097194706864701027, 2.0097194706864701027),
    2: (4.205949449938154302, 4.205949449938154302),
    3: (9.109529330045315857, 9.1095293300453158528),
    4: (20.301955333864508583, 20.30195533386450546),
    5: (46.326312197242657846, 46.326312197242068358),
    6: (107.7873109930280183, 107.78731099298079797),
    7: (254.85833652426052889, 254.85833652216656574),
    8: (610.73413807999163605, 610.73413801975242399),
    9: (1480.1106695011799251, 1480.1106682558154863),
    10: (3621.4133681294104014, 3621.4133482883085002),
}


def test_p_kronecker_delta():
    assert p_coefficients(3.7, 0, 5).values == (1, 0, 0, 0, 0, 0)


def test_p_first_step():
    b, y = 3.7, 0.3 - 2.2j
    p = p_coefficients(b, y, 1).values
    assert p[1] == pytest.approx(y * (b + 1) / (2 * b), rel=1e-15)


def test_p_real_for_real_y():
    p = p_coefficients(2.0, 1.7, 30)
    assert all(v.imag == 0.0 for v in p.values)


def test_p_domain():
    for b in (0.0, -1.0, 1.0):
        with pytest.raises(DomainError):
            p_coefficients(b, 1j, 5)
    with pytest.raises(DomainError):
        p_coefficients(2.0, 1j, 501)


def test_p_b_equals_three_skips_n0_backward_term():
    # 2n+b-3 vanishes at n = 0 when b = 3; the term multiplies P_{-1} = 0
    p = p_coefficients(3.0, 0.5j, 10).values
    assert all(math.isfinite(abs(v)) for v in p)


def test_p_recursion_residual_and_rotation():
    rng = random.Random(31)
    for _ in range(30):
        b = rng.uniform(1.01, 10)
        a = rng.uniform(-5, 5)
        y = complex(0.0, 2 * (b - 2 * a))
        coeffs = p_coefficients(b, y, 40)
        assert max(coeffs.recursion_residuals()) <= 1e-12
        for v in coeffs.rotated():
            assert abs(v.imag) <= 1e-13 * max(abs(v), 1e-300)


def test_p_extension_reuses_prefix():
    short = p_coefficients(2.5, 1 + 1j, 10)
    long = short.extend(30)
    assert long.values[:11] == short.values
    assert long.values == p_coefficients(2.5, 1 + 1j, 30).values


def test_r_first_coefficients():
    for b, mu in [(3.7, -1.3), (2.0, 0.5 + 1j), (5.5, 3.0)]:
        r = r_coefficients(b, mu, 6).values
        assert r[0] == 1 and r[1] == 0
        assert r[2] == pytest.approx(b / (8 * mu * mu), rel=1e-15)
    assert r_coefficients(3.7, -1.3, 2).values[2].real == pytest.approx(0.2736686390, rel=1e-9)


def test_r_residual_and_domain():
    r = r_coefficients(3.7, -1.3, 40)
    assert max(r.recursion_residuals()) <= 1e-12
    with pytest.raises(DomainError):
        r_coefficients(3.7, 0, 5)


@pytest.mark.parametrize("x", range(1, 11))
def test_truncated_values_match_high_precision(x):
    p = HypergeometricParams(2.5, 3.7, float(x))
    r18, r19 = TRUNCATED_N20[x]
    assert eval_rep18(p, 20).value.real == pytest.approx(r18, rel=1e-14)
    assert eval_rep19(p, 20).value.real == pytest.approx(r19, rel=1e-14)
    assert eval_rep18_real_path(2.5, 3.7, float(x), 20) == pytest.approx(r18, rel=1e-14)


def test_rep18_b_equals_2a_collapses_to_single_term():
    a = 1.85
    for z in (1.0, 4.5, -3.0, 2 + 5j):
        res = eval_rep18(HypergeometricParams(a, 2 * a, z), 10)
        closed = (gamma_complex(a + 0.5) * (z / 4j) ** (0.5 - a) * cmath.exp(z / 2)
                  * bessel_j(a - 0.5, z / 2j))
        assert abs(res.value - closed) <= 1e-12 * abs(closed)
        assert abs(res.value - hyp1f1(a, 2 * a, z)) <= 1e-12 * abs(closed)


def test_rep18_domain():
    with pytest.raises(DomainError):
        eval_rep18(HypergeometricParams(1, 2, 0), 10)
    with pytest.raises(DomainError):
        eval_rep18(HypergeometricParams(1, 0.5, 1), 10)
    with pytest.raises(DomainError):
        eval_rep18(HypergeometricParams(1, 2 + 1j, 1), 10)


def test_rep19_domain():
    with pytest.raises(DomainError):
        eval_rep19(HypergeometricParams(2.5, 5.0, 1), 10)
    with pytest.raises(DomainError):
        eval_rep19(HypergeometricParams(2.5, 3.7, 0), 10)


def test_real_path_agrees_with_complex_path():
    rng = random.Random(32)
    for _ in range(50):
        a, b, x = rng.uniform(-5, 5), rng.uniform(1.01, 10), rng.uniform(0.01, 10)
        res = eval_rep18(HypergeometricParams(a, b, x), 40).value
        real = eval_rep18_real_path(a, b, x, 40)
        assert abs(res.real - real) <= 1e-12 * abs(real) + 1e-300
        assert abs(res.imag) <= 1e-12 * abs(res)


def test_converged_flag():
    p = HypergeometricParams(2.5, 3.7, 3.0)
    assert eval_rep18(p, 40).converged
    assert not eval_rep18(p, 3).converged
    assert eval_rep18(p, 40).terms_used == 41


def test_truncation_error_decays():
    for a, b, x in [(2.5, 3.7, 8.0), (3, 2, 10.0), (-1.5, 4.2, 6.0)]:
        p = HypergeometricParams(a, b, x)
        diffs = [abs(eval_rep18(p, n).value - eval_rep18(p, n + 5).value)
                 for n in range(5, 30)]
        meaningful = [d for d in diffs if d > 1e-13 * abs(hyp1f1(a, b, x))]
        assert all(d2 < d1 for d1, d2 in zip(meaningful, meaningful[1:]))


def test_rep18_beats_rep19_at_table_points():
    for x in (5.0, 6.0, 7.0, 8.0, 9.0, 10.0):
        p = HypergeometricParams(2.5, 3.7, x)
        exact = hyp1f1(2.5, 3.7, x)
        assert abs(eval_rep18(p, 20).value - exact) < abs(eval_rep19(p, 20).value - exact)


def test_relative_deviation():
    assert relative_deviation(2.5, 3.7, 2.0, 60, "rep18") == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(ValueError):
        relative_deviation(2.5, 3.7, 2.0, 5, "rep20")


def test_relative_deviation_degenerate(monkeypatch):
    import kummerbessel.representation as mod
    from kummerbessel.kummer import SeriesResult

    monkeypatch.setattr(mod, "hyp1f1_oracle",
                        lambda p: SeriesResult(-eval_rep18(p, 5).value, 1, 0.0, True))
    with pytest.raises(DegenerateDenominatorError):
        relative_deviation(2.5, 3.7, 2.0, 5, "rep18")


def test_eq20_residual():
    assert eq20_residual(2.5, 3.7, 3, 40) <= 1e-10
    assert eq20_residual(2.5, 3.7, 3, 5) > eq20_residual(2.5, 3.7, 3, 40)
    with pytest.raises(DomainError):
        eq20_residual(2.5, 5.0, 3, 10)


def test_eq20_residual_off_axis():
    for a, b, z in [(1.2, 2.5, 4 + 3j), (1.2, 2.5, -4 - 3j), (0.3 + 0.7j, 4.0, 2 - 1j),
                    (-2.0, 6.5, 7.0), (3.0, 2.5, -4.0)]:
        assert eq20_residual(a, b, z, 60) <= 1e-10


def test_eq20_literal_branch_jump():
    # arg(2 mu z) = pi: sides differ by a factor i, |1 - i| = sqrt(2)
    assert eq20_residual(1.2, 2.5, -4.0, 60) == pytest.approx(math.sqrt(2), rel=1e-12)
