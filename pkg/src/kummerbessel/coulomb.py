"""Coulomb scattering states of the radial Schrodinger equation.

Atomic units (hbar = m = 1).  For charge ``Z``, energy ``E > 0`` and angular
momentum ``l`` the regular solution of

    [-1/2 d^2/dr^2 + l(l+1)/(2 r^2) + Z/r] psi = E psi

is evaluated two ways: as the Bessel series
``f0 sqrt(kr) sum_n P_n(4 sigma) J_{n+l+1/2}(kr)`` and in closed form through
1F1.  Here ``k = sqrt(2E)`` and ``sigma = Z/k``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .bessel import MAX_ARGUMENT, bessel_j_sequence
from .errors import ConsistencyError, ConvergenceError, DomainError
from .gamma import abs_gamma_shifted
from .kummer import HypergeometricParams, hyp1f1_oracle
from .representation import p_coefficients
from .scalar import compensated_sum

MAX_SERIES_TERMS = 200


@dataclass(frozen=True)
class CoulombParams:
    """Charge ``Z``, energy ``E > 0`` and angular momentum ``l``."""

    Z: float
    E: float
    l: int

    def __post_init__(self):
        if not (math.isfinite(self.Z) and math.isfinite(self.E)):
            raise DomainError("Z and E must be finite")
        if not self.E > 0.0:
            raise DomainError(f"scattering states need E > 0, got {self.E!r}")
        if int(self.l) != self.l or self.l < 0:
            raise DomainError(f"l must be a non-negative integer, got {self.l!r}")
        object.__setattr__(self, "l", int(self.l))

    @property
    def k(self) -> float:
        return math.sqrt(2.0 * self.E)

    @property
    def sigma(self) -> float:
        return self.Z / self.k


@dataclass(frozen=True)
class WaveSample:
    r: float
    psi: float
    method: str


def default_terms(kr: float) -> int:
    """Truncation heuristic ``max(40, 2 kr + 20)`` for the Bessel series."""
    return max(40, int(math.ceil(2.0 * kr + 20.0)))


def tra_coefficients(n: int, l: int, sigma: float) -> tuple[float, float]:
    """Diagonal and off-diagonal recursion coefficients ``(alpha_n, gamma_n)``.

    ``alpha_n = -4 sigma`` and ``gamma_n = (n + nu) - (l + 1/2)^2 / (n + nu)``
    with ``nu = l + 1/2``.  The expansion coefficients ``f_n`` then obey
    ``alpha_n f_n + gamma_{n+1} f_{n+1} + gamma_{n-1} f_{n-1} = 0``.
    """
    if n < -1:
        raise DomainError("n must be >= -1")
    nu = l + 0.5
    return -4.0 * sigma, (n + nu) - nu * nu / (n + nu)


def f0_norm(p: CoulombParams) -> float:
    """Normalization ``sqrt(pi/2)/l! * exp(-pi sigma/2) * |Gamma(l+1+i sigma)|``."""
    s = p.sigma
    return (math.sqrt(math.pi / 2.0) / math.factorial(p.l)
            * math.exp(-math.pi * s / 2.0) * abs_gamma_shifted(p.l, s))


def _check_r(p: CoulombParams, r: float) -> float:
    r = float(r)
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r!r}")
    if p.k * r > MAX_ARGUMENT:
        raise DomainError(f"kr = {p.k * r:g} exceeds {MAX_ARGUMENT:g}")
    return r


def coulomb_wave_tra(p: CoulombParams, r: float,
                     n_terms: int | None = None) -> WaveSample:
    """Bessel-series wavefunction truncated after ``n = n_terms``.

    ``n_terms`` defaults to :func:`default_terms` of ``kr``.
    """
    r = _check_r(p, r)
    kr = p.k * r
    N = default_terms(kr) if n_terms is None else int(n_terms)
    if N < 0 or N > MAX_SERIES_TERMS:
        raise DomainError(f"n_terms must lie in [0, {MAX_SERIES_TERMS}]")
    coeffs = p_coefficients(2 * p.l + 2, 4.0 * p.sigma, N).values
    jv = bessel_j_sequence(p.l + 0.5, N, kr).values
    total = compensated_sum(c.real * j.real for c, j in zip(coeffs, jv)).real
    return WaveSample(r, f0_norm(p) * math.sqrt(kr) * total, "tra")


def coulomb_wave_exact(p: CoulombParams, r: float) -> WaveSample:
    """Closed-form wavefunction through 1F1(l+1+i sigma; 2l+2; -2ikr).

    The bracketed product ``e^{ikr} 1F1(...)`` is real up to rounding; its
    imaginary part is checked (relative 1e-10) and then dropped.
    """
    r = _check_r(p, r)
    kr = p.k * r
    l, s = p.l, p.sigma
    res = hyp1f1_oracle(HypergeometricParams(complex(l + 1, s), 2 * l + 2,
                                             complex(0.0, -2.0 * kr)))
    if not res.converged:
        raise ConvergenceError(f"1F1 did not converge at r = {r}")
    bracket = cmath.exp(1j * kr) * res.value
    if abs(bracket.imag) > 1e-10 * abs(bracket):
        raise ConsistencyError(
            f"closed-form Coulomb wave is not real at r = {r}: {bracket}")
    pref = (2.0 ** l * math.exp(-math.pi * s / 2.0) / math.factorial(2 * l + 1)
            * abs_gamma_shifted(l, s) * kr ** (l + 1))
    return WaveSample(r, pref * bracket.real, "exact")


_STENCIL = (-1.0, 16.0, -30.0, 16.0, -1.0)


def schrodinger_residual(p: CoulombParams, r: float, h: float = 1e-3) -> float:
    """Scaled residual of the radial equation at ``r`` for the closed-form psi.

    ``psi''`` comes from the 5-point central difference with step ``h``; the
    residual is divided by ``max(1, |E psi|)``.
    """
    if not r - 2.0 * h > 0.0:
        raise DomainError("need r - 2h > 0")
    psi = [coulomb_wave_exact(p, r + k * h).psi for k in (-2, -1, 0, 1, 2)]
    d2 = sum(c * v for c, v in zip(_STENCIL, psi)) / (12.0 * h * h)
    l = p.l
    pot = l * (l + 1) / (2.0 * r * r) + p.Z / r - p.E
    return abs(-0.5 * d2 + pot * psi[2]) / max(1.0, abs(p.E * psi[2]))
