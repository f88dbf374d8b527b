"""Bessel-series representations of 1F1(a; b; z).

Two expansions are implemented:

* the discrete-Bessel series (``rep18``)::

      1F1(a;b;z) = 2^nu Gamma(nu+1) e^{z/2} (iz/2)^{-nu}
                   * sum_n P_n(y) J_{n+nu}(iz/2),   nu = (b-1)/2, y = 2i(b-2a)

  whose coefficients obey the three-term recursion
  ``y P_n = c+_n P_{n+1} + c-_n P_{n-1}`` with ``P_0 = 1, P_{-1} = 0``;

* the classical series (``rep19``)::

      1F1(a;b;z) = 2^{b-1} Gamma(b) e^{z/2} (2 mu z)^{(1-b)/2}
                   * sum_n R_n (2 mu z)^{n/2} J_{n+b-1}(sqrt(2 mu z)),  mu = b-2a

  with ``4 mu^2 (n+1) R_{n+1} = (n+b-1) R_{n-1} - R_{n-2}/2``.

A truncation order ``N`` always means the terms ``n = 0..N``.
"""
from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass

from ._backend import kernels
from .bessel import bessel_j_sequence
from .errors import ConvergenceError, DegenerateDenominatorError, DomainError
from .gamma import gamma_complex
from .kummer import HypergeometricParams, SeriesResult, hyp1f1_oracle
from .scalar import Number, as_complex, compensated_sum

MAX_TERMS = 500
# tail terms below this fraction of the partial sum count as converged
CONVERGED_RTOL = 1e-15


def _c_plus(n: int, b: float) -> float:
    # (1/2)[(2n+b+1) - (b-1)^2/(2n+b+1)] in factored form
    return 2.0 * (n + 1) * (n + b) / (2 * n + b + 1)


def _c_minus(n: int, b: float) -> float:
    # (1/2)[(2n+b-3) - (b-1)^2/(2n+b-3)]; exactly zero at n = 1
    return 2.0 * (n - 1) * (n + b - 2) / (2 * n + b - 3)


def _check_p_b(b: float) -> float:
    b = float(b)
    if not math.isfinite(b) or b <= 0.0 or b == 1.0:
        raise DomainError(f"P_n recursion needs b > 0 and b != 1, got {b!r}")
    return b


def _check_terms(n: int) -> int:
    n = int(n)
    if n < 0 or n > MAX_TERMS:
        raise DomainError(f"truncation order must lie in [0, {MAX_TERMS}]")
    return n


def _real_b(p: HypergeometricParams) -> float:
    if p.b.imag != 0.0:
        raise DomainError("Bessel representations need real b")
    return p.b.real


@dataclass(frozen=True)
class PCoefficients:
    """P_0(y), ..., P_N(y) for a fixed ``b``."""

    b: float
    y: complex
    values: tuple[complex, ...]

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def extend(self, n_max: int) -> "PCoefficients":
        """Continue the recursion to ``n_max``, reusing the computed prefix."""
        vals = list(self.values)
        b, y = self.b, self.y
        for n in range(len(vals) - 1, n_max):
            back = _c_minus(n, b) * vals[n - 1] if n > 0 else 0j
            vals.append((y * vals[n] - back) / _c_plus(n, b))
        return PCoefficients(b, y, tuple(vals))

    def truncated(self, n_max: int) -> "PCoefficients":
        return PCoefficients(self.b, self.y, self.values[:n_max + 1])

    def recursion_residuals(self) -> list[float]:
        """Relative residual of the recursion at every interior index."""
        out = []
        v, b, y = self.values, self.b, self.y
        for n in range(1, self.n_max):
            lhs = y * v[n]
            up = _c_plus(n, b) * v[n + 1]
            down = _c_minus(n, b) * v[n - 1]
            scale = max(abs(lhs), abs(up), abs(down))
            out.append(abs(lhs - up - down) / scale if scale else 0.0)
        return out

    def rotated(self) -> list[complex]:
        """``P_n / i^n``; real when ``y`` is purely imaginary."""
        out = []
        for n, p in enumerate(self.values):
            r = n % 4
            if r == 0:
                out.append(p)
            elif r == 1:
                out.append(complex(p.imag, -p.real))
            elif r == 2:
                out.append(-p)
            else:
                out.append(complex(-p.imag, p.real))
        return out


@dataclass(frozen=True)
class RCoefficients:
    """R_0, ..., R_N of the classical expansion, with ``mu19 = b - 2a``."""

    b: float
    mu19: complex
    values: tuple[complex, ...]

    def recursion_residuals(self) -> list[float]:
        v, b, mu = self.values, self.b, self.mu19

        def at(k):
            return v[k] if k >= 0 else 0j

        out = []
        for n in range(1, len(v) - 1):
            lhs = 4 * mu * mu * (n + 1) * v[n + 1]
            a1 = (n + b - 1) * at(n - 1)
            a2 = 0.5 * at(n - 2)
            scale = max(abs(lhs), abs(a1), abs(a2))
            out.append(abs(lhs - a1 + a2) / scale if scale else 0.0)
        return out


class _PCache:
    """Longest coefficient run seen per ``(b, y)``; extended append-only."""

    def __init__(self, maxsize: int = 1024):
        self._data: dict[tuple[float, complex], PCoefficients] = {}
        self._lock = threading.Lock()
        self._maxsize = maxsize

    def get(self, b: float, y: complex, n_max: int) -> PCoefficients:
        key = (b, y)
        with self._lock:
            cached = self._data.get(key)
        if cached is None:
            cached = PCoefficients(b, y, (1.0 + 0j,))
        if cached.n_max < n_max:
            cached = cached.extend(n_max)
            with self._lock:
                if len(self._data) >= self._maxsize:
                    self._data.clear()
                self._data[key] = cached
        return cached if cached.n_max == n_max else cached.truncated(n_max)


_P_CACHE = _PCache()


def p_coefficients(b: float, y: Number, n_max: int) -> PCoefficients:
    """Solve the P_n recursion forward for ``n = 0..n_max``.

    ``b > 0`` and ``b != 1``; at ``b = 1`` the coefficient of P_{n-1} is 0/0
    at ``n = 1``.

    >>> p_coefficients(3.7, 0, 3).values
    ((1+0j), 0j, 0j, 0j)
    """
    b = _check_p_b(b)
    y = as_complex(y, "y")
    if n_max < 0 or n_max > MAX_TERMS:
        raise DomainError(f"n_max must lie in [0, {MAX_TERMS}]")
    return _P_CACHE.get(b, y, int(n_max))


def r_coefficients(b: float, mu19: Number, n_max: int) -> RCoefficients:
    """Solve the R_n recursion forward with ``R_0 = 1, R_{-1} = R_{-2} = 0``."""
    b = float(b)
    mu = as_complex(mu19, "mu19")
    if mu == 0:
        raise DomainError("mu19 = b - 2a must be nonzero")
    if n_max < 0 or n_max > MAX_TERMS:
        raise DomainError(f"n_max must lie in [0, {MAX_TERMS}]")
    four_mu2 = 4.0 * mu * mu
    vals = [1.0 + 0j]

    def at(k):
        return vals[k] if k >= 0 else 0j

    for n in range(n_max):
        vals.append(((n + b - 1) * at(n - 1) - 0.5 * at(n - 2))
                    / (four_mu2 * (n + 1)))
    return RCoefficients(b, mu, tuple(vals))


def _tail_converged(terms: list[complex], total: complex) -> bool:
    scale = CONVERGED_RTOL * abs(total)
    return all(abs(t) <= scale for t in terms[-3:])


def _rep18_sum(p: HypergeometricParams, n_terms: int):
    # sum_n P_n J_{n+nu}(w) with the common factor (w/2)^nu/Gamma(nu+1) removed
    b = _real_b(p)
    if not b > 1.0:
        raise DomainError(f"rep18 needs real b > 1, got {b!r}")
    if p.z == 0:
        raise DomainError("z = 0 is a removable singularity (1F1 = 1 there)")
    N = _check_terms(n_terms)
    a, z = p.a, p.z
    y = as_complex(complex(4.0 * a.imag, 2.0 * (b - 2.0 * a.real)))
    w = as_complex(complex(-z.imag / 2.0, z.real / 2.0))  # iz/2
    try:
        total, terms = kernels.bessel_series_sum(b, y, w, N)
    except ArithmeticError as exc:
        raise ConvergenceError(str(exc)) from exc
    return total, terms, (b - 1.0) / 2.0, w


def eval_rep18(p: HypergeometricParams, n_terms: int) -> SeriesResult:
    """Discrete-Bessel series for 1F1 truncated after ``n = n_terms``.

    Needs real ``b > 1`` and ``z != 0``.  With principal branches
    ``(iz/2)^{-nu} (iz/4)^nu = 2^{-nu}``, so the prefactor collapses to
    ``e^{z/2}`` once each J is written as its bare power series; the sum
    is then carried in double-double end to end.
    """
    total, terms, _, _ = _rep18_sum(p, n_terms)
    pref = cmath.exp(p.z / 2)
    return SeriesResult(pref * total, len(terms), abs(pref * terms[-1]),
                        _tail_converged(terms, total))


def eval_rep18_real_path(a: float, b: float, x: float, n_terms: int) -> float:
    """Phase-free form of :func:`eval_rep18` for real ``a``, ``b > 1``, ``x > 0``.

    With ``y = i t`` the coefficients are ``P_n = i^n q_n`` where ``q_n`` is
    real, and ``J_{n+nu}(ix/2) = i^{n+nu} I_{n+nu}(x/2)``, so everything
    reduces to the real sum ``sum (-1)^n q_n I_{n+nu}(x/2)``.
    """
    a, b, x = float(a), float(b), float(x)
    if not b > 1.0:
        raise DomainError(f"rep18 needs real b > 1, got {b!r}")
    if not x > 0.0:
        raise DomainError(f"real path needs x > 0, got {x!r}")
    N = _check_terms(n_terms)
    try:
        total, _ = kernels.bessel_series_sum_real(b, 2.0 * (b - 2.0 * a), x, N)
    except ArithmeticError as exc:
        raise ConvergenceError(str(exc)) from exc
    return math.exp(x / 2.0) * total


def _rep19_terms(p: HypergeometricParams, n_terms: int):
    b = _real_b(p)
    if not b >= 1.0:
        raise DomainError(f"rep19 needs real b >= 1, got {b!r}")
    if p.z == 0:
        raise DomainError("z = 0 is a removable singularity (1F1 = 1 there)")
    N = _check_terms(n_terms)
    mu = as_complex(b - 2.0 * p.a)
    if mu == 0:
        raise DomainError("b = 2a: the classical series degenerates (mu = 0)")
    s = as_complex(2.0 * mu * p.z)
    t = cmath.sqrt(s)
    coeffs = r_coefficients(b, mu, N).values
    jv = bessel_j_sequence(b - 1.0, N, t).values
    terms = []
    tn = 1.0 + 0j
    for c, j in zip(coeffs, jv):
        terms.append(c * tn * j)
        tn *= t
    return terms, mu, t


def eval_rep19(p: HypergeometricParams, n_terms: int) -> SeriesResult:
    """Classical Bessel series for 1F1 truncated after ``n = n_terms``.

    ``(2 mu z)^{n/2}`` and ``(2 mu z)^{(1-b)/2}`` are both taken as powers
    of the single principal root ``t = sqrt(2 mu z)`` that is also the
    Bessel argument, which keeps the three factors on one branch.
    """
    terms, _, t = _rep19_terms(p, n_terms)
    b = p.b.real
    total = compensated_sum(terms)
    pref = 2.0 ** (b - 1.0) * gamma_complex(b).real * cmath.exp(p.z / 2) * t ** (1.0 - b)
    return SeriesResult(pref * total, len(terms), abs(pref * terms[-1]),
                        _tail_converged(terms, total))


_EVALUATORS = {"rep18": eval_rep18, "rep19": eval_rep19}


def relative_deviation(a: float, b: float, x: float, n_terms: int,
                       method: str = "rep18") -> float:
    """Signed deviation ``(F_exact - F) / (F_exact + F)`` of a truncated series."""
    try:
        evaluate = _EVALUATORS[method]
    except KeyError:
        raise ValueError(f"method must be one of {sorted(_EVALUATORS)}") from None
    p = HypergeometricParams(a, b, x)
    exact = hyp1f1_oracle(p).value
    approx = evaluate(p, n_terms).value
    den = exact + approx
    if den == 0:
        raise DegenerateDenominatorError(f"1F1 + F vanishes at x = {x}")
    return ((exact - approx) / den).real


def eq20_residual(a: Number, b: float, z: Number, n_terms: int) -> float:
    """Relative mismatch between the two bare Bessel sums at truncation N.

    Compares ``sum P_n J_{n+nu}(iz/2)`` with
    ``Gamma(b)/Gamma((b+1)/2) (-2i mu)^{(1-b)/2} sum R_n t^n J_{n+b-1}(t)``,
    ``t = sqrt(2 mu z)``.  Tends to zero as N grows when both series
    converge.

    The factor is taken literally on principal branches.  Where
    ``arg(2 mu z)`` lies in ``(pi/2, pi]`` it lands on a different sheet
    from ``t``, the two sides then differ by a unit phase and the residual
    stays O(1) however large N is.
    """
    p = HypergeometricParams(a, b, z)
    bare, _, nu, w = _rep18_sum(p, n_terms)
    right_terms, mu, _ = _rep19_terms(p, n_terms)
    b = p.b.real
    left = (w / 2) ** nu / gamma_complex(nu + 1.0).real * bare
    factor = (gamma_complex(b).real / gamma_complex((b + 1.0) / 2.0).real
              * as_complex(-2j * mu) ** ((1.0 - b) / 2.0))
    right = factor * compensated_sum(right_terms)
    return abs(left - right) / abs(left)
