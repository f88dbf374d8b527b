"""Bessel functions J_nu of complex argument and I_nu of real argument.

Both are summed from the ascending power series with double-double
accumulation, so one code path covers real, imaginary and complex arguments
on the working domain ``|w| <= 60``.  The branch of ``(w/2)**nu`` is the
principal one, hence ``J_nu(i x) = exp(i pi nu / 2) I_nu(x)`` for ``x > 0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import ConsistencyError, ConvergenceError, DomainError
from .scalar import Number, as_complex

MAX_ARGUMENT = 60.0
MAX_ORDER = 100.0
MAX_SEQUENCE = 200

# Backward recurrence starts at least this many orders above the last one
# requested, and never below |w| + _MILLER_ARG_MARGIN.
_MILLER_EXTRA = 15
_MILLER_ARG_MARGIN = 25
_RESCALE = 1e250


@dataclass(frozen=True)
class BesselSequence:
    """Values J_{nu0}, J_{nu0+1}, ..., J_{nu0+n_max} at one argument."""

    nu0: float
    count: int
    argument: complex
    values: tuple[complex, ...]

    def __getitem__(self, n: int) -> complex:
        return self.values[n]

    def __len__(self) -> int:
        return self.count

    def recurrence_residuals(self) -> list[float]:
        """Relative residuals of ``J_{v-1} + J_{v+1} = (2v/w) J_v``.

        One entry per interior order; each is scaled by the largest of the
        three terms involved.
        """
        w = self.argument
        out = []
        for n in range(1, self.count - 1):
            v = self.nu0 + n
            lhs = self.values[n - 1] + self.values[n + 1]
            rhs = 2.0 * v / w * self.values[n]
            scale = max(abs(self.values[n - 1]), abs(self.values[n + 1]), abs(rhs))
            out.append(abs(lhs - rhs) / scale if scale else 0.0)
        return out


def _check_order(nu: float, name: str = "nu") -> float:
    nu = float(nu)
    if not math.isfinite(nu) or nu < 0.0 or nu > MAX_ORDER:
        raise DomainError(f"{name} must lie in [0, {MAX_ORDER:g}], got {nu!r}")
    return nu


def _check_argument(w: Number) -> complex:
    w = as_complex(w, "w")
    if abs(w) > MAX_ARGUMENT:
        raise DomainError(f"|w| = {abs(w):g} exceeds {MAX_ARGUMENT:g}")
    return w


def _prefactor(nu: float, half: complex) -> complex:
    # (w/2)^nu / Gamma(nu+1)
    if nu == 0.0:
        return 1.0 + 0j
    return half ** nu / math.gamma(nu + 1.0)


def bessel_j(nu: float, w: Number) -> complex:
    """Bessel function of the first kind J_nu(w).

    ``nu`` is a real order in ``[0, 100]`` and ``|w| <= 60``.  At ``w = 0``
    the limit values (1 for ``nu = 0``, else 0) are returned directly.

    >>> abs(bessel_j(1.0, 1.0) - 0.440050585744933) < 1e-15
    True
    """
    nu = _check_order(nu)
    w = _check_argument(w)
    if w == 0:
        return 1.0 + 0j if nu == 0.0 else 0j
    s, _, ok = kernels.jv_series(nu, w)
    if not ok:
        raise ConvergenceError(f"J series for nu={nu}, w={w} did not converge")
    return _prefactor(nu, w / 2) * s


def bessel_j_sequence(nu0: float, n_max: int, w: Number,
                      method: str = "series") -> BesselSequence:
    """J_{nu0+n}(w) for ``n = 0..n_max``.

    Parameters
    ----------
    method : {"series", "backward", "both"}
        ``"series"`` sums each order's power series (the baseline).
        ``"backward"`` runs a Miller-type downward recurrence normalized
        against the two lowest series values.  ``"both"`` computes the two
        and raises :class:`ConsistencyError` unless every element above
        1e-250 agrees to relative 1e-10; the series values are returned.
    """
    nu0 = _check_order(nu0, "nu0")
    w = _check_argument(w)
    n_max = int(n_max)
    if n_max < 0 or n_max > MAX_SEQUENCE:
        raise DomainError(f"n_max must lie in [0, {MAX_SEQUENCE}]")
    if method not in ("series", "backward", "both"):
        raise ValueError(f"unknown method {method!r}")

    if w == 0:
        vals = [0j] * (n_max + 1)
        if nu0 == 0.0:
            vals[0] = 1.0 + 0j
        return BesselSequence(nu0, n_max + 1, w, tuple(vals))

    series = _series_sequence(nu0, n_max, w)
    if method == "series":
        return BesselSequence(nu0, n_max + 1, w, tuple(series))

    backward = _backward_sequence(nu0, n_max, w, series)
    if method == "both":
        for n, (s, b) in enumerate(zip(series, backward)):
            if abs(s) > 1e-250 and abs(s - b) > 1e-10 * abs(s):
                raise ConsistencyError(
                    f"series and backward recurrence disagree at order "
                    f"{nu0 + n}: {s} vs {b}")
        return BesselSequence(nu0, n_max + 1, w, tuple(series))
    return BesselSequence(nu0, n_max + 1, w, tuple(backward))


def _series_sequence(nu0: float, n_max: int, w: complex) -> list[complex]:
    try:
        sums = kernels.jv_series_seq(nu0, n_max, w)
    except ArithmeticError as exc:
        raise ConvergenceError(str(exc)) from exc
    half = w / 2
    out = []
    pref = None
    for n, s in enumerate(sums):
        v = nu0 + n
        if v < 170.0:
            pref = _prefactor(v, half)
        else:
            pref = pref * half / v
        out.append(pref * s)
    return out


def _backward_sequence(nu0: float, n_max: int, w: complex,
                       series: list[complex]) -> list[complex]:
    top = max(n_max + _MILLER_EXTRA, int(abs(w)) + _MILLER_ARG_MARGIN)
    vals = [0j] * (n_max + 1)
    f_next, f = 0j, 1e-30 + 0j
    for m in range(top, 0, -1):
        f_prev = 2.0 * (nu0 + m) / w * f - f_next
        if m - 1 <= n_max:
            vals[m - 1] = f_prev
        f_next, f = f, f_prev
        if abs(f) > _RESCALE:
            f /= _RESCALE
            f_next /= _RESCALE
            for i in range(m - 1, n_max + 1):
                vals[i] /= _RESCALE
    k = min(2, n_max + 1)
    num = sum(series[i] * vals[i].conjugate() for i in range(k))
    den = sum(abs(vals[i]) ** 2 for i in range(k))
    scale = num / den
    return [scale * v for v in vals]


def bessel_i(nu: float, x: float) -> float:
    """Modified Bessel function I_nu(x) for real ``0 < x <= 60``."""
    nu = _check_order(nu)
    x = float(x)
    if not (x > 0.0) or x > MAX_ARGUMENT:
        raise DomainError(f"x must lie in (0, {MAX_ARGUMENT:g}], got {x!r}")
    s, _, ok = kernels.iv_series(nu, x)
    if not ok:
        raise ConvergenceError(f"I series for nu={nu}, x={x} did not converge")
    if nu == 0.0:
        return s
    return (x / 2) ** nu / math.gamma(nu + 1.0) * s


def bessel_i_sequence(nu0: float, n_max: int, x: float) -> list[float]:
    """I_{nu0+n}(x) for ``n = 0..n_max`` (per-order series)."""
    if n_max < 0 or n_max > MAX_SEQUENCE:
        raise DomainError(f"n_max must lie in [0, {MAX_SEQUENCE}]")
    return [bessel_i(nu0 + n, x) if nu0 + n <= MAX_ORDER else
            _bessel_i_high(nu0 + n, x) for n in range(n_max + 1)]


def _bessel_i_high(nu: float, x: float) -> float:
    s, _, ok = kernels.iv_series(nu, x)
    if not ok:
        raise ConvergenceError(f"I series for nu={nu}, x={x} did not converge")
    return math.exp(nu * math.log(x / 2) - math.lgamma(nu + 1.0)) * s
