"""Reference evaluation of the confluent hypergeometric function 1F1(a; b; z).

The Kummer power series is summed term by term in double-double arithmetic.
For ``Re(z) < 0`` the transformation ``1F1(a;b;z) = e^z 1F1(b-a;b;-z)`` is
applied first so the summed terms do not alternate.  Nothing here touches
Bessel functions, which keeps this module usable as an independent referee
for the Bessel-series representations.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import ConvergenceError, DomainError
from .scalar import Number, as_complex

DEFAULT_TOL = 1e-20
MAX_TERMS = 10_000


@dataclass(frozen=True)
class HypergeometricParams:
    """Parameters ``(a, b, z)`` of 1F1; ``b`` must not be 0, -1, -2, ..."""

    a: complex
    b: complex
    z: complex

    def __post_init__(self):
        object.__setattr__(self, "a", as_complex(self.a, "a"))
        object.__setattr__(self, "b", as_complex(self.b, "b"))
        object.__setattr__(self, "z", as_complex(self.z, "z"))
        b = self.b
        if b.imag == 0.0 and b.real <= 0.0 and b.real == math.floor(b.real):
            raise DomainError(f"b = {b.real:g} is a pole of 1F1")

    @property
    def is_real(self) -> bool:
        return self.a.imag == 0.0 and self.b.imag == 0.0 and self.z.imag == 0.0


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a truncated series evaluation."""

    value: complex
    terms_used: int
    last_term_magnitude: float
    converged: bool


def _direct(a: complex, b: complex, z: complex, tol: float,
            max_terms: int) -> SeriesResult:
    if z == 0:
        return SeriesResult(1.0 + 0j, 1, 0.0, True)
    value, used, last, ok = kernels.kummer_series(a, b, z, tol, max_terms)
    return SeriesResult(value, used, last, ok)


def hyp1f1_oracle(p: HypergeometricParams, tol: float = DEFAULT_TOL,
                  max_terms: int = MAX_TERMS, transform: bool = True) -> SeriesResult:
    """High-accuracy 1F1(a; b; z).

    Accurate to about 1e-14 relative (or ``tol``, whichever is larger) for
    ``|z| <= 25`` and ``|a|, |b| <= 25``; purely imaginary ``z`` stays
    accurate well beyond that because double-double absorbs the
    cancellation.  A result with ``converged=False`` means ``max_terms`` was
    exhausted before three consecutive terms fell below ``tol * |sum|``.
    """
    if not (1e-25 <= tol < 1.0):
        raise DomainError("tol must lie in [1e-25, 1)")
    if not (1 <= max_terms <= MAX_TERMS):
        raise DomainError(f"max_terms must lie in [1, {MAX_TERMS}]")
    if transform and p.z.real < 0.0:
        inner = _direct(p.b - p.a, p.b, -p.z, tol, max_terms)
        scale = cmath.exp(p.z)
        return SeriesResult(scale * inner.value, inner.terms_used,
                            abs(scale) * inner.last_term_magnitude, inner.converged)
    return _direct(p.a, p.b, p.z, tol, max_terms)


def hyp1f1(a: Number, b: Number, z: Number, tol: float = DEFAULT_TOL) -> complex:
    """Convenience wrapper returning the value; raises on non-convergence."""
    res = hyp1f1_oracle(HypergeometricParams(a, b, z), tol=tol)
    if not res.converged:
        raise ConvergenceError(
            f"1F1({a}; {b}; {z}) did not converge in {res.terms_used} terms")
    return res.value


def kummer_transform_residual(p: HypergeometricParams,
                              tol: float = DEFAULT_TOL) -> float:
    """Relative gap between direct summation and ``e^z 1F1(b-a; b; -z)``.

    Both sides are summed directly (no automatic transformation), so this
    probes the accumulator rather than the transformation logic.
    """
    direct = hyp1f1_oracle(p, tol=tol, transform=False)
    mirrored = hyp1f1_oracle(HypergeometricParams(p.b - p.a, p.b, -p.z),
                             tol=tol, transform=False)
    for res in (direct, mirrored):
        if not res.converged:
            raise ConvergenceError("Kummer series did not converge")
    other = cmath.exp(p.z) * mirrored.value
    return abs(direct.value - other) / abs(direct.value)
