"""Complex scalars and extended-precision summation.

Python's built-in ``complex`` is the numeric carrier throughout the package.
Sums that need more than double precision go through the error-free
transformations in the active kernel backend.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

from ._backend import kernels
from .errors import InvalidInputError, RangeError

Number = Union[int, float, complex]


def as_complex(value: Number, name: str = "value") -> complex:
    """Convert to ``complex``, rejecting NaN/Inf and clearing signed zeros.

    Signed zeros matter for principal branches: ``sqrt(complex(-1, -0.0))``
    is ``-1j``.  Every public entry point funnels its inputs through here so
    that real inputs always sit on the upper lip of the negative-axis cut.
    """
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvalidInputError(f"{name} must be finite, got {value!r}")
    return complex(z.real + 0.0, z.imag + 0.0)


def compensated_sum(terms: Iterable[Number]) -> complex:
    """Sum complex terms with double-double accumulation.

    The error is O(1) ulp of the exact sum regardless of the number of terms
    (up to ~10**4), so exact cancellations survive:

    >>> compensated_sum([1.0, -1.0, 1e-20])
    (1e-20+0j)
    """
    values = []
    for t in terms:
        c = complex(t)
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise InvalidInputError(f"non-finite term {t!r} in sum")
        values.append(c)
    return kernels.csum(values)


@dataclass(frozen=True)
class ExtendedAccumulator:
    """Unevaluated sum ``hi + lo`` of two doubles (double-double)."""

    hi: float = 0.0
    lo: float = 0.0

    @classmethod
    def from_ratio(cls, num: float, den: float) -> "ExtendedAccumulator":
        """``num/den`` rounded to double-double."""
        return cls(*kernels.dd_div(float(num), 0.0, float(den), 0.0))

    def __float__(self) -> float:
        return self.hi + self.lo


def extended_add(acc: ExtendedAccumulator,
                 x: Union[float, ExtendedAccumulator]) -> ExtendedAccumulator:
    """Return ``acc + x`` in double-double arithmetic.

    ``x`` may be a plain float or another accumulator.  Raises
    :class:`RangeError` on overflow and :class:`InvalidInputError` on
    non-finite input.
    """
    if isinstance(x, ExtendedAccumulator):
        xh, xl = x.hi, x.lo
    else:
        xh, xl = float(x), 0.0
    if not all(math.isfinite(v) for v in (acc.hi, acc.lo, xh, xl)):
        raise InvalidInputError("extended_add requires finite inputs")
    hi, lo = kernels.dd_add(acc.hi, acc.lo, xh, xl)
    if not math.isfinite(hi):
        raise RangeError("double-double sum overflowed")
    return ExtendedAccumulator(hi, lo)
