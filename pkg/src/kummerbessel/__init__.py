"""Confluent hypergeometric 1F1 as infinite sums of Bessel functions.

Submodules
----------
scalar          double-double summation primitives
gamma           complex Gamma (Lanczos)
bessel          J_nu of complex argument, I_nu of real argument
kummer          power-series reference for 1F1
representation  the two Bessel-series expansions of 1F1
coulomb         Coulomb scattering wavefunctions
cli             benchmark command line
"""
from ._backend import BACKEND
from .bessel import BesselSequence, bessel_i, bessel_j, bessel_j_sequence
from .coulomb import (CoulombParams, WaveSample, coulomb_wave_exact,
                      coulomb_wave_tra, f0_norm, schrodinger_residual,
                      tra_coefficients)
from .errors import (ConsistencyError, ConvergenceError, DegenerateDenominatorError,
                     DomainError, InvalidInputError, KummerBesselError, RangeError)
from .gamma import GammaConfig, abs_gamma_shifted, gamma_complex
from .kummer import (HypergeometricParams, SeriesResult, hyp1f1, hyp1f1_oracle,
                     kummer_transform_residual)
from .representation import (PCoefficients, RCoefficients, eq20_residual,
                             eval_rep18, eval_rep18_real_path, eval_rep19,
                             p_coefficients, r_coefficients, relative_deviation)
from .scalar import ExtendedAccumulator, compensated_sum, extended_add

__version__ = "0.1.0"
