"""Fejér kernels, lacunary block differences and Fourier multiplier bounds."""

from .bounds import (BoundReport, abs_sum_profile, check_uniform_bound, check_uniform_bounds,
                     crossing_index, operator_bound_check, proof_chain, strong_type_22_check)
from .errors import (AliasingRisk, EmptySequence, FejerError, GridMismatch, IndexOutOfRange,
                     InvalidAlpha, LengthMismatch, NonPositiveTerm, NotLacunary, ZeroSignal)
from .experiments import (SignPattern, TailReport, convergence_study, gen_signal, partial_sum,
                          random_signs, sweep, tail_norm)
from .kernel import FejerKernel, eval_kernel_closed, eval_kernel_sum, fejer_hat
from .lacunary import LacunarySequence, generate, geometric_tail_bound, validate
from .spectral import (Multiplier, Signal, SpectralGrid, apply_multiplier, block_difference,
                       build_multiplier, convolve_direct, fejer_mean, forward_transform,
                       inverse_transform, l2_norm, operator_norm)

__version__ = "0.1.0"
