"""Exact double-shuffle algebra of multiple zeta values and their
renormalization at non-positive integer arguments.

The package keeps every computation exact: rationals are `fractions.Fraction`,
perturbed directions live in Q(delta), regularized values are truncated
Laurent series in eps, and the two renormalization schemes (heat-kernel
Birkhoff decomposition and symmetrized evaluators) return exact rationals.
A numeric layer evaluates convergent (q-)MZVs with explicit error bounds for
identity verification.
"""

from .bernoulli import (
    RIEMANN,
    ZERO_INCLUSIVE,
    bernoulli,
    bernoulli_poly,
    falling_factorial,
    zeta1_neg,
)
from .gz import gz_character, gz_renorm, gz_renorm_directional, gz_table
from .hopf import Character, birkhoff, check_differential, check_multiplicativity, convolve
from .laurent import LaurentSeries, agree, exp_linear
from .mp import compare_gz_mp, mp_birkhoff, mp_ev12, mp_ev21, mp_sym, mp_table
from .numeric import NumericValue, mzv_eval, mzv_star_eval, qmzv_eval, qmzv_star_eval
from .ratfunc import RatFunc, ratfunc_limit0
from .sumengine import ExpPoly, full_sum, nested_regularized_sum, qsum_strict
from .suites import run_all, run_suite
from .words import (
    Letter,
    Word,
    WordSum,
    hoffman_exp,
    hoffman_log,
    mixable_shuffle,
    quasi_shuffle,
    shuffle,
    tau_dual,
    transported_shuffle,
)

__version__ = "0.1.0"
