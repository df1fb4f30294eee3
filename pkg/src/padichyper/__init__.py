"""Exact p-adic hypergeometric evaluation and identity verification.

Everything a caller needs is re-exported here: the p-adic number type,
the gamma and hypergeometric evaluators, finite-field character sums,
curve point counts, newform coefficients, truncated sums, and the
verification suites with their report plumbing.
"""

from .curves import (
    WeierstrassCurve,
    ap,
    cubic_disc,
    legendre_table,
    quadratic_twist,
    reduce_to_even_form,
    three_torsion_curve,
    twist_family_relation,
)
from .ffhyper import (
    CharIdx,
    CharTable,
    greene_binom,
    greene_hyper,
    jacobi_gamma_crosscheck,
    jacobi_gamma_sides,
    jacobi_sum,
    normalized_period_hyper,
    period_hyper,
    primitive_root,
)
from .gfunc import GFactorCache, GParams, eval_G, eval_G_sweep
from .modforms import QSeries, cornacchia, eta_factor, newform_coeffs, pentagonal, phi_m
from .padic import (
    DomainError,
    PadicNum,
    PrecisionError,
    centered_lift,
    centered_residue,
    char_value,
    embed_rational,
    frac_floor,
    is_prime,
    legendre,
    padic_val,
    teichmuller,
)
from .pgamma import gamma_p, gamma_seq, quartet_sign
from .report import SuiteReport, emit_report, tally
from .suites import SUITE_NAMES, default_precision, primes_in, run_cor43, run_suite
from .truncated import TruncSum, gamma_sign, trunc_3f2_rising, trunc_sum

__version__ = "0.1.0"
