"""sigmalab: a numerical laboratory for fractional divisor sums
sigma_alpha(n), the error term of their summatory function, the
truncated oscillating series that approximates it, the Bessel-form
kernel of the underlying summation formula, and resonance-lemma
verifications."""

from .arith import (
    Alpha,
    PrimorialCutoff,
    SigmaTable,
    build_sigma_table,
    prime_power_sum,
    primorial_cutoff,
    running_sup,
    sigma_alpha_direct,
    sup_sigma_rhs,
)
from .errorterm import (
    ErrorSample,
    corollary_exponent,
    error_term,
    main_term,
    scan_error,
)
from .extremes import (
    RecordList,
    ResonanceInstance,
    record_scan,
    resonance_bound,
    resonance_sum,
    resonance_verify,
)
from .kernels import BACKEND
from .special import (
    bessel_i,
    bessel_j,
    gamma_complex,
    mu_exponent,
    zeta_complex,
    zeta_real,
)
from .voronoi import (
    KernelQuadrature,
    SeriesParams,
    admissible_range,
    gamma_factor,
    kernel_bessel,
    kernel_contour,
    series_approx,
    theta_phase,
    truncated_series,
)

__version__ = "0.1.0"
