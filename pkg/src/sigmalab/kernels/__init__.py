"""Hot-loop kernels: divisor sieve and compensated oscillating sums.

A compiled Cython core is preferred; a pure numpy implementation is the
fallback. Set SIGMALAB_FORCE_FALLBACK=1 to skip the compiled extension.
"""

import os

if os.environ.get("SIGMALAB_FORCE_FALLBACK"):
    from . import _fallback as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fallback as _impl

BACKEND = _impl.BACKEND
sigma_sieve = _impl.sigma_sieve
oscillating_cosine_sum = _impl.oscillating_cosine_sum

__all__ = ["BACKEND", "sigma_sieve", "oscillating_cosine_sum"]
