"""divprod: exact divisor-sum / Euler-product identity toolkit.

Finite identities of multiplicative number theory (squarefree totient sums
and their s-weighted generalization, Mobius and squarefree Dirichlet sums,
partial zeta functions, sigma local factors, Selberg sieve weights) with a
verification harness that always evaluates both sides through independent
routes.  Integer s runs on exact rationals; real s on doubles with a single
relative-tolerance contract.

Bulk range checks run on a compiled kernel when available and on a
pure-Python twin otherwise; see divprod.bench for the comparison.
"""

from ._backend import available_backends, backend_name
from .arith import (Factorization, SpfTable, build_spf_table, divisors,
                    factorize, is_prime, mobius, primes_up_to, radical,
                    recompose, sigma, squarefree_divisors, totient)
from .bulk import (BulkResult, dineva_range_check, gdineva_int_range_check,
                   gdineva_real_range_check)
from .errors import (CapabilityError, ConsistencyError, ConvergenceError,
                     DomainError, ResourceError, SingularityError,
                     UnknownIdentityError)
from .identities import (BUILTIN_WEIGHTS, GDINEVA_FORMS, IDENTITY_NAMES,
                         IdentityReport, LocalWeight, dineva, divisor_sum,
                         generalized_dineva, identity_pair,
                         mobius_divisor_sum, multiplicative_dirichlet_sum,
                         squarefree_dirichlet_sum, squarefree_euler_product,
                         totient_sum_check, verify, verify_range)
from .selberg import (SieveWeights, density_sum, h_weight, lambda_product,
                      lambda_ratio, quadratic_form, weight_decay_profile,
                      weight_table)
from .values import approx_equal, prime_power_s, render_value
from .zeta import (TruncatedProduct, choose_truncation_depth, partial_zeta,
                   sigma_local_factor, sigma_partial_zeta_check,
                   truncated_global_product, zeta_product_identity,
                   zeta_ratio_identity_check, zeta_reference,
                   zeta_totient_identity)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_WEIGHTS", "BulkResult", "CapabilityError", "ConsistencyError",
    "ConvergenceError", "DomainError", "Factorization", "GDINEVA_FORMS",
    "IDENTITY_NAMES", "IdentityReport", "LocalWeight", "ResourceError",
    "SieveWeights", "SingularityError", "SpfTable", "TruncatedProduct",
    "UnknownIdentityError", "approx_equal", "available_backends",
    "backend_name", "build_spf_table", "choose_truncation_depth",
    "density_sum", "dineva", "dineva_range_check", "divisor_sum", "divisors",
    "factorize", "gdineva_int_range_check", "gdineva_real_range_check",
    "generalized_dineva", "h_weight", "identity_pair", "is_prime",
    "lambda_product", "lambda_ratio", "mobius", "mobius_divisor_sum",
    "multiplicative_dirichlet_sum", "partial_zeta", "prime_power_s",
    "primes_up_to", "quadratic_form", "radical", "recompose", "render_value",
    "sigma", "sigma_local_factor", "sigma_partial_zeta_check",
    "squarefree_dirichlet_sum", "squarefree_divisors",
    "squarefree_euler_product", "totient", "totient_sum_check",
    "truncated_global_product", "verify", "verify_range",
    "weight_decay_profile", "weight_table", "zeta_product_identity",
    "zeta_ratio_identity_check", "zeta_reference", "zeta_totient_identity",
]
