"""Error kinds shared across the package.

``DomainError`` covers every bad-input condition and maps to CLI exit code 2;
``ConsistencyError`` marks a violated internal cross-check and maps to exit
code 3.  Singular parameter values are hard errors on purpose: an identity
check must never silently compare infinities.
"""


class DomainError(ValueError):
    """Input outside the mathematical or configured domain of an operation."""


class SingularityError(DomainError):
    """A parameter hits a pole of the requested expression (e.g. s=0 in 1/(1-p^-s))."""


class ConvergenceError(DomainError):
    """Parameter outside the convergence region of an infinite sum or product."""


class CapabilityError(DomainError):
    """Supported but not implemented at this size (e.g. factoring above 2^63)."""


class ResourceError(DomainError):
    """Requested table or bound exceeds the configured memory budget."""


class UnknownIdentityError(DomainError):
    """Identity name not present in the registry."""


class ConsistencyError(RuntimeError):
    """Two internal routes that must agree produced different values."""
