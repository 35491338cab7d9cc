"""Scalar value domain: exact rationals for integer exponents, floats for real ones.

Values are plain Python numbers.  An exact value is an ``int`` or a
``fractions.Fraction`` (always in lowest terms with positive denominator,
which Fraction guarantees); an approximate value is a ``float``.  The
exponent parameter s follows the same convention: ``int`` selects the exact
lane, ``float`` the double-precision lane.  Mixing is contagious exactly the
way Python arithmetic already is: Fraction op float yields float.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError

Value = Fraction | int | float
SValue = int | float

#: Default relative tolerance for float comparisons of identity sides.
DEFAULT_REL_TOL = 1e-12


def is_exact(x: Value) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def inv_pow(base: int, s: SValue) -> Value:
    """base^(-s): an exact Fraction for integer s, a float for real s."""
    if base < 1:
        raise DomainError(f"base must be positive, got {base}")
    if isinstance(s, int) and not isinstance(s, bool):
        if s >= 0:
            return Fraction(1, base**s)
        return Fraction(base ** (-s))
    return float(base) ** (-s)


def prime_power_s(p: int, s: SValue) -> Value:
    """p^(-s) for a prime p; the per-prime building block of every d^(-s) weight."""
    if p < 2:
        raise DomainError(f"p must be at least 2, got {p}")
    return inv_pow(p, s)


def as_float(x: Value) -> float:
    return float(x)


def approx_equal(a: Value, b: Value, rel_tol: float = DEFAULT_REL_TOL) -> bool:
    """Equality contract used by every verifier.

    Exact/exact compares rationals for identity (rel_tol ignored); any float
    involved switches to |a-b| <= rel_tol * max(1, |a|, |b|).
    """
    if rel_tol <= 0:
        raise DomainError(f"rel_tol must be positive, got {rel_tol}")
    if is_exact(a) and is_exact(b):
        return a == b
    fa, fb = float(a), float(b)
    return abs(fa - fb) <= rel_tol * max(1.0, abs(fa), abs(fb))


def render_value(x: Value) -> str:
    """Serialize: exact values as num/den (integers bare), floats as shortest repr."""
    if isinstance(x, bool):
        raise DomainError("booleans are not arithmetic values")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return repr(float(x))


def abs_difference(a: Value, b: Value) -> float:
    """|a-b| as a float, for report fields; exact inputs are differenced exactly first."""
    if is_exact(a) and is_exact(b):
        d = a - b
        try:
            return abs(float(d))
        except OverflowError:
            return math.inf
    return abs(float(a) - float(b))
