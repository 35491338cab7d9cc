"""Bulk range verification on the fast kernels.

Dispatches to the compiled kernel when it is loaded and its fixed-width
integer budget covers the request, otherwise to the pure-Python twin, which
has no size limits.  Results say how many n were checked, how many failed
and where the first failure sits; the identity content of each check lives
in the kernel docstrings.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .arith import SpfTable, build_spf_table
from .errors import DomainError


@dataclass(frozen=True)
class BulkResult:
    identity: str
    lo: int
    hi: int
    s: int | float | None
    checked: int
    failures: int
    first_failure: int  # 0 when all passed
    backend: str
    max_rel_err: float | None = None

    @property
    def all_passed(self) -> bool:
        return self.failures == 0


def _table_for(lo: int, hi: int, table: SpfTable | None) -> SpfTable:
    if lo < 1 or hi < lo:
        raise DomainError(f"invalid range [{lo}, {hi}]")
    if table is None:
        return build_spf_table(hi)
    if table.limit < hi:
        raise DomainError(f"table limit {table.limit} below hi={hi}")
    return table


def dineva_range_check(lo: int, hi: int, table: SpfTable | None = None) -> BulkResult:
    """Exact sum-vs-closed-form check of the squarefree totient sum on lo..hi."""
    table = _table_for(lo, hi, table)
    kernel = _backend.kernel
    checked, failures, first_bad = kernel.dineva_range(table.spf, lo, hi)
    return BulkResult("dineva", lo, hi, None, checked, failures, first_bad,
                      kernel.BACKEND)


def gdineva_int_range_check(lo: int, hi: int, s: int,
                            table: SpfTable | None = None) -> BulkResult:
    """Exact four-form agreement check for integer s on lo..hi."""
    table = _table_for(lo, hi, table)
    kernel = _backend.kernel
    if not kernel.gdineva_int_supported(hi, s):
        kernel = _backend.load_backend("python")
    checked, failures, first_bad = kernel.gdineva_int_range(table.spf, lo, hi, s)
    return BulkResult("generalized_dineva", lo, hi, s, checked, failures,
                      first_bad, kernel.BACKEND)


def gdineva_real_range_check(lo: int, hi: int, s: float, rel_tol: float = 1e-12,
                             table: SpfTable | None = None) -> BulkResult:
    """Four-form agreement check in doubles for real s on lo..hi."""
    if rel_tol <= 0:
        raise DomainError(f"rel_tol must be positive, got {rel_tol}")
    table = _table_for(lo, hi, table)
    kernel = _backend.kernel
    checked, failures, first_bad, worst = kernel.gdineva_real_range(
        table.spf, lo, hi, float(s), rel_tol)
    return BulkResult("generalized_dineva", lo, hi, float(s), checked,
                      failures, first_bad, kernel.BACKEND, max_rel_err=worst)
