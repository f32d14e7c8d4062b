"""Shared guards and small numeric helpers."""

from __future__ import annotations

DEFAULT_GUARD = 10**6

_CATALAN = [1]


class GuardExceeded(RuntimeError):
    """An enumeration would materialize more objects than the guard allows."""


def catalan(n: int) -> int:
    """n-th Catalan number, extended on demand via the convolution recurrence."""
    if n < 0:
        raise ValueError("Catalan numbers are indexed from 0")
    while len(_CATALAN) <= n:
        m = len(_CATALAN) - 1
        _CATALAN.append(sum(_CATALAN[i] * _CATALAN[m - i] for i in range(m + 1)))
    return _CATALAN[n]


def ensure_guard(count: int, guard: int, what: str) -> None:
    if count > guard:
        raise GuardExceeded(
            f"{what} would produce {count} objects, above the guard of {guard}; "
            f"pass a larger guard explicitly to proceed"
        )
