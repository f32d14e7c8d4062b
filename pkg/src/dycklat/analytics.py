"""Sequence shape predicates and the rank-sequence sweep.

``analyze`` classifies one integer sequence: unimodality (no strict
descent anywhere before a strict ascent), the plateau of the maximum,
literal log-concavity (a_i^2 >= a_{i-1} * a_{i+1} at every interior
index) and internal zeros.  ``sweep`` applies it to the rank sequence of
every semilength up to a bound, tabulating the evidence for the
rank-unimodality conjecture together with the sign-change index of the
successive-differences polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from . import chains, ruleop
from .bigpoly import ZERO, add, coeff_sum, diff_shifted
from .util import DEFAULT_GUARD


@dataclass(frozen=True)
class SeqReport:
    unimodal: bool
    first_violation: tuple[int, int] | None
    argmax_lo: int
    argmax_hi: int
    log_concave: bool
    first_lc_violation: int | None
    has_internal_zero: bool


def analyze(seq: Sequence[int]) -> SeqReport:
    """Shape report for a nonempty sequence of integers.

    ``first_violation`` is (i, j) for the first strict ascent at step j
    that follows some strict descent, i being the first strict descent.
    ``argmax_lo..argmax_hi`` is the plateau containing the first maximum.
    """
    if len(seq) == 0:
        raise ValueError("cannot analyze an empty sequence")
    first_descent = None
    first_violation = None
    for i in range(len(seq) - 1):
        if seq[i] > seq[i + 1] and first_descent is None:
            first_descent = i
        elif seq[i] < seq[i + 1] and first_descent is not None:
            first_violation = (first_descent, i)
            break
    peak = max(seq)
    lo = seq.index(peak)
    hi = lo
    while hi + 1 < len(seq) and seq[hi + 1] == peak:
        hi += 1
    first_lc = None
    for i in range(1, len(seq) - 1):
        if seq[i] * seq[i] < seq[i - 1] * seq[i + 1]:
            first_lc = i
            break
    nonzero = [i for i, v in enumerate(seq) if v != 0]
    internal_zero = bool(nonzero) and any(
        seq[i] == 0 for i in range(nonzero[0], nonzero[-1])
    )
    return SeqReport(
        unimodal=first_violation is None,
        first_violation=first_violation,
        argmax_lo=lo,
        argmax_hi=hi,
        log_concave=first_lc is None,
        first_lc_violation=first_lc,
        has_internal_zero=internal_zero,
    )


@dataclass(frozen=True)
class SignProfile:
    """Single-sign-change verdict for a difference sequence.

    ``kbar`` is the last index before the first strictly positive entry;
    a single change means nothing strictly negative occurs from there on.
    Zeros are compatible with either side.
    """

    single_change: bool
    kbar: int | None


def sign_profile_of(coeffs: Sequence[int]) -> SignProfile:
    first_pos = next((i for i, c in enumerate(coeffs) if c > 0), None)
    if first_pos is None:
        return SignProfile(single_change=True, kbar=None)
    single = all(c >= 0 for c in coeffs[first_pos:])
    return SignProfile(single_change=single, kbar=first_pos - 1 if single else None)


def sign_profile(n: int, mode: str = "fast", guard: int = DEFAULT_GUARD) -> SignProfile:
    """Sign profile of the successive differences of the rank sequence."""
    return sign_profile_of(diff_shifted(chains.rank_poly(n, mode=mode, guard=guard)))


@dataclass(frozen=True)
class SweepRow:
    n: int
    report: SeqReport
    single_change: bool
    kbar: int | None
    total: int


def _sweep_row(n: int, coeffs) -> SweepRow:
    report = analyze(coeffs)
    profile = sign_profile_of(diff_shifted(coeffs))
    return SweepRow(
        n=n,
        report=report,
        single_change=profile.single_change,
        kbar=profile.kbar,
        total=coeff_sum(coeffs),
    )


def sweep(
    n_max: int, mode: str = "fast", guard: int = DEFAULT_GUARD
) -> list[tuple[SweepRow, tuple[int, ...]]]:
    """Rank-sequence reports for semilengths 1 .. n_max.

    Returns (row, coefficients) pairs in semilength order.  The fast mode
    iterates the rule operator once across all semilengths; the oracle
    mode enumerates paths per semilength (guard-bounded) and insists the
    two routes agree.
    """
    if n_max < 1:
        raise ValueError("sweep needs n_max >= 1")
    if mode not in ("fast", "oracle"):
        raise ValueError(f"unknown mode {mode!r}")
    out = []
    for m, b in ruleop.iter_label_polys(n_max + 1):
        n = m - 1
        coeffs = reduce(add, b, ZERO)
        if mode == "oracle":
            oracle = chains.rank_poly(n, mode="oracle", guard=guard)
            if oracle != coeffs:
                raise RuntimeError(
                    f"rank sequence mismatch between routes at semilength {n}"
                )
        out.append((_sweep_row(n, coeffs), coeffs))
    return out
