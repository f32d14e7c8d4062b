"""Saturated-chain decomposition of the Dyck lattice and its count polynomials.

The son-sets of the peak-insertion construction partition the
semilength-n lattice into saturated chains, one per path of semilength
n - 1: the chain of a parent with final-descent length k + 1 has
cardinality k + 2, starts at the parent's rank and climbs one rank per
element.  Tallying chains by cardinality class and start (or end) rank
gives two integer matrices per semilength; their columns, read as
polynomials in x, satisfy a ballot-style recurrence across semilengths,
which is what the ruleop module iterates.

Two computation routes are exposed and cross-checked: ``direct`` builds
the chains explicitly (exponential, guard-bounded) and ``operator``
reads the same columns off the ruleop level polynomial (polynomial
time).  Identity checkers accept either route.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import comb

from . import dyck, ruleop
from .bigpoly import IntPoly, ZERO, add, coeff_sum, diff_shifted, normalize, shift, sub
from .util import DEFAULT_GUARD, catalan, ensure_guard

ROUTES = ("direct", "operator")


@dataclass(frozen=True)
class SaturatedChain:
    """One chain of the decomposition: its minimum plus bookkeeping.

    Members are not stored; they are the sons of the minimum's parent and
    can be reconstructed on demand.  The minimum of a cardinality-(k+2)
    chain always ends with the step pattern U D^(k+1) U D.
    """

    min_path: dyck.DyckPath
    cardinality: int
    start_rank: int

    @property
    def end_rank(self) -> int:
        return self.start_rank + self.cardinality - 1

    def members(self) -> list[dyck.DyckPath]:
        return dyck.sons(dyck.parent(self.min_path))


@dataclass(frozen=True)
class ChainMatrix:
    """Chain counts by rank (rows) and cardinality class (columns).

    kind "start" tallies chains by their bottom rank over rows
    0 .. C(n-1, 2); kind "end" tallies by top rank over rows 0 .. C(n, 2).
    Column k counts chains of cardinality k + 2; all-zero trailing rows
    are kept so the shape depends on n only.
    """

    n: int
    kind: str
    entries: tuple[tuple[int, ...], ...]

    @property
    def num_rows(self) -> int:
        return len(self.entries)

    @property
    def num_cols(self) -> int:
        return self.n - 1

    def column_poly(self, k: int) -> IntPoly:
        if not 0 <= k <= self.n - 2:
            raise IndexError(f"column {k} outside 0..{self.n - 2}")
        return normalize(row[k] for row in self.entries)

    def total_poly(self) -> IntPoly:
        return normalize(sum(row) for row in self.entries)

    def column_sums(self) -> list[int]:
        return [sum(row[k] for row in self.entries) for k in range(self.num_cols)]


def decompose(n: int, guard: int = DEFAULT_GUARD) -> list[SaturatedChain]:
    """The chain decomposition of the semilength-n lattice, explicitly.

    One chain per path of semilength n - 1, in enumeration order.
    """
    if n < 2:
        raise ValueError("decomposition starts at semilength 2")
    ensure_guard(catalan(n), guard, f"decomposing the semilength-{n} lattice")
    out = []
    for par in dyck.paths(n - 1, guard=guard):
        card = par.last_descent_length() + 1
        out.append(
            SaturatedChain(
                min_path=dyck.DyckPath._wrap(par.steps + "UD"),
                cardinality=card,
                start_rank=par.rank(),
            )
        )
    return out


def _direct_columns(n: int, by_end: bool, guard: int) -> list[IntPoly]:
    cols: list[list[int]] = [[] for _ in range(n - 1)]
    for ch in decompose(n, guard=guard):
        col = cols[ch.cardinality - 2]
        rank = ch.end_rank if by_end else ch.start_rank
        if len(col) <= rank:
            col.extend([0] * (rank + 1 - len(col)))
        col[rank] += 1
    return [normalize(col) for col in cols]


def start_columns(
    n: int, route: str = "operator", guard: int = DEFAULT_GUARD
) -> list[IntPoly]:
    """Start-rank count polynomials, one per cardinality class k = 0..n-2."""
    if route == "direct":
        return _direct_columns(n, by_end=False, guard=guard)
    if route == "operator":
        return list(ruleop.label_poly(n))
    raise ValueError(f"unknown route {route!r}")


def end_columns(
    n: int, route: str = "operator", guard: int = DEFAULT_GUARD
) -> list[IntPoly]:
    """End-rank count polynomials; the operator route shifts each start
    column by its chain length minus one."""
    if route == "direct":
        return _direct_columns(n, by_end=True, guard=guard)
    if route == "operator":
        return [shift(col, k + 1) for k, col in enumerate(ruleop.label_poly(n))]
    raise ValueError(f"unknown route {route!r}")


def _pad_columns(cols: list[IntPoly], n: int) -> list[IntPoly]:
    while len(cols) < n - 1:
        cols.append(ZERO)
    return cols


def _matrix_from_columns(n: int, kind: str, cols: list[IntPoly]) -> ChainMatrix:
    rows = 1 + comb(n - 1 if kind == "start" else n, 2)
    cols = _pad_columns(list(cols), n)
    entries = tuple(
        tuple(col[j] if j < len(col) else 0 for col in cols) for j in range(rows)
    )
    return ChainMatrix(n=n, kind=kind, entries=entries)


def start_matrix(
    n: int, route: str = "direct", guard: int = DEFAULT_GUARD
) -> ChainMatrix:
    """Chains by start rank and cardinality class."""
    return _matrix_from_columns(n, "start", start_columns(n, route, guard))


def end_matrix(
    n: int, route: str = "direct", guard: int = DEFAULT_GUARD
) -> ChainMatrix:
    """Chains by end rank and cardinality class."""
    return _matrix_from_columns(n, "end", end_columns(n, route, guard))


def start_poly(n: int, k: int, route: str = "operator", guard: int = DEFAULT_GUARD) -> IntPoly:
    """Start-rank polynomial of the cardinality-(k+2) class."""
    if not 0 <= k <= n - 2:
        raise IndexError(f"column {k} outside 0..{n - 2}")
    return start_columns(n, route, guard)[k]


def end_poly(n: int, k: int, route: str = "operator", guard: int = DEFAULT_GUARD) -> IntPoly:
    """End-rank polynomial of the cardinality-(k+2) class."""
    if not 0 <= k <= n - 2:
        raise IndexError(f"column {k} outside 0..{n - 2}")
    return end_columns(n, route, guard)[k]


def start_total(n: int, route: str = "operator", guard: int = DEFAULT_GUARD) -> IntPoly:
    """Chains counted by start rank, all cardinalities together."""
    return reduce(add, start_columns(n, route, guard), ZERO)


def end_total(n: int, route: str = "operator", guard: int = DEFAULT_GUARD) -> IntPoly:
    """Chains counted by end rank, all cardinalities together."""
    return reduce(add, end_columns(n, route, guard), ZERO)


def rank_poly(n: int, mode: str = "fast", guard: int = DEFAULT_GUARD) -> IntPoly:
    """Coefficient k counts the paths of semilength n at rank k.

    The fast mode sums the slices of the next semilength's level
    polynomial (each chain of semilength n + 1 stands for its parent of
    semilength n, at the same rank); the oracle mode histograms the
    ranks of an explicit enumeration.
    """
    if n < 1:
        raise ValueError("rank polynomials start at semilength 1")
    if mode == "fast":
        return reduce(add, ruleop.label_poly(n + 1), ZERO)
    if mode == "oracle":
        counts = [0] * (comb(n, 2) + 1)
        for p in dyck.paths(n, guard=guard):
            counts[p.rank()] += 1
        return normalize(counts)
    raise ValueError(f"unknown mode {mode!r}")


def rank_diff_poly(n: int, route: str = "operator", guard: int = DEFAULT_GUARD) -> IntPoly:
    """x * end_total - start_total: coefficient k is (paths at rank k-1)
    minus (paths at rank k), so nonpositive up to the peak of a unimodal
    rank sequence and nonnegative after."""
    if n < 2:
        raise ValueError("needs semilength at least 2")
    return sub(shift(end_total(n, route, guard), 1), start_total(n, route, guard))


def check_ballot_recurrence(
    n: int, route: str = "direct", guard: int = DEFAULT_GUARD
) -> bool:
    """Column k at semilength n equals x^k times the suffix sum of the
    previous semilength's columns from index max(k - 1, 0)."""
    if n < 3:
        raise ValueError("the recurrence relates semilengths n and n - 1, n >= 3")
    cur = start_columns(n, route, guard)
    prev = start_columns(n - 1, route, guard)
    for k in range(n - 1):
        tail = reduce(add, prev[max(k - 1, 0):], ZERO)
        if cur[k] != shift(tail, k):
            return False
    return True


def check_ballot_two_term(
    n: int, route: str = "direct", guard: int = DEFAULT_GUARD
) -> bool:
    """Two-term form of the column recurrence, for k >= 1:
    column k = x * (column k-1 minus x^(k-1) * previous column k-2),
    with the previous column read as zero when k - 2 < 0."""
    if n < 3:
        raise ValueError("needs semilength at least 3")
    cur = start_columns(n, route, guard)
    prev = start_columns(n - 1, route, guard)
    for k in range(1, n - 1):
        borrowed = shift(prev[k - 2], k - 1) if k >= 2 else ZERO
        if cur[k] != shift(sub(cur[k - 1], borrowed), 1):
            return False
    return True


def check_start_end_shift(n: int, guard: int = DEFAULT_GUARD) -> bool:
    """Each end column is its start column shifted by cardinality - 1,
    with both sides tallied independently from the explicit chains."""
    starts = start_columns(n, "direct", guard)
    ends = end_columns(n, "direct", guard)
    return all(e == shift(p, k + 1) for k, (p, e) in enumerate(zip(starts, ends)))


def check_rank_diff_expansion(
    n: int, route: str = "operator", guard: int = DEFAULT_GUARD
) -> bool:
    """rank_diff_poly expands as sum_k (x^(k+2) - 1) * column_k."""
    cols = start_columns(n, route, guard)
    acc = ZERO
    for k, col in enumerate(cols):
        acc = add(acc, sub(shift(col, k + 2), col))
    return acc == rank_diff_poly(n, route, guard)


def symmetry_report(
    n: int, guard: int = DEFAULT_GUARD
) -> tuple[bool, SaturatedChain | None]:
    """Whether every chain has start rank + end rank == C(n, 2); when not,
    also return the first violating chain."""
    target = comb(n, 2)
    for ch in decompose(n, guard=guard):
        if ch.start_rank + ch.end_rank != target:
            return False, ch
    return True, None


def verify_identities(
    n: int, route: str = "direct", guard: int = DEFAULT_GUARD
) -> dict[str, bool]:
    """Run every column identity at one semilength; keys map to booleans.

    The direct route tallies explicit chains (guard-bounded) and also
    compares them against the operator slices; the operator route checks
    the polynomial recurrences self-consistently at any semilength.
    """
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    checks: dict[str, bool] = {}
    starts = start_columns(n, route, guard)
    rank_mode = "oracle" if route == "direct" else "fast"
    rp = rank_poly(n, mode=rank_mode, guard=guard)
    checks["rank_diff"] = rank_diff_poly(n, route, guard) == diff_shifted(rp)
    checks["rank_diff_expansion"] = check_rank_diff_expansion(n, route, guard)
    if n >= 3:
        checks["ballot_recurrence"] = check_ballot_recurrence(n, route, guard)
        checks["ballot_two_term"] = check_ballot_two_term(n, route, guard)
    checks["column_checksums"] = (
        coeff_sum(start_total(n, route, guard)) == catalan(n - 1)
        and sum((k + 2) * coeff_sum(col) for k, col in enumerate(starts)) == catalan(n)
    )
    checks["row_consistency"] = (
        start_total(n, route, guard)
        == rank_poly(n - 1, mode=rank_mode, guard=guard)
        if n >= 2
        else True
    )
    if route == "direct":
        checks["start_end_shift"] = check_start_end_shift(n, guard)
        checks["operator_agreement"] = starts == list(ruleop.label_poly(n))
    return checks
