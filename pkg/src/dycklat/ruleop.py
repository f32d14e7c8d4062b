"""The two-label succession rule behind the chain-count polynomials.

Labels are pairs (alpha, beta) of nonnegative integers; a node labelled
(alpha, beta) has beta + 2 sons labelled (alpha + i, i) for
i = 0 .. beta + 1, and the root of the generating tree carries (0, 0).
Encoding the multiset of labels at one tree level as a bivariate
polynomial, with x recording alpha and t recording beta, turns one
generation of the tree into a linear operator on polynomials:

    x^alpha t^beta  ->  x^alpha * sum_{i=0..beta+1} x^i t^i

``step`` applies that operator slice-wise with suffix sums, so the label
distribution at any depth comes from polynomial coefficients in
polynomial time, without materializing the Catalan-sized tree.  Slice k
of the level polynomial at semilength n doubles as the start-rank count
polynomial of the cardinality-(k+2) chain class used in the chains
module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .bigpoly import BI_ONE, ZERO, BiPoly, IntPoly, add, bi_normalize, shift
from .util import DEFAULT_GUARD, catalan, ensure_guard

AXIOM_LABEL = (0, 0)


def step(b: BiPoly) -> BiPoly:
    """One generation of the rule, applied to a level polynomial.

    Output slice 0 is the sum of all input slices; output slice k >= 1
    is x^k times the sum of the input slices of index >= k - 1.
    """
    if not b:
        return ()
    m = len(b) - 1
    suffix: list[IntPoly] = [ZERO] * (m + 1)
    acc = ZERO
    for j in range(m, -1, -1):
        acc = add(acc, b[j])
        suffix[j] = acc
    out = [suffix[0]]
    out.extend(shift(suffix[k - 1], k) for k in range(1, m + 2))
    return bi_normalize(out)


def label_poly(n: int) -> BiPoly:
    """Level polynomial at semilength n >= 2 (tree level n - 2).

    The coefficient of x^alpha t^beta counts nodes labelled
    (alpha, beta); slice k is the start-rank polynomial of the
    cardinality-(k+2) chain class of the semilength-n lattice.
    """
    if n < 2:
        raise ValueError("level polynomials start at semilength 2")
    b = BI_ONE
    for _ in range(n - 2):
        b = step(b)
    return b


def iter_label_polys(n_max: int) -> Iterator[tuple[int, BiPoly]]:
    """Yield (n, label_poly(n)) for n = 2 .. n_max, sharing one iteration."""
    b = BI_ONE
    for n in range(2, n_max + 1):
        if n > 2:
            b = step(b)
        yield n, b


@dataclass(frozen=True)
class LevelCounts:
    """Label multiplicities at one level of the generating tree."""

    level: int
    counts: Mapping[tuple[int, int], int]

    def total(self) -> int:
        return sum(self.counts.values())


def _counts_from_bipoly(level: int, b: BiPoly) -> LevelCounts:
    counts = {}
    for beta, s in enumerate(b):
        for alpha, c in enumerate(s):
            if c:
                counts[(alpha, beta)] = c
    return LevelCounts(level=level, counts=counts)


def level_counts(level: int) -> LevelCounts:
    """Label distribution at tree level ``level`` (level 0 is the root)."""
    if level < 0:
        raise ValueError("levels are nonnegative")
    return _counts_from_bipoly(level, label_poly(level + 2))


def iter_level_counts(max_level: int) -> Iterator[LevelCounts]:
    for n, b in iter_label_polys(max_level + 2):
        yield _counts_from_bipoly(n - 2, b)


def table(max_level: int) -> tuple[list[tuple[int, int]], list[list[int]]]:
    """Rectangular label-count table for levels 0 .. max_level.

    Columns are the labels that occur at some listed level, sorted by
    (alpha, beta); absent labels never get a column, absent counts render
    as zero entries.
    """
    dists = list(iter_level_counts(max_level))
    labels = sorted({lab for d in dists for lab in d.counts})
    rows = [[d.counts.get(lab, 0) for lab in labels] for d in dists]
    return labels, rows


def format_label(label: tuple[int, int]) -> str:
    return f"{label[0]}_{label[1]}"


def tree_levels(
    max_level: int, guard: int = DEFAULT_GUARD
) -> list[list[tuple[int, int]]]:
    """Materialized generating-tree levels, for display and as a test oracle.

    Level ell holds catalan(ell + 1) nodes; the guard bounds the total
    node count.  Nodes appear in parent order, each parent's sons in
    increasing second component.
    """
    if max_level < 0:
        raise ValueError("levels are nonnegative")
    total = sum(catalan(ell + 1) for ell in range(max_level + 1))
    ensure_guard(total, guard, f"expanding the generating tree to level {max_level}")
    levels = [[AXIOM_LABEL]]
    for _ in range(max_level):
        nxt = []
        for alpha, beta in levels[-1]:
            nxt.extend((alpha + i, i) for i in range(beta + 2))
        levels.append(nxt)
    return levels


def check_column_recursion(max_level: int) -> bool:
    """Check that each level's label counts are the rule image of the last.

    Spelled per label: the count of (k, i) at level ell equals the sum of
    the counts of (k - i, j) at level ell - 1 over all subscripts j with
    j >= i - 1 (every j when i = 0).  Verified for levels 1 .. max_level
    against coefficient-extracted distributions.
    """
    if max_level < 1:
        raise ValueError("need at least one level to recurse")
    prev = None
    for dist in iter_level_counts(max_level):
        if prev is not None:
            image: dict[tuple[int, int], int] = {}
            for (alpha, beta), c in prev.counts.items():
                for i in range(beta + 2):
                    key = (alpha + i, i)
                    image[key] = image.get(key, 0) + c
            if image != dict(dist.counts):
                return False
        prev = dist
    return True
