"""Dense integer polynomials as plain coefficient tuples.

A univariate polynomial is a tuple of Python ints, index i holding the
coefficient of x^i.  The zero polynomial is the empty tuple, and a nonzero
polynomial never ends in a zero coefficient (normalized form), so equality
of values is tuple equality.  Coefficients are arbitrary precision and may
be negative.

A bivariate polynomial in (x, t) is a tuple of such tuples: index k holds
the coefficient of t^k, itself a polynomial in x ("slice" k).  The last
slice of a nonzero bivariate polynomial is nonzero.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

IntPoly = tuple[int, ...]
BiPoly = tuple[IntPoly, ...]

ZERO: IntPoly = ()
ONE: IntPoly = (1,)
BI_ONE: BiPoly = (ONE,)


def normalize(coeffs: Iterable[int]) -> IntPoly:
    """Drop trailing zero coefficients and return a tuple."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def add(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    if len(p) < len(q):
        p, q = q, p
    head = [a + b for a, b in zip(p, q)]
    head.extend(p[len(q):])
    return normalize(head)


def neg(p: Sequence[int]) -> IntPoly:
    return tuple(-c for c in p)


def sub(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    return add(p, neg(q))


def shift(p: Sequence[int], e: int) -> IntPoly:
    """Multiply by x^e, i.e. shift coefficients up by e places."""
    if e < 0:
        raise ValueError("shift exponent must be nonnegative")
    if not p:
        return ZERO
    return (0,) * e + tuple(p)


def eval_at(p: Sequence[int], v: int) -> int:
    """Evaluate at an integer point by Horner's scheme, exactly."""
    acc = 0
    for c in reversed(p):
        acc = acc * v + c
    return acc


def coeff_sum(p: Sequence[int]) -> int:
    return sum(p)


def diff_shifted(r: Sequence[int]) -> IntPoly:
    """Successive differences: entry k is r[k-1] - r[k], with r[-1] = 0.

    The result is one index longer than r (its top entry is r's top
    coefficient) and its coefficients always sum to zero.
    """
    if not r:
        return ZERO
    out = [-r[0]]
    out.extend(r[k - 1] - r[k] for k in range(1, len(r)))
    out.append(r[-1])
    return normalize(out)


def bi_normalize(slices: Iterable[IntPoly]) -> BiPoly:
    """Drop trailing zero slices; slices themselves must be normalized."""
    out = list(slices)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def bi_add(p: BiPoly, q: BiPoly) -> BiPoly:
    if len(p) < len(q):
        p, q = q, p
    head = [add(a, b) for a, b in zip(p, q)]
    head.extend(p[len(q):])
    return bi_normalize(head)


def bi_coeff(b: BiPoly, alpha: int, beta: int) -> int:
    """Coefficient of x^alpha t^beta."""
    if beta >= len(b):
        return 0
    s = b[beta]
    return s[alpha] if alpha < len(s) else 0


def bi_eval(b: BiPoly, x: int, t: int) -> int:
    acc = 0
    for s in reversed(b):
        acc = acc * t + eval_at(s, x)
    return acc
