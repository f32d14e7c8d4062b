"""Dyck paths, their lattice order, and the peak-insertion construction.

A Dyck path is a word over {U, D}: U is a rise step (1,1), D is a fall
step (1,-1); the path starts and ends on the x-axis and never dips below
it.  The ``area`` of a path counts the unit triangles between the path
and the axis, which equals the sum of the heights reached after each
step; ``rank`` = (area - semilength) / 2 is the grading of the lattice
of paths of fixed semilength ordered by "lies weakly below".

Growing a path by inserting a peak (a U immediately followed by a D) at
each point of its final run of falls produces every path of the next
semilength exactly once.  ``sons`` and ``parent`` implement the two
directions of that construction and ``paths`` enumerates a full
semilength level by iterating it from the one-peak path.
"""

from __future__ import annotations

from math import comb

from .util import DEFAULT_GUARD, catalan, ensure_guard

_CACHE_MAX = 12
_PATH_LEVELS: list[tuple["DyckPath", ...]] = []


class DyckPath:
    """An immutable Dyck path, stored as its step word.

    The constructor accepts any string over {U, D} (case-insensitive),
    validates the Dyck conditions and canonicalizes to uppercase.  The
    empty path is valid, with area 0 and rank 0.
    """

    __slots__ = ("steps",)

    def __init__(self, steps: str):
        s = steps.upper()
        height = 0
        for i, c in enumerate(s):
            if c == "U":
                height += 1
            elif c == "D":
                height -= 1
                if height < 0:
                    raise ValueError(f"path dips below the axis at step {i + 1}")
            else:
                raise ValueError(f"invalid step {c!r} at position {i + 1}")
        if height != 0:
            raise ValueError("path does not return to the axis")
        object.__setattr__(self, "steps", s)

    @classmethod
    def _wrap(cls, steps: str) -> "DyckPath":
        # Internal constructor for step words already known to be valid.
        self = object.__new__(cls)
        object.__setattr__(self, "steps", steps)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("DyckPath is immutable")

    def __eq__(self, other):
        return isinstance(other, DyckPath) and self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return f"DyckPath({self.steps!r})"

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> list[int]:
        """Heights after each step (length 2n; the implicit start is 0)."""
        out = []
        h = 0
        for c in self.steps:
            h += 1 if c == "U" else -1
            out.append(h)
        return out

    def area(self) -> int:
        """Unit triangles between the path and the axis (sum of heights)."""
        return sum(self.heights())

    def rank(self) -> int:
        """(area - semilength) / 2: 0 for the sawtooth, C(n,2) for the pyramid."""
        return (self.area() - self.semilength) // 2

    def last_descent_length(self) -> int:
        """Number of trailing fall steps."""
        if not self.steps:
            raise ValueError("the empty path has no final descent")
        k = 0
        for c in reversed(self.steps):
            if c != "D":
                break
            k += 1
        return k

    def leq(self, other: "DyckPath") -> bool:
        """True when self lies weakly below other (pointwise on heights)."""
        if len(self.steps) != len(other.steps):
            raise ValueError("paths must have equal semilength to compare")
        return all(a <= b for a, b in zip(self.heights(), other.heights()))

    def to_young(self) -> tuple[int, ...]:
        """The partition of staircase cells lying above the path.

        Reading the path as north/east steps from (0,0) to (n,n) weakly
        above the diagonal (U = north, D = east), row j of the staircase
        holds j cells and the path leaves exactly (falls seen before the
        j-th rise) of them on its upper-left side.  Listing those counts
        from the top row down gives a partition fitting inside
        (n-1, n-2, ..., 1), of size C(n,2) - rank.
        """
        before_rise = []
        falls = 0
        for c in self.steps:
            if c == "U":
                before_rise.append(falls)
            else:
                falls += 1
        parts = [p for p in reversed(before_rise) if p > 0]
        return tuple(parts)


def sons(path: DyckPath) -> list[DyckPath]:
    """All paths obtained by inserting a peak into the final descent.

    A path whose final descent has k falls yields k + 1 sons of the next
    semilength, returned in increasing rank order (ranks are consecutive,
    starting at the rank of the input path).
    """
    k = path.last_descent_length()
    s = path.steps
    top = len(s)
    return [DyckPath._wrap(s[: top - i] + "UD" + s[top - i:]) for i in range(k + 1)]


def parent(path: DyckPath) -> DyckPath:
    """Remove the rightmost peak (the last U and the D following it).

    Inverts every branch of ``sons``: parent(s) == p for each s in
    sons(p).
    """
    if path.semilength < 2:
        raise ValueError("need semilength at least 2 to remove a peak")
    s = path.steps
    i = s.rfind("U")
    return DyckPath._wrap(s[:i] + s[i + 2:])


def paths(n: int, guard: int = DEFAULT_GUARD, include_empty: bool = False) -> list[DyckPath]:
    """All Dyck paths of semilength n, generated by iterating ``sons``.

    Refuses to produce more than ``guard`` paths.  The degenerate n = 0
    level (the single empty path) is returned only when ``include_empty``
    is set.
    """
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    if n == 0:
        if include_empty:
            return [DyckPath._wrap("")]
        raise ValueError("semilength 0 only available with include_empty")
    ensure_guard(catalan(n), guard, f"enumerating Dyck paths of semilength {n}")
    if not _PATH_LEVELS:
        _PATH_LEVELS.append((DyckPath._wrap("UD"),))
    while len(_PATH_LEVELS) < min(n, _CACHE_MAX):
        _PATH_LEVELS.append(
            tuple(s for p in _PATH_LEVELS[-1] for s in sons(p))
        )
    if n <= _CACHE_MAX:
        return list(_PATH_LEVELS[n - 1])
    level = list(_PATH_LEVELS[_CACHE_MAX - 1])
    for _ in range(n - _CACHE_MAX):
        level = [s for p in level for s in sons(p)]
    return level


def _from_heights(heights: list[int]) -> DyckPath:
    chars = []
    prev = 0
    for h in heights:
        chars.append("U" if h > prev else "D")
        prev = h
    return DyckPath._wrap("".join(chars))


def meet(p: DyckPath, q: DyckPath) -> DyckPath:
    """Greatest lower bound: pointwise minimum of the height profiles."""
    if len(p.steps) != len(q.steps):
        raise ValueError("paths must have equal semilength")
    return _from_heights([min(a, b) for a, b in zip(p.heights(), q.heights())])


def join(p: DyckPath, q: DyckPath) -> DyckPath:
    """Least upper bound: pointwise maximum of the height profiles."""
    if len(p.steps) != len(q.steps):
        raise ValueError("paths must have equal semilength")
    return _from_heights([max(a, b) for a, b in zip(p.heights(), q.heights())])


def from_young(n: int, parts: tuple[int, ...]) -> DyckPath:
    """Inverse of ``DyckPath.to_young`` for partitions inside the staircase.

    ``parts`` must be a weakly decreasing sequence of positive integers
    with parts[j] <= n - 1 - j (0-based), i.e. fit inside the staircase
    (n-1, n-2, ..., 1).
    """
    parts = tuple(parts)
    for j, part in enumerate(parts):
        if part <= 0:
            raise ValueError("partition parts must be positive")
        if j and parts[j - 1] < part:
            raise ValueError("partition parts must be weakly decreasing")
        if part > n - 1 - j:
            raise ValueError(
                f"part {part} at row {j + 1} exceeds the staircase bound {n - 1 - j}"
            )
    before_rise = [0] * (n - len(parts)) + [p for p in reversed(parts)]
    chars = []
    falls = 0
    for target in before_rise:
        chars.append("D" * (target - falls))
        chars.append("U")
        falls = target
    chars.append("D" * (n - falls))
    return DyckPath._wrap("".join(chars))


def max_rank(n: int) -> int:
    """The top rank of the semilength-n lattice, C(n, 2)."""
    return comb(n, 2)
