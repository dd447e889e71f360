"""Small exact linear-algebra helpers over Q (and cyclotomic scalars).

Everything here works on dense rows of Fraction (or Cyclo) entries and
is only meant for the modest matrix sizes this package produces.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import coeff_is_zero


class RowSpace:
    """An incrementally built row space with exact membership tests."""

    def __init__(self, width: int) -> None:
        self.width = width
        self.rows: list[list] = []      # reduced rows, pivot normalized to 1
        self.pivots: list[int] = []

    def _reduce(self, vec: list) -> list:
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not coeff_is_zero(c):
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Insert a vector; returns True if it enlarged the space."""
        if len(vec) != self.width:
            raise ValueError("row width mismatch")
        v = self._reduce(vec)
        piv = next((i for i, x in enumerate(v) if not coeff_is_zero(x)), None)
        if piv is None:
            return False
        head = v[piv]
        inv = Fraction(1) / head if isinstance(head, (int, Fraction)) else head.inverse()
        v = [x * inv for x in v]
        for row in self.rows:
            c = row[piv]
            if not coeff_is_zero(c):
                row[:] = [a - c * b for a, b in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(piv)
        return True

    def contains(self, vec) -> bool:
        v = self._reduce(list(vec))
        return all(coeff_is_zero(x) for x in v)

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(rows: list[list]) -> int:
    if not rows:
        return 0
    space = RowSpace(len(rows[0]))
    for r in rows:
        space.add(r)
    return space.rank


def span_contains(rows: list[list], target: list) -> bool:
    space = RowSpace(len(target))
    for r in rows:
        space.add(r)
    return space.contains(target)


def solve_coordinates(rows: list[list], target: list) -> list[Fraction] | None:
    """Express target as a combination of the given rows.

    Returns one coefficient vector, or None when target is outside the
    span.  Coefficients correspond to rows in the order given.
    """
    if not rows:
        return None if any(not coeff_is_zero(x) for x in target) else []
    width = len(rows[0])
    # Augment each row with an indicator so elimination tracks the
    # combination that produced it.
    n = len(rows)
    aug = []
    for i, r in enumerate(rows):
        if len(r) != width:
            raise ValueError("row width mismatch")
        ind = [Fraction(0)] * n
        ind[i] = Fraction(1)
        aug.append(list(r) + ind)
    space = RowSpace(width + n)
    for r in aug:
        space.add(r)
    v = list(target) + [Fraction(0)] * n
    for row, p in zip(space.rows, space.pivots):
        if p >= width:
            continue
        c = v[p]
        if not coeff_is_zero(c):
            v = [a - c * b for a, b in zip(v, row)]
    if any(not coeff_is_zero(x) for x in v[:width]):
        return None
    return [-x for x in v[width:]]
