"""Admissible cell orders and reading words.

A total order on a cell set is admissible when every cell weakly northeast of
another (row at most, column at least) comes first. The two classical examples
scan rows top to bottom reading each right to left, and columns right to left
reading each top to bottom.
"""

from __future__ import annotations

import random

import numpy as np

from . import _kernels
from .diagram import Cell, SkewShape
from .tableau import Tableau


class AdmissibleOrder:
    """A total order on a finite cell set, stored as the explicit sequence."""

    __slots__ = ("cells", "_rank")

    def __init__(self, cells):
        cells = tuple((int(i), int(j)) for i, j in cells)
        if len(set(cells)) != len(cells):
            raise ValueError("order repeats a cell")
        self.cells = cells
        self._rank = {c: k for k, c in enumerate(cells)}

    def rank(self, cell: Cell) -> int:
        return self._rank[cell]

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __eq__(self, other):
        return isinstance(other, AdmissibleOrder) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return f"AdmissibleOrder({list(self.cells)})"


def _must_precede(u: Cell, v: Cell) -> bool:
    # u weakly northeast of v forces u first
    return u != v and u[0] <= v[0] and u[1] >= v[1]


def middle_eastern(shape: SkewShape) -> AdmissibleOrder:
    """Rows top to bottom, each row right to left."""
    return AdmissibleOrder(sorted(shape.cells(), key=lambda c: (c[0], -c[1])))


def far_eastern(shape: SkewShape) -> AdmissibleOrder:
    """Columns right to left, each column top to bottom."""
    return AdmissibleOrder(sorted(shape.cells(), key=lambda c: (-c[1], c[0])))


def is_admissible(order: AdmissibleOrder, shape: SkewShape) -> bool:
    """True when ``order`` lists exactly the cells of ``shape`` northeast-first."""
    cells = order.cells
    if set(cells) != set(shape.cells()) or len(cells) != shape.size:
        return False
    for a, u in enumerate(cells):
        for v in cells[a + 1 :]:
            if _must_precede(v, u):
                return False
    return True


def random_admissible_order(shape: SkewShape, seed: int) -> AdmissibleOrder:
    """A random admissible order, drawn by repeatedly picking uniformly among
    the cells that no remaining cell is forced to precede. Deterministic in
    ``seed``."""
    rng = random.Random(seed)
    remaining = set(shape.cells())
    out = []
    while remaining:
        minimal = sorted(
            u for u in remaining if not any(_must_precede(v, u) for v in remaining)
        )
        pick = rng.choice(minimal)
        remaining.remove(pick)
        out.append(pick)
    return AdmissibleOrder(out)


def reading(t: Tableau, order: AdmissibleOrder) -> tuple[int, ...]:
    """The entries of ``t`` listed in ``order``."""
    if set(order.cells) != set(t.cells()):
        raise ValueError("order does not cover the cells of the tableau")
    return tuple(t.entry(i, j) for (i, j) in order.cells)


def is_lattice_permutation(word) -> bool:
    """Every prefix holds at least as many letters i as i+1, for every i >= 1."""
    word = tuple(int(v) for v in word)
    if any(v < 1 for v in word):
        raise ValueError("letters must be positive")
    return bool(_kernels.lattice_ok(np.array(word, np.int64)))
