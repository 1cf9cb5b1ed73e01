"""Semistandard tableaux over the classical and the two-family alphabets.

Entries are nonzero ints: ``k`` is the plain letter k, ``-k`` is the barred
letter. The two-family alphabet is totally ordered as
``1 < ... < m < -1 < ... < -n`` (all barred letters above all plain ones).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .diagram import Cell, SkewShape, as_partition


def bar(k: int) -> int:
    """The barred letter over k."""
    if k < 1:
        raise ValueError("bar expects a positive letter index")
    return -k


def is_barred(e: int) -> bool:
    return e < 0


def entry_key(e: int):
    """Sort key realizing 1 < ... < m < bar(1) < ... < bar(n)."""
    if e == 0:
        raise ValueError("0 is not a tableau entry")
    return (1, -e) if e < 0 else (0, e)


def entry_str(e: int, unicode: bool = False) -> str:
    if e > 0:
        return str(e)
    return f"{-e}̄" if unicode else f"{-e}'"


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape; ``rows[i]`` lists the entries of the present cells."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = self.shape
        rows = tuple(tuple(int(e) for e in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != len(shape.outer):
            raise ValueError("row count does not match the shape")
        for i, r in enumerate(rows, start=1):
            if len(r) != shape.outer[i - 1] - shape.inner_width(i):
                raise ValueError(f"row {i} has {len(r)} entries for shape {shape}")
            if any(e == 0 for e in r):
                raise ValueError("0 is not a tableau entry")

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - self.shape.inner_width(i) - 1]

    def cells(self) -> tuple[Cell, ...]:
        return self.shape.cells()

    def items(self):
        """(cell, entry) pairs in row-major order."""
        for i, row in enumerate(self.rows, start=1):
            lo = self.shape.inner_width(i)
            for k, e in enumerate(row):
                yield (i, lo + k + 1), e

    @property
    def size(self) -> int:
        return self.shape.size

    def __repr__(self):
        body = ",".join("[" + ",".join(entry_str(e) for e in r) + "]" for r in self.rows)
        if self.shape.inner:
            return f"Tableau({self.shape.outer}/{self.shape.inner} {body})"
        return f"Tableau({body})"


def from_rows(rows, inner=()) -> Tableau:
    """Build a tableau from entry rows; the outer shape is inferred."""
    inner = as_partition(inner)
    rows = tuple(tuple(r) for r in rows)
    outer = tuple((inner[i] if i < len(inner) else 0) + len(r) for i, r in enumerate(rows))
    return Tableau(SkewShape(outer, inner), rows)


def _neighbors(t: Tableau, i: int, j: int):
    left = t.entry(i, j - 1) if (i, j - 1) in t.shape else None
    up = t.entry(i - 1, j) if (i - 1, j) in t.shape else None
    return left, up


def is_semistandard(t: Tableau) -> bool:
    """Rows weakly increase, columns strictly increase. Entries must be plain letters."""
    for _, e in t.items():
        if e < 0:
            raise ValueError("is_semistandard expects plain (unbarred) entries")
    for (i, j), e in t.items():
        left, up = _neighbors(t, i, j)
        if left is not None and e < left:
            return False
        if up is not None and e <= up:
            return False
    return True


def is_glmn_semistandard(t: Tableau, m: int, n: int) -> bool:
    """Two-family condition: rows and columns weakly increase, plain letters are
    strict down columns, barred letters are strict along rows, and every entry
    lies in the alphabet 1..m, bar(1)..bar(n)."""
    for _, e in t.items():
        if e > m or -e > n:
            return False
    for (i, j), e in t.items():
        left, up = _neighbors(t, i, j)
        if left is not None:
            if entry_key(e) < entry_key(left):
                return False
            if e == left and is_barred(e):
                return False
        if up is not None:
            if entry_key(e) < entry_key(up):
                return False
            if e == up and not is_barred(e):
                return False
    return True


def content(t: Tableau) -> tuple[int, ...]:
    """Counts of the letters 1..max, as a tuple. Entries must be plain letters."""
    counts: dict[int, int] = {}
    top = 0
    for _, e in t.items():
        if e < 0:
            raise ValueError("content expects plain (unbarred) entries")
        counts[e] = counts.get(e, 0) + 1
        top = max(top, e)
    return tuple(counts.get(k, 0) for k in range(1, top + 1))


def glmn_weight(t: Tableau, m: int, n: int) -> tuple[int, ...]:
    """Letter counts over the two-family alphabet, plain letters first."""
    w = [0] * (m + n)
    for _, e in t.items():
        idx = e - 1 if e > 0 else m + (-e) - 1
        if idx < 0 or idx >= m + n:
            raise ValueError(f"entry {e} outside the ({m},{n}) alphabet")
        w[idx] += 1
    return tuple(w)


def p_index(t: Tableau, cell: Cell) -> int:
    """Number of cells holding the same entry as ``cell`` in its column or further right.

    Well-defined only when equal entries occupy distinct columns, which
    semistandardness of either flavor guarantees; repeats in a column are
    rejected loudly.
    """
    i, j = cell
    e = t.entry(i, j)
    count = 0
    for (a, b), v in t.items():
        if v != e:
            continue
        if b == j and a != i:
            raise ValueError(f"entry {e} repeats in column {j}; the column index is ambiguous")
        if b >= j:
            count += 1
    return count


def _shape_neighbor_indices(shape: SkewShape):
    cells = shape.cells()
    index = {c: k for k, c in enumerate(cells)}
    left = np.array([index.get((i, j - 1), -1) for (i, j) in cells], np.int64)
    up = np.array([index.get((i - 1, j), -1) for (i, j) in cells], np.int64)
    return cells, left, up


@lru_cache(maxsize=None)
def _fillings(shape: SkewShape, m: int, letters: int) -> np.ndarray:
    """Raw entry matrix for all fillings of ``shape``; see the kernel for the bound rule."""
    _, left, up = _shape_neighbor_indices(shape)
    return _kernels.enumerate_fillings(left, up, m, letters)


def _tableau_from_entries(shape: SkewShape, entries) -> Tableau:
    rows = []
    k = 0
    for i in range(1, len(shape.outer) + 1):
        width = shape.outer[i - 1] - shape.inner_width(i)
        rows.append(tuple(int(e) for e in entries[k : k + width]))
        k += width
    return Tableau(shape, tuple(rows))


@lru_cache(maxsize=None)
def enumerate_ssyt(shape: SkewShape, max_entry: int) -> tuple[Tableau, ...]:
    """All semistandard fillings of ``shape`` with entries in 1..max_entry,
    in lexicographic order of the row-major entry vector."""
    if max_entry < 0:
        raise ValueError("max_entry must be nonnegative")
    if shape.size > 0 and max_entry == 0:
        return ()
    mat = _fillings(shape, max_entry, max_entry)
    return tuple(_tableau_from_entries(shape, row) for row in mat)


def _decode_glmn(e: int, m: int) -> int:
    return e if e <= m else -(e - m)


@lru_cache(maxsize=None)
def enumerate_glmn(shape: SkewShape, m: int, n: int) -> tuple[Tableau, ...]:
    """All two-family semistandard fillings of ``shape`` over the (m, n) alphabet.

    For straight shapes this is nonempty exactly when the shape is an
    (m, n)-hook diagram.
    """
    if m < 0 or n < 0:
        raise ValueError("alphabet sizes must be nonnegative")
    if shape.size > 0 and m + n == 0:
        return ()
    mat = _fillings(shape, m, m + n)
    out = []
    for row in mat:
        entries = [_decode_glmn(int(e), m) for e in row]
        out.append(_tableau_from_entries(shape, entries))
    return tuple(out)
