"""Young diagrams, skew shapes, and box addition.

Cells are 1-based ``(row, col)`` pairs; partitions are plain tuples of row
lengths, canonicalized so that no trailing zeros appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

Cell = tuple[int, int]
Partition = tuple[int, ...]


def as_partition(rows) -> Partition:
    """Canonicalize ``rows`` to a weakly decreasing tuple without trailing zeros."""
    out = tuple(int(r) for r in rows)
    while out and out[-1] == 0:
        out = out[:-1]
    for i, r in enumerate(out):
        if r < 0:
            raise ValueError(f"negative row length in {rows!r}")
        if i and out[i - 1] < r:
            raise ValueError(f"row lengths must weakly decrease: {rows!r}")
    return out


def partition_contains(outer: Partition, inner: Partition) -> bool:
    """True when the diagram of ``inner`` sits inside the diagram of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def is_hook(y, m: int, n: int) -> bool:
    """True when ``y`` has no box at position (m+1, n+1), i.e. row m+1 is at most n."""
    y = as_partition(y)
    if m < 0 or n < 0:
        raise ValueError("hook parameters must be nonnegative")
    return len(y) <= m or y[m] <= n


@dataclass(frozen=True)
class SkewShape:
    """The cell set of ``outer`` with the cells of ``inner`` removed."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if not partition_contains(self.outer, self.inner):
            raise ValueError(f"inner shape {self.inner} not contained in outer {self.outer}")

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def inner_width(self, i: int) -> int:
        """Boxes of row ``i`` occupied by the inner shape."""
        return self.inner[i - 1] if i <= len(self.inner) else 0

    def cells(self) -> tuple[Cell, ...]:
        """Present cells in row-major order."""
        return _cells(self.outer, self.inner)

    def __contains__(self, cell) -> bool:
        i, j = cell
        if i < 1 or i > len(self.outer):
            return False
        return self.inner_width(i) < j <= self.outer[i - 1]

    def __repr__(self):
        if not self.inner:
            return f"SkewShape({self.outer})"
        return f"SkewShape({self.outer}, {self.inner})"


@lru_cache(maxsize=None)
def _cells(outer: Partition, inner: Partition) -> tuple[Cell, ...]:
    out = []
    for i, row in enumerate(outer, start=1):
        lo = inner[i - 1] if i <= len(inner) else 0
        for j in range(lo + 1, row + 1):
            out.append((i, j))
    return tuple(out)


def add_box(y, j: int) -> Partition | None:
    """Append one box to row ``j`` of ``y``; None when the result is not a partition."""
    y = tuple(y)
    if j < 1 or j > len(y) + 1:
        return None
    if j == len(y) + 1:
        return y + (1,)
    if j >= 2 and y[j - 2] == y[j - 1]:
        return None
    return y[: j - 1] + (y[j - 1] + 1,) + y[j:]


def add_boxes(y, word) -> Partition | None:
    """Left fold of add_box over ``word``; None as soon as any step fails."""
    shape = as_partition(y)
    for j in word:
        shape = add_box(shape, j)
        if shape is None:
            return None
    return shape


def first_invalid_step(y, word) -> int | None:
    """1-based index of the first letter whose box addition fails, or None."""
    shape = as_partition(y)
    for k, j in enumerate(word, start=1):
        shape = add_box(shape, j)
        if shape is None:
            return k
    return None


@lru_cache(maxsize=None)
def partitions_of(n: int, max_rows: int | None = None, max_cols: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n``, in decreasing lexicographic order."""
    if n < 0:
        return ()
    rows = n if max_rows is None else max_rows
    cols = n if max_cols is None else max_cols

    def rec(remaining, cap, left):
        if remaining == 0:
            yield ()
            return
        if left == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first, left - 1):
                yield (first,) + rest

    return tuple(rec(n, cols, rows))


def partitions_up_to(n: int, max_rows: int | None = None, max_cols: int | None = None) -> tuple[Partition, ...]:
    """All partitions of size 0..n, smaller sizes first."""
    out = []
    for k in range(n + 1):
        out.extend(partitions_of(k, max_rows, max_cols))
    return tuple(out)


@lru_cache(maxsize=None)
def subdiagrams(z) -> tuple[Partition, ...]:
    """All partitions whose diagram is contained in the diagram of ``z``."""
    z = as_partition(z)
    out = []
    for rows in product(*(range(r + 1) for r in z)):
        if all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1)):
            out.append(as_partition(rows))
    return tuple(sorted(set(out)))


def hook_partitions_up_to(size: int, m: int, n: int) -> tuple[Partition, ...]:
    """All (m, n)-hook partitions of size 0..size."""
    return tuple(p for p in partitions_up_to(size) if is_hook(p, m, n))
