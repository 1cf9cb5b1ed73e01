"""Pictures: bijections between skew cell sets respecting both order structures.

A map is order-standard into a target order when componentwise-comparable
cells land on compatibly ranked images. A picture for a pair of admissible
orders is a bijection that is order-standard forward and whose inverse is
order-standard into the second order.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import _kernels
from .diagram import Cell, SkewShape
from .reading import AdmissibleOrder, is_admissible


class Picture:
    """A bijection between the cells of two skew shapes."""

    __slots__ = ("domain", "codomain", "forward", "backward")

    def __init__(self, domain: SkewShape, codomain: SkewShape, forward):
        forward = {
            (int(a), int(b)): (int(c), int(d)) for (a, b), (c, d) in dict(forward).items()
        }
        if set(forward) != set(domain.cells()):
            raise ValueError("map keys differ from the domain cells")
        backward = {v: k for k, v in forward.items()}
        if len(backward) != len(forward) or set(backward) != set(codomain.cells()):
            raise ValueError("map values must cover the codomain cells exactly once")
        self.domain = domain
        self.codomain = codomain
        self.forward = forward
        self.backward = backward

    def __call__(self, cell: Cell) -> Cell:
        return self.forward[cell]

    def _key(self):
        return (self.domain, self.codomain, tuple(sorted(self.forward.items())))

    def __eq__(self, other):
        return isinstance(other, Picture) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        pairs = ", ".join(f"{u}->{v}" for u, v in sorted(self.forward.items()))
        return f"Picture({pairs})"


def omega(p: Picture) -> Picture:
    """Swap a picture for its inverse."""
    return Picture(p.codomain, p.domain, dict(p.backward))


def _leq_p(u: Cell, v: Cell) -> bool:
    return u[0] <= v[0] and u[1] <= v[1]


def is_pa_standard(mapping, target: AdmissibleOrder) -> bool:
    """True when every componentwise-comparable pair of keys maps to images
    ranked compatibly in ``target``."""
    items = list(dict(mapping).items())
    for u, fu in items:
        for v, fv in items:
            if u != v and _leq_p(u, v) and target.rank(fu) > target.rank(fv):
                return False
    return True


def is_admissible_picture(p: Picture, a: AdmissibleOrder, a_prime: AdmissibleOrder) -> bool:
    """``a`` orders the codomain cells, ``a_prime`` the domain cells."""
    if set(a.cells) != set(p.codomain.cells()) or set(a_prime.cells) != set(p.domain.cells()):
        raise ValueError("orders do not match the picture's shapes")
    return is_pa_standard(p.forward, a) and is_pa_standard(p.backward, a_prime)


@lru_cache(maxsize=None)
def _leq_matrix(cells: tuple[Cell, ...]) -> np.ndarray:
    n = len(cells)
    out = np.zeros((n, n), np.bool_)
    for i, u in enumerate(cells):
        for j, v in enumerate(cells):
            out[i, j] = _leq_p(u, v)
    return out


def enumerate_pictures(
    x: SkewShape, y: SkewShape, a: AdmissibleOrder, a_prime: AdmissibleOrder
) -> tuple[Picture, ...]:
    """All pictures from ``x`` to ``y`` for the order pair (``a`` on ``y``,
    ``a_prime`` on ``x``), sorted by the image sequence over the row-major
    domain cells.

    Images are assigned to domain cells along ``a_prime``, pruning as soon as
    either the partial forward map or the partial inverse violates
    order-standardness; both conditions are pairwise and monotone, so no
    completion of a pruned branch survives.
    """
    if not is_admissible(a, y):
        raise ValueError("a is not an admissible order on the codomain")
    if not is_admissible(a_prime, x):
        raise ValueError("a_prime is not an admissible order on the domain")
    if x.size != y.size:
        return ()
    dom_cells = a_prime.cells
    cod_cells = y.cells()
    dom_leq = _leq_matrix(dom_cells)
    cod_leq = _leq_matrix(cod_cells)
    rank_a = np.array([a.rank(c) for c in cod_cells], np.int64)
    perms = _kernels.enumerate_bijections(dom_leq, cod_leq, rank_a)
    row_major = x.cells()
    pics = []
    for perm in perms:
        forward = {dom_cells[i]: cod_cells[int(c)] for i, c in enumerate(perm)}
        pics.append(Picture(x, y, forward))
    pics.sort(key=lambda p: tuple(p.forward[c] for c in row_major))
    return tuple(pics)
