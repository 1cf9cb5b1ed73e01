"""Signature-rule word operators and brute-force decomposition checks.

Words are tuples of positive letters, read left to right as tensor factors.
For the letter pair (i, i+1), scan the word marking i as an opening sign and
i+1 as a closing one; a closing sign cancels the nearest open i on its left.
Lowering flips the leftmost surviving i to i+1, raising flips the rightmost
surviving i+1 back. Highest-weight words (no raising applies) are exactly the
lattice permutations, a fact the test suite checks three ways.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .diagram import Partition, SkewShape, as_partition, hook_partitions_up_to, is_hook
from .lr import _order_columns, glmn_lr_tableaux
from .reading import far_eastern, middle_eastern
from .tableau import _fillings, enumerate_glmn, glmn_weight


def _signature(word, i):
    """Positions of the surviving open and closing signs for the pair (i, i+1)."""
    plus: list[int] = []
    minus: list[int] = []
    for pos, v in enumerate(word):
        if v == i:
            plus.append(pos)
        elif v == i + 1:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
    return plus, minus


def _check_word(word):
    word = tuple(int(v) for v in word)
    if any(v < 1 for v in word):
        raise ValueError("letters must be positive")
    return word


def lower(word, i: int) -> tuple[int, ...] | None:
    """Flip the leftmost surviving i to i+1; None when every i is cancelled."""
    word = _check_word(word)
    if i < 1:
        raise ValueError("operator index must be positive")
    plus, _ = _signature(word, i)
    if not plus:
        return None
    k = plus[0]
    return word[:k] + (i + 1,) + word[k + 1 :]


def raise_(word, i: int) -> tuple[int, ...] | None:
    """Flip the rightmost surviving i+1 to i; None when every i+1 is cancelled.

    Exact inverse of lower wherever either is defined.
    """
    word = _check_word(word)
    if i < 1:
        raise ValueError("operator index must be positive")
    _, minus = _signature(word, i)
    if not minus:
        return None
    k = minus[-1]
    return word[:k] + (i,) + word[k + 1 :]


def is_highest_weight(word) -> bool:
    """No raising operator applies."""
    word = _check_word(word)
    top = max(word, default=1)
    return all(raise_(word, i) is None for i in range(1, top))


def weight(word) -> tuple[int, ...]:
    """Letter counts 1..max."""
    word = _check_word(word)
    top = max(word, default=0)
    counts = Counter(word)
    return tuple(counts.get(k, 0) for k in range(1, top + 1))


@dataclass
class DecompositionReport:
    """Outcome of a product-decomposition check.

    ``per_shape`` maps each summand shape to its multiplicity; ``lhs_card`` and
    ``rhs_card`` count the elements (or weight vectors) on the two sides.
    """

    lhs_card: int
    rhs_card: int
    per_shape: dict[Partition, int]
    passed: bool

    def to_obj(self) -> dict:
        return {
            "lhs_card": self.lhs_card,
            "rhs_card": self.rhs_card,
            "per_shape": {",".join(map(str, z)): k for z, k in sorted(self.per_shape.items())},
            "pass": self.passed,
        }


def _strip(row) -> Partition:
    out = tuple(int(v) for v in row)
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def _reading_words(shape: SkewShape, max_entry: int, order) -> np.ndarray:
    mat = _fillings(shape, max_entry, max_entry)
    return mat[:, _order_columns(shape, order)]


def verify_decomposition_glr(y, w, r: int) -> DecompositionReport:
    """Check the classical product decomposition three ways.

    Route one, per reading direction: replay the reading word of every filling
    of ``w`` (entries up to ``r``) over ``y`` and collect the multiset of
    resulting shapes, keeping only replays that stay inside valid diagrams.
    Route two: concatenate the readings of every pair of fillings of ``y`` and
    ``w`` and collect the weights of the words no raising operator touches.
    Passes when all three multisets agree and the total cardinalities match.
    """
    y, w = as_partition(y), as_partition(w)
    if len(y) > r or len(w) > r:
        raise ValueError("shapes must have at most r rows")
    sy, sw = SkewShape(y), SkewShape(w)
    y_arr = np.array(y, np.int64)

    multisets = []
    for make in (middle_eastern, far_eastern):
        words = _reading_words(sw, r, make(sw))
        shapes, ok = _kernels.growth_shapes(words, y_arr)
        multisets.append(Counter(_strip(row) for row in shapes[ok]))
    grown_me, grown_fe = multisets

    s_words = _reading_words(sy, r, middle_eastern(sy))
    t_words = _reading_words(sw, r, middle_eastern(sw))
    pairs = np.hstack(
        [
            np.repeat(s_words, t_words.shape[0], axis=0),
            np.tile(t_words, (s_words.shape[0], 1)),
        ]
    )
    hw = _kernels.highest_mask(pairs)
    weights = _kernels.letter_counts(pairs[hw], r)
    from_highest = Counter(_strip(row) for row in weights)

    lhs_card = s_words.shape[0] * t_words.shape[0]
    rhs_card = sum(
        mult * _fillings(SkewShape(shape), r, r).shape[0] for shape, mult in grown_me.items()
    )
    passed = grown_me == grown_fe == from_highest and lhs_card == rhs_card
    return DecompositionReport(lhs_card, rhs_card, dict(grown_me), passed)


def verify_decomposition_glmn(y, w, m: int, n: int) -> DecompositionReport:
    """Check the two-family product decomposition at the level of weights.

    The weight multiset of all pairs of fillings of ``y`` and ``w`` must match
    the union, over hook shapes ``z`` of the right size, of ``N`` copies of the
    weight multiset of the fillings of ``z``, where ``N`` counts the two-family
    LR tableaux of the triple.
    """
    y, w = as_partition(y), as_partition(w)
    for name, p in (("y", y), ("w", w)):
        if not is_hook(p, m, n):
            raise ValueError(f"{name}={p} is not a ({m},{n})-hook diagram")
    by = enumerate_glmn(SkewShape(y), m, n)
    bw = enumerate_glmn(SkewShape(w), m, n)
    wy = [glmn_weight(t, m, n) for t in by]
    ww = [glmn_weight(t, m, n) for t in bw]
    lhs = Counter(tuple(a + b for a, b in zip(u, v)) for u in wy for v in ww)

    total = sum(y) + sum(w)
    rhs: Counter = Counter()
    per_shape: dict[Partition, int] = {}
    for z in hook_partitions_up_to(total, m, n):
        if sum(z) != total:
            continue
        mult = len(glmn_lr_tableaux(y, w, z))
        if mult == 0:
            continue
        per_shape[z] = mult
        zw = Counter(glmn_weight(t, m, n) for t in enumerate_glmn(SkewShape(z), m, n))
        for vec, k in zw.items():
            rhs[vec] += mult * k
    lhs_card = sum(lhs.values())
    rhs_card = sum(rhs.values())
    passed = lhs == rhs
    return DecompositionReport(lhs_card, rhs_card, per_shape, passed)


def glr_summand_shapes(y, w, r: int) -> dict[Partition, int]:
    """Multiset of shapes from the reading-replay route (one admissible order)."""
    y, w = as_partition(y), as_partition(w)
    sw = SkewShape(w)
    words = _reading_words(sw, r, middle_eastern(sw))
    shapes, ok = _kernels.growth_shapes(words, np.array(y, np.int64))
    return dict(Counter(_strip(row) for row in shapes[ok]))


__all__ = [
    "DecompositionReport",
    "glr_summand_shapes",
    "is_highest_weight",
    "lower",
    "raise_",
    "verify_decomposition_glr",
    "verify_decomposition_glmn",
    "weight",
]
