"""Hot enumeration loops, jit-compiled with numba when available.

Every kernel is written in a numba-compatible subset of Python over numpy
arrays, so the identical source runs on two paths:

* jitted (default, when numba imports cleanly), and
* plain Python, selected by setting ``LRPICTURES_NO_NUMBA=1``.

``benchmarks/bench.py`` compares the two.  Tests exercise both via the
``py_func`` attribute numba attaches to compiled dispatchers.
"""

from __future__ import annotations

import os

import numpy as np

_disabled = os.environ.get("LRPICTURES_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

if not _disabled:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _disabled = True

USING_NUMBA = not _disabled

if USING_NUMBA:

    def _jit(func):
        return _njit(cache=True)(func)

else:

    def _jit(func):
        return func


def plain(func):
    """The uncompiled version of a kernel (the kernel itself on the fallback path)."""
    return getattr(func, "py_func", func)


@_jit
def lattice_ok(word):
    """True when every prefix of ``word`` holds at least as many i as i+1, for all i."""
    n = word.size
    if n == 0:
        return True
    top = np.int64(1)
    for k in range(n):
        if word[k] > top:
            top = word[k]
    counts = np.zeros(top + 1, np.int64)
    for k in range(n):
        v = word[k]
        counts[v - 1] += 1
        if v > 1 and counts[v - 1] > counts[v - 2]:
            return False
    return True


@_jit
def grow_rows(buf, nrows, word):
    """Replay box additions over ``buf`` (row lengths, first ``nrows`` live).

    Each letter j appends one box to row j.  Returns ``(fail, n)`` where
    ``fail`` is the 1-based index of the first letter whose addition breaks the
    weakly-decreasing row condition (0 when all succeed) and ``n`` is the live
    row count after the last applied step.  ``buf`` must have room for
    ``nrows + word.size`` rows.
    """
    n = nrows
    for k in range(word.size):
        j = word[k]
        if j < 1 or j > n + 1:
            return k + 1, n
        if j == n + 1:
            buf[n] = 1
            n += 1
        else:
            # the box lands at the end of row j; row j-1 must stay at least as long
            if j >= 2 and buf[j - 2] == buf[j - 1]:
                return k + 1, n
            buf[j - 1] += 1
    return 0, n


@_jit
def growth_mask(words, start, target):
    """Row mask: replaying row ``r`` of ``words`` over ``start`` yields exactly ``target``."""
    rows, length = words.shape
    out = np.zeros(rows, np.bool_)
    tn = target.size
    buf = np.zeros(start.size + length + 1, np.int64)
    for r in range(rows):
        n = start.size
        for i in range(n):
            buf[i] = start[i]
        ok = True
        for k in range(length):
            j = words[r, k]
            if j < 1 or j > n + 1:
                ok = False
                break
            if j == n + 1:
                buf[n] = 1
                n += 1
            else:
                if j >= 2 and buf[j - 2] == buf[j - 1]:
                    ok = False
                    break
                buf[j - 1] += 1
        if ok and n == tn:
            same = True
            for i in range(n):
                if buf[i] != target[i]:
                    same = False
                    break
            out[r] = same
    return out


@_jit
def growth_shapes(words, start):
    """Replay every row of ``words`` over ``start``; collect resulting shapes.

    Returns ``(shapes, ok)``: shapes zero-padded to a fixed width, and the
    per-row success mask (rows that fail are left as zeros).
    """
    rows, length = words.shape
    width = start.size + length
    shapes = np.zeros((rows, width), np.int64)
    ok = np.zeros(rows, np.bool_)
    for r in range(rows):
        n = start.size
        for i in range(n):
            shapes[r, i] = start[i]
        good = True
        for k in range(length):
            j = words[r, k]
            if j < 1 or j > n + 1:
                good = False
                break
            if j == n + 1:
                shapes[r, n] = 1
                n += 1
            else:
                if j >= 2 and shapes[r, j - 2] == shapes[r, j - 1]:
                    good = False
                    break
                shapes[r, j - 1] += 1
        if not good:
            for i in range(width):
                shapes[r, i] = 0
        ok[r] = good
    return shapes, ok


@_jit
def lattice_mask(words):
    """Per-row lattice-permutation mask."""
    rows, length = words.shape
    out = np.zeros(rows, np.bool_)
    if length == 0:
        for r in range(rows):
            out[r] = True
        return out
    top = np.int64(1)
    for r in range(rows):
        for k in range(length):
            if words[r, k] > top:
                top = words[r, k]
    counts = np.zeros(top + 1, np.int64)
    for r in range(rows):
        for i in range(top + 1):
            counts[i] = 0
        good = True
        for k in range(length):
            v = words[r, k]
            counts[v - 1] += 1
            if v > 1 and counts[v - 1] > counts[v - 2]:
                good = False
                break
        out[r] = good
    return out


@_jit
def content_mask(words, target):
    """Per-row mask: the multiset of letters equals ``target`` (count of letter i at i-1)."""
    rows, length = words.shape
    t = target.size
    out = np.zeros(rows, np.bool_)
    counts = np.zeros(t + 1, np.int64)
    for r in range(rows):
        for i in range(t + 1):
            counts[i] = 0
        good = True
        for k in range(length):
            v = words[r, k]
            if v > t:
                good = False
                break
            counts[v - 1] += 1
        if good:
            for i in range(t):
                if counts[i] != target[i]:
                    good = False
                    break
        out[r] = good
    return out


@_jit
def highest_mask(words):
    """Per-row mask: no raising operator applies (every i-signature cancels all minuses).

    Mirrors the signature rule: scanning left to right, a letter i+1 cancels the
    nearest open i on its left; a row survives only if no i+1 ever arrives with
    nothing open.
    """
    rows, length = words.shape
    out = np.zeros(rows, np.bool_)
    for r in range(rows):
        top = np.int64(1)
        for k in range(length):
            if words[r, k] > top:
                top = words[r, k]
        good = True
        for i in range(1, top):
            open_plus = 0
            for k in range(length):
                v = words[r, k]
                if v == i:
                    open_plus += 1
                elif v == i + 1:
                    if open_plus > 0:
                        open_plus -= 1
                    else:
                        good = False
                        break
            if not good:
                break
        out[r] = good
    return out


@_jit
def letter_counts(words, nletters):
    """Per-row letter histogram over the alphabet 1..nletters."""
    rows, length = words.shape
    out = np.zeros((rows, nletters), np.int64)
    for r in range(rows):
        for k in range(length):
            out[r, words[r, k] - 1] += 1
    return out


@_jit
def enumerate_fillings(left, up, m, letters):
    """All cell fillings over the alphabet 1..letters subject to neighbor bounds.

    Cells are indexed in row-major order; ``left[k]`` / ``up[k]`` hold the index
    of the neighboring cell (or -1).  The bound encodes both tableau families:
    letters 1..m behave like unbarred entries (weak along rows, strict down
    columns), letters m+1..letters like barred ones (strict along rows, weak
    down columns).  Classical semistandard fillings are the m == letters case.

    Output rows appear in lexicographic order of the entry vectors.
    """
    n = left.size
    if n == 0:
        return np.zeros((1, 0), np.int64)
    e = np.zeros(n, np.int64)
    out = np.empty((64, n), np.int64)
    cnt = 0
    k = 0
    e[0] = 1
    while k >= 0:
        if e[k] > letters:
            k -= 1
            if k >= 0:
                e[k] += 1
            continue
        if k == n - 1:
            if cnt == out.shape[0]:
                grown = np.empty((2 * out.shape[0], n), np.int64)
                grown[:cnt] = out
                out = grown
            out[cnt] = e
            cnt += 1
            e[k] += 1
            continue
        k += 1
        lb = np.int64(1)
        l = left[k]
        if l >= 0:
            v = e[l]
            w = v + 1 if v > m else v
            if w > lb:
                lb = w
        u = up[k]
        if u >= 0:
            v = e[u]
            w = v + 1 if v <= m else v
            if w > lb:
                lb = w
        e[k] = lb
    return out[:cnt].copy()


@_jit
def enumerate_bijections(dom_leq, cod_leq, rank_a):
    """All bijections between two indexed cell sets that respect both orders.

    Position i of the assignment is the i-th domain cell in the inverse-side
    total order; ``rank_a`` ranks codomain cells in the forward-side total
    order.  A candidate image c at position i survives when, against every
    earlier assignment (j, c'):

    * componentwise-comparable domain cells map to order-compatible ranks, and
    * a codomain cell componentwise below an earlier one never gets the later
      preimage (the partial inverse must respect assignment order).

    Both conditions are pairwise and only ever get harder, so pruning on them
    is exact.  Output rows appear in lexicographic order of the assignment.
    """
    n = rank_a.size
    if n == 0:
        return np.zeros((1, 0), np.int64)
    perm = np.full(n, -1, np.int64)
    used = np.zeros(n, np.bool_)
    out = np.empty((8, n), np.int64)
    cnt = 0
    pos = 0
    cand = 0
    while pos >= 0:
        found = -1
        c = cand
        while c < n:
            if not used[c]:
                ok = True
                for j in range(pos):
                    cp = perm[j]
                    if dom_leq[pos, j] and rank_a[c] > rank_a[cp]:
                        ok = False
                        break
                    if dom_leq[j, pos] and rank_a[cp] > rank_a[c]:
                        ok = False
                        break
                    if cod_leq[c, cp]:
                        ok = False
                        break
                if ok:
                    found = c
                    break
            c += 1
        if found == -1:
            pos -= 1
            if pos >= 0:
                cand = perm[pos] + 1
                used[perm[pos]] = False
                perm[pos] = -1
            continue
        perm[pos] = found
        used[found] = True
        if pos == n - 1:
            if cnt == out.shape[0]:
                grown = np.empty((2 * out.shape[0], n), np.int64)
                grown[:cnt] = out
                out = grown
            out[cnt] = perm
            cnt += 1
            used[found] = False
            perm[pos] = -1
            cand = found + 1
            continue
        pos += 1
        cand = 0
    return out[:cnt].copy()
