"""Hot kernels: exhaustive order search and pairwise crossing counts.

Two interchangeable backends supply the same two entry points
(``count_gap_crossings``, ``search_orders``):

* ``numba``: the scalar loops below compiled with ``numba.njit``
  (picked by default whenever numba imports),
* ``python``: the same search loop interpreted, with the pairwise
  crossing tests swapped for vectorized numpy expressions.

Selection happens once at import from the ``LEVELPLAN_BACKEND``
environment variable (``auto``, ``numba`` or ``python``). Both backends
enumerate in the same order and count budget identically, so verdicts,
witnesses and extension counts agree bit for bit;
``benchmarks/bench_kernels.py`` measures the gap between them.
"""

from __future__ import annotations

import os

import numpy as np

ENV_VAR = "LEVELPLAN_BACKEND"

SEARCH_NONPLANAR = 0
SEARCH_PLANAR = 1
SEARCH_BUDGET = 2


def _resolve_backend() -> str:
    raw = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
    if raw == "auto":
        try:
            import numba  # noqa: F401
        except ImportError:
            return "python"
        return "numba"
    if raw in ("numba", "python"):
        return raw
    raise RuntimeError(f"{ENV_VAR} must be 'auto', 'numba' or 'python', got {raw!r}")


# --- scalar kernels (numba-compatible) ---------------------------------

def _count_gap_crossings_scalar(lo_pos, hi_pos):
    # Edges i, j between one level gap cross iff their endpoint orders
    # disagree; edges sharing an endpoint never count.
    total = 0
    m = lo_pos.shape[0]
    for i in range(m):
        for j in range(i + 1, m):
            if lo_pos[i] == lo_pos[j] or hi_pos[i] == hi_pos[j]:
                continue
            if (lo_pos[i] < lo_pos[j]) != (hi_pos[i] < hi_pos[j]):
                total += 1
    return total


def _gap_is_clean_scalar(lo_idx, hi_idx, pos_lo, pos_hi):
    m = lo_idx.shape[0]
    for i in range(m):
        for j in range(i + 1, m):
            if lo_idx[i] == lo_idx[j] or hi_idx[i] == hi_idx[j]:
                continue
            if (pos_lo[lo_idx[i]] < pos_lo[lo_idx[j]]) != (
                pos_hi[hi_idx[i]] < pos_hi[hi_idx[j]]
            ):
                return False
    return True


def _next_permutation(a):
    # In-place lexicographic successor; False once a is the last one.
    i = a.shape[0] - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = a.shape[0] - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    lo = i + 1
    hi = a.shape[0] - 1
    while lo < hi:
        a[lo], a[hi] = a[hi], a[lo]
        lo += 1
        hi -= 1
    return True


def _search_impl(widths, level_off, gap_off, edge_lo, edge_hi, budget):
    """Level-by-level backtracking over per-level permutations.

    Levels ascend; the candidate orders of one level are the
    lexicographic permutations of its id-sorted vertices. A prefix is
    abandoned as soon as the freshly placed level crosses the one below
    it. Every placement of a permutation costs one budget unit.

    Returns (status, extensions_used, flat_permutations); the flat array
    holds one block of local vertex indices per level and is only
    meaningful on SEARCH_PLANAR.
    """
    nlev = widths.shape[0]
    total = level_off[nlev]
    perm = np.zeros(total, np.int64)
    pos = np.zeros(total, np.int64)
    used = 0
    j = 0
    fresh = True
    while True:
        base = level_off[j]
        w = widths[j]
        if fresh:
            for t in range(w):
                perm[base + t] = t
                pos[base + t] = t
            fresh = False
        else:
            if not _next_permutation(perm[base:base + w]):
                j -= 1
                if j < 0:
                    return SEARCH_NONPLANAR, used, perm
                continue
            for t in range(w):
                pos[base + perm[base + t]] = t
        used += 1
        if used > budget:
            return SEARCH_BUDGET, used, perm
        ok = True
        if j > 0:
            g0 = gap_off[j - 1]
            g1 = gap_off[j]
            ok = _gap_is_clean(
                edge_lo[g0:g1],
                edge_hi[g0:g1],
                pos[level_off[j - 1]:base],
                pos[base:base + w],
            )
        if ok:
            if j == nlev - 1:
                return SEARCH_PLANAR, used, perm
            j += 1
            fresh = True


# --- numpy variants of the leaf kernels --------------------------------

def _count_gap_crossings_numpy(lo_pos, hi_pos):
    if lo_pos.shape[0] < 2:
        return 0
    independent = (lo_pos[:, None] != lo_pos[None, :]) & (
        hi_pos[:, None] != hi_pos[None, :]
    )
    flipped = (lo_pos[:, None] < lo_pos[None, :]) != (
        hi_pos[:, None] < hi_pos[None, :]
    )
    return int(np.count_nonzero(np.triu(independent & flipped, 1)))


def _gap_is_clean_numpy(lo_idx, hi_idx, pos_lo, pos_hi):
    if lo_idx.shape[0] < 2:
        return True
    a = pos_lo[lo_idx]
    b = pos_hi[hi_idx]
    independent = (a[:, None] != a[None, :]) & (b[:, None] != b[None, :])
    flipped = (a[:, None] < a[None, :]) != (b[:, None] < b[None, :])
    return not bool(np.any(np.triu(independent & flipped, 1)))


# --- backend binding ----------------------------------------------------

BACKEND = _resolve_backend()

if BACKEND == "numba":
    from numba import njit

    _jit = njit(cache=True)
    count_gap_crossings = _jit(_count_gap_crossings_scalar)
    # _search_impl resolves these globals at compile time, so rebind
    # them to their compiled forms before compiling the driver.
    _gap_is_clean = _jit(_gap_is_clean_scalar)
    _next_permutation = _jit(_next_permutation)
    search_orders = _jit(_search_impl)
else:
    count_gap_crossings = _count_gap_crossings_numpy
    _gap_is_clean = _gap_is_clean_numpy
    search_orders = _search_impl
