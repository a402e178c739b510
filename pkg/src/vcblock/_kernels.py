"""Bitmask kernels for exact vertex cover and blocking-set tables.

Vertex sets are integer bitmasks. Under numba the masks are int64, so the
jitted path takes graphs with at most ``MAX_JIT_VERTICES`` vertices; larger
inputs run the same bodies as plain Python on Python ints (see ``PURE``).
"""

from __future__ import annotations

import types

import numpy as np

from ._accel import HAVE_NUMBA, MAX_JIT_VERTICES, njit


@njit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit
def _low_bit_index(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@njit
def _min_cover(adj, n, alive, limit):
    """Smallest cover of G[alive] with fewer than ``limit`` vertices.

    Returns ``(size, mask)``; ``size == limit`` means no such cover exists.
    """
    cover = alive & 0
    cnt = 0
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if not (alive >> v) & 1:
                continue
            nb = adj[v] & alive
            if nb == 0:
                alive &= ~(1 << v)
                changed = True
            elif nb & (nb - 1) == 0:
                u = _low_bit_index(nb)
                cover |= 1 << u
                cnt += 1
                alive &= ~((1 << u) | (1 << v))
                changed = True
    if cnt >= limit:
        return limit, alive & 0
    if alive == 0:
        return cnt, cover

    # greedy matching lower bound, and the branch vertex
    used = alive & 0
    lb = 0
    bv = -1
    bdeg = -1
    for v in range(n):
        if not (alive >> v) & 1:
            continue
        nb = adj[v] & alive
        d = _popcount(nb)
        if d > bdeg:
            bdeg = d
            bv = v
        if (used >> v) & 1:
            continue
        free = nb & ~used
        if free:
            u = _low_bit_index(free)
            used |= (1 << u) | (1 << v)
            lb += 1
    if cnt + lb >= limit:
        return limit, alive & 0

    best = limit
    best_mask = alive & 0
    s1, m1 = _min_cover(adj, n, alive & ~(1 << bv), limit - cnt - 1)
    if s1 < limit - cnt - 1:
        best = cnt + 1 + s1
        best_mask = cover | (1 << bv) | m1
        if s1 + 1 == lb:
            return best, best_mask
    nb = adj[bv] & alive
    k = _popcount(nb)
    if cnt + k < best:
        s2, m2 = _min_cover(adj, n, alive & ~nb & ~(1 << bv), best - cnt - k)
        if s2 < best - cnt - k:
            best = cnt + k + s2
            best_mask = cover | nb | m2
    return best, best_mask


@njit
def _has_cover_within(adj, n, alive, k):
    """True iff G[alive] has a cover of size at most ``k``."""
    if k < 0:
        return False
    s, _ = _min_cover(adj, n, alive, k + 1)
    return s <= k


@njit
def _forced_mask(adj, n, opt):
    """Vertices lying in every minimum cover."""
    full = (1 << n) - 1
    forced = full & 0
    for v in range(n):
        nb = adj[v]
        rest = full & ~nb & ~(1 << v)
        if not _has_cover_within(adj, n, rest, opt - _popcount(nb)):
            forced |= 1 << v
    return forced


@njit
def _blocking_table(adj, n, opt, free_ids, max_size):
    """Largest minimal blocking set using only ``free_ids``.

    Masks over the free vertices are visited in numeric order, so every
    one-smaller subset is decided first. A set with a blocking one-smaller
    subset is blocking but not minimal; otherwise one decision call settles it.
    Sets larger than ``max_size`` are skipped. Returns ``(size, vertex_mask)``.
    """
    f = len(free_ids)
    full = (1 << n) - 1
    table = np.zeros(1 << f, dtype=np.bool_)
    best = 0
    best_mask = full & 0
    for s in range(1, 1 << f):
        k = _popcount(s)
        if k > max_size:
            continue
        sub_blocking = False
        t = s
        while t:
            low = t & -t
            if table[s ^ low]:
                sub_blocking = True
                break
            t ^= low
        if sub_blocking:
            table[s] = True
            continue
        y = full & 0
        t = s
        while t:
            low = t & -t
            y |= 1 << free_ids[_low_bit_index(low)]
            t ^= low
        if not _has_cover_within(adj, n, full & ~y, opt - k):
            table[s] = True
            if k > best:
                best = k
                best_mask = y
    return best, best_mask


def _plain_copies(names):
    """Plain-Python kernels whose calls to each other also stay plain.

    ``py_func`` alone is not enough under numba: its body still calls the
    compiled helpers, which reject Python ints wider than 64 bits.
    """
    ns = dict(globals())
    out = {}
    for name in names:
        fn = globals()[name].py_func
        out[name] = types.FunctionType(fn.__code__, ns, fn.__name__, fn.__defaults__, fn.__closure__)
    ns.update(out)
    return out


PURE = _plain_copies(
    ("_popcount", "_low_bit_index", "_min_cover", "_has_cover_within", "_forced_mask", "_blocking_table")
)


def _as_kernel_args(masks):
    n = len(masks)
    if HAVE_NUMBA and n <= MAX_JIT_VERTICES:
        return np.array(masks, dtype=np.int64), n, True
    return list(masks), n, False


def min_cover_masks(masks, limit=None):
    """Minimum cover of the graph given by neighbour masks.

    Returns ``(size, cover_mask)`` or ``None`` when every cover has at least
    ``limit`` vertices.
    """
    adj, n, jit = _as_kernel_args(masks)
    lim = n + 1 if limit is None else int(limit)
    if lim <= 0:
        return None
    alive = (1 << n) - 1
    if jit:
        s, m = _min_cover(adj, n, np.int64(alive), lim)
    else:
        s, m = PURE["_min_cover"](adj, n, alive, lim)
    if s >= lim:
        return None
    return int(s), int(m)


def forced_vertices_mask(masks, opt):
    adj, n, jit = _as_kernel_args(masks)
    if jit:
        return int(_forced_mask(adj, n, opt))
    return int(PURE["_forced_mask"](adj, n, opt))


def blocking_table(masks, opt, free_ids, max_size):
    adj, n, jit = _as_kernel_args(masks)
    if jit:
        s, m = _blocking_table(adj, n, opt, np.array(free_ids, dtype=np.int64), max_size)
    else:
        s, m = PURE["_blocking_table"](adj, n, opt, list(free_ids), max_size)
    return int(s), int(m)
