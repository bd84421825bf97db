# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same contract as ``_pykernels``; shapes and posets are limited to 64 cells
(resp. elements) so that masks fit in a machine word. Counts are returned as
Python ints and never overflow.
"""
from libc.stdint cimport uint64_t

cdef enum:
    MAXCELLS = 64


cdef inline int _lowest_bit(uint64_t x) noexcept nogil:
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


cdef class _Grid:
    cdef int nrows, total
    cdef int parts[MAXCELLS]
    cdef int offsets[MAXCELLS]
    cdef int rowof[MAXCELLS]
    cdef int colof[MAXCELLS]
    cdef uint64_t full

    def __cinit__(self, parts):
        cdef int r, c, total = 0
        if len(parts) > MAXCELLS:
            raise ValueError("shape too large for the compiled kernel")
        self.nrows = len(parts)
        for r in range(self.nrows):
            self.parts[r] = parts[r]
            self.offsets[r] = total
            if total + parts[r] > MAXCELLS:
                raise ValueError("shape too large for the compiled kernel")
            for c in range(parts[r]):
                self.rowof[total + c] = r
                self.colof[total + c] = c
            total += parts[r]
        self.total = total
        self.full = (<uint64_t>0xFFFFFFFFFFFFFFFF) if total == 64 else ((<uint64_t>1 << total) - 1)


cdef int _tile(_Grid g, uint64_t covered, list placed, list out) except -1:
    cdef uint64_t free
    cdef int cell, r, c, below
    if covered == g.full:
        out.append(list(placed))
        return 0
    free = ~covered & g.full
    cell = _lowest_bit(free)
    r = g.rowof[cell]
    c = g.colof[cell]
    if c + 1 < g.parts[r] and not ((covered >> (cell + 1)) & 1):
        placed.append((r, c, 0))
        _tile(g, covered | (<uint64_t>3 << cell), placed, out)
        placed.pop()
    if r + 1 < g.nrows and c < g.parts[r + 1]:
        below = g.offsets[r + 1] + c
        if not ((covered >> below) & 1):
            placed.append((r, c, 1))
            _tile(g, covered | (<uint64_t>1 << cell) | (<uint64_t>1 << below), placed, out)
            placed.pop()
    return 0


def tile_shape(parts):
    g = _Grid(list(parts))
    if g.total % 2:
        return []
    out = []
    _tile(g, 0, [], out)
    return out


cdef object _count(_Grid g, uint64_t covered, dict memo):
    cdef uint64_t free
    cdef int cell, r, c, below
    if covered == g.full:
        return 1
    hit = memo.get(covered)
    if hit is not None:
        return hit
    free = ~covered & g.full
    cell = _lowest_bit(free)
    r = g.rowof[cell]
    c = g.colof[cell]
    n = 0
    if c + 1 < g.parts[r] and not ((covered >> (cell + 1)) & 1):
        n += _count(g, covered | (<uint64_t>3 << cell), memo)
    if r + 1 < g.nrows and c < g.parts[r + 1]:
        below = g.offsets[r + 1] + c
        if not ((covered >> below) & 1):
            n += _count(g, covered | (<uint64_t>1 << cell) | (<uint64_t>1 << below), memo)
    memo[covered] = n
    return n


def count_tilings(parts):
    g = _Grid(list(parts))
    if g.total % 2:
        return 0
    return _count(g, 0, {})


cdef int _extend(int m, uint64_t* preds, uint64_t done, int depth,
                  int* order, list out) except -1:
    cdef int i
    if depth == m:
        out.append(tuple([order[i] for i in range(m)]))
        return 0
    for i in range(m):
        if not ((done >> i) & 1) and (preds[i] & ~done) == 0:
            order[depth] = i
            _extend(m, preds, done | (<uint64_t>1 << i), depth + 1, order, out)
    return 0


def linear_extensions(preds):
    cdef int m = len(preds)
    cdef uint64_t cpreds[MAXCELLS]
    cdef int order[MAXCELLS]
    cdef int i
    if m > MAXCELLS:
        raise ValueError("poset too large for the compiled kernel")
    for i in range(m):
        cpreds[i] = preds[i]
    out = []
    _extend(m, cpreds, 0, 0, order, out)
    return out


def count_linear_extensions(preds):
    cdef int m = len(preds)
    cdef uint64_t cpreds[MAXCELLS]
    cdef uint64_t done, key
    cdef int i, step
    if m > MAXCELLS:
        raise ValueError("poset too large for the compiled kernel")
    for i in range(m):
        cpreds[i] = preds[i]
    cdef dict layer = {0: 1}
    cdef dict nxt
    for step in range(m):
        nxt = {}
        for pyd, ways in layer.items():
            done = pyd
            for i in range(m):
                if not ((done >> i) & 1) and (cpreds[i] & ~done) == 0:
                    key = done | (<uint64_t>1 << i)
                    nxt[key] = nxt.get(key, 0) + ways
        layer = nxt
    return sum(layer.values())
