"""Pure-Python enumeration kernels.

Reference implementation of the functions in ``_kernels.pyx``; the two must
return identical results. Cells of a shape are numbered in row-major order
and sets of cells or poset elements are int bitmasks.

Tilings are lists of ``(row, col, vertical)`` triples, 0-indexed, in the order
the dominoes were placed. Posets are given as ``preds[i]`` = bitmask of the
elements that must precede ``i``.
"""


def _cell_tables(parts):
    offsets, rowof, colof = [], [], []
    total = 0
    for r, width in enumerate(parts):
        offsets.append(total)
        for c in range(width):
            rowof.append(r)
            colof.append(c)
        total += width
    return offsets, rowof, colof, total


def tile_shape(parts):
    """All domino tilings; always cover the first free cell, horizontal first."""
    parts = list(parts)
    offsets, rowof, colof, total = _cell_tables(parts)
    if total % 2:
        return []
    full = (1 << total) - 1
    nrows = len(parts)
    out = []
    placed = []

    def rec(covered):
        if covered == full:
            out.append(list(placed))
            return
        free = ~covered & full
        cell = (free & -free).bit_length() - 1
        r, c = rowof[cell], colof[cell]
        if c + 1 < parts[r] and not (covered >> (cell + 1)) & 1:
            placed.append((r, c, 0))
            rec(covered | (3 << cell))
            placed.pop()
        if r + 1 < nrows and c < parts[r + 1]:
            below = offsets[r + 1] + c
            if not (covered >> below) & 1:
                placed.append((r, c, 1))
                rec(covered | (1 << cell) | (1 << below))
                placed.pop()

    rec(0)
    return out


def count_tilings(parts):
    parts = list(parts)
    offsets, rowof, colof, total = _cell_tables(parts)
    if total % 2:
        return 0
    full = (1 << total) - 1
    nrows = len(parts)
    memo = {full: 1}

    def rec(covered):
        hit = memo.get(covered)
        if hit is not None:
            return hit
        free = ~covered & full
        cell = (free & -free).bit_length() - 1
        r, c = rowof[cell], colof[cell]
        n = 0
        if c + 1 < parts[r] and not (covered >> (cell + 1)) & 1:
            n += rec(covered | (3 << cell))
        if r + 1 < nrows and c < parts[r + 1]:
            below = offsets[r + 1] + c
            if not (covered >> below) & 1:
                n += rec(covered | (1 << cell) | (1 << below))
        memo[covered] = n
        return n

    return rec(0)


def linear_extensions(preds):
    """Every linear extension, as the sequence of elements in placement order."""
    m = len(preds)
    out = []
    order = []

    def rec(done):
        if len(order) == m:
            out.append(tuple(order))
            return
        for i in range(m):
            if not (done >> i) & 1 and preds[i] & ~done == 0:
                order.append(i)
                rec(done | (1 << i))
                order.pop()

    rec(0)
    return out


def count_linear_extensions(preds):
    """Number of linear extensions by dynamic programming over order ideals."""
    m = len(preds)
    layer = {0: 1}
    for _ in range(m):
        nxt = {}
        for done, ways in layer.items():
            for i in range(m):
                if not (done >> i) & 1 and preds[i] & ~done == 0:
                    key = done | (1 << i)
                    nxt[key] = nxt.get(key, 0) + ways
        layer = nxt
    return sum(layer.values())
