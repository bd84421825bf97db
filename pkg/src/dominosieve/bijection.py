"""Structural maps on domino tableaux and the closed-form counters built on them.

Two families live here:

* the 2 x n story: the subset encoding ``phi`` of a tableau of shape (n, n),
  its inverse, the horizontal/vertical split of a subset, reduced subsets and
  the binary-word encoding;
* the general story: the 2-quotient of a shape, the Type I / Type II
  classification of dominoes and the map ``gamma`` to a pair of increasing
  Young tableaux, together with the hook-length counters for rectangles and
  hooks.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Sequence

from dominosieve.combinatorics import binomial, catalan, compositions
from dominosieve.tableaux import (
    Cell,
    Domino,
    DominoTableau,
    Partition,
    as_partition,
    count_tilings,
    rectangle,
)


class InconsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug rather than bad input."""


# ---------------------------------------------------------------------------
# the subset encoding of DT(n, n)


@dataclass(frozen=True)
class SubsetState:
    n: int
    S: frozenset[int]
    H: frozenset[int]
    V: frozenset[int]

    def to_json(self) -> dict:
        return {"n": self.n, "S": sorted(self.S), "H": sorted(self.H), "V": sorted(self.V)}


def _two_row_length(tableau: DominoTableau) -> int:
    shape = tableau.shape
    if len(shape) != 2 or shape[0] != shape[1]:
        raise ValueError(f"expected a 2 x n shape (n, n), got {tuple(shape)}")
    return shape[0]


def phi(tableau: DominoTableau) -> SubsetState:
    """Bottom horizontal labels, topped up with the smallest vertical labels."""
    n = _two_row_length(tableau)
    bottoms = frozenset(d.label for d in tableau.dominoes if d.orient == "H" and d.row == 2)
    verticals = sorted(d.label for d in tableau.dominoes if d.orient == "V")
    need = n // 2 - len(bottoms)
    if need < 0 or need > len(verticals):
        raise InconsistencyError(f"cannot pad {sorted(bottoms)} to {n // 2} elements")
    padding = frozenset(verticals[:need])
    return SubsetState(n, bottoms | padding, bottoms, padding)


def _check_subset(n: int, S: Sequence[int]) -> list[int]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    s = sorted(set(S))
    if len(s) != len(S):
        raise ValueError(f"repeated elements in {list(S)}")
    if any(x < 1 or x > n for x in s):
        raise ValueError(f"{s} is not a subset of [1, {n}]")
    if len(s) != n // 2:
        raise ValueError(f"subset {s} has {len(s)} elements, expected {n // 2}")
    return s


def hv_split(n: int, S: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Classify each element of ``S`` by the slack s - (2|H_s| + |V_s|)."""
    S = list(S)
    h: list[int] = []
    v: list[int] = []
    for s in _check_subset(n, S):
        slack = s - (2 * len(h) + len(v))
        if slack == 1:
            v.append(s)
        elif slack > 1:
            h.append(s)
        else:
            raise InconsistencyError(f"element {s} of {sorted(S)} has slack {slack} < 1")
    return frozenset(h), frozenset(v)


def tableau_from_bottoms(n: int, bottoms: Iterable[int]) -> DominoTableau:
    """Rebuild the unique tableau of shape (n, n) with the given bottom horizontal labels.

    Labels are read in increasing order as letters V (vertical), T (top
    horizontal) or B (bottom horizontal); ``depth`` counts open stacks. V is
    only possible at depth 0 and B needs depth >= 1. A backward table of
    completable states decides each V/T choice; both being completable would
    contradict uniqueness and is reported as an inconsistency.
    """
    H = set(bottoms)
    if any(h < 1 or h > n for h in H):
        raise ValueError(f"bottom labels {sorted(H)} not within [1, {n}]")
    ok = [[False] * (n + 2) for _ in range(n + 2)]
    ok[n + 1][0] = True
    for m in range(n, 0, -1):
        for d in range(n + 1):
            if m in H:
                ok[m][d] = d >= 1 and ok[m + 1][d - 1]
            else:
                ok[m][d] = ok[m + 1][d + 1] or (d == 0 and ok[m + 1][0])
    if not ok[1][0]:
        raise ValueError(f"no domino tableau of shape ({n}, {n}) has bottom labels {sorted(H)}")

    dominoes = []
    top_col = bottom_col = 1
    depth = 0
    for m in range(1, n + 1):
        if m in H:
            dominoes.append(Domino(m, 2, bottom_col, "H"))
            bottom_col += 2
            depth -= 1
            continue
        if depth == 0:
            as_vertical, as_top = ok[m + 1][0], ok[m + 1][1]
            if as_vertical and as_top:
                raise InconsistencyError(f"label {m} is ambiguous for bottoms {sorted(H)}")
            if as_vertical:
                dominoes.append(Domino(m, 1, top_col, "V"))
                top_col += 1
                bottom_col += 1
                continue
        dominoes.append(Domino(m, 1, top_col, "H"))
        top_col += 2
        depth += 1
    return DominoTableau((n, n), tuple(dominoes))


def phi_inverse(n: int, S: Iterable[int]) -> DominoTableau:
    H, _ = hv_split(n, S)
    return tableau_from_bottoms(n, H)


def reduced_subset(tableau: DominoTableau) -> frozenset[int]:
    return phi(tableau).H


def to_word(tableau: DominoTableau) -> str:
    state = phi(tableau)
    return "".join("0" if i in state.S else "1" for i in range(1, state.n + 1))


def from_word(w: str) -> DominoTableau:
    if any(ch not in "01" for ch in w) or not w:
        raise ValueError(f"not a nonempty binary word: {w!r}")
    zeros = [i for i, ch in enumerate(w, 1) if ch == "0"]
    if len(zeros) != len(w) // 2:
        raise ValueError(f"word {w} has {len(zeros)} zeros, expected {len(w) // 2}")
    return phi_inverse(len(w), zeros)


# ---------------------------------------------------------------------------
# 2-quotient


def _beta_quotients(shape: Sequence[int]) -> tuple[Partition, Partition]:
    """(odd-position quotient, even-position quotient) from the beta-numbers."""
    ell = len(shape)
    L = [part + ell - i for i, part in enumerate(shape, 1)]
    M = [0] * ell
    next_even, next_odd = 0, 1
    for i in range(ell - 1, -1, -1):
        if L[i] % 2 == 0:
            M[i], next_even = next_even, next_even + 2
        else:
            M[i], next_odd = next_odd, next_odd + 2

    def collect(parity: int) -> Partition:
        parts = [(x - y) // 2 for x, y in zip(L, M) if x % 2 == parity]
        return tuple(sorted((p for p in parts if p > 0), reverse=True))

    return collect(1), collect(0)


def _pair_key(p: Partition) -> tuple:
    return (-sum(p), tuple(-x for x in p))


def two_quotient(shape: Sequence[int]) -> tuple[Partition, Partition]:
    """The 2-quotient as an unordered pair, returned larger-first for determinism."""
    shape = as_partition(shape)
    if sum(shape) % 2:
        raise ValueError(f"2-quotient needs a shape of even size, got {shape}")
    a, b = _beta_quotients(shape)
    return tuple(sorted((a, b), key=_pair_key))


# ---------------------------------------------------------------------------
# Type I / Type II and the map gamma


@dataclass(frozen=True)
class TypedDomino:
    domino: Domino
    dtype: str  # "I" or "II"
    even_cell_content: int
    even_cell_row: int


def _content(cell: Cell) -> int:
    return cell[1] - cell[0]


def classify_domino(d: Domino) -> TypedDomino:
    """A vertical domino is Type I iff its top cell has even content; a
    horizontal one iff its right cell does."""
    first, second = d.cells  # (top, bottom) or (left, right)
    key_cell = first if d.orient == "V" else second
    dtype = "I" if _content(key_cell) % 2 == 0 else "II"
    even = first if _content(first) % 2 == 0 else second
    return TypedDomino(d, dtype, _content(even), even[0])


def classify_types(tableau: DominoTableau) -> list[TypedDomino]:
    return [classify_domino(d) for d in tableau.dominoes]


@dataclass(frozen=True)
class IncreasingTableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def labels(self) -> frozenset[int]:
        return frozenset(x for row in self.rows for x in row)

    def violations(self) -> list[str]:
        problems = []
        try:
            as_partition(self.shape)
        except ValueError as exc:
            problems.append(str(exc))
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            problems.append(f"row lengths {[len(r) for r in self.rows]} do not match {self.shape}")
        if len(self.labels) != sum(len(r) for r in self.rows):
            problems.append("repeated entries")
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if j + 1 < len(row) and not x < row[j + 1]:
                    problems.append(f"row {i + 1} not increasing at column {j + 1}")
                if i + 1 < len(self.rows) and j < len(self.rows[i + 1]) and not x < self.rows[i + 1][j]:
                    problems.append(f"column {j + 1} not increasing at row {i + 1}")
        return problems

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}


def _slide(typed: list[TypedDomino]) -> IncreasingTableau:
    by_diag: dict[int, list[tuple[int, int]]] = {}
    for t in typed:
        by_diag.setdefault(t.even_cell_content // 2, []).append((t.even_cell_row, t.domino.label))
    grid: dict[Cell, int] = {}
    for diag, items in by_diag.items():
        items.sort()
        for i, (_, label) in enumerate(items):
            cell = (1 + i, 1 + diag + i) if diag >= 0 else (1 - diag + i, 1 + i)
            grid[cell] = label
    nrows = max((r for r, _ in grid), default=0)
    rows = []
    for r in range(1, nrows + 1):
        width = sum(1 for (rr, _) in grid if rr == r)
        if any((r, c) not in grid for c in range(1, width + 1)):
            raise InconsistencyError(f"row {r} of a gamma image is not left-justified")
        rows.append(tuple(grid[(r, c)] for c in range(1, width + 1)))
    out = IncreasingTableau(tuple(len(r) for r in rows), tuple(rows))
    problems = out.violations()
    if problems:
        raise InconsistencyError(f"gamma produced a non-increasing filling: {problems}")
    return out


def gamma(tableau: DominoTableau) -> tuple[IncreasingTableau, IncreasingTableau]:
    """(Type I image, Type II image). Each domino slides to the diagonal of
    half its even-cell content; ties are stacked top-down by source row."""
    typed = classify_types(tableau)
    return (
        _slide([t for t in typed if t.dtype == "I"]),
        _slide([t for t in typed if t.dtype == "II"]),
    )


# ---------------------------------------------------------------------------
# hook lengths and closed-form counts


def hook_lengths(shape: Sequence[int]) -> dict[Cell, int]:
    shape = as_partition(shape)
    conj = [sum(1 for p in shape if p > c) for c in range(shape[0])] if shape else []
    return {
        (r, c): (shape[r - 1] - c) + (conj[c - 1] - r) + 1
        for r in range(1, len(shape) + 1)
        for c in range(1, shape[r - 1] + 1)
    }


def num_syt(shape: Sequence[int]) -> int:
    hooks = hook_lengths(shape)
    num = factorial(sum(shape))
    den = prod(hooks.values())
    if num % den:
        raise InconsistencyError(f"hook product does not divide |shape|! for {shape}")
    return num // den


@dataclass(frozen=True)
class RectangularCount:
    k: int
    n: int
    f_mu: int
    f_nu: int
    label_splits: int

    @property
    def total(self) -> int:
        return self.f_mu * self.f_nu * self.label_splits


def rectangular_breakdown(k: int, n: int) -> RectangularCount:
    """Factors of #DT(n^(2k)): f for the k x ceil(n/2) and k x floor(n/2)
    rectangles and the number of ways to split the labels between them."""
    if k < 1 or n < 1:
        raise ValueError(f"k and n must be positive, got ({k}, {n})")
    big, small = (n + 1) // 2, n // 2
    return RectangularCount(
        k,
        n,
        num_syt(rectangle(k, big)),
        num_syt(rectangle(k, small)),
        binomial(k * n, k * small),
    )


def count_rectangular(k: int, n: int) -> int:
    """#DT(n^(2k)), via hook lengths."""
    return rectangular_breakdown(k, n).total


def count_rectangular_product_form(k: int, n: int) -> int:
    """The same count written with rising products for the rectangle hooks."""
    big, small = (n + 1) // 2, n // 2

    def rising(i: int, length: int) -> int:
        return prod(range(i, i + length))

    num = factorial(k * big) * factorial(k * small)
    den = prod(rising(i, big) * rising(i, small) for i in range(1, k + 1))
    return num // den * binomial(k * n, k * small)


def count_hook(n: int, m: int) -> int:
    """#DT(n, 1^m) = f of the hook (ceil(n/2), 1^floor(m/2))."""
    if n < 1 or m < 0:
        raise ValueError(f"hook needs n >= 1 and m >= 0, got ({n}, {m})")
    if (n + m) % 2:
        raise ValueError(f"hook (n, 1^m) with n + m odd has no domino tilings: ({n}, {m})")
    a, b = (n + 1) // 2, m // 2
    return factorial(a + b) // ((a + b) * factorial(a - 1) * factorial(b))


def count_hook_printed(n: int, m: int) -> Fraction:
    """The hook count with a product ceil(n/2) * floor(m/2) in the numerator
    factorial; kept only to show that it disagrees with enumeration."""
    a, b = (n + 1) // 2, m // 2
    return Fraction(factorial(a * b), (a + b) * factorial(a - 1) * factorial(b))


def count_via_quotient(shape: Sequence[int]) -> int:
    """#DT(shape) from the 2-quotient: choose the Type II labels, then fill
    both quotient shapes. Zero for shapes admitting no tiling."""
    shape = as_partition(shape)
    if sum(shape) % 2 or count_tilings(shape) == 0:
        return 0
    mu, nu = two_quotient(shape)
    return binomial(sum(shape) // 2, sum(nu)) * num_syt(mu) * num_syt(nu)


# ---------------------------------------------------------------------------
# composition sums for 2 x n


def composition_terms(n: int) -> list[tuple[tuple[int, ...], int]]:
    """(alpha, binom(n - 2j + 1, len(alpha))) for every admissible composition,
    starting with the empty composition."""
    terms = [((), binomial(n + 1, 0))]
    for j in range(1, n // 2 + 1):
        for alpha in compositions(j):
            ell = len(alpha)
            if 2 * j + ell - 1 <= n:
                terms.append((alpha, binomial(n - 2 * j + 1, ell)))
    return terms


def catalan_composition_count(n: int) -> int:
    return sum(mult * prod(catalan(a) for a in alpha) for alpha, mult in composition_terms(n))


def fibonacci_composition_count(n: int) -> int:
    return sum(mult for _, mult in composition_terms(n))
