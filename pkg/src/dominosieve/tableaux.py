"""Domino tilings and domino tableaux of partition shapes.

Cells are 1-indexed ``(row, col)`` pairs with row 1 on top (English
notation). A domino is anchored at its top-left cell and is either
horizontal (``"H"``, covering the anchor and the cell to its right) or
vertical (``"V"``, covering the anchor and the cell below it).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from dominosieve import kernels
from dominosieve.combinatorics import QPoly

Partition = tuple[int, ...]
Cell = tuple[int, int]

ORIENTATIONS = ("H", "V")


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise a partition; raises ``ValueError`` on bad input."""
    out = tuple(parts)
    for p in out:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"partition parts must be positive integers: {out}")
    for a, b in zip(out, out[1:]):
        if b > a:
            raise ValueError(f"partition parts must be weakly decreasing: {out}")
    return out


def rectangle(rows: int, cols: int) -> Partition:
    """The shape with ``rows`` rows of length ``cols``, i.e. (cols^rows)."""
    if rows < 0 or cols < 0:
        raise ValueError("rectangle dimensions must be nonnegative")
    return (cols,) * rows if cols else ()


def conjugate(shape: Sequence[int]) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > c) for c in range(shape[0]))


def cells(shape: Sequence[int]) -> list[Cell]:
    return [(r, c) for r, width in enumerate(shape, 1) for c in range(1, width + 1)]


def in_shape(shape: Sequence[int], cell: Cell) -> bool:
    r, c = cell
    return 1 <= r <= len(shape) and 1 <= c <= shape[r - 1]


@dataclass(frozen=True, order=True)
class Placement:
    """An unlabeled domino position."""

    row: int
    col: int
    orient: str

    def __post_init__(self):
        if self.orient not in ORIENTATIONS:
            raise ValueError(f"orientation must be 'H' or 'V', got {self.orient!r}")

    @property
    def cells(self) -> tuple[Cell, Cell]:
        if self.orient == "H":
            return (self.row, self.col), (self.row, self.col + 1)
        return (self.row, self.col), (self.row + 1, self.col)


@dataclass(frozen=True)
class Domino:
    label: int
    row: int
    col: int
    orient: str

    def __post_init__(self):
        if self.orient not in ORIENTATIONS:
            raise ValueError(f"orientation must be 'H' or 'V', got {self.orient!r}")

    @property
    def placement(self) -> Placement:
        return Placement(self.row, self.col, self.orient)

    @property
    def cells(self) -> tuple[Cell, Cell]:
        return self.placement.cells

    @property
    def northeast_cell(self) -> Cell:
        # topmost row first, then rightmost column
        return min(self.cells, key=lambda rc: (rc[0], -rc[1]))


@dataclass(frozen=True)
class DominoTiling:
    shape: Partition
    placements: tuple[Placement, ...]


@dataclass(frozen=True)
class DominoTableau:
    """A labeled tiling. ``dominoes`` is kept sorted by label."""

    shape: Partition
    dominoes: tuple[Domino, ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.dominoes, key=lambda d: d.label))
        object.__setattr__(self, "dominoes", ordered)

    @property
    def n(self) -> int:
        return len(self.dominoes)

    @cached_property
    def _by_label(self) -> dict[int, Domino]:
        return {d.label: d for d in self.dominoes}

    def domino(self, label: int) -> Domino:
        return self._by_label[label]

    @cached_property
    def cell_labels(self) -> dict[Cell, int]:
        return {cell: d.label for d in self.dominoes for cell in d.cells}

    @property
    def tiling(self) -> DominoTiling:
        return DominoTiling(self.shape, tuple(sorted(d.placement for d in self.dominoes)))

    def __str__(self) -> str:
        grid = self.cell_labels
        width = max((len(str(v)) for v in grid.values()), default=1)
        lines = []
        for r, length in enumerate(self.shape, 1):
            lines.append(" ".join(str(grid.get((r, c), ".")).rjust(width) for c in range(1, length + 1)))
        return "\n".join(lines)


@dataclass(frozen=True)
class Stacking:
    """A maximal run of ``width`` consecutive stacks starting at column ``start``."""

    start: int
    width: int


# ---------------------------------------------------------------------------
# validation


def validate(tableau: DominoTableau) -> list[str]:
    """Return every violation found; an empty list means the tableau is valid."""
    shape = tableau.shape
    problems: list[str] = []
    try:
        as_partition(shape)
    except ValueError as exc:
        return [f"shape: {exc}"]

    owner: dict[Cell, int] = {}
    for idx, d in enumerate(tableau.dominoes):
        for cell in d.cells:
            if not in_shape(shape, cell):
                problems.append(f"domino {d.label} covers cell {cell} outside the shape")
                continue
            if cell in owner:
                other = tableau.dominoes[owner[cell]].label
                problems.append(f"dominoes {other} and {d.label} overlap at cell {cell}")
                continue
            owner[cell] = idx

    for cell in cells(shape):
        if cell not in owner:
            problems.append(f"cell {cell} is not covered")

    n = sum(shape) // 2
    labels = [d.label for d in tableau.dominoes]
    if sum(shape) % 2:
        problems.append(f"shape {shape} has odd size")
    if sorted(labels) != list(range(1, len(labels) + 1)) or len(labels) != n:
        problems.append(f"labels {sorted(labels)} are not exactly 1..{n}")

    for (r, c), idx in owner.items():
        here = tableau.dominoes[idx]
        for nb, direction in (((r, c + 1), "row"), ((r + 1, c), "column")):
            j = owner.get(nb)
            if j is None or j == idx:
                continue
            there = tableau.dominoes[j]
            if not here.label < there.label:
                problems.append(
                    f"{direction} decrease: {here.label} at {(r, c)} before {there.label} at {nb}"
                )
    return problems


def is_valid(tableau: DominoTableau) -> bool:
    return not validate(tableau)


# ---------------------------------------------------------------------------
# enumeration


def _kernel_parts(shape: Sequence[int]) -> list[int]:
    return list(as_partition(shape))


def enumerate_tilings(shape: Sequence[int]) -> list[DominoTiling]:
    """All domino tilings, in backtracking order (first free cell, horizontal first)."""
    shape = as_partition(shape)
    return [
        DominoTiling(shape, tuple(Placement(r + 1, c + 1, "V" if v else "H") for r, c, v in raw))
        for raw in kernels.tile_shape(list(shape))
    ]


def count_tilings(shape: Sequence[int]) -> int:
    return kernels.count_tilings(_kernel_parts(shape))


def _precedence(tiling: DominoTiling) -> list[int]:
    """preds[i] = bitmask of placements that must carry a smaller label than i."""
    owner = {cell: i for i, p in enumerate(tiling.placements) for cell in p.cells}
    preds = [0] * len(tiling.placements)
    for (r, c), i in owner.items():
        for nb in ((r, c + 1), (r + 1, c)):
            j = owner.get(nb)
            if j is not None and j != i:
                preds[j] |= 1 << i
    return preds


def linear_extensions(tiling: DominoTiling) -> list[DominoTableau]:
    """All labelings of a tiling, sorted by the label sequence in placement order."""
    placements = tiling.placements
    labelings = []
    for order in kernels.linear_extensions(_precedence(tiling)):
        labels = [0] * len(order)
        for pos, i in enumerate(order, 1):
            labels[i] = pos
        labelings.append(tuple(labels))
    labelings.sort()
    return [
        DominoTableau(
            tiling.shape,
            tuple(Domino(lab, p.row, p.col, p.orient) for lab, p in zip(labels, placements)),
        )
        for labels in labelings
    ]


def count_linear_extensions(tiling: DominoTiling) -> int:
    return kernels.count_linear_extensions(_precedence(tiling))


def iter_tableaux(shape: Sequence[int]) -> Iterator[DominoTableau]:
    for tiling in enumerate_tilings(shape):
        yield from linear_extensions(tiling)


def enumerate_tableaux(shape: Sequence[int]) -> list[DominoTableau]:
    return list(iter_tableaux(shape))


def count_tableaux(shape: Sequence[int]) -> int:
    """#DT(shape) by brute force: linear extensions counted tiling by tiling."""
    return sum(count_linear_extensions(t) for t in enumerate_tilings(shape))


# ---------------------------------------------------------------------------
# statistics


def _require_two_row(shape: Sequence[int]) -> int:
    if len(shape) != 2 or shape[0] != shape[1]:
        raise ValueError(f"expected a 2 x n shape (n, n), got {tuple(shape)}")
    return shape[0]


def stackings(tableau: DominoTableau) -> list[Stacking]:
    """Maximal runs of vertically aligned horizontal pairs, left to right."""
    _require_two_row(tableau.shape)
    tops = sorted(d.col for d in tableau.dominoes if d.orient == "H" and d.row == 1)
    runs: list[Stacking] = []
    for col in tops:
        if runs and runs[-1].start + 2 * runs[-1].width == col:
            runs[-1] = Stacking(runs[-1].start, runs[-1].width + 1)
        else:
            runs.append(Stacking(col, 1))
    return runs


def descent_set(tableau: DominoTableau) -> frozenset[int]:
    rows = [tableau.domino(i).northeast_cell[0] for i in range(1, tableau.n + 1)]
    return frozenset(i for i in range(1, tableau.n) if rows[i] > rows[i - 1])


def maj(tableau: DominoTableau) -> int:
    return sum(descent_set(tableau))


def maj_polynomial(shape: Sequence[int]) -> QPoly:
    counts: dict[int, int] = {}
    for t in iter_tableaux(shape):
        m = maj(t)
        counts[m] = counts.get(m, 0) + 1
    if not counts:
        return QPoly()
    return QPoly([counts.get(i, 0) for i in range(max(counts) + 1)])


# ---------------------------------------------------------------------------
# JSON interchange


def tableau_to_json(tableau: DominoTableau) -> dict:
    return {
        "shape": list(tableau.shape),
        "dominoes": [
            {"label": d.label, "row": d.row, "col": d.col, "orient": d.orient}
            for d in tableau.dominoes
        ],
    }


def tableau_from_json(obj: dict) -> DominoTableau:
    """Parse the interchange form. Structural problems raise ``ValueError``;
    whether the filling is a valid tableau is left to :func:`validate`."""
    try:
        shape = tuple(obj["shape"])
        dominoes = tuple(
            Domino(int(d["label"]), int(d["row"]), int(d["col"]), str(d["orient"]))
            for d in obj["dominoes"]
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed domino tableau: {exc}") from exc
    return DominoTableau(shape, dominoes)
