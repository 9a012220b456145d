"""Partitions, skew shapes and general cell diagrams.

Cells are 1-based (row, col) pairs. A Diagram is any finite cell set; skew
shapes, the product shape mu*nu and winged compositions are all Diagrams.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from errors import ShapeError, WingConditionViolated

logger = logging.getLogger(__name__)

Cell = tuple[int, int]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for i, p in enumerate(parts):
            if p < 0:
                raise ShapeError(f"part {i + 1} is negative ({p})")
            if i and p > parts[i - 1]:
                raise ShapeError(f"part {i + 1} ({p}) exceeds part {i} ({parts[i - 1]})")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def part(self, i: int) -> int:
        """1-based part; zero past the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def length(self) -> int:
        return len(self.parts)

    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))

    def cells(self) -> "Diagram":
        return Diagram((i, j) for i, row in enumerate(self.parts, 1) for j in range(1, row + 1))


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for part in p.parts if part >= j) for j in range(1, p.parts[0] + 1)))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = field(default_factory=Partition)

    def __post_init__(self):
        for i in range(1, len(self.inner) + 1):
            if self.inner.part(i) > self.outer.part(i):
                raise ShapeError(
                    f"inner part {i} ({self.inner.part(i)}) exceeds outer part {i} ({self.outer.part(i)})"
                )

    def __str__(self) -> str:
        if not self.inner.parts:
            return ",".join(map(str, self.outer.parts))
        return ",".join(map(str, self.outer.parts)) + "/" + ",".join(map(str, self.inner.parts))

    @property
    def is_normal(self) -> bool:
        return not self.inner.parts

    def size(self) -> int:
        return self.outer.weight() - self.inner.weight()

    def cells(self) -> "Diagram":
        return Diagram(
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        )


@dataclass(frozen=True, eq=False)
class Diagram:
    """A finite cell set kept in row-major order.

    Equality and hashing are translation invariant: two diagrams are equal when
    they coincide after shifting both to minimal positive coordinates. Use
    `cells` directly where absolute positions matter.
    """

    cells: tuple[Cell, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(sorted(set((int(r), int(c)) for r, c in self.cells))))

    @cached_property
    def cellset(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    def __contains__(self, cell) -> bool:
        return cell in self.cellset

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.normalized().cells == other.normalized().cells

    def __hash__(self) -> int:
        return hash(self.normalized().cells)

    def translate(self, dr: int, dc: int) -> "Diagram":
        return Diagram((r + dr, c + dc) for r, c in self.cells)

    def normalized(self) -> "Diagram":
        if not self.cells:
            return self
        top = min(r for r, _ in self.cells)
        left = min(c for _, c in self.cells)
        if top == 1 and left == 1:
            return self
        return self.translate(1 - top, 1 - left)

    def transpose(self) -> "Diagram":
        return Diagram((c, r) for r, c in self.cells)

    def rows(self) -> dict[int, list[int]]:
        rows: dict[int, list[int]] = {}
        for r, c in self.cells:
            rows.setdefault(r, []).append(c)
        return rows

    def columns(self) -> dict[int, list[int]]:
        cols: dict[int, list[int]] = {}
        for r, c in sorted(self.cells, key=lambda cell: (cell[1], cell[0])):
            cols.setdefault(c, []).append(r)
        return cols

    def is_corner(self, cell: Cell) -> bool:
        r, c = cell
        return cell in self and (r + 1, c) not in self and (r, c + 1) not in self

    def corners(self) -> list[Cell]:
        return [cell for cell in self.cells if self.is_corner(cell)]

    def is_contiguous(self) -> bool:
        runs = list(self.rows().values()) + list(self.columns().values())
        return all(run[-1] - run[0] + 1 == len(run) for run in runs)

    def as_skew(self) -> SkewShape:
        """Recover (outer, inner) for a skew-like diagram anchored at row 1, column 1."""
        if not self.cells:
            return SkewShape(Partition())
        if min(r for r, _ in self.cells) < 1 or min(c for _, c in self.cells) < 1:
            raise ShapeError("skew diagrams need positive coordinates")
        rows = self.rows()
        last = max(rows)
        outer = [0] * last
        inner = [0] * last
        below_extent = 0
        for r in range(last, 0, -1):
            if r in rows:
                inner[r - 1] = rows[r][0] - 1
                outer[r - 1] = rows[r][-1]
                below_extent = outer[r - 1]
            else:
                inner[r - 1] = outer[r - 1] = below_extent
        try:
            shape = SkewShape(Partition(tuple(outer)), Partition(tuple(inner)))
        except ShapeError as e:
            raise ShapeError(f"diagram is not a skew shape: {e}") from e
        if shape.cells().cells != self.cells:
            raise ShapeError("diagram is not a skew shape")
        return shape


def partitions_of(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    largest = n if largest is None else largest

    def build(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in build(remaining - first, first):
                yield (first,) + rest

    for parts in build(n, largest):
        yield Partition(parts)


def partitions_within(n: int, outer: Partition) -> Iterator[Partition]:
    """Partitions of n whose diagram fits inside `outer`."""
    for p in partitions_of(n, outer.part(1)):
        if len(p) <= len(outer) and outer.contains(p):
            yield p


# --- arm / body ------------------------------------------------------------


@dataclass(frozen=True)
class ArmBodySplit:
    right_arm: tuple[Cell, ...]
    left_arm: tuple[Cell, ...]
    body: frozenset[Cell]
    m: int
    n: int

    @property
    def arms(self) -> frozenset[Cell]:
        return frozenset(self.right_arm) | frozenset(self.left_arm)


def arm_body(shape: SkewShape) -> ArmBodySplit:
    lam, mu = shape.outer, shape.inner
    lam_c, mu_c = lam.conjugate(), mu.conjugate()
    m = min(lam.part(2), sum(lam.part(i) - mu.part(i) for i in range(2, len(lam) + 1)))
    n = min(lam_c.part(2), sum(lam_c.part(j) - mu_c.part(j) for j in range(2, len(lam_c) + 1)))
    # Ranges are clipped to cells of the diagram (m = 0 would reach into the inner shape).
    right = tuple((1, j) for j in range(max(m + mu.part(1), mu.part(1) + 1), lam.part(1) + 1))
    left = tuple((i, 1) for i in range(max(n + mu_c.part(1), mu_c.part(1) + 1), lam_c.part(1) + 1))
    body = frozenset(shape.cells().cells) - set(right) - set(left)
    return ArmBodySplit(right_arm=right, left_arm=left, body=body, m=m, n=n)


def check_w4(shape: SkewShape, l0: int, l1: int) -> bool:
    split = arm_body(shape)
    return l0 <= len(split.left_arm) and l1 <= len(split.right_arm)


# --- mu * nu ---------------------------------------------------------------


def star_shape(mu: Partition, nu: Partition) -> SkewShape:
    """mu below and nu to the right of a mu_1 x l(nu) empty rectangle."""
    width, height = mu.part(1), len(nu)
    outer = tuple(width + part for part in nu.parts) + mu.parts
    return SkewShape(Partition(outer), Partition((width,) * height))


def star_offsets(mu: Partition, nu: Partition) -> tuple[Cell, Cell]:
    """Shifts carrying cells of mu and of nu to their place in mu*nu."""
    return (len(nu), 0), (0, mu.part(1))


# --- winged composition ----------------------------------------------------


@dataclass(frozen=True)
class WingedLayout:
    """[alpha |l0 delta |l1 beta] with the shift applied to each piece."""

    diagram: Diagram
    alpha: Diagram
    delta: Diagram
    beta: Diagram
    alpha_shift: Cell
    delta_shift: Cell
    beta_shift: Cell
    l0: int
    l1: int

    def shift(self, piece: str) -> Cell:
        return {"alpha": self.alpha_shift, "delta": self.delta_shift, "beta": self.beta_shift}[piece]

    def place(self, piece: str, cell: Cell) -> Cell:
        dr, dc = self.shift(piece)
        return cell[0] + dr, cell[1] + dc

    def pieces(self) -> Iterator[tuple[str, Diagram]]:
        yield "alpha", self.alpha
        yield "delta", self.delta
        yield "beta", self.beta

    @cached_property
    def origin(self) -> dict[Cell, tuple[str, Cell]]:
        """Composed cell -> (piece name, cell in the piece's own coordinates)."""
        return {self.place(name, cell): (name, cell) for name, piece in self.pieces() for cell in piece}


def _leftmost_column(d: Diagram) -> list[int]:
    cols = d.columns()
    return cols[min(cols)]


def _rightmost_column(d: Diagram) -> list[int]:
    cols = d.columns()
    return cols[max(cols)]


def _top_row(d: Diagram) -> list[int]:
    rows = d.rows()
    return rows[min(rows)]


def _bottom_row(d: Diagram) -> list[int]:
    rows = d.rows()
    return rows[max(rows)]


def winged_layout(alpha: Diagram, l0: int, delta: Diagram, l1: int, beta: Diagram) -> WingedLayout:
    if l0 < 0 or l1 < 0:
        raise WingConditionViolated("W1" if l0 < 0 else "W2", "gluing lengths must be non-negative")
    if not delta.cells:
        raise WingConditionViolated("W3", "the middle piece is empty")
    if (l0 == 0) != (not alpha.cells):
        raise WingConditionViolated("W1", "the left wing is empty exactly when l0 = 0")
    if (l1 == 0) != (not beta.cells):
        raise WingConditionViolated("W2", "the right wing is empty exactly when l1 = 0")

    alpha_shift = beta_shift = (0, 0)
    if l0:
        alpha_col = _rightmost_column(alpha)
        if len(alpha_col) < l0:
            raise WingConditionViolated("W1", f"right-most column of alpha has {len(alpha_col)} < {l0} boxes")
        delta_col = _leftmost_column(delta)
        if len(delta_col) < l0:
            raise WingConditionViolated("W3", f"left-most column of delta has {len(delta_col)} < {l0} boxes")
        alpha_right = max(c for _, c in alpha.cells)
        delta_left = min(c for _, c in delta.cells)
        alpha_shift = (delta_col[-1] - l0 + 1 - alpha_col[0], delta_left - 1 - alpha_right)
    if l1:
        beta_row = _bottom_row(beta)
        if len(beta_row) < l1:
            raise WingConditionViolated("W2", f"bottom row of beta has {len(beta_row)} < {l1} boxes")
        delta_row = _top_row(delta)
        if len(delta_row) < l1:
            raise WingConditionViolated("W3", f"top row of delta has {len(delta_row)} < {l1} boxes")
        beta_bottom = max(r for r, _ in beta.cells)
        delta_top = min(r for r, _ in delta.cells)
        beta_shift = (delta_top - 1 - beta_bottom, delta_row[-1] - l1 + 1 - beta_row[0])

    placed = {
        "alpha": [(r + alpha_shift[0], c + alpha_shift[1]) for r, c in alpha.cells],
        "delta": list(delta.cells),
        "beta": [(r + beta_shift[0], c + beta_shift[1]) for r, c in beta.cells],
    }
    union = [cell for cells in placed.values() for cell in cells]
    if len(set(union)) != len(union):
        raise WingConditionViolated("overlap", "the wings overlap the middle piece or each other")
    top = min(r for r, _ in union)
    left = min(c for _, c in union)
    dr, dc = 1 - top, 1 - left

    layout = WingedLayout(
        diagram=Diagram((r + dr, c + dc) for r, c in union),
        alpha=alpha,
        delta=delta,
        beta=beta,
        alpha_shift=(alpha_shift[0] + dr, alpha_shift[1] + dc),
        delta_shift=(dr, dc),
        beta_shift=(beta_shift[0] + dr, beta_shift[1] + dc),
        l0=l0,
        l1=l1,
    )
    logger.debug("winged layout: %d cells, shifts %s %s %s", len(layout.diagram),
                 layout.alpha_shift, layout.delta_shift, layout.beta_shift)
    return layout


def winged_shape(alpha: Diagram, l0: int, delta: Diagram, l1: int, beta: Diagram) -> Diagram:
    return winged_layout(alpha, l0, delta, l1, beta).diagram
