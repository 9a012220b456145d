"""Tableaux over ordered alphabets and SSYT enumeration.

A Tableau is an immutable filling of a Diagram. Entries may be positive
integers, labeled integers, variable ids or exponents; anything with a total
order works for the SSYT predicate.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, NamedTuple

from errors import BindingMismatch, ShapeMismatch
from shapes import Cell, Diagram, Partition, SkewShape, WingedLayout, arm_body, star_offsets, star_shape

logger = logging.getLogger(__name__)


class Labeled(NamedTuple):
    """k_l: letter k carrying occurrence label l. Orders lexicographically."""

    k: int
    l: int

    def __str__(self) -> str:
        return f"{self.k}_{self.l}"


@dataclass(frozen=True)
class Tableau:
    entries: tuple[tuple[Cell, Any], ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted((((int(r), int(c)), e) for (r, c), e in self.entries), key=lambda item: item[0]))
        cells = [cell for cell, _ in ordered]
        if len(set(cells)) != len(cells):
            raise ShapeMismatch("a tableau holds one entry per cell")
        object.__setattr__(self, "entries", ordered)

    @classmethod
    def from_mapping(cls, mapping: Mapping[Cell, Any]) -> "Tableau":
        return cls(tuple(mapping.items()))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]]) -> "Tableau":
        """Rows top to bottom; None marks a cell outside the diagram."""
        return cls(tuple(
            ((i, j), entry)
            for i, row in enumerate(rows, 1)
            for j, entry in enumerate(row, 1)
            if entry is not None
        ))

    @cached_property
    def mapping(self) -> dict[Cell, Any]:
        return dict(self.entries)

    @cached_property
    def diagram(self) -> Diagram:
        return Diagram(cell for cell, _ in self.entries)

    def cells(self) -> tuple[Cell, ...]:
        return tuple(cell for cell, _ in self.entries)

    def values(self) -> list[Any]:
        return [entry for _, entry in self.entries]

    def __getitem__(self, cell: Cell) -> Any:
        return self.mapping[cell]

    def get(self, cell: Cell, default=None) -> Any:
        return self.mapping.get(cell, default)

    def __contains__(self, cell) -> bool:
        return cell in self.mapping

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[Cell, Any]]:
        return iter(self.entries)

    def rows(self) -> list[list[Any]]:
        """Rows 1..max padded with None from column 1."""
        if not self.entries:
            return []
        last_row = max(r for (r, _), _ in self.entries)
        rows: list[list[Any]] = [[] for _ in range(last_row)]
        for (r, c), entry in self.entries:
            row = rows[r - 1]
            row.extend([None] * (c - len(row)))
            row[c - 1] = entry
        return rows

    def content(self) -> Counter:
        return Counter(self.values())

    def map(self, fn: Callable[[Any], Any]) -> "Tableau":
        return Tableau(tuple((cell, fn(entry)) for cell, entry in self.entries))

    def translate(self, dr: int, dc: int) -> "Tableau":
        return Tableau(tuple(((r + dr, c + dc), e) for (r, c), e in self.entries))

    def replace(self, updates: Mapping[Cell, Any]) -> "Tableau":
        merged = dict(self.mapping)
        merged.update(updates)
        return Tableau.from_mapping(merged)

    def without(self, cell: Cell) -> "Tableau":
        return Tableau(tuple((c, e) for c, e in self.entries if c != cell))

    def restrict(self, cells: Iterable[Cell]) -> "Tableau":
        keep = set(cells)
        return Tableau(tuple((c, e) for c, e in self.entries if c in keep))

    def __str__(self) -> str:
        return " / ".join(
            " ".join("." if e is None else str(e) for e in row) for row in self.rows()
        )


def first_violation(t: Tableau) -> tuple[Cell, str] | None:
    for (r, c), entry in t.entries:
        right = t.get((r, c + 1))
        if right is not None and not entry <= right:
            return (r, c), f"row decreases towards ({r}, {c + 1})"
        below = t.get((r + 1, c))
        if below is not None and not entry < below:
            return (r, c), f"column does not increase towards ({r + 1}, {c})"
    return None


def is_ssyt(t: Tableau) -> bool:
    return first_violation(t) is None


def _column_tail(d: Diagram) -> dict[Cell, int]:
    """Number of consecutive cells strictly below each cell."""
    tail: dict[Cell, int] = {}
    for r, c in reversed(d.cells):
        tail[(r, c)] = tail.get((r + 1, c), -1) + 1 if (r + 1, c) in d else 0
    return tail


def _lower_bound(cell: Cell, filled: dict[Cell, int]) -> int:
    r, c = cell
    bound = 1
    left = filled.get((r, c - 1))
    if left is not None:
        bound = left
    up = filled.get((r - 1, c))
    if up is not None:
        bound = max(bound, up + 1)
    return bound


def enumerate_ssyt(d: Diagram, max_entry: int) -> Iterator[Tableau]:
    """SSYT of d with entries in 1..max_entry, lexicographic on the row-major entry vector."""
    cells = d.cells
    tail = _column_tail(d)
    filled: dict[Cell, int] = {}

    def fill(i: int) -> Iterator[Tableau]:
        if i == len(cells):
            yield Tableau(tuple(filled.items()))
            return
        cell = cells[i]
        for value in range(_lower_bound(cell, filled), max_entry - tail[cell] + 1):
            filled[cell] = value
            yield from fill(i + 1)
        filled.pop(cell, None)

    return fill(0)


def enumerate_ssyt_with_content(d: Diagram, content: Iterable[int]) -> Iterator[Tableau]:
    """SSYT of d whose multiset of entries equals `content`."""
    remaining = Counter(content)
    if sum(remaining.values()) != len(d):
        raise ShapeMismatch(f"content has {sum(remaining.values())} entries for {len(d)} cells")
    letters = sorted(remaining)
    cells = d.cells
    filled: dict[Cell, int] = {}

    def fill(i: int) -> Iterator[Tableau]:
        if i == len(cells):
            yield Tableau(tuple(filled.items()))
            return
        cell = cells[i]
        low = _lower_bound(cell, filled)
        for value in letters:
            if value < low or not remaining[value]:
                continue
            remaining[value] -= 1
            filled[cell] = value
            yield from fill(i + 1)
            remaining[value] += 1
        filled.pop(cell, None)

    return fill(0)


def standard_fillings(d: Diagram) -> Iterator[Tableau]:
    return enumerate_ssyt_with_content(d, range(1, len(d) + 1))


def superstandard(nu: Partition) -> Tableau:
    """Row i filled with i."""
    return Tableau(tuple(((i, j), i) for i, row in enumerate(nu.parts, 1) for j in range(1, row + 1)))


def kostka(shape: Partition | SkewShape | Diagram, content: Iterable[int]) -> int:
    cells = shape if isinstance(shape, Diagram) else shape.cells()
    content = list(content)
    if len(content) != len(cells):
        return 0
    return sum(1 for _ in enumerate_ssyt_with_content(cells, content))


def row_word(t: Tableau) -> tuple:
    """Rows bottom to top, each left to right."""
    return tuple(entry for _, entry in sorted(t.entries, key=lambda item: (-item[0][0], item[0][1])))


# --- exponent tableaux -------------------------------------------------------

Scalar = Fraction | float
Variable = Hashable


def variable_name(var: Variable) -> str:
    """("s", (4, 1)) -> "s_{4,1}"; anything else by str()."""
    if isinstance(var, tuple) and len(var) == 2 and isinstance(var[1], tuple) and len(var[1]) == 2:
        tag, (r, c) = var
        return f"{tag}_{{{r},{c}}}"
    return str(var)


def as_scalar(value: Any) -> Scalar:
    if isinstance(value, float):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class ExponentTableau:
    """Exponent values together with the variable occupying each cell.

    Symmetrization permutes values between variables; `variables` records which
    variable sits where so the same permutation can act on several tableaux.
    """

    values: Tableau
    variables: Tableau
    shape: SkewShape | None = None

    def __post_init__(self):
        if self.values.cells() != self.variables.cells():
            raise ShapeMismatch("exponent values and variables must cover the same cells")
        if self.shape is not None and self.shape.cells().cells != self.values.cells():
            raise ShapeMismatch(f"exponents do not fill the skew shape {self.shape}")

    @classmethod
    def from_values(cls, values: Tableau, tag: str = "v", shape: SkewShape | None = None) -> "ExponentTableau":
        values = values.map(as_scalar)
        variables = Tableau(tuple((cell, (tag, cell)) for cell in values.cells()))
        return cls(values, variables, shape)

    @classmethod
    def on_skew(cls, shape: SkewShape, values: Mapping[Cell, Any] | Tableau, tag: str = "v") -> "ExponentTableau":
        tableau = values if isinstance(values, Tableau) else Tableau.from_mapping(values)
        return cls.from_values(tableau, tag, shape)

    @property
    def diagram(self) -> Diagram:
        return self.values.diagram

    @cached_property
    def split(self):
        return arm_body(self.shape) if self.shape is not None else None

    def binding(self) -> dict[Variable, Scalar]:
        binding: dict[Variable, Scalar] = {}
        for (cell, value), (_, var) in zip(self.values, self.variables):
            if var in binding and binding[var] != value:
                raise BindingMismatch(var, f"holds {binding[var]} and {value}")
            binding[var] = value
        return binding

    def body_variables(self) -> list[Variable]:
        """Distinct variables on body cells, in row-major order of first appearance."""
        if self.split is None:
            return []
        seen: dict[Variable, None] = {}
        for cell, var in self.variables:
            if cell in self.split.body:
                seen.setdefault(var, None)
        return list(seen)

    def with_binding(self, binding: Mapping[Variable, Scalar]) -> "ExponentTableau":
        try:
            values = Tableau(tuple((cell, binding[var]) for cell, var in self.variables))
        except KeyError as e:
            raise BindingMismatch(e.args[0], "no value bound") from None
        return ExponentTableau(values, self.variables, self.shape)

    def translate(self, dr: int, dc: int) -> "ExponentTableau":
        return ExponentTableau(self.values.translate(dr, dc), self.variables.translate(dr, dc))

    def __str__(self) -> str:
        return str(self.values)


def _merge(parts: Iterable[Tableau]) -> Tableau:
    merged: dict[Cell, Any] = {}
    for part in parts:
        for cell, entry in part:
            if cell in merged:
                raise ShapeMismatch(f"pieces overlap at {cell}")
            merged[cell] = entry
    return Tableau.from_mapping(merged)


def star_tableau(s: Tableau, t: Tableau, mu: Partition, nu: Partition) -> Tableau:
    """S * T on mu*nu: S below, T to the right of the empty rectangle."""
    if s.cells() != mu.cells().cells or t.cells() != nu.cells().cells:
        raise ShapeMismatch("star placement expects tableaux of shapes mu and nu")
    (sr, sc), (tr, tc) = star_offsets(mu, nu)
    return _merge([s.translate(sr, sc), t.translate(tr, tc)])


def star_exponents(s: ExponentTableau, t: ExponentTableau, mu: Partition, nu: Partition) -> ExponentTableau:
    values = star_tableau(s.values, t.values, mu, nu)
    variables = star_tableau(s.variables, t.variables, mu, nu)
    shared = set(s.variables.values()) & set(t.variables.values())
    if shared:
        raise BindingMismatch(next(iter(shared)), "appears in both factors")
    return ExponentTableau(values, variables, star_shape(mu, nu))


def winged_tableau(layout: WingedLayout, alpha: Tableau, delta: Tableau, beta: Tableau) -> Tableau:
    """Place three piece tableaux (in their own coordinates) onto the composed diagram."""
    for name, piece, tableau in (("alpha", layout.alpha, alpha), ("delta", layout.delta, delta),
                                 ("beta", layout.beta, beta)):
        if tableau.cells() != piece.cells:
            raise ShapeMismatch(f"{name} tableau does not fill its piece")
    return _merge([
        alpha.translate(*layout.alpha_shift),
        delta.translate(*layout.delta_shift),
        beta.translate(*layout.beta_shift),
    ])


def winged_exponents(layout: WingedLayout, a: ExponentTableau, v: ExponentTableau,
                     b: ExponentTableau) -> ExponentTableau:
    shared = (set(a.variables.values()) & set(v.variables.values())) | \
             (set(b.variables.values()) & set(v.variables.values())) | \
             (set(a.variables.values()) & set(b.variables.values()))
    if shared:
        raise BindingMismatch(next(iter(shared)), "appears in more than one piece")
    return ExponentTableau(
        winged_tableau(layout, a.values, v.values, b.values),
        winged_tableau(layout, a.variables, v.variables, b.variables),
    )
