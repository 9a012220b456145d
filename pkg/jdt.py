"""Jeu de taquin: elementary slides, slides, rectification with cell tracking."""
import enum
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

from errors import NoNeighbor, NotInsideCorner, NotSemistandard, ShapeError, ShapeMismatch
from knuth import label_off, phi_t
from shapes import Cell, Partition, SkewShape, WingedLayout, winged_layout
from tableaux import ExponentTableau, Tableau, first_violation, winged_tableau

logger = logging.getLogger(__name__)


class CornerPolicy(enum.Enum):
    LOWEST_RIGHT = "lowest-right"
    TOP_LEFT = "top-left"


class _Dot:
    """The hole travelling through a slide."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "DOT"

    def __reduce__(self):
        return (_Dot, ())


DOT = _Dot()


@dataclass(frozen=True)
class RectResult:
    rectified: Tableau
    rho: tuple[tuple[Cell, Cell], ...]

    @cached_property
    def mapping(self) -> dict[Cell, Cell]:
        return dict(self.rho)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rectified.rows()))


@dataclass(frozen=True)
class SlideTrace:
    corner: Cell
    holes: tuple[Cell, ...]
    steps: tuple[Tableau, ...]
    result: Tableau


def _skew_of(t: Tableau) -> SkewShape:
    try:
        return t.diagram.as_skew()
    except ShapeError as e:
        raise ShapeMismatch(f"slides need a skew-shaped tableau: {e}") from e


def inside_corners(t: Tableau) -> list[Cell]:
    """Corners of the inner shape, top to bottom."""
    inner = _skew_of(t).inner
    return [
        (i, inner.part(i))
        for i in range(1, len(inner) + 1)
        if inner.part(i + 1) < inner.part(i)
    ]


def elementary_slide(t: Tableau, hole: Cell) -> tuple[Tableau, Cell]:
    r, c = hole
    below = t.get((r + 1, c))
    right = t.get((r, c + 1))
    if below is not None and (right is None or below <= right):
        target = (r + 1, c)
    elif right is not None:
        target = (r, c + 1)
    else:
        raise NoNeighbor(hole)
    return t.replace({hole: t[target], target: DOT}), target


def slide_trace(t: Tableau, inside_corner: Cell) -> SlideTrace:
    if inside_corner not in inside_corners(t):
        raise NotInsideCorner(inside_corner)
    current = t.replace({inside_corner: DOT})
    hole = inside_corner
    holes = [hole]
    steps = [current]
    while True:
        try:
            current, hole = elementary_slide(current, hole)
        except NoNeighbor:
            break
        holes.append(hole)
        steps.append(current)
    result = current.without(hole)
    logger.debug("slide from %s ended at %s", inside_corner, hole)
    return SlideTrace(inside_corner, tuple(holes), tuple(steps), result)


def slide(t: Tableau, inside_corner: Cell) -> Tableau:
    return slide_trace(t, inside_corner).result


def _pick_corner(corners: list[Cell], policy: CornerPolicy) -> Cell:
    return corners[-1] if policy is CornerPolicy.LOWEST_RIGHT else corners[0]


def jeu_de_taquin_trace(t: Tableau, policy: CornerPolicy = CornerPolicy.LOWEST_RIGHT) -> tuple[Tableau, tuple[Cell, ...]]:
    """Slide until normal; returns the rectified tableau and the corners used."""
    used = []
    while corners := inside_corners(t):
        corner = _pick_corner(corners, policy)
        t = slide(t, corner)
        used.append(corner)
    return t, tuple(used)


@lru_cache(maxsize=65536)
def _rectify_distinct(t: Tableau, policy: CornerPolicy) -> RectResult:
    origin = {entry: cell for cell, entry in t}
    rectified, _ = jeu_de_taquin_trace(t, policy)
    rho = tuple(sorted((origin[entry], cell) for cell, entry in rectified))
    return RectResult(rectified, rho)


def rectify(t: Tableau, policy: CornerPolicy = CornerPolicy.LOWEST_RIGHT) -> RectResult:
    violation = first_violation(t)
    if violation is not None:
        raise NotSemistandard(*violation)
    if all(isinstance(entry, int) for entry in t.values()):
        lifted = _rectify_distinct(phi_t(t), policy)
        return RectResult(label_off(lifted.rectified), lifted.rho)
    seen = set()
    for cell, entry in t:
        if entry in seen:
            raise NotSemistandard(cell, "tracking needs pairwise distinct entries")
        seen.add(entry)
    return _rectify_distinct(t, policy)


def transport_exponents(v: ExponentTableau, rect: RectResult) -> ExponentTableau:
    """v_L: the entry of v at c moves to rho(c)."""
    if set(v.values.cells()) != set(rect.mapping):
        raise ShapeMismatch("exponent tableau and rectification have different source cells")
    rho = rect.mapping
    values = Tableau(tuple((rho[cell], value) for cell, value in v.values))
    variables = Tableau(tuple((rho[cell], var) for cell, var in v.variables))
    return ExponentTableau(values, variables, SkewShape(rect.shape))


def piece_part(layout: WingedLayout, t: Tableau, piece: str) -> Tableau:
    """The entries of t on one piece, in the piece's own coordinates."""
    dr, dc = layout.shift(piece)
    return Tableau(tuple(((r - dr, c - dc), e) for (r, c), e in t if layout.origin[(r, c)][0] == piece))


def rectify_winged(layout: WingedLayout, t: Tableau) -> tuple[WingedLayout, Tableau, RectResult]:
    """Rectify the middle piece of a winged tableau, keeping both wings in place."""
    rect = rectify(piece_part(layout, t, "delta"))
    target = winged_layout(layout.alpha, layout.l0, rect.shape.cells(), layout.l1, layout.beta)
    composed = winged_tableau(
        target,
        piece_part(layout, t, "alpha"),
        rect.rectified,
        piece_part(layout, t, "beta"),
    )
    return target, composed, rect
