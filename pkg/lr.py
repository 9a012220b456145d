"""Littlewood-Richardson coefficients by rectification fibers, by mu*nu fibers
and by Schur polynomial products, plus the sets G and U."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from sympy import ZZ
from sympy.polys.rings import PolyElement, ring

from errors import EmptyFiber, ShapeError
from jdt import rectify, transport_exponents
from shapes import Diagram, Partition, SkewShape, partitions_of, partitions_within, star_shape
from tableaux import (
    ExponentTableau,
    enumerate_ssyt,
    enumerate_ssyt_with_content,
    standard_fillings,
    superstandard,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LRTable:
    """Coefficients c[lambda] of a product s_mu s_nu, or c[nu] of a skew expansion of outer/mu."""

    mu: Partition
    entries: tuple[tuple[Partition, int], ...]
    nu: Partition | None = None
    outer: Partition | None = None

    def __post_init__(self):
        kept = tuple(sorted(((p, c) for p, c in self.entries if c), key=lambda item: item[0], reverse=True))
        object.__setattr__(self, "entries", kept)

    def coeff(self, p: Partition) -> int:
        return dict(self.entries).get(p, 0)

    def partitions(self) -> list[Partition]:
        return [p for p, _ in self.entries]

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[Partition, int]]:
        return iter(self.entries)


def _fiber_count(cells: Diagram, target: Partition) -> int:
    m = superstandard(target)
    content = m.values()
    return sum(1 for t in enumerate_ssyt_with_content(cells, content) if rectify(t).rectified == m)


@lru_cache(maxsize=4096)
def lr_coeff_rect(lam: Partition, mu: Partition, nu: Partition) -> int:
    """#{L in SSYT(lam/mu) : Rect(L) = M} for the superstandard M of shape nu."""
    if not lam.contains(mu):
        raise ShapeError(f"{mu} is not contained in {lam}")
    if lam.weight() - mu.weight() != nu.weight() or not lam.contains(nu):
        return 0
    return _fiber_count(SkewShape(lam, mu).cells(), nu)


def _could_hold(lam: Partition, mu: Partition, nu: Partition) -> bool:
    return (lam.contains(mu) and lam.contains(nu)
            and len(lam) <= len(mu) + len(nu) and lam.part(1) <= mu.part(1) + nu.part(1))


@lru_cache(maxsize=4096)
def lr_coeff_star(lam: Partition, mu: Partition, nu: Partition) -> int:
    """#{M in SSYT(mu*nu) : Rect(M) = L} for the superstandard L of shape lam."""
    if lam.weight() != mu.weight() + nu.weight() or not _could_hold(lam, mu, nu):
        return 0
    return _fiber_count(star_shape(mu, nu).cells(), lam)


@lru_cache(maxsize=32)
def _ring(k: int):
    return ring(",".join(f"x{i}" for i in range(1, k + 1)), ZZ)[0]


def schur_poly(shape: SkewShape | Partition | Diagram, k: int) -> PolyElement:
    if isinstance(shape, Partition):
        return _schur_of_partition(shape, k)
    return _schur_of_cells(shape if isinstance(shape, Diagram) else shape.cells(), k)


@lru_cache(maxsize=2048)
def _schur_of_partition(lam: Partition, k: int) -> PolyElement:
    return _schur_of_cells(lam.cells(), k)


def _schur_of_cells(cells: Diagram, k: int) -> PolyElement:
    counts: dict[tuple[int, ...], int] = {}
    for t in enumerate_ssyt(cells, k):
        monomial = [0] * k
        for entry in t.values():
            monomial[entry - 1] += 1
        key = tuple(monomial)
        counts[key] = counts.get(key, 0) + 1
    return _ring(k).from_dict(counts)


def schur_expand(poly: PolyElement, k: int) -> dict[Partition, int]:
    """Write a symmetric polynomial in k variables as a combination of Schur polynomials.

    The lex-leading monomial of a symmetric polynomial has a partition as its
    exponent; subtracting that multiple of s_lambda strictly lowers the leading term.
    """
    remainder = poly
    coefficients: dict[Partition, int] = {}
    while remainder:
        monomial, coeff = remainder.LT
        lam = Partition(tuple(monomial))
        coefficients[lam] = coefficients.get(lam, 0) + int(coeff)
        remainder = remainder - schur_poly(lam, k) * coeff
    return coefficients


@lru_cache(maxsize=1024)
def _product_expansion(mu: Partition, nu: Partition) -> dict[Partition, int]:
    k = max(len(mu) + len(nu), 1)
    return schur_expand(schur_poly(mu, k) * schur_poly(nu, k), k)


def lr_coeff_poly(lam: Partition, mu: Partition, nu: Partition) -> int:
    return _product_expansion(mu, nu).get(lam, 0)


def lr_expand(shape: SkewShape) -> LRTable:
    """G(lam/mu) with multiplicities: every nu with c > 0."""
    size = shape.size()
    entries = tuple(
        (nu, c)
        for nu in partitions_within(size, shape.outer)
        if (c := lr_coeff_rect(shape.outer, shape.inner, nu))
    )
    logger.debug("expansion of %s has %d terms", shape, len(entries))
    return LRTable(mu=shape.inner, entries=entries, outer=shape.outer)


def lr_product_table(mu: Partition, nu: Partition) -> LRTable:
    size = mu.weight() + nu.weight()
    entries = tuple(
        (lam, c)
        for lam in partitions_of(size)
        if lam.contains(mu) and lam.contains(nu) and (c := lr_coeff_rect(lam, mu, nu))
    )
    return LRTable(mu=mu, nu=nu, entries=entries)


def _qualifying(v: ExponentTableau, nu: Partition, full: bool):
    cells = v.shape.cells()
    if full:
        candidates = standard_fillings(cells)
    else:
        candidates = enumerate_ssyt_with_content(cells, superstandard(nu).values()) \
            if nu.weight() == len(cells) else iter(())
    for t in candidates:
        rect = rectify(t)
        if rect.shape == nu:
            yield rect


def u_set(v: ExponentTableau, nu: Partition, full: bool = True) -> frozenset[ExponentTableau]:
    """U_nu(v). With full=False only fillings of superstandard content are used."""
    if v.shape is None:
        raise ShapeError("u_set needs an exponent tableau on a skew shape")
    members = frozenset(transport_exponents(v, rect) for rect in _qualifying(v, nu, full))
    if not members:
        raise EmptyFiber(nu)
    return members


def u_representative(v: ExponentTableau, nu: Partition) -> ExponentTableau:
    """v_L for the first L, in enumeration order, of superstandard content rectifying to shape nu."""
    if v.shape is None:
        raise ShapeError("u_representative needs an exponent tableau on a skew shape")
    for rect in _qualifying(v, nu, full=False):
        return transport_exponents(v, rect)
    raise EmptyFiber(nu)
