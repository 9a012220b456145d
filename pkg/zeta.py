"""Truncated Schur multiple zeta values and exact verification of the
skew, product and winged expansion identities."""
import enum
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, partial
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from sympy.utilities.iterables import multiset_permutations

from errors import ArithmeticModeError, BindingMismatch, InputError, ShapeMismatch, WingConditionViolated
from exact import RadicalSum, exact_reciprocal
from jdt import rectify, rectify_winged, transport_exponents
from lr import LRTable, lr_expand, lr_product_table, u_representative
from shapes import Cell, Diagram, Partition, SkewShape, check_w4, star_shape, winged_layout
from tableaux import (
    ExponentTableau,
    Tableau,
    Variable,
    enumerate_ssyt,
    is_ssyt,
    star_exponents,
    variable_name,
    winged_exponents,
)

logger = logging.getLogger(__name__)

__all__ = [
    "Arithmetic", "TruncationContext", "DomainMode", "DomainReport", "ZetaTerm", "NuContribution",
    "FactorizationCheck", "VerificationReport", "ExponentTableau", "weight", "reciprocal_weight",
    "zeta_truncated", "values_equal", "check_domain", "body_binding", "body_orbit", "orbit_size",
    "stabilizer_size",
    "symmetrized_sum", "ledger", "verify_skew_theorem", "verify_product_theorem",
    "verify_winged_theorem",
]


class Arithmetic(enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


@dataclass(frozen=True)
class TruncationContext:
    max_entry: int
    arithmetic: Arithmetic = Arithmetic.EXACT
    tolerance: float = 1e-12
    workers: int = 1

    def __post_init__(self):
        if self.max_entry < 1:
            raise InputError(f"must be at least 1, got {self.max_entry}", location="max_entry")
        if self.arithmetic is Arithmetic.FLOAT and not self.tolerance > 0:
            raise InputError(f"must be positive, got {self.tolerance}", location="tolerance")
        if self.workers < 1:
            raise InputError(f"must be at least 1, got {self.workers}", location="workers")

    def zero(self):
        return 0.0 if self.arithmetic is Arithmetic.FLOAT else Fraction(0)


class DomainMode(enum.Enum):
    STRICT = "strict"
    ARM_RELAXED = "arm-relaxed"


@dataclass(frozen=True)
class DomainReport:
    violations: tuple[tuple[Cell, str], ...] = ()

    @property
    def satisfied(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class ZetaTerm:
    coeff: int
    shape: Diagram
    exponents: ExponentTableau


@dataclass(frozen=True)
class NuContribution:
    nu: Partition
    coeff: int
    value: Any


@dataclass(frozen=True)
class FactorizationCheck:
    product: Any
    star: Any
    equal: bool


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    lhs: Any
    rhs: Any
    equal: bool
    truncation: int
    arithmetic: Arithmetic
    lr_table: LRTable
    per_nu: tuple[NuContribution, ...]
    orbit_size: int
    ledger_balance: Any
    ledger_terms: int
    domain: DomainReport = field(default_factory=DomainReport)
    factorization: FactorizationCheck | None = None
    exempt_from_arms: tuple[str, ...] = ()
    exempt_from_formula: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()


# --- single evaluations ------------------------------------------------------


def _is_integral(x) -> bool:
    return not isinstance(x, float) and Fraction(x).denominator == 1


def weight(m: Tableau, e: ExponentTableau) -> Fraction | float:
    """M^e = prod of entry**exponent."""
    if m.cells() != e.values.cells():
        raise ShapeMismatch("tableau and exponents fill different cells")
    exponents = e.values.values()
    if all(_is_integral(x) for x in exponents):
        return math.prod((Fraction(k) ** int(x) for k, x in zip(m.values(), exponents)), start=Fraction(1))
    return math.prod(float(k) ** float(x) for k, x in zip(m.values(), exponents))


def _reciprocal(entries: Sequence[int], exponents: Sequence, arithmetic: Arithmetic):
    if arithmetic is Arithmetic.FLOAT:
        return 1.0 / math.prod(float(k) ** float(x) for k, x in zip(entries, exponents))
    if all(_is_integral(x) for x in exponents):
        return Fraction(1) / math.prod((Fraction(k) ** int(x) for k, x in zip(entries, exponents)), start=Fraction(1))
    return exact_reciprocal(zip(entries, (Fraction(x) for x in exponents)))


def _check_exponents(exponents: Iterable, arithmetic: Arithmetic) -> None:
    if arithmetic is Arithmetic.EXACT and any(isinstance(x, float) for x in exponents):
        raise ArithmeticModeError("float exponents need float arithmetic with an explicit tolerance")


def reciprocal_weight(m: Tableau, e: ExponentTableau, arithmetic: Arithmetic = Arithmetic.EXACT):
    """1 / M^e, exact (Fraction or RadicalSum) or float."""
    if m.cells() != e.values.cells():
        raise ShapeMismatch("tableau and exponents fill different cells")
    exponents = e.values.values()
    _check_exponents(exponents, arithmetic)
    return _reciprocal(m.values(), exponents, arithmetic)


@lru_cache(maxsize=256)
def _tableaux(cells: tuple[Cell, ...], max_entry: int) -> tuple[Tableau, ...]:
    return tuple(enumerate_ssyt(Diagram(cells), max_entry))


def _simplify(value):
    return value.simplify() if isinstance(value, RadicalSum) else value


def zeta_truncated(shape: Diagram, e: ExponentTableau, ctx: TruncationContext):
    """Sum of 1/M^e over SSYT M of the shape with entries at most ctx.max_entry."""
    if shape.cells != e.values.cells():
        raise ShapeMismatch("exponent tableau does not fill the diagram")
    exponents = e.values.values()
    _check_exponents(exponents, ctx.arithmetic)
    total = ctx.zero()
    for m in _tableaux(shape.cells, ctx.max_entry):
        total = total + _reciprocal(m.values(), exponents, ctx.arithmetic)
    return _simplify(total)


def values_equal(a, b, ctx: TruncationContext) -> bool:
    if ctx.arithmetic is Arithmetic.FLOAT:
        return math.isclose(float(a), float(b), rel_tol=ctx.tolerance)
    return a == b


def check_domain(e: ExponentTableau, mode: DomainMode = DomainMode.STRICT,
                 relaxed: Iterable[Cell] | None = None) -> DomainReport:
    """Corners need exponent > 1 in both modes. Strict lets every other cell have >= 1;
    arm-relaxed allows >= 1 only on arm cells (or `relaxed`) and asks > 1 elsewhere."""
    corners = set(e.diagram.corners())
    if relaxed is None:
        relaxed = e.split.arms if e.split is not None else ()
    relaxed = set(relaxed)
    violations = []
    for cell, value in e.values:
        x = float(value)
        if cell in corners or (mode is DomainMode.ARM_RELAXED and cell not in relaxed):
            if not x > 1:
                violations.append((cell, "> 1"))
        elif not x >= 1:
            violations.append((cell, ">= 1"))
    return DomainReport(tuple(violations))


# --- body orbit --------------------------------------------------------------


def body_binding(exponent_tableaux: Iterable[ExponentTableau], body: Sequence[Variable],
                 binding: Mapping[Variable, Any] | None = None) -> dict[Variable, Any]:
    """One variable -> value map shared by every tableau."""
    merged: dict[Variable, Any] = dict(binding or {})
    for e in exponent_tableaux:
        for var, value in e.binding().items():
            if var in merged and merged[var] != value:
                raise BindingMismatch(var, f"bound to {merged[var]} but a term holds {value}")
            merged[var] = value
    for var in body:
        if var not in merged:
            raise BindingMismatch(var, "body variable has no value")
    return merged


def orbit_size(binding: Mapping[Variable, Any], body: Sequence[Variable]) -> int:
    """Order of the symmetric group on the body, |body|!."""
    return math.factorial(len(body))


def stabilizer_size(binding: Mapping[Variable, Any], body: Sequence[Variable]) -> int:
    """Permutations of the body fixing its values; each distinct arrangement stands for this many."""
    counts = Counter(binding[var] for var in body)
    return math.prod(math.factorial(c) for c in counts.values())


def body_orbit(binding: Mapping[Variable, Any], body: Sequence[Variable]) -> Iterator[dict[Variable, Any]]:
    """Every distinct rearrangement of the body values among the body variables."""
    values = [binding[var] for var in body]
    distinct = list(dict.fromkeys(values))
    indices = [distinct.index(x) for x in values]
    for arrangement in multiset_permutations(indices):
        permuted = dict(binding)
        permuted.update((var, distinct[i]) for var, i in zip(body, arrangement))
        yield permuted


def _evaluate_terms(terms: Sequence[ZetaTerm], ctx: TruncationContext, binding: Mapping):
    total = ctx.zero()
    for term in terms:
        total = total + term.coeff * zeta_truncated(term.shape, term.exponents.with_binding(binding), ctx)
    return total


def _evaluate_product(factors: Sequence[tuple[Diagram, ExponentTableau]], ctx: TruncationContext,
                      binding: Mapping):
    product = Fraction(1) if ctx.arithmetic is Arithmetic.EXACT else 1.0
    for shape, e in factors:
        product = product * zeta_truncated(shape, e.with_binding(binding), ctx)
    return product


def _orbit_total(fn: Callable[[Mapping], Any], bindings: Iterable[Mapping], ctx: TruncationContext,
                 multiplicity: int = 1):
    total = ctx.zero()
    if ctx.workers > 1:
        with ProcessPoolExecutor(max_workers=ctx.workers) as pool:
            for value in pool.map(fn, bindings):
                total = total + value
    else:
        for b in bindings:
            total = total + fn(b)
    return _simplify(total * multiplicity)


def symmetrized_sum(terms: Sequence[ZetaTerm], body: Sequence[Variable], ctx: TruncationContext,
                    binding: Mapping[Variable, Any] | None = None):
    """Sum over every permutation sigma of the body of sum_i coeff_i * zeta(shape_i, sigma . e_i).

    Distinct arrangements are evaluated once and weighted by the stabilizer of the body values.
    """
    binding = body_binding((t.exponents for t in terms), body, binding)
    return _orbit_total(partial(_evaluate_terms, tuple(terms), ctx), body_orbit(binding, body), ctx,
                        stabilizer_size(binding, body))


def ledger(shape: SkewShape, v: ExponentTableau, ctx: TruncationContext) -> tuple[Any, int]:
    """Sum over L of 1/L^v - 1/Rect(L)^{v_L}; zero when rectification transports weights."""
    balance = ctx.zero()
    count = 0
    for t in _tableaux(shape.cells().cells, ctx.max_entry):
        rect = rectify(t)
        moved = transport_exponents(v, rect)
        balance = balance + reciprocal_weight(t, v, ctx.arithmetic) \
            - reciprocal_weight(rect.rectified, moved, ctx.arithmetic)
        count += 1
    return _simplify(balance), count


# --- verifiers ---------------------------------------------------------------


def _representatives(v: ExponentTableau, table: LRTable,
                     u_choice: Mapping[Partition, ExponentTableau] | None) -> dict[Partition, ExponentTableau]:
    chosen = dict(u_choice or {})
    expected = Counter(v.variables.values())
    reps = {}
    for nu in table.partitions():
        u = chosen.get(nu)
        if u is None:
            u = u_representative(v, nu)
        elif Counter(u.variables.values()) != expected:
            raise BindingMismatch(str(nu), "chosen representative does not carry the variables of v")
        reps[nu] = u
    return reps


def _finish(report: VerificationReport) -> VerificationReport:
    if report.equal:
        logger.info("%s identity holds at N=%d (orbit %d, %d expansion terms)",
                    report.theorem, report.truncation, report.orbit_size, len(report.lr_table))
    else:
        logger.warning("%s identity FAILED at N=%d: lhs=%s rhs=%s",
                       report.theorem, report.truncation, report.lhs, report.rhs)
    if not report.domain.satisfied:
        logger.warning("exponents outside the convergence domain at %s (truncated sums are still finite)",
                       [cell for cell, _ in report.domain.violations])
    return report


def _attach_shape(v: ExponentTableau, shape: SkewShape) -> ExponentTableau:
    if v.shape == shape:
        return v
    return ExponentTableau(v.values, v.variables, shape)


def verify_skew_theorem(shape: SkewShape, v: ExponentTableau, ctx: TruncationContext,
                        u_choice: Mapping[Partition, ExponentTableau] | None = None) -> VerificationReport:
    v = _attach_shape(v, shape)
    table = lr_expand(shape)
    reps = _representatives(v, table, u_choice)
    body = v.body_variables()
    binding = body_binding([v], body)

    lhs = symmetrized_sum([ZetaTerm(1, shape.cells(), v)], body, ctx, binding)
    per_nu = tuple(
        NuContribution(nu, c, symmetrized_sum([ZetaTerm(1, nu.cells(), reps[nu])], body, ctx, binding))
        for nu, c in table
    )
    rhs = _simplify(sum((c.coeff * c.value for c in per_nu), ctx.zero()))
    balance, terms = ledger(shape, v, ctx)
    return _finish(VerificationReport(
        theorem="skew",
        lhs=lhs,
        rhs=rhs,
        equal=values_equal(lhs, rhs, ctx),
        truncation=ctx.max_entry,
        arithmetic=ctx.arithmetic,
        lr_table=table,
        per_nu=per_nu,
        orbit_size=orbit_size(binding, body),
        ledger_balance=balance,
        ledger_terms=terms,
        domain=check_domain(v, DomainMode.ARM_RELAXED),
    ))


def _formula_exempt(mu: Partition, nu: Partition, s: ExponentTableau, t: ExponentTableau) -> set[Variable]:
    mu_c, nu_c = mu.conjugate(), nu.conjugate()
    cells_s = [(i, 1) for i in range(mu_c.part(2) + nu_c.part(1), mu_c.part(1) + 1)]
    cells_t = [(1, j) for j in range(nu.part(2) + mu.part(1), nu.part(1) + 1)]
    exempt = {s.variables.get(cell) for cell in cells_s} | {t.variables.get(cell) for cell in cells_t}
    exempt.discard(None)
    return exempt


def verify_product_theorem(mu: Partition, nu: Partition, s: ExponentTableau, t: ExponentTableau,
                           ctx: TruncationContext,
                           u_choice: Mapping[Partition, ExponentTableau] | None = None) -> VerificationReport:
    if s.values.cells() != mu.cells().cells:
        raise ShapeMismatch(f"s does not fill {mu}")
    if t.values.cells() != nu.cells().cells:
        raise ShapeMismatch(f"t does not fill {nu}")
    star = star_shape(mu, nu)
    st = star_exponents(s, t, mu, nu)

    factor_product = _simplify(zeta_truncated(mu.cells(), s, ctx) * zeta_truncated(nu.cells(), t, ctx))
    factor_star = zeta_truncated(star.cells(), st, ctx)
    factorization = FactorizationCheck(factor_product, factor_star, values_equal(factor_product, factor_star, ctx))

    table = lr_product_table(mu, nu)
    reps = _representatives(st, table, u_choice)
    body = st.body_variables()
    binding = body_binding([st], body)

    product = partial(_evaluate_product, ((mu.cells(), s), (nu.cells(), t)), ctx)
    lhs = _orbit_total(product, body_orbit(binding, body), ctx, stabilizer_size(binding, body))
    per_nu = tuple(
        NuContribution(lam, c, symmetrized_sum([ZetaTerm(1, lam.cells(), reps[lam])], body, ctx, binding))
        for lam, c in table
    )
    rhs = _simplify(sum((c.coeff * c.value for c in per_nu), ctx.zero()))
    balance, terms = ledger(star, st, ctx)

    arms = st.split.arms
    from_arms = {var for cell, var in st.variables if cell in arms}
    from_formula = _formula_exempt(mu, nu, s, t)
    notes = []
    if from_arms != from_formula:
        notes.append("arm cells of mu*nu and the closed exempt formula disagree; the orbit follows the arm cells")
    if not factorization.equal:
        notes.append("factorization through mu*nu failed")

    return _finish(VerificationReport(
        theorem="product",
        lhs=lhs,
        rhs=rhs,
        equal=values_equal(lhs, rhs, ctx) and factorization.equal,
        truncation=ctx.max_entry,
        arithmetic=ctx.arithmetic,
        lr_table=table,
        per_nu=per_nu,
        orbit_size=orbit_size(binding, body),
        ledger_balance=balance,
        ledger_terms=terms,
        domain=check_domain(st, DomainMode.ARM_RELAXED),
        factorization=factorization,
        exempt_from_arms=tuple(sorted(variable_name(var) for var in from_arms)),
        exempt_from_formula=tuple(sorted(variable_name(var) for var in from_formula)),
        notes=tuple(notes),
    ))


def verify_winged_theorem(alpha: Diagram, beta: Diagram, l0: int, l1: int, shape: SkewShape,
                          a: ExponentTableau, b: ExponentTableau, v: ExponentTableau, ctx: TruncationContext,
                          u_choice: Mapping[Partition, ExponentTableau] | None = None) -> VerificationReport:
    if not check_w4(shape, l0, l1):
        raise WingConditionViolated("W4", f"the arms of {shape} are too short for l0={l0}, l1={l1}")
    v = _attach_shape(v, shape)
    layout = winged_layout(alpha, l0, shape.cells(), l1, beta)
    whole = winged_exponents(layout, a, v, b)
    table = lr_expand(shape)
    reps = _representatives(v, table, u_choice)
    body = v.body_variables()
    binding = body_binding([whole], body)

    lhs = symmetrized_sum([ZetaTerm(1, layout.diagram, whole)], body, ctx, binding)
    per_nu = []
    for nu, c in table:
        target = winged_layout(alpha, l0, nu.cells(), l1, beta)
        composed = winged_exponents(target, a, reps[nu], b)
        value = symmetrized_sum([ZetaTerm(1, target.diagram, composed)], body, ctx, binding)
        per_nu.append(NuContribution(nu, c, value))
    rhs = _simplify(sum((item.coeff * item.value for item in per_nu), ctx.zero()))

    balance = ctx.zero()
    terms = 0
    broken = 0
    for t in _tableaux(layout.diagram.cells, ctx.max_entry):
        target, moved, rect = rectify_winged(layout, t)
        if not is_ssyt(moved):
            broken += 1
        moved_exponents = winged_exponents(target, a, transport_exponents(v, rect), b)
        balance = balance + reciprocal_weight(t, whole, ctx.arithmetic) \
            - reciprocal_weight(moved, moved_exponents, ctx.arithmetic)
        terms += 1
    notes = (f"{broken} rectified winged tableaux are not semistandard",) if broken else ()

    arms = {layout.place("delta", cell) for cell in v.split.arms}
    return _finish(VerificationReport(
        theorem="winged",
        lhs=lhs,
        rhs=rhs,
        equal=values_equal(lhs, rhs, ctx),
        truncation=ctx.max_entry,
        arithmetic=ctx.arithmetic,
        lr_table=table,
        per_nu=tuple(per_nu),
        orbit_size=orbit_size(binding, body),
        ledger_balance=_simplify(balance),
        ledger_terms=terms,
        domain=check_domain(whole, DomainMode.ARM_RELAXED, relaxed=arms),
        notes=notes,
    ))
