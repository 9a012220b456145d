"""JSON wire formats for shapes, tableaux, LR tables and verification reports."""
import json
from fractions import Fraction
from typing import Any

from errors import InputError, ShapeError, TableauError
from exact import RadicalSum
from jdt import RectResult
from lr import LRTable
from shapes import Diagram, Partition, SkewShape
from tableaux import ExponentTableau, Labeled, Tableau, as_scalar, variable_name
from zeta import DomainReport, VerificationReport


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2)


# --- decoding ----------------------------------------------------------------


def parse_int(value: Any, location: str) -> int:
    if isinstance(value, bool):
        raise InputError(f"expected an integer, got {value!r}", location)
    if isinstance(value, int):
        return value
    try:
        return int(str(value).strip())
    except ValueError:
        raise InputError(f"expected an integer, got {value!r}", location) from None


def parse_partition(value: Any, location: str = "partition") -> Partition:
    """"7,3,1,1", [7, 3, 1, 1] or "" / [] for the empty partition."""
    if value is None:
        return Partition()
    if isinstance(value, str):
        items = [item for item in value.replace(" ", "").split(",") if item != ""]
    elif isinstance(value, (list, tuple)):
        items = list(value)
    else:
        raise InputError(f"expected a comma list or an array, got {value!r}", location)
    parts = tuple(parse_int(item, f"{location} part {i}") for i, item in enumerate(items, 1))
    try:
        return Partition(parts)
    except ShapeError as e:
        raise InputError(str(e), location) from None


def parse_skew(value: Any, location: str = "shape") -> SkewShape:
    """"outer/inner", "outer", or {"outer": [...], "inner": [...]}."""
    if isinstance(value, dict):
        outer = parse_partition(value.get("outer"), f"{location} outer")
        inner = parse_partition(value.get("inner"), f"{location} inner")
    elif isinstance(value, str):
        if value.count("/") > 1:
            raise InputError("at most one '/' separates outer and inner", location)
        outer_text, _, inner_text = value.partition("/")
        outer = parse_partition(outer_text, f"{location} outer")
        inner = parse_partition(inner_text, f"{location} inner")
    else:
        outer = parse_partition(value, location)
        inner = Partition()
    try:
        return SkewShape(outer, inner)
    except ShapeError as e:
        raise InputError(str(e), location) from None


def parse_diagram(value: Any, location: str = "diagram") -> Diagram:
    """An array of [row, col] pairs, or any shape accepted by parse_skew."""
    if isinstance(value, list) and value and isinstance(value[0], (list, tuple)):
        cells = []
        for i, pair in enumerate(value, 1):
            if len(pair) != 2:
                raise InputError(f"expected [row, col], got {pair!r}", f"{location} cell {i}")
            cells.append((parse_int(pair[0], f"{location} cell {i} row"), parse_int(pair[1], f"{location} cell {i} col")))
        return Diagram(cells)
    if value is None or value == []:
        return Diagram()
    return parse_skew(value, location).cells()


def parse_scalar(value: Any, location: str):
    if isinstance(value, bool):
        raise InputError(f"expected a number, got {value!r}", location)
    if isinstance(value, float):
        return value
    try:
        return as_scalar(value if isinstance(value, int) else str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"expected an integer, 'p/q' or a float, got {value!r}", location) from None


def parse_entry(value: Any, location: str):
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise InputError(f"a labeled entry is [k, l], got {value!r}", location)
        return Labeled(parse_int(value[0], location), parse_int(value[1], location))
    return parse_int(value, location)


def _rows(value: Any, location: str) -> list:
    rows = value.get("rows") if isinstance(value, dict) else value
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise InputError("expected an array of rows", location)
    return rows


def parse_tableau(value: Any, location: str = "tableau") -> Tableau:
    """{"rows": [[null, 2], [1, 3], [2]]}; null marks a cell outside the diagram.

    Entries are all plain integers or all labeled [k, l] pairs.
    """
    t = Tableau(tuple(
        ((i, j), parse_entry(entry, f"{location} row {i}, column {j}"))
        for i, row in enumerate(_rows(value, location), 1)
        for j, entry in enumerate(row, 1)
        if entry is not None
    ))
    kinds = {isinstance(entry, Labeled) for entry in t.values()}
    if len(kinds) > 1:
        cell = next(cell for cell, entry in t.entries if isinstance(entry, Labeled))
        raise InputError(f"labeled entry at {cell} mixed with plain integers", location)
    return t


def parse_exponents(value: Any, cells: Diagram, tag: str = "v", shape: SkewShape | None = None,
                    location: str = "exponents") -> ExponentTableau:
    values = Tableau(tuple(
        ((i, j), parse_scalar(entry, f"{location} row {i}, column {j}"))
        for i, row in enumerate(_rows(value, location), 1)
        for j, entry in enumerate(row, 1)
        if entry is not None
    ))
    missing = [cell for cell in cells if cell not in values]
    if missing:
        raise InputError(f"no exponent for cell {missing[0]}", location)
    extra = [cell for cell in values.cells() if cell not in cells]
    if extra:
        raise InputError(f"cell {extra[0]} lies outside the diagram", location)
    return ExponentTableau.from_values(values, tag, shape)


# --- encoding ----------------------------------------------------------------


def encode_partition(p: Partition) -> list[int]:
    return list(p.parts)


def encode_diagram(d: Diagram) -> list[list[int]]:
    return [[r, c] for r, c in d.cells]


def encode_scalar(x: Any) -> Any:
    if isinstance(x, RadicalSum):
        x = x.simplify()
        if isinstance(x, RadicalSum):
            return str(x)
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def encode_entry(e: Any) -> Any:
    if e is None:
        return None
    if isinstance(e, Labeled):
        return [e.k, e.l]
    if isinstance(e, (Fraction, RadicalSum, float)):
        return encode_scalar(e)
    if isinstance(e, int):
        return e
    return variable_name(e)


def encode_shape(d: Diagram) -> Any:
    try:
        shape = d.as_skew()
    except TableauError:
        return encode_diagram(d)
    return str(shape)


def encode_tableau(t: Tableau) -> dict:
    return {"shape": encode_shape(t.diagram), "rows": [[encode_entry(e) for e in row] for row in t.rows()]}


def encode_exponents(e: ExponentTableau) -> dict:
    return {
        "values": encode_tableau(e.values),
        "variables": [[variable_name(v) if v is not None else None for v in row] for row in e.variables.rows()],
    }


def encode_rect_result(rect: RectResult) -> dict:
    return {
        "rectified": encode_tableau(rect.rectified),
        "rho": [[list(src), list(dst)] for src, dst in rect.rho],
    }


def encode_lr_table(table: LRTable) -> dict:
    body: dict[str, Any] = {"mu": encode_partition(table.mu)}
    if table.nu is not None:
        body["nu"] = encode_partition(table.nu)
        body["entries"] = [{"lambda": encode_partition(p), "coeff": c} for p, c in table]
    else:
        body["lambda"] = encode_partition(table.outer) if table.outer is not None else None
        body["entries"] = [{"nu": encode_partition(p), "coeff": c} for p, c in table]
    return body


def encode_domain(domain: DomainReport) -> dict:
    return {
        "satisfied": domain.satisfied,
        "violations": [{"cell": list(cell), "requirement": req} for cell, req in domain.violations],
    }


def encode_report(report: VerificationReport) -> dict:
    body = {
        "theorem": report.theorem,
        "lhs": encode_scalar(report.lhs),
        "rhs": encode_scalar(report.rhs),
        "equal": report.equal,
        "truncation": report.truncation,
        "arithmetic": report.arithmetic.value,
        "lr_table": encode_lr_table(report.lr_table),
        "per_nu": [
            {"nu": encode_partition(item.nu), "coeff": item.coeff, "value": encode_scalar(item.value)}
            for item in report.per_nu
        ],
        "orbit_size": report.orbit_size,
        "ledger_balance": encode_scalar(report.ledger_balance),
        "ledger_terms": report.ledger_terms,
        "domain": encode_domain(report.domain),
        "notes": list(report.notes),
    }
    if report.factorization is not None:
        body["factorization"] = {
            "product": encode_scalar(report.factorization.product),
            "star": encode_scalar(report.factorization.star),
            "equal": report.factorization.equal,
        }
        body["exempt_from_arms"] = list(report.exempt_from_arms)
        body["exempt_from_formula"] = list(report.exempt_from_formula)
    return body
