"""Worked examples replayed against their published values.

Each example returns (expected, actual) as JSON-ready dicts; `repro` diffs them.
"""
import logging
from typing import Callable

import codec
from errors import UnknownExample
from jdt import rectify, slide_trace, transport_exponents
from knuth import p_tableau, phi_t, phi_w
from lr import lr_expand, lr_product_table
from shapes import Partition, SkewShape, arm_body, star_shape, winged_shape
from tableaux import ExponentTableau, Labeled, Tableau, row_word, variable_name
from zeta import TruncationContext, verify_product_theorem, verify_skew_theorem, verify_winged_theorem

logger = logging.getLogger(__name__)

EXAMPLES: dict[str, Callable[[], tuple[dict, dict]]] = {}


def example(name: str):
    def register(fn):
        EXAMPLES[name] = fn
        return fn
    return register


def _p(*parts: int) -> Partition:
    return Partition(parts)


def _cells(cells) -> list[list[int]]:
    return [list(cell) for cell in cells]


def _names(e: ExponentTableau) -> list[list]:
    return [[variable_name(v) if v is not None else None for v in row] for row in e.variables.rows()]


def _coefficients(table) -> dict[str, int]:
    return {str(p): c for p, c in table}


def _collapsed(shape: SkewShape, body_value: int, arm_values: dict) -> ExponentTableau:
    """Every body cell carries body_value; arm cells take their listed values."""
    values = {cell: arm_values.get(cell, body_value) for cell in shape.cells()}
    return ExponentTableau.on_skew(shape, values)


def _L(k: int, l: int) -> Labeled:
    return Labeled(k, l)


@example("sec31")
def _labeling() -> tuple[dict, dict]:
    t = Tableau.from_rows([[1, 1, 1], [2, 3, 4], [3]])
    shape = SkewShape(_p(6, 3, 3, 1, 1), _p(2, 1))
    split = arm_body(shape)
    source = Tableau.from_rows([
        [None, None, _L(1, 1), _L(2, 4), _L(2, 5), _L(3, 3)],
        [None, _L(2, 2), _L(2, 3)],
        [_L(2, 1), _L(3, 2), _L(4, 2)],
        [_L(3, 1)],
        [_L(4, 1)],
    ])
    expected = {
        "row_word": [3, 2, 3, 4, 1, 1, 1],
        "phi_w": [[3, 1], [2, 1], [3, 2], [4, 1], [1, 1], [1, 2], [1, 3]],
        "phi_t": [[[1, 1], [1, 2], [1, 3]], [[2, 1], [3, 2], [4, 1]], [[3, 1]]],
        "m": 3,
        "n": 3,
        "right_arm": [[1, 5], [1, 6]],
        "left_arm": [[5, 1]],
        "rectified": [
            [[1, 1], [2, 2], [2, 3], [2, 4], [2, 5], [3, 3]],
            [[2, 1], [3, 2], [4, 2]],
            [[3, 1]],
            [[4, 1]],
        ],
    }
    actual = {
        "row_word": list(row_word(t)),
        "phi_w": [codec.encode_entry(x) for x in phi_w(row_word(t))],
        "phi_t": codec.encode_tableau(phi_t(t))["rows"],
        "m": split.m,
        "n": split.n,
        "right_arm": _cells(split.right_arm),
        "left_arm": _cells(split.left_arm),
        "rectified": codec.encode_tableau(rectify(source).rectified)["rows"],
    }
    return expected, actual


@example("fig3")
def _slide() -> tuple[dict, dict]:
    t = Tableau.from_rows([[None, None, None, 6], [None, 2, 4], [2, 3, 5], [5, 5]])
    trace = slide_trace(t, (2, 1))
    expected = {
        "holes": [[2, 1], [3, 1], [3, 2], [4, 2]],
        "result": [[None, None, None, 6], [2, 2, 4], [3, 5, 5], [5]],
    }
    actual = {
        "holes": _cells(trace.holes),
        "result": codec.encode_tableau(trace.result)["rows"],
    }
    return expected, actual


@example("sec32")
def _skew_expansion() -> tuple[dict, dict]:
    shape = SkewShape(_p(7, 3, 1, 1), _p(2, 1))
    small = SkewShape(_p(2, 2, 1), _p(1))
    L = Tableau.from_rows([[None, 2], [1, 3], [2]])
    rect = rectify(L)
    v = ExponentTableau.on_skew(small, {cell: 2 for cell in small.cells()})
    split = arm_body(shape)
    arms = dict(zip(split.right_arm + split.left_arm, (2, 3, 4, 5)))
    report = verify_skew_theorem(shape, _collapsed(shape, 2, arms), TruncationContext(max_entry=2))
    expected = {
        "coefficients": {
            "(7,2)": 1, "(7,1,1)": 1, "(6,3)": 1, "(6,2,1)": 2,
            "(6,1,1,1)": 1, "(5,3,1)": 1, "(5,2,1,1)": 1,
        },
        "phi_t": [[None, [2, 2]], [[1, 1], [3, 1]], [[2, 1]]],
        "p_tableau_2132": [[1, 2], [2, 3]],
        "rectified": [[1, 2], [2, 3]],
        "rho": [[[1, 2], [1, 2]], [[2, 1], [1, 1]], [[2, 2], [2, 2]], [[3, 1], [2, 1]]],
        "v_L": [["v_{2,1}", "v_{1,2}"], ["v_{3,1}", "v_{2,2}"]],
        "right_arm": [[1, 5], [1, 6], [1, 7]],
        "left_arm": [[4, 1]],
        "body_size": 5,
        "verified": True,
        "ledger_balance": 0,
    }
    actual = {
        "coefficients": _coefficients(lr_expand(shape)),
        "phi_t": codec.encode_tableau(phi_t(L))["rows"],
        "p_tableau_2132": codec.encode_tableau(p_tableau((2, 1, 3, 2)))["rows"],
        "rectified": codec.encode_tableau(rect.rectified)["rows"],
        "rho": [[list(src), list(dst)] for src, dst in rect.rho],
        "v_L": _names(transport_exponents(v, rect)),
        "right_arm": _cells(split.right_arm),
        "left_arm": _cells(split.left_arm),
        "body_size": len(split.body),
        "verified": report.equal,
        "ledger_balance": codec.encode_scalar(report.ledger_balance),
    }
    return expected, actual


@example("sec33")
def _product_expansion() -> tuple[dict, dict]:
    mu, nu = _p(2, 2, 1, 1), _p(5, 2)
    star = star_shape(mu, nu)
    s = ExponentTableau.on_skew(SkewShape(mu), {cell: 2 for cell in mu.cells()}, tag="s")
    t = ExponentTableau.on_skew(SkewShape(nu), {cell: 2 for cell in nu.cells()}, tag="t")
    report = verify_product_theorem(mu, nu, s, t, TruncationContext(max_entry=2))
    expected = {
        "star_shape": "7,4,2,2,1,1/2,2",
        "coefficients": {
            "(7,4,1,1)": 1, "(7,3,2,1)": 1, "(6,4,2,1)": 1, "(6,4,1,1,1)": 1,
            "(6,3,2,2)": 1, "(6,3,2,1,1)": 2, "(6,3,1,1,1,1)": 1, "(6,2,2,2,1)": 1,
            "(6,2,2,1,1,1)": 1, "(5,4,2,1,1)": 1, "(5,3,2,2,1)": 1, "(5,2,2,2,1,1)": 1,
            "(7,3,1,1,1)": 1, "(7,2,2,1,1)": 1, "(5,3,2,1,1,1)": 1,
        },
        "exempt": ["s_{4,1}", "t_{1,4}", "t_{1,5}"],
        "verified": True,
    }
    actual = {
        "star_shape": str(star),
        "coefficients": _coefficients(lr_product_table(mu, nu)),
        "exempt": list(report.exempt_from_arms),
        "verified": report.equal,
    }
    return expected, actual


@example("sec4")
def _winged() -> tuple[dict, dict]:
    big = winged_shape(
        Partition((2, 2, 1)).cells(), 1, Partition((4, 4, 2)).cells(), 2,
        SkewShape(_p(4, 3, 3), _p(2, 1)).cells(),
    )
    shape = SkewShape(_p(5, 2, 1, 1), _p(2, 1))
    alpha = _p(2, 1).cells()
    beta = SkewShape(_p(3, 3), _p(2)).cells()
    split = arm_body(shape)
    arms = dict(zip(split.right_arm + split.left_arm, (3, 4, 5)))
    a = ExponentTableau.from_values(Tableau.from_mapping({cell: 2 for cell in alpha}), tag="a")
    b = ExponentTableau.from_values(Tableau.from_mapping({cell: 2 for cell in beta}), tag="b")
    report = verify_winged_theorem(alpha, beta, 1, 2, shape, a, b, _collapsed(shape, 2, arms),
                                   TruncationContext(max_entry=2))
    expected = {
        "example_diagram": [
            [1, 7], [1, 8], [2, 6], [2, 7], [3, 5], [3, 6], [3, 7],
            [4, 3], [4, 4], [4, 5], [4, 6], [5, 3], [5, 4], [5, 5], [5, 6],
            [6, 1], [6, 2], [6, 3], [6, 4], [7, 1], [7, 2], [8, 1],
        ],
        "coefficients": {"(5,1)": 1, "(4,2)": 1, "(4,1,1)": 2, "(3,2,1)": 1, "(3,1,1,1)": 1},
        "body": [[1, 3], [2, 2], [3, 1]],
        "right_arm": [[1, 4], [1, 5]],
        "left_arm": [[4, 1]],
        "verified": True,
    }
    actual = {
        "example_diagram": codec.encode_diagram(big),
        "coefficients": _coefficients(report.lr_table),
        "body": _cells(sorted(split.body)),
        "right_arm": _cells(split.right_arm),
        "left_arm": _cells(split.left_arm),
        "verified": report.equal,
    }
    return expected, actual


def _diff(expected: dict, actual: dict) -> dict:
    return {
        key: {"expected": expected.get(key), "actual": actual.get(key)}
        for key in sorted(set(expected) | set(actual))
        if expected.get(key) != actual.get(key)
    }


def repro(example_id: str) -> dict:
    if example_id not in EXAMPLES:
        raise UnknownExample(example_id, EXAMPLES)
    expected, actual = EXAMPLES[example_id]()
    diff = _diff(expected, actual)
    if diff:
        logger.warning("example %s differs in %s", example_id, ", ".join(diff))
    else:
        logger.info("example %s reproduced", example_id)
    return {"example": example_id, "expected": expected, "actual": actual, "diff": diff, "passed": not diff}
