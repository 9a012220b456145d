import itertools
import math
import random
from fractions import Fraction

import pytest

from errors import ArithmeticModeError, BindingMismatch, InputError, WingConditionViolated
from exact import RadicalSum
from lr import lr_expand, u_set
from shapes import Diagram, Partition, SkewShape, partitions_of, star_shape
from tableaux import ExponentTableau, Tableau, enumerate_ssyt, star_exponents
from zeta import (
    Arithmetic,
    DomainMode,
    TruncationContext,
    ZetaTerm,
    body_orbit,
    check_domain,
    ledger,
    orbit_size,
    reciprocal_weight,
    stabilizer_size,
    symmetrized_sum,
    values_equal,
    verify_product_theorem,
    verify_skew_theorem,
    verify_winged_theorem,
    weight,
    zeta_truncated,
)


def P(*parts):
    return Partition(parts)


def on(shape, *rows, tag="v"):
    return ExponentTableau.on_skew(shape, Tableau.from_rows(rows), tag=tag)


def exact(n):
    return TruncationContext(max_entry=n)


def test_zeta_of_one_box():
    assert zeta_truncated(P(1).cells(), on(SkewShape(P(1)), [2]), exact(3)) == Fraction(49, 36)


def test_zeta_of_a_row():
    assert zeta_truncated(P(2).cells(), on(SkewShape(P(2)), [2, 2]), exact(2)) == Fraction(21, 16)


def test_zeta_of_a_hook():
    assert zeta_truncated(P(2, 1).cells(), on(SkewShape(P(2, 1)), [2, 2], [2]), exact(2)) == Fraction(5, 16)


def test_zeta_with_rational_exponents_is_exact():
    value = zeta_truncated(P(1).cells(), on(SkewShape(P(1)), ["1/2"]), exact(2))
    assert isinstance(value, RadicalSum)
    assert math.isclose(float(value), 1 + 2 ** -0.5)


def test_float_mode_agrees_with_exact_mode():
    shape = SkewShape(P(2, 1))
    e = on(shape, ["3/2", 2], ["5/2"])
    exact_value = zeta_truncated(shape.cells(), e, exact(3))
    float_value = zeta_truncated(shape.cells(), e, TruncationContext(3, Arithmetic.FLOAT, 1e-12))
    assert math.isclose(float(exact_value), float_value, rel_tol=1e-12)


def test_exact_mode_rejects_float_exponents():
    e = ExponentTableau.from_values(Tableau.from_rows([[1.5]]))
    with pytest.raises(ArithmeticModeError):
        zeta_truncated(P(1).cells(), e, exact(2))
    with pytest.raises(ArithmeticModeError):
        reciprocal_weight(Tableau.from_rows([[2]]), e)


def test_truncation_context_validates():
    with pytest.raises(InputError, match="max_entry"):
        TruncationContext(max_entry=0)
    with pytest.raises(InputError, match="tolerance"):
        TruncationContext(max_entry=2, arithmetic=Arithmetic.FLOAT, tolerance=0)


def test_weight():
    e = ExponentTableau.from_values(Tableau.from_rows([[2, 1], [3]]))
    assert weight(Tableau.from_rows([[1, 2], [3]]), e) == 54
    assert reciprocal_weight(Tableau.from_rows([[1, 2], [3]]), e) == Fraction(1, 54)


def test_values_equal_uses_the_tolerance():
    ctx = TruncationContext(2, Arithmetic.FLOAT, 1e-6)
    assert values_equal(1.0, 1.0 + 1e-9, ctx)
    assert not values_equal(Fraction(1), Fraction(1) + Fraction(1, 10 ** 9), exact(2))


def test_check_domain():
    shape = SkewShape(P(2, 1))
    assert check_domain(on(shape, [1, 2], [2])).satisfied
    report = check_domain(on(shape, [2, 1], [2]))
    assert report.violations == (((1, 2), "> 1"),)


def test_check_domain_arm_relaxed():
    shape = SkewShape(P(3, 2, 1), P(1))
    e = on(shape, [None, 2, 2], [1, 2], [2])
    assert check_domain(e, DomainMode.STRICT).satisfied
    assert not check_domain(e, DomainMode.ARM_RELAXED).satisfied
    assert check_domain(e, DomainMode.ARM_RELAXED, relaxed=[(2, 1)]).satisfied


def test_orbit_of_distinct_values():
    binding = {"x": 1, "y": 2, "z": 3}
    orbit = list(body_orbit(binding, ["x", "y", "z"]))
    assert len(orbit) == 6 == orbit_size(binding, ["x", "y", "z"])
    assert len({tuple(sorted(b.items())) for b in orbit}) == 6


def test_orbit_of_repeated_values():
    binding = {"x": 2, "y": 2, "z": 3, "w": 7}
    orbit = list(body_orbit(binding, ["x", "y", "z"]))
    assert len(orbit) == 3
    assert orbit_size(binding, ["x", "y", "z"]) == 6
    assert stabilizer_size(binding, ["x", "y", "z"]) == 2
    assert all(b["w"] == 7 for b in orbit)


def test_empty_body_has_one_arrangement():
    assert list(body_orbit({"x": 1}, [])) == [{"x": 1}]
    assert orbit_size({"x": 1}, []) == 1
    assert stabilizer_size({"x": 1}, []) == 1


def test_symmetrized_sum_of_a_row():
    shape = SkewShape(P(2))
    e = on(shape, [2, 3])
    body = list(e.variables.values())
    total = symmetrized_sum([ZetaTerm(1, shape.cells(), e)], body, exact(2))
    swapped = on(shape, [3, 2])
    expected = zeta_truncated(shape.cells(), e, exact(2)) + zeta_truncated(shape.cells(), swapped, exact(2))
    assert total == expected


def test_symmetrized_sum_counts_every_permutation_of_equal_values():
    shape = SkewShape(P(3))
    e = on(shape, [2, 2, 2])
    body = list(e.variables.values())
    single = zeta_truncated(shape.cells(), e, exact(2))
    assert single == Fraction(85, 64)
    assert symmetrized_sum([ZetaTerm(1, shape.cells(), e)], body, exact(2)) == 6 * single


def test_symmetrized_sum_weights_repeated_values():
    shape = SkewShape(P(3))
    e = on(shape, [2, 2, 3])
    body = list(e.variables.values())
    brute = sum(
        (zeta_truncated(shape.cells(), on(shape, list(row)), exact(3))
         for row in itertools.permutations([2, 2, 3])),
        Fraction(0),
    )
    assert symmetrized_sum([ZetaTerm(1, shape.cells(), e)], body, exact(3)) == brute


def test_symmetrized_sum_rejects_unbound_body_variables():
    shape = SkewShape(P(1))
    with pytest.raises(BindingMismatch):
        symmetrized_sum([ZetaTerm(1, shape.cells(), on(shape, [2]))], ["missing"], exact(2))


def test_ledger_balances_for_skew_shapes():
    shape = SkewShape(P(3, 2, 1), P(1))
    balance, terms = ledger(shape, on(shape, [None, 2, "3/2"], [3, 4], [5]), exact(3))
    assert balance == 0
    assert terms > 0


def test_verify_skew_with_distinct_rational_exponents():
    shape = SkewShape(P(3, 2, 1), P(1))
    v = on(shape, [None, "5/2", 3], ["7/3", 2], [4])
    report = verify_skew_theorem(shape, v, exact(4))
    assert report.equal
    assert report.orbit_size == 6
    assert report.ledger_balance == 0
    assert report.theorem == "skew"
    assert sum(c.coeff for c in report.per_nu) == sum(c for _, c in report.lr_table)


def test_reports_grow_consistently_with_the_truncation():
    shape = SkewShape(P(3, 2, 1), P(1))
    v = on(shape, [None, "5/2", 3], ["7/3", 2], [4])
    low = verify_skew_theorem(shape, v, exact(2))
    high = verify_skew_theorem(shape, v, exact(3))
    assert low.equal and high.equal
    assert high.lhs - low.lhs == high.rhs - low.rhs
    assert float(high.lhs) > float(low.lhs)
    assert low.ledger_balance == high.ledger_balance == 0
    admitted = sum(1 for t in enumerate_ssyt(shape.cells(), 3) if max(t.values()) == 3)
    assert high.ledger_terms - low.ledger_terms == admitted


def test_verify_skew_in_float_mode():
    shape = SkewShape(P(2, 2), P(1))
    v = on(shape, [None, 2], [3, 4])
    report = verify_skew_theorem(shape, v, TruncationContext(3, Arithmetic.FLOAT, 1e-10))
    assert report.equal
    assert report.arithmetic is Arithmetic.FLOAT


def test_verify_product_of_two_boxes():
    s = on(SkewShape(P(1)), [2], tag="s")
    t = on(SkewShape(P(1)), [3], tag="t")
    report = verify_product_theorem(P(1), P(1), s, t, exact(3))
    assert report.equal
    assert report.factorization.equal
    assert report.lr_table.as_dict() == {P(2): 1, P(1, 1): 1}
    assert report.exempt_from_arms == ("s_{1,1}", "t_{1,1}")
    assert report.exempt_from_formula == report.exempt_from_arms
    assert report.notes == ()


def test_verify_product_with_a_body():
    mu, nu = P(2, 1), P(1)
    s = on(SkewShape(mu), [2, 3], [4], tag="s")
    t = on(SkewShape(nu), [5], tag="t")
    report = verify_product_theorem(mu, nu, s, t, exact(3))
    assert report.equal
    assert report.ledger_balance == 0


def test_verify_winged_small_case():
    alpha = P(1).cells()
    a = ExponentTableau.from_values(Tableau.from_rows([[3]]), tag="alpha")
    b = ExponentTableau.from_values(Tableau(), tag="beta")
    shape = SkewShape(P(2, 1))
    v = on(shape, [2, 3], [4], tag="delta")
    report = verify_winged_theorem(alpha, Diagram(), 1, 0, shape, a, b, v, exact(3))
    assert report.equal
    assert report.theorem == "winged"
    assert report.lr_table.as_dict() == {P(2, 1): 1}


def test_verify_winged_rejects_long_gluing():
    shape = SkewShape(P(2, 1))
    a = ExponentTableau.from_values(Tableau.from_rows([[3], [3], [3]]), tag="alpha")
    b = ExponentTableau.from_values(Tableau(), tag="beta")
    v = on(shape, [2, 3], [4], tag="delta")
    with pytest.raises(WingConditionViolated, match=r"\[W4\]"):
        verify_winged_theorem(P(1, 1, 1).cells(), Diagram(), 3, 0, shape, a, b, v, exact(2))


@pytest.mark.sweep
def test_verify_skew_for_every_representative_choice():
    shape = SkewShape(P(3, 2, 1), P(1))
    v = on(shape, [None, "5/2", 3], ["7/3", 2], [4])
    for nu, _ in lr_expand(shape):
        for u in u_set(v, nu):
            assert verify_skew_theorem(shape, v, exact(4), u_choice={nu: u}).equal


@pytest.mark.sweep
def test_product_factorization_through_the_star_shape():
    rng = random.Random(11)
    shapes = [p for n in range(1, 4) for p in partitions_of(n)]
    for mu in shapes:
        for nu in shapes:
            s = ExponentTableau.on_skew(SkewShape(mu), {c: rng.choice((2, 3, 4)) for c in mu.cells()}, tag="s")
            t = ExponentTableau.on_skew(SkewShape(nu), {c: rng.choice((2, 3, 4)) for c in nu.cells()}, tag="t")
            st = star_exponents(s, t, mu, nu)
            for n in range(1, 5):
                ctx = exact(n)
                product = zeta_truncated(mu.cells(), s, ctx) * zeta_truncated(nu.cells(), t, ctx)
                assert product == zeta_truncated(star_shape(mu, nu).cells(), st, ctx)
