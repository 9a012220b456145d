from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from errors import EmptyFiber, ShapeError
from lr import (
    LRTable,
    lr_coeff_poly,
    lr_coeff_rect,
    lr_coeff_star,
    lr_expand,
    lr_product_table,
    schur_expand,
    schur_poly,
    u_representative,
    u_set,
)
from shapes import Partition, SkewShape, partitions_of
from tableaux import ExponentTableau, enumerate_ssyt, standard_fillings


def P(*parts):
    return Partition(parts)


small_partitions = st.integers(min_value=0, max_value=4).flatmap(
    lambda n: st.sampled_from(list(partitions_of(n)))
)


def test_lr_coefficients_of_worked_examples():
    assert lr_coeff_rect(P(7, 3, 1, 1), P(2, 1), P(6, 2, 1)) == 2
    assert lr_coeff_rect(P(6, 3, 2, 1, 1), P(2, 2, 1, 1), P(5, 2)) == 2
    assert lr_coeff_star(P(7, 4, 1, 1), P(2, 2, 1, 1), P(5, 2)) == 1


def test_lr_coeff_rect_is_zero_for_the_wrong_size():
    assert lr_coeff_rect(P(3, 1), P(1), P(2)) == 0


def test_lr_coeff_rect_needs_mu_inside_lambda():
    with pytest.raises(ShapeError):
        lr_coeff_rect(P(2), P(1, 1), P(1))


def test_pieri_rule():
    table = lr_product_table(P(2, 1), P(1))
    assert table.as_dict() == {P(3, 1): 1, P(2, 2): 1, P(2, 1, 1): 1}


def test_product_table_of_two_boxes():
    table = lr_product_table(P(2, 1), P(2, 1))
    assert table.coeff(P(3, 2, 1)) == 2
    assert table.coeff(P(4, 2)) == 1
    assert table.coeff(P(6)) == 0


@settings(max_examples=25, deadline=None)
@given(small_partitions, small_partitions)
def test_three_routes_agree(mu, nu):
    for lam, c in lr_product_table(mu, nu):
        assert lr_coeff_star(lam, mu, nu) == c
        assert lr_coeff_poly(lam, mu, nu) == c


@settings(max_examples=25, deadline=None)
@given(small_partitions, small_partitions)
def test_product_table_is_symmetric(mu, nu):
    assert lr_product_table(mu, nu).as_dict() == lr_product_table(nu, mu).as_dict()


def test_skew_expansion_of_the_worked_example():
    table = lr_expand(SkewShape(P(7, 3, 1, 1), P(2, 1)))
    assert {str(p): c for p, c in table} == {
        "(7,2)": 1, "(7,1,1)": 1, "(6,3)": 1, "(6,2,1)": 2,
        "(6,1,1,1)": 1, "(5,3,1)": 1, "(5,2,1,1)": 1,
    }
    assert table.mu == P(2, 1)
    assert table.outer == P(7, 3, 1, 1)


@pytest.mark.parametrize("shape", [
    SkewShape(P(3, 2, 1), P(1)),
    SkewShape(P(4, 3, 1), P(2, 1)),
    SkewShape(P(3, 3, 2), P(2, 1)),
])
def test_skew_expansion_counts_standard_fillings(shape):
    count = len(list(standard_fillings(shape.cells())))
    expanded = sum(c * len(list(standard_fillings(nu.cells()))) for nu, c in lr_expand(shape))
    assert expanded == count


def test_lr_table_drops_zeros_and_sorts():
    table = LRTable(mu=P(1), entries=((P(1, 1), 1), (P(2), 1), (P(3), 0)))
    assert table.partitions() == [P(2), P(1, 1)]
    assert len(table) == 2


def test_schur_expand_of_a_schur_polynomial():
    assert schur_expand(schur_poly(P(2, 1), 3), 3) == {P(2, 1): 1}


def test_schur_poly_of_a_row():
    poly = schur_poly(P(2), 2)
    assert len(poly.terms()) == 3


@pytest.fixture
def v():
    shape = SkewShape(P(2, 2, 1), P(1))
    return ExponentTableau.on_skew(shape, {cell: 2 for cell in shape.cells()})


def test_u_set_members_carry_the_variables_of_v(v):
    members = u_set(v, P(2, 2))
    assert members
    for u in members:
        assert u.shape == SkewShape(P(2, 2))
        assert Counter(u.variables.values()) == Counter(v.variables.values())


def test_u_set_of_fixed_content_is_a_subset(v):
    assert u_set(v, P(2, 2), full=False) <= u_set(v, P(2, 2))


def test_u_set_raises_for_an_empty_fiber(v):
    with pytest.raises(EmptyFiber):
        u_set(v, P(4))


def test_u_representative(v):
    u = u_representative(v, P(2, 1, 1))
    assert u in u_set(v, P(2, 1, 1))
    with pytest.raises(EmptyFiber):
        u_representative(v, P(1, 1, 1, 1))


def test_coefficient_caches_are_bounded():
    assert lr_coeff_rect.cache_info().maxsize == 4096
    assert lr_coeff_star.cache_info().maxsize == 4096


def test_schur_polynomials_of_partitions_are_reused():
    assert schur_poly(P(2, 1), 3) is schur_poly(P(2, 1), 3)
    assert schur_poly(SkewShape(P(2, 1)), 3) == schur_poly(P(2, 1), 3)


def test_lr_coeff_star_skips_shapes_that_cannot_hold_both_factors():
    assert lr_coeff_star(P(1, 1, 1, 1), P(2), P(2)) == 0
    assert lr_coeff_star(P(5), P(2), P(2, 1)) == 0
    assert lr_coeff_star(P(3, 1), P(2), P(2)) == 1


def test_u_set_members_fix_the_arms():
    shape = SkewShape(P(4, 2, 1), P(2))
    v = ExponentTableau.on_skew(shape, {cell: 2 for cell in shape.cells()})
    arm_variables = {v.variables[cell] for cell in v.split.arms}
    assert len(arm_variables) == 2
    for nu, _ in lr_expand(shape):
        placements = {
            frozenset((cell, var) for cell, var in u.variables if var in arm_variables)
            for u in u_set(v, nu)
        }
        assert len(placements) == 1, nu


def test_missing_terms_of_the_two_by_two_product():
    mu, nu = P(2, 2, 1, 1), P(5, 2)
    for lam in (P(7, 3, 1, 1, 1), P(7, 2, 2, 1, 1), P(5, 3, 2, 1, 1, 1)):
        assert lr_coeff_rect(lam, mu, nu) == 1


def _count(p, k):
    return sum(1 for _ in enumerate_ssyt(p.cells(), k))


@pytest.mark.sweep
def test_products_specialize_at_all_ones():
    shapes = [p for n in range(1, 4) for p in partitions_of(n)]
    for mu in shapes:
        for nu in shapes:
            table = lr_product_table(mu, nu)
            for k in range(1, 5):
                assert sum(c * _count(lam, k) for lam, c in table) == _count(mu, k) * _count(nu, k)


@pytest.mark.sweep
def test_three_routes_agree_up_to_eight_boxes():
    for total in range(9):
        for mu_size in range(total + 1):
            for mu in partitions_of(mu_size):
                for nu in partitions_of(total - mu_size):
                    products = lr_product_table(mu, nu).as_dict()
                    for lam in partitions_of(total):
                        expected = products.get(lam, 0)
                        assert lr_coeff_star(lam, mu, nu) == expected
                        assert lr_coeff_poly(lam, mu, nu) == expected
