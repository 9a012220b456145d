import itertools
from fractions import Fraction

import pytest

from errors import BindingMismatch, ShapeMismatch
from shapes import Diagram, Partition, SkewShape, partitions_of, partitions_within, star_shape, winged_layout
from tableaux import (
    ExponentTableau,
    Labeled,
    Tableau,
    enumerate_ssyt,
    enumerate_ssyt_with_content,
    first_violation,
    is_ssyt,
    kostka,
    row_word,
    standard_fillings,
    star_exponents,
    star_tableau,
    superstandard,
    variable_name,
    winged_exponents,
)


def P(*parts):
    return Partition(parts)


def test_from_rows_skips_absent_cells():
    t = Tableau.from_rows([[None, 2], [1, 3], [2]])
    assert t.cells() == ((1, 2), (2, 1), (2, 2), (3, 1))
    assert t[(2, 2)] == 3
    assert t.rows() == [[None, 2], [1, 3], [2]]


def test_tableau_rejects_two_entries_in_one_cell():
    with pytest.raises(ShapeMismatch):
        Tableau((((1, 1), 1), ((1, 1), 2)))


def test_is_ssyt():
    assert is_ssyt(Tableau.from_rows([[1, 1, 2], [2, 3]]))
    assert not is_ssyt(Tableau.from_rows([[1, 1], [1]]))


def test_first_violation_names_the_cell():
    cell, detail = first_violation(Tableau.from_rows([[2, 1]]))
    assert cell == (1, 1)
    assert "row" in detail


def test_enumerate_ssyt_counts():
    assert len(list(enumerate_ssyt(P(2, 1).cells(), 3))) == 8
    assert len(list(enumerate_ssyt(P(1).cells(), 5))) == 5
    assert len(list(enumerate_ssyt(P(2, 2).cells(), 2))) == 1


def test_enumerate_ssyt_yields_only_semistandard_tableaux():
    shape = SkewShape(P(3, 2, 1), P(1))
    found = list(enumerate_ssyt(shape.cells(), 3))
    assert found
    assert all(is_ssyt(t) for t in found)
    assert len(set(found)) == len(found)


def test_enumerate_ssyt_of_the_empty_diagram():
    assert list(enumerate_ssyt(Diagram(), 3)) == [Tableau()]


def test_enumerate_ssyt_is_lexicographic():
    rows = [t.values() for t in enumerate_ssyt(P(2).cells(), 2)]
    assert rows == [[1, 1], [1, 2], [2, 2]]


def test_enumerate_with_content():
    found = list(enumerate_ssyt_with_content(P(2, 1).cells(), [1, 1, 2]))
    assert found == [Tableau.from_rows([[1, 1], [2]])]


def test_enumerate_with_content_rejects_wrong_size():
    with pytest.raises(ShapeMismatch):
        list(enumerate_ssyt_with_content(P(2, 1).cells(), [1, 2]))


def test_enumerate_with_content_on_a_skew_shape():
    found = list(enumerate_ssyt_with_content(SkewShape(P(2, 2, 1), P(1)).cells(), [1, 2, 2, 3]))
    assert sorted(t.rows() for t in found) == [[[None, 1], [2, 2], [3]], [[None, 2], [1, 3], [2]]]


def test_standard_fillings_count():
    assert len(list(standard_fillings(P(3, 2).cells()))) == 5
    assert len(list(standard_fillings(SkewShape(P(2, 1), P(1)).cells()))) == 2


def test_superstandard():
    assert superstandard(P(3, 1)).rows() == [[1, 1, 1], [2]]


def test_kostka():
    assert kostka(P(2, 1), [1, 1, 2]) == 1
    assert kostka(P(2, 1), [1, 2, 3]) == 2
    assert kostka(P(2, 1), [1, 2]) == 0


def test_row_word_reads_bottom_to_top():
    t = Tableau.from_rows([[1, 1, 1], [2, 3, 4], [3]])
    assert row_word(t) == (3, 2, 3, 4, 1, 1, 1)


def test_labeled_entries_order_lexicographically():
    assert Labeled(1, 2) < Labeled(2, 1)
    assert Labeled(2, 1) < Labeled(2, 2)
    assert str(Labeled(3, 2)) == "3_2"


def test_variable_name():
    assert variable_name(("s", (4, 1))) == "s_{4,1}"
    assert variable_name("x") == "x"


def test_exponent_tableau_from_values():
    e = ExponentTableau.from_values(Tableau.from_rows([[2, "3/2"]]), tag="t")
    assert e.values[(1, 2)] == Fraction(3, 2)
    assert e.variables[(1, 1)] == ("t", (1, 1))
    assert e.binding() == {("t", (1, 1)): 2, ("t", (1, 2)): Fraction(3, 2)}


def test_exponent_tableau_checks_the_shape():
    with pytest.raises(ShapeMismatch):
        ExponentTableau.on_skew(SkewShape(P(2, 1)), {(1, 1): 2, (1, 2): 2})


def test_binding_mismatch_on_conflicting_values():
    values = Tableau.from_rows([[2, 3]])
    variables = Tableau.from_rows([["x", "x"]])
    with pytest.raises(BindingMismatch, match="'x'"):
        ExponentTableau(values, variables).binding()


def test_body_variables_skip_the_arms():
    shape = SkewShape(P(7, 3, 1, 1), P(2, 1))
    e = ExponentTableau.on_skew(shape, {cell: 2 for cell in shape.cells()})
    body = e.body_variables()
    assert len(body) == 5
    assert ("v", (1, 5)) not in body
    assert ("v", (4, 1)) not in body
    assert ("v", (3, 1)) in body
    assert ("v", (1, 3)) in body


def test_with_binding_moves_values_between_variables():
    e = ExponentTableau.from_values(Tableau.from_rows([[2, 3]]))
    swapped = e.with_binding({("v", (1, 1)): 3, ("v", (1, 2)): 2})
    assert swapped.values.values() == [3, 2]
    with pytest.raises(BindingMismatch):
        e.with_binding({("v", (1, 1)): 3})


def test_star_tableau_places_s_below_t():
    s = Tableau.from_rows([[1, 2], [3]])
    t = Tableau.from_rows([[4]])
    placed = star_tableau(s, t, P(2, 1), P(1))
    assert placed.mapping == {(2, 1): 1, (2, 2): 2, (3, 1): 3, (1, 3): 4}


def test_star_exponents_reject_shared_variables():
    mu, nu = P(1), P(1)
    s = ExponentTableau.from_values(Tableau.from_rows([[2]]), tag="v")
    t = ExponentTableau.from_values(Tableau.from_rows([[2]]), tag="v")
    with pytest.raises(BindingMismatch):
        star_exponents(s, t, mu, nu)


def test_star_exponents_carry_the_star_shape():
    mu, nu = P(1), P(1)
    s = ExponentTableau.from_values(Tableau.from_rows([[2]]), tag="s")
    t = ExponentTableau.from_values(Tableau.from_rows([[3]]), tag="t")
    st = star_exponents(s, t, mu, nu)
    assert st.shape == SkewShape(P(2, 1), P(1))
    assert st.variables.mapping == {(1, 2): ("t", (1, 1)), (2, 1): ("s", (1, 1))}


def test_winged_exponents_compose_three_pieces():
    layout = winged_layout(P(1).cells(), 1, P(2, 1).cells(), 0, Diagram())
    a = ExponentTableau.from_values(Tableau.from_rows([[5]]), tag="a")
    v = ExponentTableau.from_values(Tableau.from_rows([[2, 3], [4]]))
    b = ExponentTableau.from_values(Tableau(), tag="b")
    whole = winged_exponents(layout, a, v, b)
    assert whole.values.mapping == {(1, 2): 2, (1, 3): 3, (2, 2): 4, (2, 1): 5}


def _small_diagrams(max_cells=6):
    for size in range(1, max_cells + 1):
        for outer in partitions_of(size):
            for inner_size in range(size):
                for inner in partitions_within(inner_size, outer):
                    yield SkewShape(outer, inner).cells()
    for mu_size in range(1, max_cells):
        for nu_size in range(1, max_cells - mu_size + 1):
            for mu in partitions_of(mu_size):
                for nu in partitions_of(nu_size):
                    yield star_shape(mu, nu).cells()


def _brute_force(cells, letters):
    for values in itertools.product(letters, repeat=len(cells)):
        t = Tableau(tuple(zip(cells, values)))
        if is_ssyt(t):
            yield t


@pytest.mark.sweep
def test_enumerate_ssyt_matches_brute_force():
    for d in _small_diagrams():
        for n in range(1, 5):
            found = list(enumerate_ssyt(d, n))
            assert len(set(found)) == len(found)
            assert set(found) == set(_brute_force(d.cells, range(1, n + 1))), (d, n)


@pytest.mark.sweep
def test_enumerate_with_content_matches_brute_force():
    for d in _small_diagrams():
        by_content = {}
        for t in _brute_force(d.cells, range(1, 5)):
            by_content.setdefault(tuple(sorted(t.values())), set()).add(t)
        for content, expected in by_content.items():
            found = list(enumerate_ssyt_with_content(d, content))
            assert len(found) == len(expected) == kostka(d, content)
            assert set(found) == expected, (d, content)
