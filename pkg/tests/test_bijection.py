from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dominosieve.bijection import (
    InconsistencyError,
    catalan_composition_count,
    classify_types,
    composition_terms,
    count_hook,
    count_hook_printed,
    count_rectangular,
    count_rectangular_product_form,
    count_via_quotient,
    fibonacci_composition_count,
    from_word,
    gamma,
    hook_lengths,
    hv_split,
    num_syt,
    phi,
    phi_inverse,
    reduced_subset,
    tableau_from_bottoms,
    to_word,
    two_quotient,
)
from dominosieve.combinatorics import binomial, catalan, fibonacci
from dominosieve.tableaux import (
    Domino,
    DominoTableau,
    count_tableaux,
    enumerate_tableaux,
    is_valid,
    rectangle,
    stackings,
)


def two_row(n, spec):
    top = bottom = 1
    dominoes = []
    for label, kind in spec:
        if kind == "V":
            dominoes.append(Domino(label, 1, top, "V"))
            top += 1
            bottom += 1
        elif kind == "T":
            dominoes.append(Domino(label, 1, top, "H"))
            top += 2
        else:
            dominoes.append(Domino(label, 2, bottom, "H"))
            bottom += 2
    return DominoTableau((n, n), tuple(dominoes))


def all_vertical(rows, cols):
    return DominoTableau(rectangle(rows, cols), tuple(
        Domino(cols * b + c, 2 * b + 1, c, "V") for b in range(rows // 2) for c in range(1, cols + 1)
    ))


EIGHT = two_row(8, [(1, "T"), (2, "B"), (3, "V"), (4, "T"), (5, "B"), (6, "V"), (7, "V"), (8, "V")])
FIRST_EXAMPLE = DominoTableau((5, 5, 3, 3, 2), (
    Domino(1, 1, 1, "V"), Domino(2, 1, 2, "V"), Domino(4, 1, 3, "H"),
    Domino(6, 2, 3, "H"), Domino(9, 1, 5, "V"), Domino(3, 3, 1, "H"),
    Domino(8, 3, 3, "V"), Domino(5, 4, 1, "V"), Domino(7, 4, 2, "V"),
))


def test_phi_examples():
    state = phi(EIGHT)
    assert state.S == {2, 3, 5, 6}
    assert (state.H, state.V) == ({2, 5}, {3, 6})
    assert phi(all_vertical(2, 4)).S == {1, 2}
    full_stack = two_row(4, [(1, "T"), (2, "B"), (3, "T"), (4, "B")])
    assert phi(full_stack).S == {2, 4}


def test_phi_inverse_examples():
    assert phi_inverse(8, {2, 3, 5, 6}) == EIGHT
    D = phi_inverse(5, {2, 5})
    assert {d.label for d in D.dominoes if d.orient == "H" and d.row == 2} == {2, 5}
    assert phi_inverse(4, {1, 2}) == all_vertical(2, 4)


def test_hv_split_examples():
    assert hv_split(8, {2, 3, 5, 6}) == ({2, 5}, {3, 6})
    assert hv_split(4, {1, 2}) == (frozenset(), {1, 2})
    assert hv_split(4, {2, 4}) == ({2, 4}, frozenset())


def test_subset_validation():
    for bad in ([1], [0, 2], [1, 5], [2, 2]):
        with pytest.raises(ValueError):
            phi_inverse(4, bad)
    with pytest.raises(ValueError):
        tableau_from_bottoms(4, [1])


def test_reduced_subset():
    D = phi_inverse(6, {1, 3, 5})
    assert reduced_subset(D) == {3, 5}
    assert reduced_subset(all_vertical(2, 6)) == frozenset()


def test_words():
    assert to_word(all_vertical(2, 4)) == "0011"
    assert to_word(phi_inverse(4, {2, 3})) == "1001"
    for bad in ("", "012", "0111"):
        with pytest.raises(ValueError):
            from_word(bad)


@pytest.mark.parametrize("n", range(1, 11))
def test_bottoms_determine_the_tableau(n):
    seen = {}
    for D in enumerate_tableaux((n, n)):
        bottoms = frozenset(d.label for d in D.dominoes if d.orient == "H" and d.row == 2)
        assert bottoms not in seen
        seen[bottoms] = D
        assert tableau_from_bottoms(n, bottoms) == D


def test_two_quotient_examples():
    assert two_quotient((5, 5, 3, 3, 2)) == ((3, 2), (2, 1, 1))
    assert two_quotient((1, 1)) == ((1,), ())
    for k in range(1, 5):
        for n in range(1, 5):
            big, small = rectangle(k, (n + 1) // 2), rectangle(k, n // 2)
            assert set(two_quotient(rectangle(2 * k, n))) == {big, small}
    with pytest.raises(ValueError):
        two_quotient((3,))


def test_classify_examples():
    types = {t.domino.label: t.dtype for t in classify_types(FIRST_EXAMPLE)}
    assert {l for l, t in types.items() if t == "I"} == {1, 6, 7, 8, 9}
    assert {l for l, t in types.items() if t == "II"} == {2, 3, 4, 5}
    five = all_vertical(2, 5)
    assert {t.domino.col for t in classify_types(five) if t.dtype == "I"} == {1, 3, 5}
    big = all_vertical(6, 5)
    assert {t.domino.label for t in classify_types(big) if t.dtype == "I"} == {1, 3, 5, 6, 8, 10, 11, 13, 15}


def test_gamma_examples():
    mu, nu = gamma(FIRST_EXAMPLE)
    assert (mu.shape, mu.rows) == ((3, 2), ((1, 6, 9), (7, 8)))
    assert (nu.shape, nu.rows) == ((2, 1, 1), ((2, 4), (3,), (5,)))
    mu, nu = gamma(all_vertical(6, 5))
    assert (mu.shape, mu.rows) == ((3, 3, 3), ((1, 3, 5), (6, 8, 10), (11, 13, 15)))
    assert (nu.shape, nu.rows) == ((2, 2, 2), ((2, 4), (7, 9), (12, 14)))


GAMMA_SHAPES = [(6, 6), (4, 4, 4, 4), (3, 3, 3, 3, 3, 3), (3, 1, 1, 1), (4, 2, 2), (5, 3, 2, 2), (2, 2, 1, 1), (4, 4, 2, 2)]


@pytest.mark.parametrize("shape", GAMMA_SHAPES)
def test_gamma_is_injective_onto_quotient_shapes(shape):
    quotient = set(two_quotient(shape))
    images = {gamma(T) for T in enumerate_tableaux(shape)}
    assert len(images) == count_tableaux(shape)
    assert all({mu.shape, nu.shape} == quotient for mu, nu in images)


def test_hook_lengths_and_syt():
    assert hook_lengths((2, 1)) == {(1, 1): 3, (1, 2): 1, (2, 1): 1}
    assert num_syt((3, 3)) == 5
    assert num_syt((3, 2)) == 5
    assert num_syt((3, 3, 3)) == 42
    assert num_syt(()) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_num_syt_is_catalan_on_two_rows(n):
    assert num_syt((n, n)) == catalan(n)


def test_rectangular_counts():
    assert count_rectangular(3, 5) == 1051050
    for n in range(1, 13):
        assert count_rectangular(1, n) == binomial(n, n // 2)
    for k in range(1, 6):
        for n in range(1, 8):
            assert count_rectangular(k, n) == count_rectangular_product_form(k, n)


def test_transpose_symmetry():
    # #DT(n^m) = #DT(m^n) checked through the 2-quotient count
    for rows in range(1, 7):
        for cols in range(1, 7):
            if rows * cols % 2 == 0:
                assert count_via_quotient(rectangle(rows, cols)) == count_via_quotient(rectangle(cols, rows))


def test_hook_counts():
    assert count_hook(3, 1) == 1
    assert count_hook(3, 3) == 2
    assert count_hook_printed(3, 1) == Fraction(1, 2)
    with pytest.raises(ValueError):
        count_hook(2, 1)


@pytest.mark.parametrize("shape", [
    (2, 2), (4, 2), (3, 3), (3, 1), (4, 4, 2, 2), (5, 5, 3, 3, 2), (3, 2, 1), (2, 2, 2), (4, 3, 1), (6, 4, 2),
])
def test_count_via_quotient_matches_brute_force(shape):
    assert count_via_quotient(shape) == count_tableaux(shape)


def test_composition_expansion():
    terms = dict(composition_terms(5))
    assert terms[()] == 1
    assert terms[(1,)] == 4
    assert terms[(2,)] == 2
    assert terms[(1, 1)] == 1
    assert sum(terms.values()) == fibonacci(5)
    for n in range(31):
        assert catalan_composition_count(n) == binomial(n, n // 2)
        assert fibonacci_composition_count(n) == fibonacci(n)


def test_composition_terms_group_tilings():
    # oracle: group the tilings of (n, n) by their stacking widths
    for n in range(1, 11):
        groups = {}
        seen = set()
        for D in enumerate_tableaux((n, n)):
            tiling = D.tiling
            if tiling in seen:
                continue
            seen.add(tiling)
            key = tuple(s.width for s in stackings(D))
            groups[key] = groups.get(key, 0) + 1
        assert groups == dict(composition_terms(n))


@given(st.integers(1, 40), st.data())
@settings(max_examples=150)
def test_phi_round_trip_random(n, data):
    S = data.draw(st.sets(st.integers(1, n), min_size=n // 2, max_size=n // 2))
    D = phi_inverse(n, S)
    assert is_valid(D)
    assert phi(D).S == S
    assert from_word(to_word(D)) == D


@given(st.integers(1, 30), st.data())
@settings(max_examples=100)
def test_membership_bound(n, data):
    S = data.draw(st.sets(st.integers(1, n), min_size=n // 2, max_size=n // 2))
    H, V = hv_split(n, S)
    assert H | V == S and not H & V
    for s in S:
        assert 2 * sum(h < s for h in H) + sum(v < s for v in V) <= s - 1


def test_inconsistency_error_is_runtime_error():
    assert issubclass(InconsistencyError, RuntimeError)


def test_enumeration_is_closed_under_phi():
    for n in range(1, 9):
        subsets = {phi(D).S for D in enumerate_tableaux((n, n))}
        assert subsets == {frozenset(c) for c in combinations(range(1, n + 1), n // 2)}


@pytest.mark.parametrize("k,n", [(1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 2)])
def test_rectangle_type_counts(k, n):
    for T in enumerate_tableaux(rectangle(2 * k, n)):
        types = [t.dtype for t in classify_types(T)]
        assert types.count("I") == k * ((n + 1) // 2)
        assert types.count("II") == k * (n // 2)
