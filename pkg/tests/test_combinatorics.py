import cmath
from itertools import combinations, product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dominosieve.combinatorics import (
    NonInteger,
    QPoly,
    binary_words,
    binomial,
    catalan,
    compositions,
    cyclotomic,
    divisors,
    eval_at_root_exact,
    eval_at_root_numeric,
    eval_qbin_central_closed,
    fibonacci,
    lyndon_words,
    mobius,
    necklace_canonical,
    q_binomial,
    q_factorial,
    q_integer,
    word_descents,
    word_maj,
)

polys = st.lists(st.integers(-20, 20), max_size=8).map(QPoly)


def test_binomial_values():
    assert binomial(5, 2) == 10
    assert binomial(12, 6) == 924
    assert binomial(7, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


def test_catalan_values():
    assert [catalan(k) for k in range(5)] == [1, 1, 2, 5, 14]


def test_fibonacci_values():
    assert fibonacci(0) == fibonacci(1) == 1
    assert fibonacci(5) == 8
    assert fibonacci(9) == 55


def test_compositions():
    assert compositions(0) == []
    assert compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(compositions(5)) == 16
    for j in range(1, 9):
        assert all(sum(c) == j for c in compositions(j))
        assert len(set(compositions(j))) == 2 ** (j - 1)


def test_q_binomial_values():
    assert q_binomial(2, 1) == QPoly([1, 1])
    assert q_binomial(4, 2) == QPoly([1, 1, 2, 1, 1])
    assert q_binomial(5, 0) == QPoly([1])
    with pytest.raises(ValueError):
        q_binomial(2, 3)


def test_q_binomial_counts_maj_of_words():
    # oracle: sum of q^maj over binary words with k zeros
    for n in range(1, 9):
        for k in range(n + 1):
            counts = {}
            for w in binary_words(n, k):
                counts[word_maj(w)] = counts.get(word_maj(w), 0) + 1
            expected = QPoly([counts.get(i, 0) for i in range(max(counts) + 1)])
            assert q_binomial(n, k) == expected


def test_q_factorial_and_integer():
    assert q_integer(3) == QPoly([1, 1, 1])
    assert q_factorial(3) == QPoly([1, 2, 2, 1])
    assert q_factorial(0) == QPoly([1])


def test_cyclotomic_values():
    assert cyclotomic(1) == QPoly([-1, 1])
    assert cyclotomic(2) == QPoly([1, 1])
    assert cyclotomic(6) == QPoly([1, -1, 1])


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_product(n):
    total = QPoly([1])
    for d in divisors(n):
        total = total * cyclotomic(d)
    assert total == QPoly.monomial(n) - 1


def test_divisors_and_mobius():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    for n in range(2, 40):
        assert sum(mobius(d) for d in divisors(n)) == 0


def test_eval_at_root_exact_examples():
    assert eval_at_root_exact(QPoly([1, 1]), 2) == 0
    f = q_binomial(4, 2)
    assert eval_at_root_exact(f, 4) == 0
    assert eval_at_root_exact(f, 2) == 2
    assert eval_at_root_exact(f, 1) == 6
    assert isinstance(eval_at_root_exact(QPoly.monomial(1), 4), NonInteger)


def test_eval_qbin_central_closed_examples():
    assert eval_qbin_central_closed(4, 2) == 2
    assert eval_qbin_central_closed(5, 2) == 0
    for n in range(1, 13):
        assert eval_qbin_central_closed(n, n) == binomial(n, n // 2)


@pytest.mark.parametrize("n", range(1, 16))
def test_closed_form_matches_exact_evaluation(n):
    f = q_binomial(n, n // 2)
    for k in range(1, n + 1):
        d = n // gcd(n, k)
        assert eval_at_root_exact(f, d) == eval_qbin_central_closed(n, k)


def test_words():
    assert binary_words(4, 2) == ["0011", "0101", "0110", "1001", "1010", "1100"]
    assert word_descents("0011") == frozenset() and word_maj("0011") == 0
    assert word_descents("1001") == {1} and word_maj("1001") == 1
    assert word_descents("0101") == {2} and word_maj("0101") == 2


def test_necklaces():
    assert necklace_canonical("1010") == "0101"
    assert lyndon_words(4, 2) == ["0011"]
    assert lyndon_words(6, 3) == ["000111", "001011", "001101"]


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 11) for k in range(n + 1)])
def test_lyndon_words_brute_force(n, k):
    # oracle: words strictly smaller than every proper rotation
    brute = sorted(
        w for w in binary_words(n, k) if all(w < w[i:] + w[:i] for i in range(1, n))
    )
    assert lyndon_words(n, k) == brute


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QPoly()


@given(polys, st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_divmod_by_monic(a, tail):
    divisor = QPoly(tail + [1])
    quot, rem = divmod(a, divisor)
    assert quot * divisor + rem == a
    assert rem.degree < divisor.degree


@given(polys, st.integers(1, 12))
@settings(max_examples=60)
def test_exact_evaluation_agrees_with_numeric(f, d):
    exact = eval_at_root_exact(f, d)
    numeric = eval_at_root_numeric(f, d)
    if isinstance(exact, NonInteger):
        assert abs(numeric - round(numeric.real)) > 1e-9
    else:
        assert cmath.isclose(numeric, exact, abs_tol=1e-8)


@given(st.integers(0, 14), st.data())
def test_q_binomial_symmetry_and_specialization(n, data):
    k = data.draw(st.integers(0, n))
    f = q_binomial(n, k)
    assert f == q_binomial(n, n - k)
    assert f(1) == binomial(n, k)
    assert list(f.coeffs) == list(reversed(f.coeffs))


@given(st.text(alphabet="01", min_size=1, max_size=14), st.integers(0, 13))
def test_necklace_canonical_is_rotation_invariant(w, shift):
    i = shift % len(w)
    rotated = w[i:] + w[:i]
    assert necklace_canonical(rotated) == necklace_canonical(w)
    assert necklace_canonical(w) <= w


def test_binary_words_are_complete():
    for n, k in product(range(7), range(7)):
        if k > n:
            continue
        expected = sorted(
            "".join("0" if i in zeros else "1" for i in range(n)) for zeros in combinations(range(n), k)
        )
        assert binary_words(n, k) == expected
