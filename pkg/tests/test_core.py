from fractions import Fraction

import pytest

from shirshov.core import (Alphabet, DegLexOrder, Polynomial, Terms,
                           VectorSpan, deglex_key, row_reduce, word_cmp)


def test_deglex_sorts_by_length_then_letters():
    words = [(1,), (0, 1), (), (1, 0), (0,), (0, 0)]
    assert sorted(words, key=deglex_key) == [
        (), (0,), (1,), (0, 0), (0, 1), (1, 0)]


def test_alphabet_rank_name_roundtrip():
    ab = Alphabet(("a", "b", "c"))
    assert len(ab) == 3
    assert ab.rank("b") == 1
    assert ab.name(2) == "c"
    assert ab.word("c", "a") == (2, 0)
    with pytest.raises(ValueError):
        ab.rank("z")


def test_alphabet_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        Alphabet(("a", "a"))
    with pytest.raises(ValueError):
        Alphabet(())


def test_order_cmp_and_sort():
    order = DegLexOrder(Alphabet(("x", "y")))
    assert word_cmp((1,), (0, 0), order) == -1
    assert word_cmp((0, 1), (0, 1), order) == 0
    assert word_cmp((1, 0), (0, 1), order) == 1
    assert order.sort([(1, 1), (), (0,)]) == [(), (0,), (1, 1)]
    with pytest.raises(ValueError):
        order.cmp((5,), ())


def test_terms_addition_cancels():
    p = Polynomial([((0,), 1), ((1,), 2)])
    q = Polynomial([((0,), -1), ((1,), -2)])
    assert not (p + q)
    assert p - p == Polynomial.zero()
    assert len(p) == 2


def test_terms_drops_zero_coefficients():
    p = Polynomial([((0,), 1), ((0,), -1), ((1,), 3)])
    assert len(p) == 1
    assert p.coeff((0,)) == 0
    assert p.coeff((1,)) == 3


def test_leading_monomial_and_monic():
    p = Polynomial([((0, 1), Fraction(3)), ((1,), 5), ((1, 0), Fraction(6))])
    assert p.leading_monomial() == (1, 0)
    assert p.leading_coeff() == 6
    m = p.monic()
    assert m.leading_coeff() == 1
    assert m.coeff((0, 1)) == Fraction(1, 2)
    with pytest.raises(ValueError):
        Polynomial.zero().leading_monomial()


def test_scalar_and_negation():
    p = Polynomial([((0,), 2)])
    assert (3 * p).coeff((0,)) == 6
    assert p.scale(Fraction(1, 2)).coeff((0,)) == 1
    assert (-p).coeff((0,)) == -2


def test_product_is_noncommutative():
    x = Polynomial.monomial((0,))
    y = Polynomial.monomial((1,))
    p = (x + y) * (x - y)
    assert p.coeff((0, 0)) == 1
    assert p.coeff((0, 1)) == -1
    assert p.coeff((1, 0)) == 1
    assert p.coeff((1, 1)) == -1
    assert x * y != y * x
    assert Polynomial.one() * x == x
    assert (2 * x) * y == Polynomial.monomial((0, 1), 2)


def test_sorted_terms_descending():
    p = Polynomial([((0,), 1), ((1, 1), 2), ((1,), 3)])
    assert [m for m, _ in p.sorted_terms()] == [(1, 1), (1,), (0,)]


def test_vector_span_detects_dependence():
    span = VectorSpan(key=deglex_key)
    assert span.insert({(0,): Fraction(2)})
    assert span.insert({(1,): 1, (0,): 1})
    assert not span.insert({(0,): 3, (1,): 3})
    assert span.rank == 2
    assert span.contains({(1,): 7, (0,): 7})
    assert not span.contains({(0, 0): 1})
    assert span.pivots() == [(1,), (0,)]


def test_row_reduce_rank_and_pivots():
    rows = [[1, 1, 0], [0, 2, 0], [1, -1, 0]]
    reduced, pivots, rank = row_reduce(rows)
    assert rank == 2
    assert pivots == [0, 1]
    assert reduced == [[1, 0, 0], [0, 1, 0]]
    with pytest.raises(ValueError):
        row_reduce([[1], [1, 2]])
