from fractions import Fraction

import pytest

from shirshov.dialgebra import (DiPolynomial, Diword, LeibnizAlgebra,
                                all_diwords, di_gsb_check_bounded, di_irr,
                                di_left, di_reduce, di_right, diword_cmp,
                                leibniz_check, leibniz_dim2,
                                leibniz_enveloping, leibniz_i0, pbw_basis)


def test_diword_validation():
    w = Diword((0, 1, 0), 1)
    assert len(w) == 3
    with pytest.raises(ValueError):
        Diword((0, 1), 2)
    with pytest.raises(ValueError):
        Diword((), 0)


def test_diword_cmp_length_then_center_then_letters():
    assert diword_cmp(Diword((0,), 0), Diword((1, 1), 0)) == -1
    assert diword_cmp(Diword((1, 1), 0), Diword((0, 0), 1)) == -1
    assert diword_cmp(Diword((0, 1), 1), Diword((0, 0), 1)) == 1
    assert diword_cmp(Diword((0, 1), 1), Diword((0, 1), 1)) == 0


def test_products_place_the_center():
    u = Diword((0,), 0)
    v = Diword((1, 0), 1)
    assert di_left(u, v) == Diword((0, 1, 0), 2)
    assert di_right(u, v) == Diword((0, 1, 0), 0)
    assert di_left(v, u) == Diword((1, 0, 0), 2)
    assert di_right(v, u) == Diword((1, 0, 0), 1)


def test_products_are_bilinear():
    u = Diword((0,), 0)
    p = DiPolynomial([(Diword((1,), 0), 2), (Diword((0,), 0), -1)])
    out = di_left(u, p)
    assert out == DiPolynomial([(Diword((0, 1), 1), 2),
                                (Diword((0, 0), 1), -1)])
    assert di_right(p, u).coeff(Diword((1, 0), 0)) == 2


def test_five_laws_on_a_sample():
    u = Diword((0, 1), 1)
    v = Diword((1,), 0)
    w = Diword((0, 0), 1)
    assert di_right(di_right(u, v), w) == di_right(u, di_right(v, w))
    assert di_right(di_right(u, v), w) == di_right(u, di_left(v, w))
    assert di_right(di_left(u, v), w) == di_left(u, di_right(v, w))
    assert di_left(di_right(u, v), w) == di_left(di_left(u, v), w)
    assert di_left(u, di_left(v, w)) == di_left(di_left(u, v), w)


def test_all_diwords_count():
    assert len(list(all_diwords(2, 3))) == 24
    assert len(list(all_diwords(3, 2))) == 18


def test_leibniz_check():
    assert leibniz_check(leibniz_dim2())
    assert leibniz_check(LeibnizAlgebra(dim=1, bracket={}))
    assert not leibniz_check(LeibnizAlgebra(dim=1, bracket={(0, 0, 0): 1}))


def test_leibniz_i0():
    assert leibniz_i0(leibniz_dim2()) == frozenset({0})
    assert leibniz_i0(LeibnizAlgebra(dim=1, bracket={})) == frozenset()
    skew = LeibnizAlgebra(dim=2, bracket={(0, 0, 0): 1, (0, 0, 1): 1})
    with pytest.raises(ValueError):
        leibniz_i0(skew)


def test_enveloping_rejects_non_leibniz():
    with pytest.raises(ValueError):
        leibniz_enveloping(LeibnizAlgebra(dim=1, bracket={(0, 0, 0): 1}))


def test_enveloping_relation_count():
    S = leibniz_enveloping(leibniz_dim2())
    assert len(S) == 12


def test_reduce_rewrites_a_square():
    L = leibniz_dim2()
    S = leibniz_enveloping(L)
    # {e1, e1} = e0: the relation turns x2 -| @x2 into @x2 |- x2 - @x1
    p = DiPolynomial.monomial(Diword((1, 1), 1))
    nf = di_reduce(p, S)
    assert nf == DiPolynomial([(Diword((1, 1), 0), 1),
                               (Diword((0,), 0), -1)])
    assert di_reduce(nf, S) == nf


def test_reduce_is_linear_over_scalars():
    S = leibniz_enveloping(leibniz_dim2())
    p = DiPolynomial.monomial(Diword((1, 1), 1), Fraction(3, 2))
    nf = di_reduce(p, S)
    assert nf.coeff(Diword((1, 1), 0)) == Fraction(3, 2)


def test_irr_matches_pbw():
    L = leibniz_dim2()
    S = leibniz_enveloping(L)
    for d in (1, 2, 3):
        assert di_irr(S, 2, d) == pbw_basis(L, d)
    assert len(pbw_basis(L, 3)) == 6


def test_bounded_check_table():
    S = leibniz_enveloping(leibniz_dim2())
    rep = di_gsb_check_bounded(S, 2, 3)
    assert rep.holds
    assert [(l.length, l.irreducible, l.rank, l.total) for l in rep.table] \
        == [(1, 2, 0, 2), (2, 4, 6, 10), (3, 6, 28, 34)]


def test_bounded_check_rejects_small_bound():
    S = leibniz_enveloping(leibniz_dim2())
    with pytest.raises(ValueError):
        di_gsb_check_bounded(S, 2, 1)


def test_bounded_check_on_one_generator():
    # one abelian generator: the single relation x -| @x - @x |- x has a
    # vanishing center-forgotten image, exercising the flat-image handling
    L = LeibnizAlgebra(dim=1, bracket={})
    S = leibniz_enveloping(L)
    assert len(S) == 1
    rep = di_gsb_check_bounded(S, 1, 3)
    assert rep.holds
    assert [(l.length, l.irreducible, l.rank, l.total) for l in rep.table] \
        == [(1, 1, 0, 1), (2, 2, 1, 3), (3, 3, 3, 6)]


def test_bounded_check_flags_an_incomplete_set():
    L = leibniz_dim2()
    S = leibniz_enveloping(L)
    rep = di_gsb_check_bounded(S[:4], 2, 3)
    assert not rep.holds
