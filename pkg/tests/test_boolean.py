from math import comb

import pytest

from boolprod.boolean import (
    boolean_degree,
    boolean_product,
    ep_subset,
    subset_alphabet,
    total_boolean,
)
from boolprod.errors import CapacityError
from boolprod.polyring import MonomialPoly, alphabet_product, graded_elementary
from boolprod.schur import mvector_expand, schur_from_poly, schur_to_m, to_mvector
from boolprod.tableaux import staircase


def test_subset_alphabet_forms():
    assert subset_alphabet(3, 2).forms == ((1, 1, 0), (1, 0, 1), (0, 1, 1))
    assert subset_alphabet(3, 3).forms == ((1, 1, 1),)
    assert subset_alphabet(4, 1).forms == (
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    )
    with pytest.raises(ValueError):
        subset_alphabet(3, 4)
    with pytest.raises(ValueError):
        subset_alphabet(3, 0)


def test_ep_subset_known_values():
    assert ep_subset(3, 2, 0).terms == {(): 1}
    assert ep_subset(3, 2, 1).terms == {(1,): 2}
    assert ep_subset(3, 2, 2).terms == {(2,): 1, (1, 1): 2}
    assert ep_subset(3, 2, 3).terms == {(2, 1): 1}
    assert ep_subset(3, 2, 4).terms == {}
    with pytest.raises(ValueError):
        ep_subset(3, 2, -1)


def test_ep_subset_large_golden():
    expected = {
        (6, 3, 1): 1,
        (6, 2, 2): 1,
        (6, 2, 1, 1): 1,
        (6, 1, 1, 1, 1): 1,
        (5, 4, 1): 2,
        (5, 3, 2): 4,
        (5, 3, 1, 1): 4,
        (5, 2, 2, 1): 4,
        (5, 2, 1, 1, 1): 4,
        (4, 4, 2): 3,
        (4, 4, 1, 1): 3,
        (4, 3, 3): 3,
        (4, 3, 2, 1): 9,
        (4, 3, 1, 1, 1): 6,
        (4, 2, 2, 2): 3,
        (4, 2, 2, 1, 1): 9,
        (3, 3, 3, 1): 3,
        (3, 3, 2, 2): 3,
        (3, 3, 2, 1, 1): 9,
        (3, 2, 2, 2, 1): 6,
    }
    assert ep_subset(5, 3, 10).terms == expected


def test_boolean_product_known_values():
    assert boolean_product(3, 2).terms == {(2, 1): 1}
    assert boolean_product(4, 4).terms == {(1,): 1}
    assert boolean_product(4, 3).terms == {
        (3, 1): 1,
        (2, 2): 1,
        (2, 1, 1): 1,
        (1, 1, 1, 1): 1,
    }


def test_boolean_product_is_top_elementary():
    for n in range(2, 5):
        for k in range(1, n + 1):
            top = boolean_degree(n, k)
            assert top == comb(n, k)
            assert boolean_product(n, k).terms == ep_subset(n, k, top).terms


def test_pairs_product_is_staircase():
    for n in range(2, 7):
        assert boolean_product(n, 2).terms == {staircase(n - 1): 1}


def test_positivity_full_range():
    for n in range(1, 6):
        for k in range(1, n + 1):
            for p in range(comb(n, k) + 1):
                v = ep_subset(n, k, p)
                assert v.is_nonnegative(), (n, k, p)
                assert all(sum(la) == p for la in v.terms)


def test_total_chern_consistency():
    # summing every elementary slice reproduces the product of (1 + X_S)
    for n, k in ((3, 2), (4, 2), (4, 3)):
        a = subset_alphabet(n, k)
        total = MonomialPoly(n)
        for piece in graded_elementary(a):
            total = total + piece
        ones = [MonomialPoly.constant(n, 1) + MonomialPoly.from_form(n, f) for f in a.forms]
        product = ones[0]
        for q in ones[1:]:
            product = product * q
        assert total == product


def test_total_boolean_small():
    assert total_boolean(1).terms == {(1,): 1}
    assert total_boolean(2).terms == {(2, 1): 1}


def test_total_boolean_two_routes():
    # direct form product vs product of the per-k Schur expansions
    direct = total_boolean(3)
    factor_polys = [
        alphabet_product(subset_alphabet(3, k)) for k in (1, 2, 3)
    ]
    via_schur = factor_polys[0]
    for q in factor_polys[1:]:
        via_schur = via_schur * q
    assert schur_from_poly(via_schur).terms == direct.terms
    # and the factors really are s_(1,1,1), s_(2,1), s_(1)
    assert schur_from_poly(factor_polys[0]).terms == {(1, 1, 1): 1}
    assert schur_from_poly(factor_polys[1]).terms == {(2, 1): 1}
    assert schur_from_poly(factor_polys[2]).terms == {(1,): 1}


def test_total_boolean_degree_and_positivity():
    for n in range(1, 5):
        v = total_boolean(n)
        assert v.is_nonnegative()
        assert all(sum(la) == 2**n - 1 for la in v.terms)


def test_total_boolean_capacity():
    with pytest.raises(CapacityError):
        total_boolean(6)


def test_schur_product_reconversion_route():
    # multiply two expansions in monomial space and reconvert: B_{3,1} * B_{3,2}
    left = alphabet_product(subset_alphabet(3, 1))
    right = alphabet_product(subset_alphabet(3, 2))
    combined = schur_from_poly(left * right)
    expanded = mvector_expand(schur_to_m(combined))
    assert to_mvector(expanded).terms == to_mvector(left * right).terms
