from math import comb

import pytest

from src.algebra.closure import integral_closure
from src.algebra.monomial import MonomialIdeal, RingContext, power, product_of_powers
from src.errors import ContainmentError, DimensionMismatchError, NotPrimaryError, PreconditionError
from src.hilbert.colength import colength, colength_by_scan, quotient_length
from src.hilbert.filtration import FiltrationCache, normal_colength


def test_colength_of_box(make):
    ideal = make((2, 0, 0), (0, 3, 0), (0, 0, 5))
    assert colength(ideal) == 30
    assert colength_by_scan(ideal) == 30


def test_colength_of_powers_of_maximal_ideal(m):
    for n in range(5):
        assert colength(power(m, n)) == comb(n + 2, 3)


def test_colength_in_low_dimension():
    line = RingContext(("t",))
    assert colength(MonomialIdeal.from_exponents(line, [(5,)])) == 5
    plane = RingContext(("x", "y"))
    staircase = MonomialIdeal.from_exponents(plane, [(2, 0), (1, 1), (0, 3)])
    assert colength(staircase) == 4
    assert colength_by_scan(staircase) == 4


def test_colength_needs_primary_ideal(make):
    with pytest.raises(NotPrimaryError):
        colength(make((1, 0, 0), (0, 1, 0)))


def test_quotient_length(m):
    assert quotient_length(m, power(m, 2)) == 3
    with pytest.raises(ContainmentError):
        quotient_length(power(m, 2), m)


def test_filtration_of_maximal_ideal(m):
    cache = FiltrationCache([m])
    assert [cache.colength((n,)) for n in range(5)] == [comb(n + 2, 3) for n in range(5)]
    assert normal_colength(cache, (3,)) == 10
    assert cache.ideal((0,)).is_unit


def test_filtration_closes_products(make, m):
    squares = make((2, 0, 0), (0, 2, 0), (0, 0, 2))
    assert FiltrationCache([squares]).ideal((1,)) == power(m, 2)

    ideals = [m, make((2, 0, 0), (0, 1, 0), (0, 0, 1)), make((3, 0, 0), (0, 1, 0), (0, 0, 2), (1, 0, 1))]
    cache = FiltrationCache(ideals)
    for point in [(1, 0, 0), (0, 2, 1), (1, 1, 1), (2, 0, 2), (0, 0, 3)]:
        assert cache.ideal(point) == integral_closure(product_of_powers(ideals, point))


def test_adic_filtration_keeps_products(make):
    squares = make((2, 0, 0), (0, 2, 0), (0, 0, 2))
    cache = FiltrationCache([squares], closed=False)
    assert cache.ideal((2,)) == power(squares, 2)
    assert cache.colength((1,)) == 8


def test_restriction_shares_the_table(example_ideals):
    cache = FiltrationCache(example_ideals)
    view = cache.restrict([2, 0])
    first = view.ideal((1, 2))
    assert (2, 0, 1) in cache.table
    assert cache.ideal((2, 0, 1)) == first
    assert view.restrict([1]).colength((3,)) == cache.colength((3, 0, 0))


def test_filtration_validation(make, m):
    with pytest.raises(NotPrimaryError):
        FiltrationCache([make((1, 0, 0), (0, 1, 0))])
    with pytest.raises(PreconditionError):
        FiltrationCache([m, m, m, m])
    cache = FiltrationCache([m, m])
    with pytest.raises(PreconditionError):
        cache.colength((1, -1))
    with pytest.raises(DimensionMismatchError):
        cache.colength((1, 1, 1))
