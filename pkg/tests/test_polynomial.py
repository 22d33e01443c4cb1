from math import comb

import pytest

from src.errors import PreconditionError
from src.hilbert.filtration import FiltrationCache
from src.hilbert.polynomial import (
    basis_indices,
    basis_value,
    e3_of_product,
    fit,
    postulation_check,
    stabilized_fit,
)


def test_basis_indices_order():
    assert basis_indices(1, 3) == [(3,), (2,), (1,), (0,)]
    assert len(basis_indices(3, 3)) == 20
    assert basis_indices(2, 1) == [(1, 0), (0, 1), (0, 0)]


def test_basis_value_vanishes_on_zero_coordinates():
    assert basis_value((0, 0, 0), (0, 0, 0)) == 1
    assert basis_value((1, 0, 0), (0, 5, 5)) == 0
    assert basis_value((2, 1, 0), (3, 2, 0)) == comb(4, 2) * 2


def test_maximal_ideal_coefficients(m):
    poly = stabilized_fit(FiltrationCache([m]), 1)
    assert poly.normal_coefficients() == (1, 0, 0, 0)
    assert poly.offset == 0


def test_pure_squares_coefficients(make):
    squares = make((2, 0, 0), (0, 2, 0), (0, 0, 2))
    poly = fit(FiltrationCache([squares]), 1)
    assert poly.normal_coefficients() == (8, 4, 0, 0)
    assert [poly.evaluate((n,)) for n in range(4)] == [comb(2 * n + 2, 3) for n in range(4)]


def test_trivariate_fit_of_maximal_ideal(m):
    poly = fit(FiltrationCache([m, m, m]), 3)
    for alpha in basis_indices(3, 3):
        assert poly.coefficient(alpha) == (1 if sum(alpha) == 3 else 0)
    assert poly.evaluate((1, 2, 0)) == comb(5, 3)


def test_coefficient_frame(m):
    frame = fit(FiltrationCache([m, m]), 2).as_frame()
    assert list(frame.columns) == ["index", "sign", "coefficient"]
    assert len(frame) == 10
    assert frame.loc[frame["index"] == "2,1", "coefficient"].item() == 1


def test_normal_coefficients_need_arity_one(m):
    poly = fit(FiltrationCache([m, m]), 2)
    with pytest.raises(PreconditionError):
        poly.normal_coefficients()


def test_postulation_holds_for_normal_filtration(make):
    ideal = make((3, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0))
    report = postulation_check(FiltrationCache([ideal]), 1, 6)
    assert report.passed
    assert report.checked == 7
    assert report.values["stable_offset"] == 0


def test_adic_filtration_of_pure_powers(make):
    squares = make((2, 0, 0), (0, 2, 0), (0, 0, 2))
    adic = FiltrationCache([squares], closed=False)
    assert stabilized_fit(adic, 1).normal_coefficients() == (8, 0, 0, 0)
    assert postulation_check(adic, 1, 3).passed


def test_e3_vanishes_for_monomial_ideals(make, m):
    assert e3_of_product([m]) == 0
    assert e3_of_product([make((2, 0, 0), (0, 2, 0), (0, 0, 2))]) == 0
    assert e3_of_product([m, make((2, 0, 0), (0, 1, 0), (0, 0, 1))]) == 0


def test_normal_polynomial_does_not_describe_adic_function(make):
    squares = make((2, 0, 0), (0, 2, 0), (0, 0, 2))
    adic = FiltrationCache([squares], closed=False)
    report = postulation_check(FiltrationCache([squares]), 1, 3, against=adic)
    assert not report.passed
    assert [f.point for f in report.failures] == [[1], [2], [3]]
    assert report.first_failure.expected == 8
    assert report.first_failure.actual == 4


def test_diagonal_of_trivariate_fit_is_fit_of_product(make, m):
    i, j = make((3, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0)), make((2, 0, 0), (0, 1, 0), (0, 0, 3))
    trivariate = stabilized_fit(FiltrationCache([m, i, j]), 3)
    univariate = stabilized_fit(FiltrationCache([m * i * j]), 1)
    for n in range(8):
        assert trivariate.evaluate((n, n, n)) == univariate.evaluate((n,))


def test_mixed_coefficients_are_symmetric(make, m):
    i = make((3, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0))
    forward = stabilized_fit(FiltrationCache([m, i]), 2)
    backward = stabilized_fit(FiltrationCache([i, m]), 2)
    for a, b in basis_indices(2, 3):
        assert forward.coefficient((a, b)) == backward.coefficient((b, a))
    assert forward.coefficient((3, 0)) == 1
    assert forward.coefficient((0, 3)) == stabilized_fit(FiltrationCache([i]), 1).coefficient((3,))
