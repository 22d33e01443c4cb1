import pytest

from src.errors import PreconditionError
from src.reduction.joint import JrTriple, check_good_jr, check_jrn_zero
from src.reduction.kirby_mehran import lc_origin_length
from src.verify.theorems import (
    criterion_sum,
    e3_values,
    length_formula_check,
    linear_coefficients_vanish,
    mixed_coefficient_relations,
    reduction_number_consistency,
    vanishing_criterion,
    verify_equivalences,
)

X, Y, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)


@pytest.fixture
def squares(make):
    return make((2, 0, 0), (0, 2, 0), (0, 0, 2))


def test_criterion_sum_of_maximal_ideal(m):
    values = e3_values(m, m, m)
    assert set(values) == {"I", "J", "K", "IJ", "IK", "JK", "IJK"}
    assert criterion_sum(m, m, m) == 0


def test_criterion_sum_is_symmetric(m, squares, example_ideals):
    _, j, _ = example_ideals
    assert criterion_sum(m, j, squares) == criterion_sum(squares, m, j) == 0


def test_equivalences_on_maximal_ideal(m):
    report = verify_equivalences(m, m, m, JrTriple.of(X, Y, Z, m, m, m), 3)
    assert report.consistent
    assert report.criterion_sum == 0
    assert report.jrn_zero_passed
    assert report.jrn_zero_verified_to == 3
    assert report.lc_origin == 0
    assert report.assumptions


@pytest.mark.parametrize("elements", [(X, X, X), (X, X, Y)])
def test_equivalences_reject_non_reductions(m, elements):
    t = JrTriple(elements, (m, m, m))
    assert not check_jrn_zero(t, 2).passed
    with pytest.raises(PreconditionError):
        verify_equivalences(m, m, m, t, 2)


def test_equivalences_require_matching_hosts(m, squares):
    t = JrTriple.of(X, Y, Z, m, m, m)
    with pytest.raises(PreconditionError, match="hosted"):
        verify_equivalences(squares, m, m, t, 2)
    with pytest.raises(PreconditionError, match="hosted"):
        verify_equivalences(m, squares, m, t, 2)


def test_mixed_relations_of_maximal_ideal(m):
    report = mixed_coefficient_relations(m, m, m)
    assert report.passed
    assert report.checked == 6
    assert report.values["e(1,1,0)"] == report.values["e(1,1)(I,J)"] == 0
    assert report.values["e(2,0,0)"] == report.values["e1(I)"] == 0


def test_mixed_relations_against_pure_squares(m, squares):
    report = mixed_coefficient_relations(squares, m, m)
    assert report.passed
    assert report.values["e(2,0,0)"] == report.values["e1(I)"] == 4


def test_linear_coefficients_vanish_on_maximal_ideal(m):
    report = linear_coefficients_vanish(m, m, m, JrTriple.of(X, Y, Z, m, m, m), 2)
    assert report.passed
    assert (report.values["L_I"], report.values["L_J"], report.values["L_K"]) == (0, 0, 0)


def test_length_formula_on_maximal_ideal(m):
    report = length_formula_check(m, m, m, JrTriple.of(X, Y, Z, m, m, m), 2)
    assert report.passed
    assert report.checked == 8


def test_vanishing_criterion_on_maximal_ideal(m):
    report = vanishing_criterion(m, m, m, JrTriple.of(X, Y, Z, m, m, m), 2, 3)
    assert report.passed
    assert report.values["e3(IJK)"] == 0
    assert report.values["postulation"] == 1
    assert report.values["jrn_zero"] == 1


def test_reduction_number_consistency(squares):
    report = reduction_number_consistency(squares, squares, 4)
    assert report.passed
    assert report.values == {"e3": 0, "reduction_number": 1}
    assert report.notes


@pytest.mark.slow
def test_example_triple_end_to_end(example_ideals):
    t = JrTriple((X, Y, Z), example_ideals)
    assert check_good_jr(t, 3).passed
    assert check_jrn_zero(t, 4).passed
    assert criterion_sum(*example_ideals) == 0
    value, k = lc_origin_length(t, 6)
    assert value == 0
    assert k <= 3
    report = verify_equivalences(*example_ideals, t, 3)
    assert report.consistent


@pytest.mark.slow
def test_example_triple_relations(example_ideals):
    t = JrTriple((X, Y, Z), example_ideals)
    assert mixed_coefficient_relations(*example_ideals).passed
    assert linear_coefficients_vanish(*example_ideals, t, 2).passed
