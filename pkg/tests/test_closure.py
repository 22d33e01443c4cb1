import numpy as np
import pytest

from src.algebra.closure import (
    integral_closure,
    is_complete,
    is_normal_up_to,
    newton_polyhedron,
    np_contains,
    vertex_ideal,
    vertices,
)
from src.algebra.monomial import MonomialIdeal, RingContext, membership_mask, power
from src.errors import NotPrimaryError, ZeroIdealError
from src.verify.oracle import box_points, oracle_closure


@pytest.fixture
def plane():
    return RingContext(("x", "y"))


def test_closure_of_pure_squares_is_square_of_maximal_ideal(make, m):
    assert integral_closure(make((2, 0, 0), (0, 2, 0), (0, 0, 2))) == power(m, 2)


def test_closure_of_cubes_in_the_plane(plane):
    ideal = MonomialIdeal.from_exponents(plane, [(3, 0), (0, 3)])
    expected = MonomialIdeal.from_exponents(plane, [(3, 0), (2, 1), (1, 2), (0, 3)])
    assert integral_closure(ideal) == expected
    assert str(expected) == "(y^3, x*y^2, x^2*y, x^3)"


def test_closure_of_non_primary_ideal(make):
    assert integral_closure(make((2, 0, 0), (0, 2, 0))) == make((2, 0, 0), (1, 1, 0), (0, 2, 0))


def test_closure_in_one_variable():
    line = RingContext(("t",))
    ideal = MonomialIdeal.from_exponents(line, [(4,)])
    assert integral_closure(ideal) == ideal


def test_complete_ideals(m, example_ideals):
    assert is_complete(m)
    assert is_complete(example_ideals[1])
    assert integral_closure(MonomialIdeal.unit(m.ring)).is_unit
    with pytest.raises(ZeroIdealError):
        integral_closure(MonomialIdeal.zero(m.ring))


def test_facets_of_pure_squares(make):
    polyhedron = newton_polyhedron(make((2, 0, 0), (0, 2, 0), (0, 0, 2)))
    assert polyhedron.facets == (((1, 1, 1), 2),)
    assert np_contains(polyhedron, (1, 1, 0))
    assert not np_contains(polyhedron, (1, 0, 0))


def test_vertices_skip_generators_on_edges(plane):
    ideal = MonomialIdeal.from_exponents(plane, [(2, 0), (1, 1), (0, 2)])
    assert vertices(newton_polyhedron(ideal), ideal) == [(2, 0), (0, 2)]
    assert vertex_ideal(ideal) == MonomialIdeal.from_exponents(plane, [(2, 0), (0, 2)])


def test_staircase_agrees_with_facet_inequalities(make):
    ideal = make((5, 0, 0), (0, 3, 0), (0, 0, 4), (2, 1, 1), (1, 0, 2))
    polyhedron = newton_polyhedron(ideal)
    closed = integral_closure(ideal)
    points = box_points(ideal.source_box())
    inside = np.array([np_contains(polyhedron, tuple(int(e) for e in p)) for p in points])
    assert (membership_mask(closed, points) == inside).all()


@pytest.mark.parametrize("k", range(1, 7))
def test_newton_polyhedron_scales_with_powers(make, k):
    ideal = make((3, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0))
    polyhedron = newton_polyhedron(ideal)
    scaled = newton_polyhedron(power(ideal, k))
    assert scaled.facets == tuple((normal, k * offset) for normal, offset in polyhedron.facets)
    for row in box_points((4, 3, 3)):
        v = tuple(int(e) for e in row)
        assert np_contains(scaled, tuple(k * e for e in v)) == np_contains(polyhedron, v)


@pytest.mark.parametrize("vectors", [
    [(2, 0, 0), (0, 2, 0), (0, 0, 2)],
    [(3, 0, 0), (0, 3, 0), (0, 0, 3)],
    [(2, 0, 0), (0, 3, 0), (0, 0, 1)],
    [(4, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)],
])
def test_closure_matches_power_oracle(make, vectors):
    ideal = make(*vectors)
    assert integral_closure(ideal) == oracle_closure(ideal)


def test_normality_witness(make):
    report = is_normal_up_to(make((2, 0, 0), (0, 2, 0), (0, 0, 2)), 3)
    assert not report.passed
    assert report.first_failure.point == [1]
    assert report.first_failure.witness == [1, 1, 0]


def test_maximal_ideal_is_normal(m):
    report = is_normal_up_to(m, 3)
    assert report.passed
    assert report.checked == 3


def test_normality_needs_primary_ideal(make):
    with pytest.raises(NotPrimaryError):
        is_normal_up_to(make((1, 0, 0), (0, 1, 0)), 2)
