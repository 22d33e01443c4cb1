import pytest

from src.algebra.monomial import (
    MonomialIdeal,
    RingContext,
    colon,
    intersect,
    is_m_primary,
    minimalize,
    power,
    product_of_powers,
    scale,
    witness_outside,
)
from src.errors import DimensionMismatchError, PreconditionError, ZeroIdealError


def test_minimalize_drops_multiples(ring):
    ideal = minimalize(ring, [(2, 0, 0), (3, 1, 0), (0, 1, 0), (2, 0, 0)])
    assert ideal.generators == ((0, 1, 0), (2, 0, 0))
    assert str(ideal) == "(y, x^2)"


def test_generators_are_strictly_increasing(ring, make, m):
    assert minimalize(ring, [(0, 1, 0), (1, 0, 0)]).generators == ((0, 1, 0), (1, 0, 0))
    for ideal in [m, power(m, 3), make((2, 0, 0), (0, 3, 1), (1, 1, 1)) * m]:
        assert list(ideal.generators) == sorted(set(ideal.generators))


def test_zero_and_unit_print(ring):
    assert str(MonomialIdeal.zero(ring)) == "(0)"
    assert str(MonomialIdeal.unit(ring)) == "(1)"
    assert minimalize(ring, [(0, 0, 0), (1, 2, 3)]).is_unit


def test_membership(make):
    ideal = make((2, 0, 0), (0, 1, 0))
    assert (2, 1, 0) in ideal
    assert (1, 0, 5) not in ideal
    assert (0, 0, 0) not in MonomialIdeal.zero(ideal.ring)


def test_sum_and_product(make):
    x, y = make((1, 0, 0)), make((0, 1, 0))
    assert x + y == make((1, 0, 0), (0, 1, 0))
    square = (x + y) * (x + y)
    assert square.generators == ((0, 2, 0), (1, 1, 0), (2, 0, 0))
    assert power(x + y, 2) == square


def test_intersection_of_monomial_ideals(make):
    first = make((2, 0, 0), (0, 1, 0))
    second = make((1, 0, 0), (0, 2, 0))
    assert intersect(first, second) == make((2, 0, 0), (1, 1, 0), (0, 2, 0))
    assert intersect(first, MonomialIdeal.zero(first.ring)).is_zero


def test_colon(make):
    ideal = make((2, 0, 0), (0, 1, 0))
    assert colon(ideal, make((1, 0, 0))) == make((1, 0, 0), (0, 1, 0))
    assert colon(ideal, MonomialIdeal.unit(ideal.ring)) == ideal
    with pytest.raises(ZeroIdealError):
        colon(ideal, MonomialIdeal.zero(ideal.ring))


def test_powers(make, m):
    assert power(m, 0).is_unit
    assert len(power(m, 3).generators) == 10
    with pytest.raises(PreconditionError):
        power(m, -1)
    assert product_of_powers([m, make((2, 0, 0), (0, 1, 0), (0, 0, 1))], [1, 0]) == m


def test_scale_translates_generators(make):
    ideal = make((1, 0, 0), (0, 1, 0))
    assert scale(ideal, (0, 0, 2)) == make((1, 0, 2), (0, 1, 2))


def test_ring_validation(ring):
    with pytest.raises(DimensionMismatchError):
        ring.check((1, 2))
    with pytest.raises(PreconditionError):
        ring.check((1, -1, 0))
    with pytest.raises(PreconditionError):
        RingContext(("x", "x"))
    with pytest.raises(PreconditionError):
        RingContext(("a", "b", "c", "d"))
    assert RingContext.from_spec("a, b").dimension == 2


def test_mixed_rings_rejected(make):
    other = MonomialIdeal.from_exponents(RingContext(("a", "b", "c")), [(1, 0, 0)])
    with pytest.raises(DimensionMismatchError):
        make((1, 0, 0)) + other


def test_format_monomial(ring):
    assert ring.format_monomial((2, 1, 0)) == "x^2*y"
    assert ring.format_monomial((0, 0, 0)) == "1"


def test_witness_prefers_low_degree_then_earlier_variables(make):
    ideal = make((0, 1, 1), (1, 1, 0), (3, 0, 0))
    assert witness_outside(ideal, make((3, 0, 0))) == (1, 1, 0)
    assert witness_outside(make((3, 0, 0)), ideal) is None


def test_m_primary(make):
    assert is_m_primary(make((2, 0, 0), (0, 3, 0), (0, 0, 1), (1, 1, 0))) == (True, (2, 3, 1))
    assert is_m_primary(make((1, 0, 0), (0, 1, 0))) == (False, None)


def test_source_box(make):
    assert make((2, 1, 0), (0, 3, 0)).source_box() == (2, 3, 0)
    with pytest.raises(ZeroIdealError):
        MonomialIdeal.zero(make((1, 0, 0)).ring).source_box()
