from hypothesis import given
from hypothesis import strategies as st

from src.algebra.closure import integral_closure
from src.algebra.monomial import MonomialIdeal, RingContext, colon, intersect
from src.cli.parser import read_ideal
from src.hilbert.colength import colength, colength_by_scan
from src.hilbert.filtration import FiltrationCache, normal_colength
from src.verify.oracle import box_colon, box_intersect, oracle_closure

RING = RingContext(("x", "y", "z"))

exponents = st.tuples(*[st.integers(0, 3)] * 3).filter(any)


@st.composite
def ideals(draw, max_size=4):
    return MonomialIdeal.from_exponents(RING, draw(st.lists(exponents, min_size=1, max_size=max_size)))


@st.composite
def primary_ideals(draw, max_size=3):
    powers = [(draw(st.integers(1, 3)), 0, 0), (0, draw(st.integers(1, 3)), 0), (0, 0, draw(st.integers(1, 3)))]
    extra = draw(st.lists(exponents, max_size=max_size))
    return MonomialIdeal.from_exponents(RING, powers + extra)


@given(ideals(), ideals())
def test_sum_and_product_commute(i, j):
    assert i + j == j + i
    assert i * j == j * i


@given(ideals(3), ideals(3), ideals(3))
def test_product_distributes_over_sum(i, j, k):
    assert (i + j) * k == i * k + j * k


@given(ideals(), ideals())
def test_product_lies_in_intersection(i, j):
    meet = intersect(i, j)
    assert (i * j).is_subset(meet)
    assert meet.is_subset(i) and meet.is_subset(j)


@given(ideals(), ideals())
def test_colon_times_divisor_lies_in_ideal(i, j):
    assert (colon(i, j) * j).is_subset(i)


@given(primary_ideals())
def test_closure_is_an_idempotent_extension(i):
    closed = integral_closure(i)
    assert i.is_subset(closed)
    assert integral_closure(closed) == closed


@given(primary_ideals(), primary_ideals())
def test_closure_is_monotone(i, j):
    assert integral_closure(i).is_subset(integral_closure(i + j))


@given(primary_ideals(2), primary_ideals(2))
def test_product_of_closures_lies_in_closure_of_product(i, j):
    assert (integral_closure(i) * integral_closure(j)).is_subset(integral_closure(i * j))


@given(primary_ideals(2))
def test_certified_points_lie_in_closure(i):
    assert oracle_closure(i).is_subset(integral_closure(i))


@given(primary_ideals())
def test_colength_matches_scan(i):
    assert colength(i) == colength_by_scan(i)


@given(primary_ideals(2), st.tuples(*[st.integers(0, 1)] * 3))
def test_repeated_ideal_filtration_agrees_with_single_ideal(i, point):
    total = sum(point)
    assert FiltrationCache([i, i, i]).colength(point) == FiltrationCache([i]).colength((total,))


@given(ideals())
def test_printed_ideal_reparses(i):
    assert read_ideal(str(i), RING) == i


@given(ideals(), ideals())
def test_intersection_matches_enumeration(i, j):
    assert intersect(i, j) == box_intersect(i, j)


@given(ideals(), ideals())
def test_colon_matches_enumeration(i, j):
    assert colon(i, j) == box_colon(i, j)


@given(primary_ideals(2), primary_ideals(2), st.tuples(*[st.integers(0, 2)] * 2), st.tuples(*[st.integers(0, 2)] * 2))
def test_normal_colength_is_monotone(i, j, point, step):
    cache = FiltrationCache([i, j])
    larger = tuple(a + b for a, b in zip(point, step))
    assert normal_colength(cache, point) <= normal_colength(cache, larger)
