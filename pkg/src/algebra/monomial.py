"""
Monomial ideals in polynomial rings of dimension at most three

An ideal is stored as its minimal monomial generators, sorted
lexicographically, so equality of ideals is equality of generator tuples.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.config.settings import DEFAULT_VARIABLES, MAX_DIMENSION, INT64_SAFE_LIMIT
from src.errors import DimensionMismatchError, PreconditionError, ZeroIdealError

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]

# Upper bound on booleans materialized by one dominance broadcast
_DOMINANCE_BLOCK = 400_000


def as_array(vectors: Sequence[Sequence[int]], width: int) -> np.ndarray:
    """
    Stack exponent vectors into a 2-D integer array

    Args:
        vectors: Exponent vectors of equal length
        width: Vector length (used when vectors is empty)

    Returns:
        int64 array, or an object array of Python ints when a coordinate
        is too large for fixed-width arithmetic downstream
    """
    if len(vectors) == 0:
        return np.zeros((0, width), dtype=np.int64)
    peak = max(max(v) for v in vectors)
    dtype = np.int64 if peak < INT64_SAFE_LIMIT else object
    return np.array([list(v) for v in vectors], dtype=dtype).reshape(len(vectors), width)


@dataclass(frozen=True)
class RingContext:
    """Polynomial ring k[x_1, ..., x_d] localized at the origin, d <= 3"""

    variable_names: Tuple[str, ...] = DEFAULT_VARIABLES

    def __post_init__(self):
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)

        if not 1 <= len(names) <= MAX_DIMENSION:
            raise PreconditionError(
                f"Ring dimension must be between 1 and {MAX_DIMENSION}, got {len(names)}"
            )
        if len(set(names)) != len(names):
            raise PreconditionError(f"Variable names must be distinct: {names}")
        for name in names:
            if not name.isidentifier():
                raise PreconditionError(f"Invalid variable name: {name!r}")

    @classmethod
    def from_spec(cls, spec: str) -> "RingContext":
        """Build a ring from a comma separated list such as 'a,b,c'"""
        names = tuple(part.strip() for part in spec.split(",") if part.strip())
        return cls(names)

    @property
    def dimension(self) -> int:
        return len(self.variable_names)

    def check(self, vector: Iterable[int]) -> Exponent:
        """
        Validate an exponent vector against this ring

        Args:
            vector: Candidate exponent vector

        Returns:
            The vector as a tuple of Python ints

        Raises:
            DimensionMismatchError if the length is wrong
            PreconditionError if an entry is negative
        """
        entries = tuple(int(e) for e in vector)
        if len(entries) != self.dimension:
            raise DimensionMismatchError(
                f"Exponent vector {entries} has length {len(entries)}, "
                f"ring has dimension {self.dimension}"
            )
        if any(e < 0 for e in entries):
            raise PreconditionError(f"Negative exponent in {entries}")
        return entries

    def zero_vector(self) -> Exponent:
        return (0,) * self.dimension

    def unit_vector(self, index: int) -> Exponent:
        return tuple(1 if i == index else 0 for i in range(self.dimension))

    def format_monomial(self, vector: Exponent) -> str:
        """Render an exponent vector as 'x^2*y'; the empty product is '1'"""
        factors = []
        for name, exponent in zip(self.variable_names, vector):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{exponent}")
        return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its canonical minimal generators"""

    ring: RingContext
    generators: Tuple[Exponent, ...]

    @classmethod
    def zero(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, (ring.zero_vector(),))

    @classmethod
    def principal(cls, ring: RingContext, vector: Iterable[int]) -> "MonomialIdeal":
        return cls(ring, (ring.check(vector),))

    @classmethod
    def from_exponents(
        cls,
        ring: RingContext,
        raw: Iterable[Iterable[int]]
    ) -> "MonomialIdeal":
        return minimalize(ring, raw)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == (self.ring.zero_vector(),)

    def __contains__(self, vector) -> bool:
        return contains_monomial(self, vector)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return add(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return multiply(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __pow__(self, n: int) -> "MonomialIdeal":
        return power(self, n)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(self.ring.format_monomial(g) for g in self.generators) + ")"

    def is_subset(self, other: "MonomialIdeal") -> bool:
        """True iff self ⊆ other, checked generator by generator"""
        _require_same_ring(self, other)
        return all(contains_monomial(other, g) for g in self.generators)

    def source_box(self) -> Exponent:
        """Componentwise maximum of the generators"""
        if self.is_zero:
            raise ZeroIdealError("The zero ideal has no generators")
        return tuple(max(column) for column in zip(*self.generators))

    def pure_power_bounds(self) -> Optional[Exponent]:
        """Least a_i with x_i^{a_i} in the ideal, or None if some variable has none"""
        bounds = []
        for i in range(self.ring.dimension):
            powers = [
                g[i] for g in self.generators
                if all(e == 0 for j, e in enumerate(g) if j != i)
            ]
            if not powers:
                return None
            bounds.append(min(powers))
        return tuple(bounds)

    def as_array(self) -> np.ndarray:
        return as_array(self.generators, self.ring.dimension)


def _require_same_ring(first: MonomialIdeal, second: MonomialIdeal) -> None:
    if first.ring != second.ring:
        raise DimensionMismatchError(
            f"Ideals live in different rings: {first.ring.variable_names} "
            f"vs {second.ring.variable_names}"
        )


def dominance_mask(points: np.ndarray, divisors: np.ndarray) -> np.ndarray:
    """
    For each row of points, whether some row of divisors is componentwise <= it

    Args:
        points: (P, d) integer array
        divisors: (G, d) integer array

    Returns:
        Boolean array of length P
    """
    mask = np.zeros(len(points), dtype=bool)
    if len(divisors) == 0 or len(points) == 0:
        return mask
    rows = max(1, _DOMINANCE_BLOCK // (len(divisors) * max(points.shape[1], 1)))
    for start in range(0, len(points), rows):
        block = points[start:start + rows]
        mask[start:start + rows] = (divisors[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
    return mask


def membership_mask(ideal: MonomialIdeal, points: np.ndarray) -> np.ndarray:
    """Vectorized contains_monomial over the rows of an exponent array"""
    return dominance_mask(points, ideal.as_array())


def _dominated(candidates: List[Exponent], divisors: List[Exponent], width: int) -> List[bool]:
    hits = dominance_mask(as_array(candidates, width), as_array(divisors, width))
    return [bool(h) for h in hits]


def minimalize(ring: RingContext, raw: Iterable[Iterable[int]]) -> MonomialIdeal:
    """
    Canonical form of the ideal generated by a set of exponent vectors

    Args:
        ring: Ambient ring
        raw: Exponent vectors, possibly redundant

    Returns:
        MonomialIdeal whose generators form an antichain in increasing lexicographic order
    """
    vectors = sorted({ring.check(v) for v in raw}, key=lambda v: (sum(v), v))
    if not vectors:
        return MonomialIdeal.zero(ring)
    if sum(vectors[0]) == 0:
        return MonomialIdeal.unit(ring)

    # Equal total degree never divides unless equal, so compare against lower levels only
    survivors: List[Exponent] = []
    for _, level in groupby(vectors, key=sum):
        level = list(level)
        if survivors:
            flags = _dominated(level, survivors, ring.dimension)
            level = [v for v, hit in zip(level, flags) if not hit]
        survivors.extend(level)

    return MonomialIdeal(ring, tuple(sorted(survivors)))


def contains_monomial(ideal: MonomialIdeal, vector: Iterable[int]) -> bool:
    """True iff some generator divides the monomial x^vector"""
    v = ideal.ring.check(vector)
    return any(all(g_i <= v_i for g_i, v_i in zip(g, v)) for g in ideal.generators)


def add(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _require_same_ring(first, second)
    return minimalize(first.ring, first.generators + second.generators)


def multiply(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _require_same_ring(first, second)
    if first.is_zero or second.is_zero:
        return MonomialIdeal.zero(first.ring)
    return minimalize(
        first.ring,
        (tuple(a + b for a, b in zip(g, h)) for g in first.generators for h in second.generators)
    )


def scale(ideal: MonomialIdeal, vector: Iterable[int]) -> MonomialIdeal:
    """The ideal x^vector · I"""
    v = ideal.ring.check(vector)
    return MonomialIdeal(
        ideal.ring,
        tuple(tuple(a + b for a, b in zip(g, v)) for g in ideal.generators)
    )


@lru_cache(maxsize=4096)
def _power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    if n == 0:
        return MonomialIdeal.unit(ideal.ring)
    if n == 1:
        return ideal
    return multiply(ideal, _power(ideal, n - 1))


def power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """I^n with I^0 the unit ideal; results are memoized per (I, n)"""
    if n < 0:
        raise PreconditionError(f"Power exponent must be nonnegative, got {n}")
    return _power(ideal, int(n))


def product_of_powers(ideals: Sequence[MonomialIdeal], exponents: Sequence[int]) -> MonomialIdeal:
    """I_1^{n_1} ··· I_s^{n_s}"""
    if len(ideals) != len(exponents):
        raise DimensionMismatchError(
            f"{len(ideals)} ideals but {len(exponents)} exponents"
        )
    result = MonomialIdeal.unit(ideals[0].ring)
    for ideal, n in zip(ideals, exponents):
        result = multiply(result, power(ideal, n))
    return result


def intersect(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _require_same_ring(first, second)
    if first.is_zero or second.is_zero:
        return MonomialIdeal.zero(first.ring)
    return minimalize(
        first.ring,
        (tuple(max(a, b) for a, b in zip(g, h)) for g in first.generators for h in second.generators)
    )


def colon(ideal: MonomialIdeal, divisor: MonomialIdeal) -> MonomialIdeal:
    """
    Ideal quotient (I : J) as the intersection of the per-generator quotients

    Raises:
        ZeroIdealError if J is the zero ideal
    """
    _require_same_ring(ideal, divisor)
    if divisor.is_zero:
        raise ZeroIdealError("Colon by the zero ideal is undefined")

    result = MonomialIdeal.unit(ideal.ring)
    for h in divisor.generators:
        quotient = minimalize(
            ideal.ring,
            (tuple(max(a - b, 0) for a, b in zip(g, h)) for g in ideal.generators)
        )
        result = intersect(result, quotient)
    return result


def witness_outside(ideal: MonomialIdeal, other: MonomialIdeal) -> Optional[Exponent]:
    """
    A generator of the first ideal outside the second, or None if contained

    The least such generator in degree, then with larger exponents of earlier
    variables first, so x*y is preferred over y*z.
    """
    outside = [g for g in ideal.generators if not contains_monomial(other, g)]
    if not outside:
        return None
    return min(outside, key=lambda g: (sum(g), tuple(-e for e in g)))


def is_m_primary(ideal: MonomialIdeal) -> Tuple[bool, Optional[Exponent]]:
    """
    Whether the ideal contains a pure power of every variable

    Returns:
        (True, minimal pure-power exponents) or (False, None)
    """
    bounds = ideal.pure_power_bounds()
    return bounds is not None, bounds
