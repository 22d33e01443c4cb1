"""
Newton polyhedra and integral closures of monomial ideals

The polyhedron conv(gens) + R^d_{>=0} is described by its facets with a
positive right-hand side; the coordinate facets v_i >= 0 are implicit.
Facets are found by candidate-hyperplane enumeration, which is enough in
dimension at most three.
"""

import logging
from dataclasses import dataclass
from itertools import combinations, islice
from typing import Iterable, Iterator, List, Sequence, Set, Tuple

import numpy as np
from sympy import Matrix

from src.algebra.monomial import (
    Exponent,
    MonomialIdeal,
    RingContext,
    minimalize,
    power,
    witness_outside,
)
from src.config.settings import FACET_CANDIDATE_CHUNK, INT64_SAFE_LIMIT
from src.errors import NotPrimaryError, PreconditionError, ZeroIdealError
from src.models.reports import CheckReport, Failure

logger = logging.getLogger(__name__)

Facet = Tuple[Exponent, int]


@dataclass(frozen=True)
class NewtonPolyhedron:
    """
    Half-space description of a Newton polyhedron

    Each facet (normal, offset) encodes normal · v >= offset with a primitive
    nonnegative normal and a positive offset.
    """

    ring: RingContext
    facets: Tuple[Facet, ...]
    source_box: Exponent

    def contains(self, vector: Iterable[int]) -> bool:
        return np_contains(self, vector)

    @property
    def normals(self) -> Tuple[Exponent, ...]:
        return tuple(normal for normal, _ in self.facets)


def _chunks(iterable: Iterable, size: int) -> Iterator[list]:
    iterator = iter(iterable)
    while True:
        block = list(islice(iterator, size))
        if not block:
            return
        yield block


def _cross(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    # Written out so object arrays of Python ints work too
    return np.stack([
        u[:, 1] * v[:, 2] - u[:, 2] * v[:, 1],
        u[:, 2] * v[:, 0] - u[:, 0] * v[:, 2],
        u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0],
    ], axis=1)


def _candidate_batches(points: np.ndarray) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
    """
    Yield (normals, anchor indices) for every hyperplane through j points
    and d - j coordinate directions

    Coordinate normals (j = 1) are handled by the caller.
    """
    count, d = points.shape
    eye = np.identity(d, dtype=np.int64).astype(points.dtype)

    if d >= 2:
        for block in _chunks(combinations(range(count), 2), FACET_CANDIDATE_CHUNK):
            pairs = np.array(block, dtype=np.int64)
            diff = points[pairs[:, 1]] - points[pairs[:, 0]]
            if d == 2:
                yield np.stack([-diff[:, 1], diff[:, 0]], axis=1), pairs[:, 0]
            else:
                for direction in eye:
                    spread = np.broadcast_to(direction, diff.shape)
                    yield _cross(diff, spread), pairs[:, 0]

    if d == 3:
        for block in _chunks(combinations(range(count), 3), FACET_CANDIDATE_CHUNK):
            triples = np.array(block, dtype=np.int64)
            anchor = points[triples[:, 0]]
            yield (
                _cross(points[triples[:, 1]] - anchor, points[triples[:, 2]] - anchor),
                triples[:, 0],
            )


def _accept(
    normals: np.ndarray,
    anchors: np.ndarray,
    points: np.ndarray,
    found: Set[Facet]
) -> None:
    """Normalize candidate normals and keep those supporting the point set at their anchor"""
    keep = (normals != 0).any(axis=1)
    normals, anchors = normals[keep], anchors[keep]

    flip = (normals <= 0).all(axis=1)
    normals[flip] = -normals[flip]
    keep = (normals >= 0).all(axis=1)
    normals, anchors = normals[keep], anchors[keep]
    if len(normals) == 0:
        return

    divisors = np.gcd.reduce(normals, axis=1)
    normals = normals // divisors[:, None]

    values = normals @ points.T
    offsets = values.min(axis=1)
    tight = values[np.arange(len(normals)), anchors] == offsets

    for normal, offset in zip(normals[tight], offsets[tight]):
        if offset > 0:
            found.add((tuple(int(e) for e in normal), int(offset)))


def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """
    Compute the facets of NP(I) with positive offset

    Args:
        ideal: Nonzero monomial ideal

    Returns:
        NewtonPolyhedron with deduplicated, sorted facets
    """
    if ideal.is_zero:
        raise ZeroIdealError("The Newton polyhedron of the zero ideal is empty")

    points = ideal.as_array()
    d = ideal.ring.dimension
    found: Set[Facet] = set()

    # Coordinate facets x_c >= min g_c
    for c in range(d):
        lowest = min(g[c] for g in ideal.generators)
        if lowest > 0:
            found.add((ideal.ring.unit_vector(c), int(lowest)))

    for normals, anchors in _candidate_batches(points):
        _accept(normals.copy(), anchors, points, found)

    facets = tuple(sorted(found))
    logger.debug(f"NP{ideal} has {len(facets)} facets")
    return NewtonPolyhedron(ideal.ring, facets, ideal.source_box())


def np_contains(polyhedron: NewtonPolyhedron, vector: Iterable[int]) -> bool:
    """True iff the vector satisfies every facet inequality"""
    v = polyhedron.ring.check(vector)
    return all(
        sum(n * e for n, e in zip(normal, v)) >= offset
        for normal, offset in polyhedron.facets
    )


def vertices(polyhedron: NewtonPolyhedron, ideal: MonomialIdeal) -> List[Exponent]:
    """
    Generators of the ideal that are vertices of its Newton polyhedron

    A generator is a vertex when the normals of the facets and coordinate
    hyperplanes tight at it span R^d.
    """
    d = ideal.ring.dimension
    result = []
    for g in ideal.generators:
        tight = [
            list(normal) for normal, offset in polyhedron.facets
            if sum(n * e for n, e in zip(normal, g)) == offset
        ]
        tight.extend(list(ideal.ring.unit_vector(i)) for i in range(d) if g[i] == 0)
        if tight and Matrix(tight).rank() == d:
            result.append(g)
    return result


def vertex_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """The ideal generated by the vertices of NP(I); it has the same closure"""
    return minimalize(ideal.ring, vertices(newton_polyhedron(ideal), ideal))


def staircase_heights(
    ring: RingContext,
    facets: Sequence[Facet],
    box: Exponent
) -> np.ndarray:
    """
    Least last coordinate inside the polyhedron above each column

    Columns range over the grid [0, box] of the first d - 1 coordinates.
    Columns with no admissible height inside the box get box[-1] + 1.

    Returns:
        Integer array of shape (box[0] + 1, ..., box[d-2] + 1)
    """
    d = ring.dimension
    cap = box[-1] + 1
    shape = tuple(b + 1 for b in box[:-1])
    dtype = np.int64 if max(box) < INT64_SAFE_LIMIT else object

    if d == 1:
        columns = np.zeros((1, 0), dtype=dtype)
    else:
        axes = [np.arange(b + 1, dtype=np.int64).astype(dtype) for b in box[:-1]]
        columns = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, d - 1)

    heights = np.zeros(len(columns), dtype=dtype)
    blocked = np.zeros(len(columns), dtype=bool)

    for normal, offset in facets:
        head = np.array(normal[:-1], dtype=np.int64).astype(dtype)
        last = normal[-1]
        slack = offset - columns @ head if d > 1 else np.full(len(columns), offset, dtype=dtype)
        if last == 0:
            blocked |= slack > 0
        else:
            need = -((-slack) // last)
            heights = np.maximum(heights, need)

    heights = np.where(blocked, cap, np.minimum(heights, cap))
    return heights.reshape(shape) if d > 1 else heights.reshape(())


def closure_from_polyhedron(
    ring: RingContext,
    facets: Sequence[Facet],
    box: Exponent
) -> MonomialIdeal:
    """
    The monomial ideal of lattice points of a Newton polyhedron

    Minimal generators are read off the staircase: (v', h(v')) is minimal
    when h(v') <= box[-1] and dropping any positive coordinate of v' raises
    the height.
    """
    d = ring.dimension
    heights = staircase_heights(ring, facets, box)
    cap = box[-1] + 1

    if d == 1:
        h = int(heights)
        return MonomialIdeal.principal(ring, (h,)) if h < cap else MonomialIdeal.zero(ring)

    minimal = heights < cap
    for axis in range(d - 1):
        lower = np.full(heights.shape, cap + 1, dtype=heights.dtype)
        head = [slice(None)] * (d - 1)
        tail = [slice(None)] * (d - 1)
        head[axis] = slice(1, None)
        tail[axis] = slice(None, -1)
        lower[tuple(head)] = heights[tuple(tail)]
        minimal &= lower > heights

    generators = [
        tuple(int(c) for c in index) + (int(heights[index]),)
        for index in zip(*np.nonzero(minimal))
    ]
    return MonomialIdeal(ring, tuple(sorted(generators)))


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """
    Integral closure of a monomial ideal via its Newton polyhedron

    Raises:
        ZeroIdealError for the zero ideal
    """
    if ideal.is_zero:
        raise ZeroIdealError("Integral closure of the zero ideal is not defined here")
    if ideal.is_unit:
        return ideal
    polyhedron = newton_polyhedron(ideal)
    return closure_from_polyhedron(ideal.ring, polyhedron.facets, polyhedron.source_box)


def is_complete(ideal: MonomialIdeal) -> bool:
    return integral_closure(ideal) == ideal


def is_normal_up_to(ideal: MonomialIdeal, bound: int) -> CheckReport:
    """
    Check that I^n is complete for every 1 <= n <= bound

    Args:
        ideal: m-primary monomial ideal
        bound: Largest power examined

    Returns:
        CheckReport; on failure the least failing n and a monomial in
        closure(I^n) but not in I^n
    """
    if bound < 1:
        raise PreconditionError(f"Bound must be positive, got {bound}")
    if ideal.pure_power_bounds() is None:
        raise NotPrimaryError(f"{ideal} is not m-primary")

    report = CheckReport(check="normality", bound=bound)
    for n in range(1, bound + 1):
        current = power(ideal, n)
        closed = integral_closure(current)
        report.checked += 1
        if closed != current:
            witness = witness_outside(closed, current)
            report.fail(Failure(
                point=[n],
                detail=f"I^{n} is not complete",
                witness=list(witness),
            ))
            logger.info(f"{ideal}^{n} is not complete, witness {witness}")
            break
    return report
