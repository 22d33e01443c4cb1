"""
Normal filtrations of one to three m-primary monomial ideals

FiltrationCache memoizes n -> (closure(I_1^{n_1} ··· I_s^{n_s}), colength).
Closures are built without forming the product ideal: the Newton
polyhedron of the product is the Minkowski sum n_1·NP(I_1) + ... , whose
facet normals depend only on which n_i are positive and whose offsets are
sums of support-function values.
"""

import logging
from typing import Dict, Iterable, Optional, Sequence, Tuple

from src.algebra.closure import closure_from_polyhedron, newton_polyhedron, vertex_ideal
from src.algebra.monomial import Exponent, MonomialIdeal, multiply, product_of_powers
from src.config.settings import MAX_DIMENSION
from src.errors import DimensionMismatchError, NotPrimaryError, PreconditionError
from src.hilbert.colength import colength

logger = logging.getLogger(__name__)

Entry = Tuple[MonomialIdeal, int]


class FiltrationCache:
    """
    Memo table for the normal (or, with closed=False, adic) filtration

    Args:
        ideals: One to three m-primary ideals over the same ring
        closed: Integral closures when True, plain products when False
        store: Optional CacheStore used to preload and persist entries
    """

    def __init__(
        self,
        ideals: Sequence[MonomialIdeal],
        closed: bool = True,
        store=None
    ):
        ideals = tuple(ideals)
        if not 1 <= len(ideals) <= MAX_DIMENSION:
            raise PreconditionError(f"A filtration needs 1 to {MAX_DIMENSION} ideals, got {len(ideals)}")
        ring = ideals[0].ring
        for ideal in ideals:
            if ideal.ring != ring:
                raise DimensionMismatchError("All ideals of a filtration must share one ring")
            if ideal.pure_power_bounds() is None:
                raise NotPrimaryError(f"{ideal} is not m-primary")

        self.ideals = ideals
        self.ring = ring
        self.closed = closed
        self.table: Dict[Tuple[int, ...], Entry] = {}
        self.store = store

        self._parent: Optional["FiltrationCache"] = None
        self._indices: Tuple[int, ...] = tuple(range(len(ideals)))
        self._boxes = [ideal.source_box() for ideal in ideals]
        self._normals: Dict[Tuple[int, ...], Tuple[Exponent, ...]] = {}
        self._support: Dict[Tuple[int, Exponent], int] = {}

        if store is not None:
            self.table.update(store.load(self))

    @property
    def arity(self) -> int:
        return len(self.ideals)

    @property
    def key(self) -> str:
        """Canonical identifier of the ideal tuple, used by the persistent store"""
        names = ",".join(self.ring.variable_names)
        return f"{names}|" + ";".join(str(ideal) for ideal in self.ideals)

    def check_point(self, n: Iterable[int]) -> Tuple[int, ...]:
        point = tuple(int(e) for e in n)
        if len(point) != self.arity:
            raise DimensionMismatchError(
                f"Exponent tuple {point} does not match {self.arity} ideals"
            )
        if any(e < 0 for e in point):
            raise PreconditionError(f"Negative exponent in {point}")
        return point

    def entry(self, n: Iterable[int]) -> Entry:
        point = self.check_point(n)

        if self._parent is not None:
            full = [0] * self._parent.arity
            for position, index in enumerate(self._indices):
                full[index] = point[position]
            return self._parent.entry(full)

        if point not in self.table:
            ideal = self._compute(point)
            length = colength(ideal)
            self.table[point] = (ideal, length)
            logger.debug(f"Filtration entry {point}: colength {length}")
            if self.store is not None:
                self.store.append(self, point, ideal, length)
        return self.table[point]

    def ideal(self, n: Iterable[int]) -> MonomialIdeal:
        return self.entry(n)[0]

    def colength(self, n: Iterable[int]) -> int:
        return self.entry(n)[1]

    def restrict(self, indices: Sequence[int]) -> "FiltrationCache":
        """
        The filtration of a sub-tuple of the ideals, sharing this table

        Args:
            indices: Positions of the kept ideals, in the order wanted
        """
        indices = tuple(indices)
        if len(set(indices)) != len(indices) or not all(0 <= i < self.arity for i in indices):
            raise PreconditionError(f"Invalid restriction {indices} of arity {self.arity}")

        root = self if self._parent is None else self._parent
        mapped = tuple(self._indices[i] for i in indices)
        view = FiltrationCache([root.ideals[i] for i in mapped], closed=self.closed)
        view._parent = root
        view._indices = mapped
        return view

    def _support_value(self, index: int, normal: Exponent) -> int:
        key = (index, normal)
        if key not in self._support:
            self._support[key] = min(
                sum(a * b for a, b in zip(normal, g)) for g in self.ideals[index].generators
            )
        return self._support[key]

    def _support_normals(self, support: Tuple[int, ...]) -> Tuple[Exponent, ...]:
        if support not in self._normals:
            product = MonomialIdeal.unit(self.ring)
            for index in support:
                product = multiply(product, vertex_ideal(self.ideals[index]))
            self._normals[support] = newton_polyhedron(product).normals
        return self._normals[support]

    def _compute(self, point: Tuple[int, ...]) -> MonomialIdeal:
        support = tuple(i for i, e in enumerate(point) if e > 0)
        if not support:
            return MonomialIdeal.unit(self.ring)
        if not self.closed:
            return product_of_powers(self.ideals, point)

        facets = []
        for normal in self._support_normals(support):
            offset = sum(point[i] * self._support_value(i, normal) for i in support)
            if offset > 0:
                facets.append((normal, offset))

        box = tuple(
            sum(point[i] * self._boxes[i][c] for i in support)
            for c in range(self.ring.dimension)
        )
        return closure_from_polyhedron(self.ring, facets, box)


def normal_colength(cache: FiltrationCache, n: Iterable[int]) -> int:
    """
    λ(R/closure(I_1^{n_1} ··· I_s^{n_s})), memoized in the cache

    Raises:
        PreconditionError on a negative exponent
    """
    return cache.colength(n)
