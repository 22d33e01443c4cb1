"""
Seeded search for triples of m-primary monomial ideals with a monomial
good joint reduction
"""

import logging
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.algebra.monomial import Exponent, MonomialIdeal, RingContext, minimalize
from src.config.settings import (
    CORPUS_EXTRA_GENERATORS,
    CORPUS_GOOD_JR_BOUND,
    CORPUS_MAX_ATTEMPTS,
    CORPUS_MAX_EXPONENT,
    DEFAULT_VARIABLES,
)
from src.errors import PreconditionError
from src.hilbert.filtration import FiltrationCache
from src.reduction.joint import JrTriple, check_good_jr

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    """An admissible triple: ideals, candidate elements and the sampling attempt"""

    ideals: Tuple[MonomialIdeal, ...]
    elements: Tuple[Exponent, ...]
    attempt: int

    def triple(self, cache: Optional[FiltrationCache] = None) -> JrTriple:
        return JrTriple(self.elements, self.ideals, cache=cache)

    def as_record(self) -> Dict[str, str]:
        ring = self.ideals[0].ring
        record = {name: str(ideal) for name, ideal in zip("IJK", self.ideals)}
        record.update({name: ring.format_monomial(e) for name, e in zip("abc", self.elements)})
        return record


def random_primary_ideal(
    rng: np.random.Generator,
    ring: RingContext,
    max_exponent: int = CORPUS_MAX_EXPONENT,
    extra: int = CORPUS_EXTRA_GENERATORS
) -> MonomialIdeal:
    """Pure powers with exponents in [1, max_exponent] plus up to `extra` mixed generators"""
    d = ring.dimension
    pure = rng.integers(1, max_exponent + 1, size=d)
    generators = [
        tuple(int(pure[i]) if j == i else 0 for j in range(d))
        for i in range(d)
    ]
    for _ in range(int(rng.integers(0, extra + 1))):
        vector = tuple(int(e) for e in rng.integers(0, max_exponent + 1, size=d))
        if any(vector):
            generators.append(vector)
    return minimalize(ring, generators)


def _candidates(ideals: Sequence[MonomialIdeal]) -> Iterator[Tuple[Exponent, ...]]:
    """
    Candidate element triples: pure powers of distinct variables first, then
    every generator combination that spans an m-primary ideal
    """
    ring = ideals[0].ring
    d = ring.dimension
    seen = set()

    bounds = [ideal.pure_power_bounds() for ideal in ideals]
    for order in permutations(range(d), len(ideals)):
        elements = tuple(
            tuple(bounds[i][v] if c == v else 0 for c in range(d))
            for i, v in enumerate(order)
        )
        seen.add(elements)
        yield elements

    for elements in product(*(ideal.generators for ideal in ideals)):
        if elements in seen:
            continue
        if minimalize(ring, elements).pure_power_bounds() is not None:
            seen.add(elements)
            yield elements


def find_good_jr(
    ideals: Sequence[MonomialIdeal],
    bound: int = CORPUS_GOOD_JR_BOUND
) -> Optional[JrTriple]:
    """The first candidate triple passing check_good_jr up to the bound, or None"""
    cache = FiltrationCache(ideals)
    for elements in _candidates(ideals):
        triple = JrTriple(elements, tuple(ideals), cache=cache)
        if check_good_jr(triple, bound).passed:
            return triple
    return None


def search_corpus(
    seed: int,
    count: int,
    bound: int = CORPUS_GOOD_JR_BOUND,
    ring: Optional[RingContext] = None,
    max_attempts: int = CORPUS_MAX_ATTEMPTS
) -> List[CorpusEntry]:
    """
    Sample random triples of m-primary ideals and keep those with a
    monomial good joint reduction

    Args:
        seed: Seed of the numpy generator; equal seeds give equal corpora
        count: Number of admissible triples wanted
        bound: Bound handed to check_good_jr
        ring: Three-variable ring, x,y,z by default
        max_attempts: Sampled triples before giving up

    Returns:
        Up to `count` entries in sampling order
    """
    ring = ring or RingContext(DEFAULT_VARIABLES)
    if ring.dimension != 3:
        raise PreconditionError("Corpus triples live in dimension 3")
    if count < 1:
        raise PreconditionError(f"Count must be positive, got {count}")

    rng = np.random.default_rng(seed)
    entries: List[CorpusEntry] = []
    for attempt in range(max_attempts):
        if len(entries) >= count:
            break
        ideals = tuple(random_primary_ideal(rng, ring) for _ in range(3))
        triple = find_good_jr(ideals, bound)
        if triple is None:
            logger.debug(f"Attempt {attempt}: no monomial good joint reduction, skipped")
            continue
        entries.append(CorpusEntry(ideals, triple.elements, attempt))

    if len(entries) < count:
        logger.warning(f"Found {len(entries)} of {count} admissible triples in {max_attempts} attempts")
    logger.info(f"Corpus with seed {seed}: {len(entries)} admissible triples")
    return entries
