"""
Normal reduction numbers of a single m-primary monomial ideal
"""

import logging
from typing import Optional

from src.algebra.monomial import MonomialIdeal, multiply
from src.errors import ContainmentError, NotPrimaryError, PreconditionError
from src.hilbert.filtration import FiltrationCache

logger = logging.getLogger(__name__)


def normal_reduction_number(
    ideal: MonomialIdeal,
    reduction: MonomialIdeal,
    bound: int,
    cache: Optional[FiltrationCache] = None
) -> Optional[int]:
    """
    Largest n <= bound with closure(I^n) != K · closure(I^{n-1})

    Args:
        ideal: m-primary monomial ideal I
        reduction: Candidate reduction K ⊆ I
        bound: Largest n examined
        cache: Normal filtration of I, created when omitted

    Returns:
        The reduction number, or None when the equality still fails at
        n = bound (the number exceeds the bound)

    Raises:
        ContainmentError if K is not contained in I
    """
    if bound < 1:
        raise PreconditionError(f"Bound must be positive, got {bound}")
    if reduction.pure_power_bounds() is None:
        raise NotPrimaryError(f"{reduction} is not m-primary")
    if not reduction.is_subset(ideal):
        raise ContainmentError(f"{reduction} is not contained in {ideal}")

    cache = cache or FiltrationCache([ideal])
    last_failure = 0
    for n in range(1, bound + 1):
        if cache.ideal((n,)) != multiply(reduction, cache.ideal((n - 1,))):
            last_failure = n

    if last_failure == bound:
        logger.info(f"Normal reduction number of {ideal} exceeds {bound}")
        return None
    logger.info(f"Normal reduction number of {ideal} w.r.t. {reduction} is {last_failure}")
    return last_failure
