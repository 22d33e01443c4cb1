"""
Completeness of products of complete monomial ideals

If every product of total degree at most two is complete, then every
product I^r J^s K^t is complete. The check decides the small-degree
hypothesis exactly and then searches a bounded box for counterexamples.
"""

import logging
from itertools import product
from typing import Optional, Sequence, Tuple

from src.algebra.monomial import MonomialIdeal, product_of_powers, witness_outside
from src.errors import PreconditionError
from src.hilbert.filtration import FiltrationCache
from src.models.reports import CheckReport, Failure

logger = logging.getLogger(__name__)

HYPOTHESIS_DEGREE = 2


def _incomplete_witness(cache: FiltrationCache, n: Tuple[int, ...]):
    """A monomial of closure(∏ I_i^{n_i}) outside the product, or None"""
    plain = product_of_powers(cache.ideals, n)
    return witness_outside(cache.ideal(n), plain)


def _label(n: Sequence[int]) -> str:
    names = "IJK"
    parts = [
        names[i] if e == 1 else f"{names[i]}^{e}"
        for i, e in enumerate(n) if e > 0
    ]
    return "".join(parts) or "R"


def vitulli_check(
    ideals: Sequence[MonomialIdeal],
    bound: int,
    cache: Optional[FiltrationCache] = None
) -> CheckReport:
    """
    Decide the small-degree completeness hypothesis and, when it holds,
    verify completeness of every product with exponents up to the bound

    Args:
        ideals: One to three m-primary monomial ideals in dimension 3
        bound: Largest exponent of each ideal in the second phase
        cache: Optional filtration cache of the same ideals

    Returns:
        CheckReport "vitulli". values holds "hypothesis" (0/1) and the
        number of products examined in each phase. A failure in the first
        phase names the least incomplete product; a failure in the second
        phase contradicts the theorem and is logged as an error.
    """
    ideals = tuple(ideals)
    if bound < 1:
        raise PreconditionError(f"Bound must be positive, got {bound}")
    if any(ideal.ring.dimension != 3 for ideal in ideals):
        raise PreconditionError("The product completeness check works in dimension 3")
    if cache is None:
        cache = FiltrationCache(ideals)

    s = len(ideals)
    report = CheckReport(check="vitulli", bound=bound)

    small = sorted(
        (n for n in product(range(HYPOTHESIS_DEGREE + 1), repeat=s) if sum(n) <= HYPOTHESIS_DEGREE),
        key=lambda n: (sum(n), tuple(-e for e in n)),
    )
    hypothesis = True
    for n in small:
        report.checked += 1
        witness = _incomplete_witness(cache, n)
        if witness is not None:
            hypothesis = False
            report.fail(Failure(
                point=list(n),
                detail=f"hypothesis fails: {_label(n)} is not complete",
                witness=list(witness),
            ))
            logger.info(f"{_label(n)} is not complete, witness {witness}")
            break

    report.values["hypothesis"] = int(hypothesis)
    report.values["phase1_checked"] = report.checked
    if not hypothesis:
        report.values["phase2_checked"] = 0
        return report

    examined = 0
    for n in product(range(bound + 1), repeat=s):
        if sum(n) <= HYPOTHESIS_DEGREE:
            continue
        examined += 1
        witness = _incomplete_witness(cache, n)
        if witness is not None:
            logger.error(f"{_label(n)} is not complete although the hypothesis holds, witness {witness}")
            report.fail(Failure(
                point=list(n),
                detail=f"{_label(n)} is not complete although the hypothesis holds",
                witness=list(witness),
            ))
            break

    report.checked += examined
    report.values["phase2_checked"] = examined
    logger.info(f"Product completeness: hypothesis holds, {examined} further products examined")
    return report
