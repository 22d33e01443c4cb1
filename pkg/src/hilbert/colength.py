"""
Colengths of m-primary monomial ideals

λ(R/I) is the number of standard monomials. The staircase count sums the
column heights of I over the first d - 1 coordinates; the dense scan
enumerates the whole box and is kept as a reference implementation.
"""

import logging

import numpy as np

from src.algebra.monomial import Exponent, MonomialIdeal, membership_mask, witness_outside
from src.config.settings import INT64_SAFE_LIMIT
from src.errors import ContainmentError, NotPrimaryError

logger = logging.getLogger(__name__)

# Rows of the box materialized at once by the dense scan
_SCAN_BLOCK = 200_000


def primary_bounds(ideal: MonomialIdeal) -> Exponent:
    """Minimal pure-power exponents, raising if the ideal is not m-primary"""
    bounds = ideal.pure_power_bounds()
    if bounds is None:
        raise NotPrimaryError(f"{ideal} is not m-primary; its colength is infinite")
    return bounds


def column_heights(ideal: MonomialIdeal) -> np.ndarray:
    """
    Heights of the staircase of an m-primary ideal

    heights[v'] is the least h with (v', h) in the ideal, for v' in the box
    ∏[0, a_i) over the first d - 1 coordinates.
    """
    bounds = primary_bounds(ideal)
    d = ideal.ring.dimension
    cap = bounds[-1]
    dtype = np.int64 if max(bounds) < INT64_SAFE_LIMIT else object

    heights = np.full(bounds[:-1], cap, dtype=dtype)
    for g in ideal.generators:
        head = g[:-1]
        if all(e < b for e, b in zip(head, bounds)):
            heights[head] = min(heights[head], g[-1])

    for axis in range(d - 1):
        heights = np.minimum.accumulate(heights, axis=axis)
    return heights


def colength(ideal: MonomialIdeal) -> int:
    """
    λ(R/I) for an m-primary monomial ideal

    Raises:
        NotPrimaryError if some variable has no pure power in I
    """
    if ideal.ring.dimension == 1:
        return primary_bounds(ideal)[0]
    return int(column_heights(ideal).astype(object).sum())


def colength_by_scan(ideal: MonomialIdeal) -> int:
    """λ(R/I) by testing every point of the box ∏[0, a_i)"""
    bounds = primary_bounds(ideal)
    axes = [np.arange(b, dtype=np.int64) for b in bounds]
    total = 0
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, len(bounds))
    for start in range(0, len(grid), _SCAN_BLOCK):
        block = grid[start:start + _SCAN_BLOCK]
        total += int((~membership_mask(ideal, block)).sum())
    return total


def quotient_length(numerator: MonomialIdeal, denominator: MonomialIdeal) -> int:
    """
    λ(A/B) for monomial ideals B ⊆ A with B m-primary

    Raises:
        ContainmentError if B is not contained in A
    """
    if not denominator.is_subset(numerator):
        witness = witness_outside(denominator, numerator)
        raise ContainmentError(
            f"{denominator} is not contained in {numerator}; "
            f"{denominator.ring.format_monomial(witness)} is missing"
        )
    return colength(denominator) - colength(numerator)

