"""
Brute-force oracles shared by the tests and the command line

Each oracle recomputes a quantity by enumerating a bounding box, without
using the facet or staircase machinery.
"""

import logging
from typing import Optional

import numpy as np

from src.algebra.monomial import Exponent, MonomialIdeal, membership_mask, minimalize, power
from src.config.settings import ORACLE_POWER_CAP

logger = logging.getLogger(__name__)


def box_points(box: Exponent) -> np.ndarray:
    """All lattice points of [0, box] as rows"""
    axes = [np.arange(b + 1, dtype=np.int64) for b in box]
    return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, len(box))


def power_certificate(ideal: MonomialIdeal, vector: Exponent, cap: int = ORACLE_POWER_CAP) -> Optional[int]:
    """Least k <= cap with (x^v)^k in I^k, or None"""
    v = ideal.ring.check(vector)
    for k in range(1, cap + 1):
        if tuple(k * e for e in v) in power(ideal, k):
            return k
    return None


def certified_mask(ideal: MonomialIdeal, points: np.ndarray, cap: int = ORACLE_POWER_CAP) -> np.ndarray:
    """For each row v, whether k·v lies in I^k for some k <= cap"""
    certified = np.zeros(len(points), dtype=bool)
    for k in range(1, cap + 1):
        pending = ~certified
        if not pending.any():
            break
        certified[pending] = membership_mask(power(ideal, k), k * points[pending])
    return certified


def oracle_closure(ideal: MonomialIdeal, cap: int = ORACLE_POWER_CAP) -> MonomialIdeal:
    """The ideal generated by the certified points of the source box"""
    points = box_points(ideal.source_box())
    mask = certified_mask(ideal, points, cap)
    return minimalize(ideal.ring, (tuple(int(e) for e in row) for row in points[mask]))


def box_intersect(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """I ∩ J by membership enumeration over the joint bounding box"""
    if first.is_zero or second.is_zero:
        return MonomialIdeal.zero(first.ring)
    box = tuple(max(a, b) for a, b in zip(first.source_box(), second.source_box()))
    points = box_points(box)
    mask = membership_mask(first, points) & membership_mask(second, points)
    return minimalize(first.ring, (tuple(int(e) for e in row) for row in points[mask]))


def box_colon(ideal: MonomialIdeal, divisor: MonomialIdeal) -> MonomialIdeal:
    """(I : J) by testing v + h ∈ I for every generator h of J over the box of I"""
    if ideal.is_zero:
        return ideal
    points = box_points(ideal.source_box())
    mask = np.ones(len(points), dtype=bool)
    for h in divisor.generators:
        mask &= membership_mask(ideal, points + np.array(h, dtype=np.int64))
    return minimalize(ideal.ring, (tuple(int(e) for e in row) for row in points[mask]))
