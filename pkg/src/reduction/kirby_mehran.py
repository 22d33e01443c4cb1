"""
Lengths attached to the graded Kirby-Mehran complex of a joint reduction

For monomial elements a, b, c the complex

    0 -> R/cl(r,0,0) ⊕ R/cl(0,s,0) ⊕ R/cl(0,0,t)
      -> R/cl(r,s,0) ⊕ R/cl(r,0,t) ⊕ R/cl(0,s,t)
      -> R/cl(r,s,t) -> 0

is N^3-graded by exponent vectors and each graded piece of a monomial
quotient is 0 or 1 dimensional. Homology lengths are therefore sums of
ranks of small sign matrices, one per multidegree.
"""

import logging
from typing import Sequence, Tuple

import numpy as np
import pandas as pd

from src.algebra.monomial import MonomialIdeal, add, intersect, membership_mask, scale
from src.errors import InconsistencyError, PreconditionError, StabilizationError
from src.hilbert.colength import colength, primary_bounds, quotient_length
from src.models.reports import CheckReport, Failure, KmLengths
from src.reduction.joint import JrTriple

logger = logging.getLogger(__name__)

# φ1 in the bases (u, v, w) -> (IJ, IK, JK)
_PHI1 = np.array([
    [1, 1, 0],
    [-1, 0, 1],
    [0, -1, -1],
], dtype=np.int64)


def _require_point(t: JrTriple, point: Sequence[int]) -> Tuple[int, int, int]:
    if t.arity != 3:
        raise PreconditionError("Kirby-Mehran lengths need three elements")
    point = t.cache.check_point(point)
    if min(point) < 1:
        raise PreconditionError(f"All of r, s, t must be positive, got {point}")
    if not t.is_m_primary():
        raise PreconditionError(
            "(a, b, c) must generate an m-primary ideal for the lengths to be finite"
        )
    return point


def denominator(t: JrTriple, point: Sequence[int]) -> MonomialIdeal:
    """a^r cl(0,s,t) + b^s cl(r,0,t) + c^t cl(r,s,0)"""
    r, s, u = point
    a, b, c = (tuple(k * e for e in element) for k, element in zip(point, t.elements))
    return add(
        add(scale(t.stage((0, s, u)), a), scale(t.stage((r, 0, u)), b)),
        scale(t.stage((r, s, 0)), c),
    )


def _rank3(matrices: np.ndarray) -> np.ndarray:
    """Exact ranks of a stack of 3 × 3 integer matrices"""
    m = matrices
    det = (
        m[:, 0, 0] * (m[:, 1, 1] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 1])
        - m[:, 0, 1] * (m[:, 1, 0] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 0])
        + m[:, 0, 2] * (m[:, 1, 0] * m[:, 2, 1] - m[:, 1, 1] * m[:, 2, 0])
    )
    minors = np.zeros(len(m), dtype=bool)
    for rows in ((0, 1), (0, 2), (1, 2)):
        for cols in ((0, 1), (0, 2), (1, 2)):
            value = (
                m[:, rows[0], cols[0]] * m[:, rows[1], cols[1]]
                - m[:, rows[0], cols[1]] * m[:, rows[1], cols[0]]
            )
            minors |= value != 0
    nonzero = (m != 0).any(axis=(1, 2))
    return np.where(det != 0, 3, np.where(minors, 2, np.where(nonzero, 1, 0)))


def _present(ideal: MonomialIdeal, grid: np.ndarray, offset: Sequence[int]) -> np.ndarray:
    """Whether the quotient R/ideal is nonzero in the multidegree grid - offset"""
    shifted = grid - np.array(offset, dtype=np.int64)
    inside = (shifted >= 0).all(axis=1)
    return inside & ~membership_mask(ideal, shifted)


def km_lengths(t: JrTriple, point: Sequence[int]) -> KmLengths:
    """
    Homology lengths h0, h1, h2 of the complex at (r, s, t)

    Computed degree by degree and cross-checked against
    h0 = λ(R/((a^r, b^s, c^t) + cl)) and
    h1 = λ((cl ∩ (a^r, b^s, c^t)) / (a^r cl(0,s,t) + b^s cl(r,0,t) + c^t cl(r,s,0))).

    Raises:
        ContainmentError if the denominator is not inside the numerator
        InconsistencyError if the two computations disagree or h2 != 0
    """
    r, s, u = point = _require_point(t, point)
    A, B, C = (tuple(k * e for e in element) for k, element in zip(point, t.elements))

    def plus(*vectors):
        return tuple(sum(parts) for parts in zip(*vectors))

    top = [(t.stage((r, 0, 0)), plus(B, C)), (t.stage((0, s, 0)), plus(A, C)), (t.stage((0, 0, u)), plus(A, B))]
    middle = [(t.stage((r, s, 0)), C), (t.stage((r, 0, u)), B), (t.stage((0, s, u)), A)]
    bottom = [(t.stage(point), (0, 0, 0))]

    extent = [0, 0, 0]
    for ideal, offset in top + middle + bottom:
        bounds = primary_bounds(ideal)
        extent = [max(e, o + b) for e, o, b in zip(extent, offset, bounds)]

    axes = [np.arange(e, dtype=np.int64) for e in extent]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 3)

    p = np.stack([_present(ideal, grid, offset) for ideal, offset in top], axis=1)
    q = np.stack([_present(ideal, grid, offset) for ideal, offset in middle], axis=1)
    z = _present(bottom[0][0], grid, (0, 0, 0))

    rank0 = (z & q.any(axis=1)).astype(np.int64)
    masked = _PHI1[None, :, :] * q[:, :, None] * p[:, None, :]
    rank1 = _rank3(masked)

    h0 = int((z.astype(np.int64) - rank0).sum())
    h1 = int((q.sum(axis=1) - rank0 - rank1).sum())
    h2 = int((p.sum(axis=1) - rank1).sum())

    powers = t.powers_ideal(point)
    stage = t.stage(point)
    expected_h0 = colength(add(powers, stage))
    expected_h1 = quotient_length(intersect(stage, powers), denominator(t, point))

    if (h0, h1, h2) != (expected_h0, expected_h1, 0):
        raise InconsistencyError(
            f"Kirby-Mehran homology at {point}: complex gives {(h0, h1, h2)}, "
            f"quotient formulas give {(expected_h0, expected_h1, 0)}"
        )

    chain = [
        t.cache.colength(point),
        sum(t.cache.colength(n) for n in ((r, s, 0), (r, 0, u), (0, s, u))),
        sum(t.cache.colength(n) for n in ((r, 0, 0), (0, s, 0), (0, 0, u))),
    ]
    logger.debug(f"Kirby-Mehran lengths at {point}: h0={h0}, h1={h1}")
    return KmLengths(point=list(point), h0=h0, h1=h1, h2=h2, chain_lengths=chain)


def km_table(t: JrTriple, bound: int) -> pd.DataFrame:
    """KmLengths over [1, bound]^3 with the Euler characteristic of the chain lengths"""
    rows = []
    for r in range(1, bound + 1):
        for s in range(1, bound + 1):
            for u in range(1, bound + 1):
                lengths = km_lengths(t, (r, s, u))
                c0, c1, c2 = lengths.chain_lengths
                rows.append({
                    "r": r, "s": s, "t": u,
                    "h0": lengths.h0, "h1": lengths.h1, "h2": lengths.h2,
                    "chain_euler": c0 - c1 + c2,
                })
    return pd.DataFrame(rows)


def length_identity_check(t: JrTriple, point: Sequence[int]) -> CheckReport:
    """
    λ((a^r,b^s,c^t) / D) = Σ_pairs λ(R/cl) - Σ_singles λ(R/cl) at one point
    """
    r, s, u = point = _require_point(t, point)
    lhs = quotient_length(t.powers_ideal(point), denominator(t, point))
    pairs = sum(t.cache.colength(n) for n in ((r, s, 0), (r, 0, u), (0, s, u)))
    singles = sum(t.cache.colength(n) for n in ((r, 0, 0), (0, s, 0), (0, 0, u)))
    rhs = pairs - singles

    report = CheckReport(check="length-identity", bound=max(point), checked=1)
    report.values.update({"lhs": lhs, "rhs": rhs})
    if lhs != rhs:
        report.fail(Failure(point=list(point), detail="length identity", expected=rhs, actual=lhs))
    return report


def s_length(t: JrTriple, point: Sequence[int]) -> int:
    """λ(cl(r,s,t) / (a^r cl(0,s,t) + b^s cl(r,0,t) + c^t cl(r,s,0)))"""
    point = _require_point(t, point)
    return quotient_length(t.stage(point), denominator(t, point))


def lc_origin_length(t: JrTriple, max_k: int) -> Tuple[int, int]:
    """
    Stabilized value of S(k,k,k), the length of the degree-zero local cohomology

    Returns:
        (value, k) where k is the first index with S(k) = S(k+1)

    Raises:
        InconsistencyError if the sequence decreases
        StabilizationError if no two consecutive values agree by max_k
    """
    if max_k < 2:
        raise PreconditionError(f"max_k must be at least 2, got {max_k}")

    values = [s_length(t, (1, 1, 1))]
    for k in range(2, max_k + 1):
        current = s_length(t, (k, k, k))
        previous = values[-1]
        values.append(current)
        if current < previous:
            raise InconsistencyError(
                f"S(k,k,k) decreased from {previous} to {current} at k={k}"
            )
        if current == previous:
            logger.info(f"Origin length stable at k={k - 1} with value {current}")
            return current, k - 1

    table = pd.DataFrame({"k": range(1, max_k + 1), "S": values})
    raise StabilizationError(f"S(k,k,k) did not stabilize by k={max_k}", table)
