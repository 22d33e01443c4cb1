"""
Normal Hilbert polynomials in the signed binomial basis

    P(n) = Σ_{|α| <= d} (-1)^{d-|α|} e_α ∏_l C(n_l + α_l - 1, α_l)

with d the ring dimension. Fits are exact: the polynomial is sampled on a
shifted simplex grid, which is unisolvent for total degree d, and the
square system is solved fraction-free over the integers.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMError

from src.algebra.monomial import MonomialIdeal, product_of_powers
from src.config.settings import FIT_VALIDATION_SPAN, MAX_STABILIZATION_OFFSET
from src.errors import FitError, PostulationError, PreconditionError, StabilizationError
from src.hilbert.filtration import FiltrationCache
from src.models.reports import CheckReport, Failure

logger = logging.getLogger(__name__)

Index = Tuple[int, ...]


def basis_indices(arity: int, degree: int) -> List[Index]:
    """Multi-indices α with |α| <= degree, by total degree then lexicographically descending"""
    indices = [alpha for alpha in product(range(degree + 1), repeat=arity) if sum(alpha) <= degree]
    return sorted(indices, key=lambda alpha: (-sum(alpha), tuple(-a for a in alpha)))


def basis_value(alpha: Index, n: Sequence[int]) -> int:
    """∏ C(n_l + α_l - 1, α_l), with C(n - 1, 0) = 1 for every n"""
    value = 1
    for a, x in zip(alpha, n):
        if a > 0:
            value *= comb(x + a - 1, a)
    return value


def basis_sign(alpha: Index, degree: int) -> int:
    return -1 if (degree - sum(alpha)) % 2 else 1


@dataclass(frozen=True)
class HilbertPoly:
    """Integer coefficients e_α of a normal Hilbert polynomial"""

    arity: int
    degree: int
    coeffs: Dict[Index, int]
    offset: int = 0
    validated_span: Optional[int] = field(default=None, compare=False)

    def coefficient(self, alpha: Iterable[int]) -> int:
        return self.coeffs.get(tuple(alpha), 0)

    def evaluate(self, n: Sequence[int]) -> int:
        if len(n) != self.arity:
            raise PreconditionError(f"Point {tuple(n)} does not match arity {self.arity}")
        return sum(
            basis_sign(alpha, self.degree) * e * basis_value(alpha, n)
            for alpha, e in self.coeffs.items()
        )

    def normal_coefficients(self) -> Tuple[int, ...]:
        """
        (e_0, ..., e_d) of a univariate polynomial

        e_k is the coefficient of C(n + d - k - 1, d - k).
        """
        if self.arity != 1:
            raise PreconditionError("Normal coefficients are defined for arity 1")
        return tuple(self.coefficient((self.degree - k,)) for k in range(self.degree + 1))

    def as_frame(self) -> pd.DataFrame:
        rows = [
            {
                "index": ",".join(str(a) for a in alpha),
                "sign": basis_sign(alpha, self.degree),
                "coefficient": self.coeffs[alpha],
            }
            for alpha in basis_indices(self.arity, self.degree)
        ]
        return pd.DataFrame(rows, columns=["index", "sign", "coefficient"])


def _leading(cache: FiltrationCache, arity: int) -> FiltrationCache:
    if not 1 <= arity <= cache.arity:
        raise PreconditionError(f"Cannot fit arity {arity} on a filtration of {cache.arity} ideals")
    return cache if arity == cache.arity else cache.restrict(range(arity))


def fit(cache: FiltrationCache, arity: int, offset: int = 0) -> HilbertPoly:
    """
    Fit the normal Hilbert polynomial on the simplex grid above offset

    Args:
        cache: Filtration supplying the Hilbert function
        arity: Number of leading ideals of the filtration used
        offset: Shift of the sampling grid and of the validation box

    Returns:
        HilbertPoly with integer coefficients

    Raises:
        FitError if the system is singular or the solution is not integral
        PostulationError if the polynomial disagrees with the function on
        [offset, offset + FIT_VALIDATION_SPAN]^arity
    """
    if offset < 0:
        raise PreconditionError(f"Offset must be nonnegative, got {offset}")
    source = _leading(cache, arity)
    degree = cache.ring.dimension
    indices = basis_indices(arity, degree)

    samples = [tuple(offset + a for a in alpha) for alpha in indices]
    rows = [
        [basis_sign(alpha, degree) * basis_value(alpha, point) for alpha in indices]
        for point in samples
    ]
    values = [[source.colength(point)] for point in samples]

    try:
        system = DomainMatrix.from_list(rows, ZZ)
        rhs = DomainMatrix.from_list(values, ZZ)
        numerators, denominator = system.solve_den(rhs)
    except DMError as e:
        raise FitError(f"Collocation system is singular: {e}")

    denominator = int(denominator)
    solution = [int(row[0]) for row in numerators.to_list()]
    if any(x % denominator for x in solution):
        raise FitError(f"Non-integral Hilbert coefficients {solution} / {denominator}")
    poly = HilbertPoly(
        arity=arity,
        degree=degree,
        coeffs={alpha: x // denominator for alpha, x in zip(indices, solution)},
        offset=offset,
        validated_span=FIT_VALIDATION_SPAN,
    )

    mismatches = []
    for point in product(range(offset, offset + FIT_VALIDATION_SPAN + 1), repeat=arity):
        expected = source.colength(point)
        actual = poly.evaluate(point)
        if expected != actual:
            mismatches.append((point, expected, actual))
    if mismatches:
        raise PostulationError(
            f"Fit at offset {offset} disagrees with the Hilbert function at {len(mismatches)} points",
            mismatches,
        )

    logger.debug(f"Fitted arity {arity} polynomial at offset {offset}")
    return poly


def stabilized_fit(cache: FiltrationCache, arity: int) -> HilbertPoly:
    """
    Fit at offsets 0, 1, ... until two consecutive offsets agree

    Returns:
        The agreed polynomial, its offset set to the first stable offset

    Raises:
        StabilizationError with a diagnostic table if no two consecutive
        offsets up to MAX_STABILIZATION_OFFSET agree
    """
    history = []
    previous: Optional[HilbertPoly] = None

    for offset in range(MAX_STABILIZATION_OFFSET + 1):
        try:
            current = fit(cache, arity, offset)
            history.append({"offset": offset, "status": "fitted", "coefficients": str(current.coeffs)})
        except (PostulationError, FitError) as e:
            history.append({"offset": offset, "status": type(e).__name__, "coefficients": str(e)})
            current = None

        if current is not None and previous is not None and current.coeffs == previous.coeffs:
            logger.info(f"Arity {arity} fit stable at offset {previous.offset}")
            return previous
        previous = current

    table = pd.DataFrame(history, columns=["offset", "status", "coefficients"])
    logger.warning(f"No stable arity {arity} fit up to offset {MAX_STABILIZATION_OFFSET}")
    raise StabilizationError(
        f"Hilbert polynomial did not stabilize by offset {MAX_STABILIZATION_OFFSET}",
        table,
    )


def postulation_check(
    cache: FiltrationCache,
    arity: int,
    box: int,
    against: Optional[FiltrationCache] = None
) -> CheckReport:
    """
    Compare the stabilized polynomial with the Hilbert function on [0, box]^arity

    Args:
        cache: Filtration the polynomial is fitted on
        arity: Number of leading ideals used
        box: Largest exponent examined
        against: Filtration supplying the Hilbert function; defaults to cache

    Returns:
        CheckReport listing every point where P(n) != H(n)
    """
    if box < 1:
        raise PreconditionError(f"Box must be positive, got {box}")
    poly = stabilized_fit(cache, arity)
    target = _leading(against if against is not None else cache, arity)

    report = CheckReport(check="postulation", bound=box)
    for point in product(range(box + 1), repeat=arity):
        expected = target.colength(point)
        actual = poly.evaluate(point)
        report.checked += 1
        if expected != actual:
            report.fail(Failure(
                point=list(point),
                detail="P(n) != H(n)",
                expected=expected,
                actual=actual,
            ))

    report.values["stable_offset"] = poly.offset
    logger.info(f"Postulation check on [0,{box}]^{arity}: {len(report.failures)} violations")
    return report


def e3_of_product(ideals: Sequence[MonomialIdeal]) -> int:
    """
    The constant normal Hilbert coefficient e_d of the product ideal

    Read from the stabilized univariate fit of the product, never from a
    multivariate constant term.
    """
    if not ideals:
        raise PreconditionError("e3_of_product needs at least one ideal")
    product_ideal = product_of_powers(ideals, [1] * len(ideals))
    poly = stabilized_fit(FiltrationCache([product_ideal]), 1)
    return poly.normal_coefficients()[-1]
