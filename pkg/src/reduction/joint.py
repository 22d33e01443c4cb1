"""
Bounded verification of monomial joint reductions

Every "for all n" condition is checked on a finite grid; a passing report
means "verified up to the bound", never a proof.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import List, Optional, Sequence, Tuple

from src.algebra.monomial import (
    Exponent,
    MonomialIdeal,
    add,
    intersect,
    minimalize,
    scale,
    witness_outside,
)
from src.errors import PreconditionError
from src.hilbert.filtration import FiltrationCache
from src.models.reports import CheckReport, Failure, JrFailure, JrReport

logger = logging.getLogger(__name__)

GOOD_REDUCTION_ASSUMPTION = (
    "a good complete reduction of the normal filtration exists "
    "(supplied for monomial ideals by Cohen-Macaulayness of the normal Rees algebra)"
)


@dataclass
class JrTriple:
    """
    Monomial candidate elements with their host ideals

    The i-th element must lie in the i-th host ideal. The normal filtration
    of the hosts is shared by every check run on the triple.
    """

    elements: Tuple[Exponent, ...]
    hosts: Tuple[MonomialIdeal, ...]
    cache: Optional[FiltrationCache] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if len(self.elements) != len(self.hosts):
            raise PreconditionError(
                f"{len(self.elements)} elements for {len(self.hosts)} host ideals"
            )
        self.hosts = tuple(self.hosts)
        ring = self.hosts[0].ring
        self.elements = tuple(ring.check(e) for e in self.elements)
        for index, (element, host) in enumerate(zip(self.elements, self.hosts)):
            if element not in host:
                raise PreconditionError(
                    f"Element {index + 1} ({ring.format_monomial(element)}) is not in {host}"
                )
        if self.cache is None:
            self.cache = FiltrationCache(self.hosts)

    @classmethod
    def of(cls, a, b, c, I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal) -> "JrTriple":
        return cls((a, b, c), (I, J, K))

    @property
    def ring(self):
        return self.hosts[0].ring

    @property
    def arity(self) -> int:
        return len(self.elements)

    def stage(self, n: Sequence[int]) -> MonomialIdeal:
        """closure(I^{n_1} J^{n_2} K^{n_3})"""
        return self.cache.ideal(n)

    def powers_ideal(self, n: Sequence[int]) -> MonomialIdeal:
        """(a^{n_1}, b^{n_2}, c^{n_3}) as a monomial ideal"""
        return minimalize(
            self.ring,
            (tuple(k * e for e in element) for k, element in zip(n, self.elements)),
        )

    def is_m_primary(self) -> bool:
        return self.powers_ideal([1] * self.arity).pure_power_bounds() is not None

    def permuted(self, order: Sequence[int]) -> "JrTriple":
        """The triple with elements and hosts permuted simultaneously"""
        return JrTriple(
            tuple(self.elements[i] for i in order),
            tuple(self.hosts[i] for i in order),
            cache=self.cache.restrict(order),
        )


def shift(n: Sequence[int], index: int, amount: int = 1) -> Tuple[int, ...]:
    return tuple(e - amount if i == index else e for i, e in enumerate(n))


def _grid(arity: int, low: Sequence[int], bound: int) -> List[Tuple[int, ...]]:
    """Points of ∏[low_i, bound], shell by shell in max(n) and lexicographic within a shell"""
    points = product(*(range(lo, bound + 1) for lo in low[:arity]))
    return sorted(points, key=lambda n: (max(n), n))


def _sum_of_shifts(
    t: JrTriple,
    n: Sequence[int],
    subset: Sequence[int],
    amounts: Optional[Sequence[int]] = None
) -> MonomialIdeal:
    """Σ_{i ∈ subset} a_i^{k_i} · closure(n - k_i e_i)"""
    total = MonomialIdeal.zero(t.ring)
    for position, i in enumerate(subset):
        k = 1 if amounts is None else amounts[position]
        element = tuple(k * e for e in t.elements[i])
        total = add(total, scale(t.stage(shift(n, i, k)), element))
    return total


def check_jrn_zero(t: JrTriple, bound: int) -> JrReport:
    """
    Verify closure(n) = Σ a_i closure(n - e_i) for every 1 <= n <= bound

    Args:
        t: Candidate elements with host ideals
        bound: Largest exponent in each coordinate

    Returns:
        JrReport of kind joint-reduction-zero
    """
    if bound < 1:
        raise PreconditionError(f"Bound must be positive, got {bound}")

    checked = 0
    everything = list(range(t.arity))
    for n in _grid(t.arity, [1] * t.arity, bound):
        checked += 1
        lhs = t.stage(n)
        rhs = _sum_of_shifts(t, n, everything)
        witness = witness_outside(lhs, rhs)
        if witness is not None:
            logger.info(f"Joint reduction number zero fails at {n}")
            return JrReport(
                kind="joint-reduction-zero",
                bound=bound,
                passed=False,
                checked=checked,
                first_failure=JrFailure(point=list(n), witness=list(witness)),
            )

    logger.info(f"Joint reduction number zero verified up to {bound}")
    return JrReport(kind="joint-reduction-zero", bound=bound, passed=True, checked=checked)


def check_good_jr(t: JrTriple, bound: int) -> JrReport:
    """
    Verify (a_i : i ∈ A) ∩ closure(n) = Σ_{i ∈ A} a_i closure(n - e_i)
    for every proper nonempty subset A and every Σ_A e_i <= n <= bound
    """
    if bound < 1:
        raise PreconditionError(f"Bound must be positive, got {bound}")

    subsets = [
        subset
        for size in range(1, t.arity)
        for subset in combinations(range(t.arity), size)
    ]
    checked = 0
    for n in _grid(t.arity, [0] * t.arity, bound):
        for subset in subsets:
            if any(n[i] < 1 for i in subset):
                continue
            checked += 1
            generated = minimalize(t.ring, (t.elements[i] for i in subset))
            lhs = intersect(generated, t.stage(n))
            rhs = _sum_of_shifts(t, n, subset)
            witness = witness_outside(lhs, rhs)
            if witness is not None:
                logger.info(f"Good joint reduction fails at {n} for subset {subset}")
                return JrReport(
                    kind="good-jr",
                    bound=bound,
                    passed=False,
                    checked=checked,
                    first_failure=JrFailure(
                        point=list(n),
                        witness=list(witness),
                        subset=[i + 1 for i in subset],
                    ),
                )

    return JrReport(kind="good-jr", bound=bound, passed=True, checked=checked)


def powers_identity_check(
    t: JrTriple,
    exponents: Tuple[int, int],
    point: Sequence[int]
) -> CheckReport:
    """
    Verify (a^m, b^n) ∩ closure(r,s,t) = a^m closure(r-m,s,t) + b^n closure(r,s-n,t)
    and its one-element variants at a single point

    Args:
        t: A triple that passed check_good_jr to at least max(point)
        exponents: (m, n) with 1 <= m <= r and 1 <= n <= s
        point: (r, s, t)
    """
    m, k = exponents
    point = t.cache.check_point(point)
    if not (1 <= m <= point[0] and 1 <= k <= point[1]):
        raise PreconditionError(
            f"Exponents {exponents} must satisfy 1 <= m <= r and 1 <= n <= s at {point}"
        )

    report = CheckReport(check="powers-identity", bound=max(point))
    stage = t.stage(point)
    cases = [([0, 1], [m, k], "(a^m, b^n)"), ([0], [m], "(a^m)"), ([1], [k], "(b^n)")]

    for subset, amounts, label in cases:
        generated = minimalize(
            t.ring,
            (tuple(amount * e for e in t.elements[i]) for i, amount in zip(subset, amounts)),
        )
        lhs = intersect(generated, stage)
        rhs = _sum_of_shifts(t, point, subset, amounts)
        report.checked += 1
        witness = witness_outside(lhs, rhs) or witness_outside(rhs, lhs)
        if witness is not None:
            report.fail(Failure(point=list(point), detail=f"{label} ∩ closure", witness=list(witness)))
    return report


def check_complete_reduction(
    matrix: Sequence[Sequence[Sequence[int]]],
    cache: FiltrationCache,
    bound: int,
    start: int = 0
) -> List[JrReport]:
    """
    Verify a monomial s × d matrix (x_ij) with x_ij in I_i

    With y_j = ∏_i x_ij and e = (1, ..., 1):
      complete-reduction       F(n + e) = (y_1, ..., y_d) F(n), start <= n <= bound
      good-complete-reduction  (y_j : j ∈ A) ∩ F(n) = (y_j : j ∈ A) F(n - e), |A| e <= n <= bound
      strictness               (y_1, ..., y_j) ∩ F(n) = (y_1, ..., y_j) F(n - e), j e <= n <= bound

    Returns:
        The three reports in the order above
    """
    ring = cache.ring
    s, d = cache.arity, ring.dimension
    if len(matrix) != s or any(len(row) != d for row in matrix):
        raise PreconditionError(f"Expected a {s} × {d} matrix of monomials")
    for i, row in enumerate(matrix):
        for entry in row:
            if ring.check(entry) not in cache.ideals[i]:
                raise PreconditionError(
                    f"{ring.format_monomial(tuple(entry))} is not in {cache.ideals[i]}"
                )
    if bound < 1:
        raise PreconditionError(f"Bound must be positive, got {bound}")

    columns = [
        tuple(sum(matrix[i][j][c] for i in range(s)) for c in range(d))
        for j in range(d)
    ]
    ones = (1,) * s

    def generated(indices) -> MonomialIdeal:
        return minimalize(ring, (columns[j] for j in indices))

    def report_for(kind, checks) -> JrReport:
        checked = 0
        for n, lhs, rhs, subset in checks:
            checked += 1
            witness = witness_outside(lhs, rhs)
            if witness is not None:
                return JrReport(
                    kind=kind,
                    bound=bound,
                    passed=False,
                    checked=checked,
                    first_failure=JrFailure(
                        point=list(n),
                        witness=list(witness),
                        subset=None if subset is None else [j + 1 for j in subset],
                    ),
                )
        return JrReport(kind=kind, bound=bound, passed=True, checked=checked)

    everything = generated(range(d))

    def complete_checks():
        for n in _grid(s, [start] * s, bound):
            raised = tuple(e + 1 for e in n)
            yield n, cache.ideal(raised), everything * cache.ideal(n), None

    def subset_checks(subsets):
        for subset in subsets:
            y = generated(subset)
            for n in _grid(s, [len(subset)] * s, bound):
                lowered = tuple(e - 1 for e in n)
                yield n, intersect(y, cache.ideal(n)), y * cache.ideal(lowered), subset

    proper = [A for size in range(1, d) for A in combinations(range(d), size)]
    leading = [tuple(range(j)) for j in range(1, d)]

    reports = [
        report_for("complete-reduction", complete_checks()),
        report_for("good-complete-reduction", subset_checks(proper)),
        report_for("strictness", subset_checks(leading)),
    ]
    for report in reports:
        report.assumptions.append("identities verified on a bounded grid only")
    return reports
