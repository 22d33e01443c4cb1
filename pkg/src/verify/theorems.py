"""
Verifiers tying normal Hilbert coefficients to joint-reduction behavior

Every verifier recomputes its ingredients independently, so agreement
between them is a strong integration check. A disagreement on an identity
that is proved for monomial ideals is reported as an InconsistencyError.
"""

import logging
from itertools import product
from typing import Dict, Tuple

from src.algebra.monomial import MonomialIdeal
from src.errors import InconsistencyError, PreconditionError
from src.hilbert.filtration import FiltrationCache
from src.hilbert.polynomial import HilbertPoly, e3_of_product, postulation_check, stabilized_fit
from src.models.reports import CheckReport, CriterionReport, Failure
from src.reduction.joint import GOOD_REDUCTION_ASSUMPTION, JrTriple, check_good_jr, check_jrn_zero
from src.reduction.kirby_mehran import lc_origin_length, s_length
from src.reduction.normal_reduction import normal_reduction_number

logger = logging.getLogger(__name__)

PRODUCT_LABELS = {
    "I": (0,), "J": (1,), "K": (2,),
    "IJ": (0, 1), "IK": (0, 2), "JK": (1, 2),
    "IJK": (0, 1, 2),
}


def _require_dimension_three(*ideals: MonomialIdeal) -> None:
    for ideal in ideals:
        if ideal.ring.dimension != 3:
            raise PreconditionError("The criterion verifiers work in dimension 3")


def e3_values(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal) -> Dict[str, int]:
    """e_3 of all seven products of I, J, K"""
    _require_dimension_three(I, J, K)
    ideals = (I, J, K)
    return {
        label: e3_of_product([ideals[i] for i in indices])
        for label, indices in PRODUCT_LABELS.items()
    }


def _alternating_sum(values: Dict[str, int]) -> int:
    return (
        values["IJK"]
        - (values["IJ"] + values["IK"] + values["JK"])
        + values["I"] + values["J"] + values["K"]
    )


def criterion_sum(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal) -> int:
    """e3(IJK) - [e3(IJ) + e3(IK) + e3(JK)] + e3(I) + e3(J) + e3(K)"""
    return _alternating_sum(e3_values(I, J, K))


def _require_good(t: JrTriple, bound: int) -> None:
    if not t.is_m_primary():
        raise PreconditionError("(a, b, c) does not generate an m-primary ideal, so it is not a joint reduction")
    good = check_good_jr(t, bound)
    if not good.passed:
        failure = good.first_failure
        raise PreconditionError(
            f"Not a good joint reduction: subset {failure.subset} fails at {tuple(failure.point)}"
        )


def verify_equivalences(
    I: MonomialIdeal,
    J: MonomialIdeal,
    K: MonomialIdeal,
    t: JrTriple,
    bound: int
) -> CriterionReport:
    """
    Check that the three characterizations of joint reduction number zero agree

    The criterion sum vanishes, the reduction identity holds up to the
    bound and the stabilized origin length vanishes: all or none.

    Raises:
        PreconditionError if t is not hosted by (I, J, K) or is not a good
            joint reduction up to the bound
        InconsistencyError if the verdicts disagree
    """
    if tuple(t.hosts) != (I, J, K):
        raise PreconditionError(f"Triple is hosted by {tuple(str(h) for h in t.hosts)}, not ({I}, {J}, {K})")
    _require_good(t, bound)

    values = e3_values(I, J, K)
    total = _alternating_sum(values)
    jrn = check_jrn_zero(t, bound)
    verified_to = bound if jrn.passed else max(jrn.first_failure.point) - 1
    lc_value, lc_k = lc_origin_length(t, max(bound, 2))

    consistent = (total == 0) == jrn.passed == (lc_value == 0) and (lc_value == total)
    report = CriterionReport(
        e3_values=values,
        criterion_sum=total,
        jrn_zero_passed=jrn.passed,
        jrn_zero_verified_to=verified_to,
        lc_origin=lc_value,
        lc_stable_k=lc_k,
        consistent=consistent,
        assumptions=[GOOD_REDUCTION_ASSUMPTION],
    )

    if not consistent:
        logger.error(f"Equivalence battery disagrees: {report.model_dump()}")
        raise InconsistencyError("Equivalent joint-reduction criteria disagree", report)
    logger.info(f"Equivalence battery consistent, criterion sum {total}")
    return report


def _fits(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal) -> Dict[Tuple[int, ...], HilbertPoly]:
    """Stabilized fits of every nonempty sub-tuple of (I, J, K), keyed by indices"""
    cache = FiltrationCache([I, J, K])
    fits = {}
    for indices in [(0, 1, 2), (0, 1), (0, 2), (1, 2), (0,), (1,), (2,)]:
        view = cache if len(indices) == 3 else cache.restrict(indices)
        fits[indices] = stabilized_fit(view, len(indices))
    return fits


def mixed_coefficient_relations(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal) -> CheckReport:
    """
    The six degree-two relations between trivariate, bivariate and
    univariate normal Hilbert coefficients
    """
    _require_dimension_three(I, J, K)
    fits = _fits(I, J, K)
    tri = fits[(0, 1, 2)]

    relations = [
        ("e(2,0,0)", tri.coefficient((2, 0, 0)), "e1(I)", fits[(0,)].coefficient((2,))),
        ("e(0,2,0)", tri.coefficient((0, 2, 0)), "e1(J)", fits[(1,)].coefficient((2,))),
        ("e(0,0,2)", tri.coefficient((0, 0, 2)), "e1(K)", fits[(2,)].coefficient((2,))),
        ("e(1,1,0)", tri.coefficient((1, 1, 0)), "e(1,1)(I,J)", fits[(0, 1)].coefficient((1, 1))),
        ("e(0,1,1)", tri.coefficient((0, 1, 1)), "e(1,1)(J,K)", fits[(1, 2)].coefficient((1, 1))),
        ("e(1,0,1)", tri.coefficient((1, 0, 1)), "e(1,1)(I,K)", fits[(0, 2)].coefficient((1, 1))),
    ]

    report = CheckReport(check="mixed-coefficient-relations")
    for left_label, left, right_label, right in relations:
        report.checked += 1
        report.values[left_label] = left
        report.values[right_label] = right
        if left != right:
            report.fail(Failure(point=[], detail=f"{left_label} != {right_label}", expected=right, actual=left))
    return report


def linear_combinations(fits: Dict[Tuple[int, ...], HilbertPoly]) -> Tuple[int, int, int]:
    """
    The coefficients of r, s and t in the length formula for S(r,s,t)

        L_I = e(1,0)(I,J) + e(1,0)(I,K) - e(1,0,0) - e2(I)
        L_J = e(0,1)(I,J) + e(1,0)(J,K) - e(0,1,0) - e2(J)
        L_K = e(0,1)(I,K) + e(0,1)(J,K) - e(0,0,1) - e2(K)
    """
    tri = fits[(0, 1, 2)]
    ij, ik, jk = fits[(0, 1)], fits[(0, 2)], fits[(1, 2)]
    e2 = [fits[(i,)].coefficient((1,)) for i in range(3)]
    return (
        ij.coefficient((1, 0)) + ik.coefficient((1, 0)) - tri.coefficient((1, 0, 0)) - e2[0],
        ij.coefficient((0, 1)) + jk.coefficient((1, 0)) - tri.coefficient((0, 1, 0)) - e2[1],
        ik.coefficient((0, 1)) + jk.coefficient((0, 1)) - tri.coefficient((0, 0, 1)) - e2[2],
    )


def linear_coefficients_vanish(
    I: MonomialIdeal,
    J: MonomialIdeal,
    K: MonomialIdeal,
    t: JrTriple,
    bound: int
) -> CheckReport:
    """L_I = L_J = L_K = 0 and S(r,s,t) equals the criterion sum on [1, bound]^3"""
    _require_dimension_three(I, J, K)
    _require_good(t, bound)
    combos = linear_combinations(_fits(I, J, K))
    total = criterion_sum(I, J, K)

    report = CheckReport(check="linear-coefficients-vanish", bound=bound)
    report.values.update({"L_I": combos[0], "L_J": combos[1], "L_K": combos[2], "criterion_sum": total})
    for label, value in zip(("L_I", "L_J", "L_K"), combos):
        report.checked += 1
        if value != 0:
            report.fail(Failure(point=[], detail=f"{label} != 0", expected=0, actual=value))

    for point in product(range(1, bound + 1), repeat=3):
        report.checked += 1
        value = s_length(t, point)
        if value != total:
            report.fail(Failure(point=list(point), detail="S(r,s,t) != criterion sum", expected=total, actual=value))
    report.notes.append(GOOD_REDUCTION_ASSUMPTION)
    return report


def length_formula_check(
    I: MonomialIdeal,
    J: MonomialIdeal,
    K: MonomialIdeal,
    t: JrTriple,
    bound: int
) -> CheckReport:
    """S(r,s,t) = r L_I + s L_J + t L_K + criterion sum on [1, bound]^3"""
    _require_dimension_three(I, J, K)
    _require_good(t, bound)
    combos = linear_combinations(_fits(I, J, K))
    total = criterion_sum(I, J, K)

    report = CheckReport(check="length-formula", bound=bound)
    for point in product(range(1, bound + 1), repeat=3):
        report.checked += 1
        expected = sum(n * c for n, c in zip(point, combos)) + total
        actual = s_length(t, point)
        if actual != expected:
            report.fail(Failure(point=list(point), detail="length formula", expected=expected, actual=actual))
    report.values.update({"L_I": combos[0], "L_J": combos[1], "L_K": combos[2], "criterion_sum": total})
    return report


def vanishing_criterion(
    I: MonomialIdeal,
    J: MonomialIdeal,
    K: MonomialIdeal,
    t: JrTriple,
    bound: int,
    box: int
) -> CheckReport:
    """
    Under postulation of the trivariate polynomial, joint reduction number
    zero holds iff e3(IJK) = 0

    When postulation fails on [0, box]^3 the hypothesis is unmet and the
    report passes vacuously with a note.
    """
    _require_dimension_three(I, J, K)
    _require_good(t, bound)
    postulation = postulation_check(FiltrationCache([I, J, K]), 3, box)
    e3 = e3_of_product([I, J, K])
    jrn = check_jrn_zero(t, bound)

    report = CheckReport(check="vanishing-criterion", bound=bound, checked=1)
    report.values.update({
        "e3(IJK)": e3,
        "postulation": int(postulation.passed),
        "jrn_zero": int(jrn.passed),
    })
    if not postulation.passed:
        report.notes.append(f"postulation fails on [0,{box}]^3; hypothesis not met")
        return report
    if jrn.passed != (e3 == 0):
        report.fail(Failure(point=[], detail="jrn-zero verdict disagrees with e3(IJK) = 0"))
    return report


def reduction_number_consistency(
    ideal: MonomialIdeal,
    reduction: MonomialIdeal,
    bound: int
) -> CheckReport:
    """
    Consistency check: r̄_K(I) <= 2 iff e3(I) = 0

    The depth hypothesis of the underlying theorem is not checked, so this
    is not a theorem instance.
    """
    number = normal_reduction_number(ideal, reduction, bound)
    e3 = e3_of_product([ideal])

    report = CheckReport(check="reduction-number-consistency", bound=bound, checked=1)
    report.values["e3"] = e3
    report.notes.append("depth of the associated graded ring of the normal filtration is not checked")
    if number is None:
        report.notes.append(f"reduction number exceeds {bound}; candidate is not verified as a reduction")
        report.fail(Failure(point=[bound], detail="reduction number exceeds the bound"))
        return report

    report.values["reduction_number"] = number
    if (number <= 2) != (e3 == 0):
        report.fail(Failure(point=[number], detail="r̄ <= 2 disagrees with e3 = 0", actual=e3, expected=0))
    return report

