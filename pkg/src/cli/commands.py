"""
Command dispatch for the command line

Every command builds a Report. Exit codes: 0 on success, 1 when a
mathematical check fails, 2 on parse, usage or precondition errors.
"""

import logging
import time
from argparse import Namespace
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import pandas as pd

from src.algebra.closure import integral_closure
from src.algebra.monomial import MonomialIdeal, RingContext
from src.cli.parser import parse_monomial, read_ideal
from src.config.settings import LC_MAX_K
from src.data.store import CacheStore
from src.errors import AlgebraError, InconsistencyError, ParseError, PreconditionError, StabilizationError
from src.hilbert.colength import colength
from src.hilbert.filtration import FiltrationCache
from src.hilbert.polynomial import fit, postulation_check, stabilized_fit
from src.models.reports import CheckReport, JrReport, Report
from src.reduction.joint import JrTriple, check_good_jr, check_jrn_zero
from src.reduction.kirby_mehran import km_lengths, lc_origin_length, length_identity_check, s_length
from src.reduction.normal_reduction import normal_reduction_number
from src.verify.corpus import search_corpus
from src.verify.theorems import (
    criterion_sum,
    e3_values,
    mixed_coefficient_relations,
    verify_equivalences,
)
from src.verify.vitulli import vitulli_check

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclass
class Context:
    """Ring, named ideals and optional persistent store shared by a command"""

    ring: RingContext
    bindings: Dict[str, MonomialIdeal] = field(default_factory=dict)
    store: Optional[CacheStore] = None

    def ideal(self, text: str) -> MonomialIdeal:
        return read_ideal(text, self.ring, self.bindings)

    def cache(self, ideals, closed: bool = True) -> FiltrationCache:
        return FiltrationCache(ideals, closed=closed, store=self.store)


def build_context(args: Namespace) -> Context:
    ring = RingContext.from_spec(args.ring)
    store = CacheStore(args.cache) if args.cache else None
    context = Context(ring=ring, store=store)
    for name in ("I", "J", "K"):
        text = getattr(args, name, None)
        if text:
            context.bindings[name] = context.ideal(text)
    return context


def _ideals(args: Namespace, context: Context, low: int = 1, high: int = 3) -> List[MonomialIdeal]:
    """Positional expressions if given, otherwise the bound ideals I, J, K in order"""
    if args.expressions:
        ideals = [context.ideal(text) for text in args.expressions]
    else:
        ideals = [context.bindings[name] for name in ("I", "J", "K") if name in context.bindings]
    if not low <= len(ideals) <= high:
        raise PreconditionError(f"Expected {low} to {high} ideals, got {len(ideals)}")
    return ideals


def _single(args: Namespace, context: Context) -> MonomialIdeal:
    return _ideals(args, context, 1, 1)[0]


def _triple(args: Namespace, context: Context) -> Tuple[List[MonomialIdeal], JrTriple]:
    ideals = _ideals(args, context, 3, 3)
    texts = [args.a, args.b, args.c]
    if any(text is None for text in texts):
        raise PreconditionError("Elements --a, --b and --c are required")
    elements = tuple(parse_monomial(text, context.ring) for text in texts)
    return ideals, JrTriple(elements, tuple(ideals), cache=context.cache(ideals))


def _point(args: Namespace) -> Tuple[int, ...]:
    if not args.point:
        raise PreconditionError("--point r,s,t is required")
    try:
        return tuple(int(part) for part in args.point.split(","))
    except ValueError:
        raise ParseError(f"Malformed point {args.point!r}")


def _inputs(context: Context, ideals: List[MonomialIdeal]) -> Dict[str, object]:
    inputs = {name: str(ideal) for name, ideal in zip("IJK", ideals)}
    inputs["ring"] = ",".join(context.ring.variable_names)
    return inputs


def _jr_result(report: Report, jr: JrReport, ring: RingContext) -> bool:
    report.outputs["report"] = jr.model_dump()
    report.verdicts[jr.kind] = jr.passed
    if jr.first_failure is not None:
        report.witnesses.append({
            "point": jr.first_failure.point,
            "witness": ring.format_monomial(tuple(jr.first_failure.witness)),
            "subset": jr.first_failure.subset,
        })
    return jr.passed


def _check_result(report: Report, check: CheckReport, ring: Optional[RingContext] = None) -> bool:
    report.outputs["report"] = check.model_dump()
    report.verdicts[check.check] = check.passed
    for failure in check.failures:
        entry = {"point": failure.point, "detail": failure.detail}
        if failure.witness is not None and ring is not None:
            entry["witness"] = ring.format_monomial(tuple(failure.witness))
        report.witnesses.append(entry)
    return check.passed


def cmd_closure(args, context, report) -> bool:
    ideal = _single(args, context)
    closed = ideal if ideal.is_unit else integral_closure(ideal)
    report.inputs["ideal"] = str(ideal)
    report.outputs["closure"] = str(closed)
    report.outputs["generators"] = [list(g) for g in closed.generators]
    report.verdicts["complete"] = closed == ideal
    return True


def cmd_colength(args, context, report) -> bool:
    ideal = _single(args, context)
    report.inputs["ideal"] = str(ideal)
    report.outputs["colength"] = colength(ideal)
    return True


def cmd_hilbert_fit(args, context, report) -> bool:
    ideals = _ideals(args, context)
    arity = args.arity or len(ideals)
    cache = context.cache(ideals)
    poly = stabilized_fit(cache, arity) if args.stabilize else fit(cache, arity, args.offset)
    report.inputs.update(_inputs(context, ideals))
    report.outputs["offset"] = poly.offset
    report.outputs["coefficients"] = {
        "(" + ",".join(str(a) for a in alpha) + ")": value
        for alpha, value in poly.coeffs.items()
    }
    report.outputs["table"] = poly.as_frame()
    if arity == 1:
        report.outputs["e"] = list(poly.normal_coefficients())
    return True


def cmd_e_coeffs(args, context, report) -> bool:
    ideal = _single(args, context)
    poly = stabilized_fit(context.cache([ideal]), 1)
    report.inputs["ideal"] = str(ideal)
    report.outputs["e"] = list(poly.normal_coefficients())
    report.outputs["offset"] = poly.offset
    return True


def cmd_criterion(args, context, report) -> bool:
    I, J, K = _ideals(args, context, 3, 3)
    report.inputs.update(_inputs(context, [I, J, K]))
    report.outputs["e3"] = e3_values(I, J, K)
    report.outputs["criterion_sum"] = criterion_sum(I, J, K)
    return True


def cmd_check_jrn(args, context, report) -> bool:
    ideals, t = _triple(args, context)
    report.inputs.update(_inputs(context, ideals))
    return _jr_result(report, check_jrn_zero(t, args.bound), context.ring)


def cmd_check_good_jr(args, context, report) -> bool:
    ideals, t = _triple(args, context)
    report.inputs.update(_inputs(context, ideals))
    return _jr_result(report, check_good_jr(t, args.bound), context.ring)


def cmd_km_lengths(args, context, report) -> bool:
    ideals, t = _triple(args, context)
    report.inputs.update(_inputs(context, ideals))
    lengths = km_lengths(t, _point(args))
    report.outputs.update(lengths.model_dump())
    report.outputs["euler_characteristic"] = lengths.euler_characteristic
    return True


def cmd_length_identity(args, context, report) -> bool:
    ideals, t = _triple(args, context)
    report.inputs.update(_inputs(context, ideals))
    return _check_result(report, length_identity_check(t, _point(args)))


def cmd_s_length(args, context, report) -> bool:
    ideals, t = _triple(args, context)
    report.inputs.update(_inputs(context, ideals))
    report.outputs["s_length"] = s_length(t, _point(args))
    return True


def cmd_lc_origin(args, context, report) -> bool:
    ideals, t = _triple(args, context)
    report.inputs.update(_inputs(context, ideals))
    value, k = lc_origin_length(t, max(args.bound, LC_MAX_K))
    report.outputs.update({"lc_origin": value, "stable_k": k})
    return True


def cmd_reduction_number(args, context, report) -> bool:
    ideal = _single(args, context)
    reduction = context.ideal(args.reduction) if args.reduction else ideal
    report.inputs.update({"ideal": str(ideal), "reduction": str(reduction)})
    number = normal_reduction_number(ideal, reduction, args.bound, cache=context.cache([ideal]))
    report.outputs["reduction_number"] = number
    report.verdicts["within_bound"] = number is not None
    return number is not None


def cmd_vitulli(args, context, report) -> bool:
    ideals = _ideals(args, context)
    report.inputs.update(_inputs(context, ideals))
    return _check_result(report, vitulli_check(ideals, args.bound, cache=context.cache(ideals)), context.ring)


def cmd_postulation(args, context, report) -> bool:
    """Normal polynomial against the normal function, or with --adic against the adic one"""
    ideals = _ideals(args, context)
    against = context.cache(ideals, closed=False) if args.adic else None
    report.inputs.update(_inputs(context, ideals))
    report.inputs["filtration"] = "adic" if args.adic else "normal"
    check = postulation_check(context.cache(ideals), args.arity or len(ideals), args.bound, against=against)
    if check.failures:
        report.outputs["mismatches"] = pd.DataFrame(
            [failure.model_dump(include={"point", "expected", "actual"}) for failure in check.failures],
            columns=["point", "expected", "actual"],
        )
    return _check_result(report, check)


def cmd_equivalences(args, context, report) -> bool:
    ideals, t = _triple(args, context)
    report.inputs.update(_inputs(context, ideals))
    criterion = verify_equivalences(*ideals, t, args.bound)
    report.outputs["report"] = criterion.model_dump()
    report.verdicts["consistent"] = criterion.consistent
    report.verdicts["joint-reduction-zero"] = criterion.jrn_zero_passed
    return criterion.consistent


def cmd_mixed_relations(args, context, report) -> bool:
    I, J, K = _ideals(args, context, 3, 3)
    report.inputs.update(_inputs(context, [I, J, K]))
    return _check_result(report, mixed_coefficient_relations(I, J, K))


def cmd_corpus(args, context, report) -> bool:
    entries = search_corpus(args.seed, args.count, ring=context.ring)
    report.inputs.update({"seed": args.seed, "count": args.count})
    results = []
    consistent = True
    for entry in entries:
        criterion = verify_equivalences(*entry.ideals, entry.triple(), args.bound)
        consistent &= criterion.consistent
        results.append(entry.as_record() | {
            "criterion_sum": criterion.criterion_sum,
            "jrn_zero": criterion.jrn_zero_passed,
            "lc_origin": criterion.lc_origin,
        })
    report.outputs["entries"] = pd.DataFrame(results)
    report.verdicts["consistent"] = consistent
    return consistent


COMMANDS: Dict[str, Callable[[Namespace, Context, Report], bool]] = {
    "closure": cmd_closure,
    "colength": cmd_colength,
    "hilbert-fit": cmd_hilbert_fit,
    "e-coeffs": cmd_e_coeffs,
    "criterion": cmd_criterion,
    "check-jrn": cmd_check_jrn,
    "check-good-jr": cmd_check_good_jr,
    "km-lengths": cmd_km_lengths,
    "length-identity": cmd_length_identity,
    "s-length": cmd_s_length,
    "lc-origin": cmd_lc_origin,
    "reduction-number": cmd_reduction_number,
    "vitulli": cmd_vitulli,
    "postulation": cmd_postulation,
    "equivalences": cmd_equivalences,
    "mixed-relations": cmd_mixed_relations,
    "corpus": cmd_corpus,
}


def run_command(name: str, args: Namespace) -> Tuple[Report, int]:
    """
    Execute one command

    Args:
        name: Command name, a key of COMMANDS
        args: Parsed command-line arguments

    Returns:
        (report, exit code)
    """
    report = Report(command=name)
    if name not in COMMANDS:
        report.errors.append(f"Unknown command: {name}")
        return report, EXIT_USAGE

    started = time.perf_counter()
    try:
        context = build_context(args)
        passed = COMMANDS[name](args, context, report)
        code = EXIT_OK if passed else EXIT_CHECK_FAILED

    except InconsistencyError as e:
        logger.error(f"{name}: {e}")
        report.errors.append(str(e))
        if e.report is not None:
            report.outputs["report"] = e.report.model_dump()
        code = EXIT_CHECK_FAILED

    except AlgebraError as e:
        logger.error(f"{name}: {e}")
        report.errors.append(f"{type(e).__name__}: {e}")
        if isinstance(e, StabilizationError) and isinstance(e.table, pd.DataFrame):
            report.outputs["diagnostics"] = e.table
        code = EXIT_USAGE

    except Exception as e:
        logger.error(f"Unexpected error in {name}: {e}", exc_info=True)
        report.errors.append(f"Internal error: {e}")
        code = EXIT_USAGE

    report.timings["seconds"] = round(time.perf_counter() - started, 6)
    return report, code
