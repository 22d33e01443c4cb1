"""
Structured verification results and the command-line wire form
"""

from typing import Any, Dict, List, Literal, Optional

import pandas as pd
from pydantic import BaseModel, Field, field_validator, model_validator


class Failure(BaseModel):
    """One violated identity at one grid point"""
    point: List[int] = Field(..., description="Exponent tuple where the check failed")
    detail: str = Field("", description="Which identity failed")
    witness: Optional[List[int]] = Field(None, description="Monomial in LHS but not in RHS")
    expected: Optional[int] = None
    actual: Optional[int] = None


class CheckReport(BaseModel):
    """Outcome of a bounded verification"""
    check: str
    passed: bool = True
    bound: Optional[int] = None
    checked: int = 0
    failures: List[Failure] = Field(default_factory=list)
    values: Dict[str, int] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)

    @property
    def first_failure(self) -> Optional[Failure]:
        return self.failures[0] if self.failures else None

    def fail(self, failure: Failure) -> None:
        """Record a violation, keeping failures ordered by point"""
        self.passed = False
        self.failures.append(failure)
        self.sort_failures()

    def sort_failures(self) -> None:
        self.failures.sort(key=lambda f: (f.point, f.detail))


JrKind = Literal[
    "joint-reduction-zero",
    "good-jr",
    "strictness",
    "complete-reduction",
    "good-complete-reduction",
]


class JrFailure(BaseModel):
    point: List[int]
    witness: List[int]
    subset: Optional[List[int]] = Field(None, description="1-based indices of the elements involved")


class JrReport(BaseModel):
    """Verdict of a joint-reduction identity family checked up to a bound"""
    kind: JrKind
    bound: int
    passed: bool
    checked: int = 0
    first_failure: Optional[JrFailure] = None
    assumptions: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def failure_has_witness(self) -> "JrReport":
        if not self.passed and self.first_failure is None:
            raise ValueError("A failed report must carry its first failure")
        return self


class KmLengths(BaseModel):
    """Homology lengths of the graded Kirby-Mehran complex at one point"""
    point: List[int]
    h0: int = Field(..., ge=0)
    h1: int = Field(..., ge=0)
    h2: int = 0
    chain_lengths: List[int] = Field(
        default_factory=list,
        description="Lengths of C0, C1, C2"
    )

    @field_validator("h2")
    @classmethod
    def top_homology_vanishes(cls, value: int) -> int:
        if value != 0:
            raise ValueError(f"H2 must vanish, got length {value}")
        return value

    @property
    def euler_characteristic(self) -> int:
        return self.h0 - self.h1 + self.h2


class CriterionReport(BaseModel):
    """Agreement of the three equivalent joint-reduction-number-zero criteria"""
    e3_values: Dict[str, int]
    criterion_sum: int
    jrn_zero_passed: bool
    jrn_zero_verified_to: int
    lc_origin: int
    lc_stable_k: int
    consistent: bool
    assumptions: List[str] = Field(default_factory=list)


class Report(BaseModel):
    """One command invocation in wire form"""
    command: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    outputs: Dict[str, Any] = Field(default_factory=dict)
    verdicts: Dict[str, bool] = Field(default_factory=dict)
    witnesses: List[Dict[str, Any]] = Field(default_factory=list)
    timings: Dict[str, float] = Field(default_factory=dict)
    errors: List[str] = Field(default_factory=list)

    def to_wire(self) -> Dict[str, Any]:
        """Dict with every integer rendered as a decimal string"""
        return to_wire(self.model_dump())


def to_wire(obj: Any) -> Any:
    """
    Convert an object to its machine-readable form

    Args:
        obj: Object to convert

    Returns:
        The same structure with integers as decimal strings, tuples as
        lists and DataFrames as lists of records
    """
    if isinstance(obj, bool):
        return obj
    elif isinstance(obj, int):
        return str(obj)
    elif isinstance(obj, pd.DataFrame):
        return [to_wire(record) for record in obj.to_dict(orient="records")]
    elif isinstance(obj, BaseModel):
        return to_wire(obj.model_dump())
    elif isinstance(obj, dict):
        return {str(k): to_wire(v) for k, v in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [to_wire(item) for item in obj]
    else:
        return obj
