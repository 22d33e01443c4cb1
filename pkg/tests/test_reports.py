import pandas as pd
import pytest
from pydantic import ValidationError

from src.models.reports import CheckReport, Failure, JrReport, KmLengths, Report, to_wire


def test_failures_stay_ordered_by_point():
    report = CheckReport(check="postulation")
    report.fail(Failure(point=[2, 0], detail="a"))
    report.fail(Failure(point=[0, 3], detail="b"))
    report.fail(Failure(point=[1, 1], detail="a"))
    report.fail(Failure(point=[0, 3], detail="a"))
    assert not report.passed
    assert [(f.point, f.detail) for f in report.failures] == [([0, 3], "a"), ([0, 3], "b"), ([1, 1], "a"), ([2, 0], "a")]
    assert report.first_failure.point == [0, 3]


def test_wire_form_renders_integers_as_strings():
    report = Report(command="hilbert-fit")
    report.outputs["e"] = [8, 4, 0, 0]
    report.outputs["point"] = (1, 2)
    report.outputs["table"] = pd.DataFrame({"index": ["3", "2"], "coefficient": [8, -4]})
    report.verdicts["complete"] = False
    wire = report.to_wire()
    assert wire["outputs"]["e"] == ["8", "4", "0", "0"]
    assert wire["outputs"]["point"] == ["1", "2"]
    assert wire["outputs"]["table"] == [
        {"index": "3", "coefficient": "8"},
        {"index": "2", "coefficient": "-4"},
    ]
    assert wire["verdicts"]["complete"] is False


def test_wire_form_of_nested_models():
    lengths = KmLengths(point=[1, 1, 1], h0=1, h1=0, chain_lengths=[10, 12, 3])
    assert to_wire({1: lengths}) == {
        "1": {"point": ["1", "1", "1"], "h0": "1", "h1": "0", "h2": "0", "chain_lengths": ["10", "12", "3"]},
    }


def test_model_validation():
    with pytest.raises(ValidationError):
        KmLengths(point=[1], h0=0, h1=0, h2=1)
    with pytest.raises(ValidationError):
        JrReport(kind="good-jr", bound=2, passed=False)
