import json

import pytest

from src.report import Report, ReportWriter, emit
from src.utils.verdict import Truth, Verdict, all_of


def _sample() -> Report:
    report = Report("qh-check", {"ordering": ["1", "3", "2"]})
    report.add("cartan", [[1, 0, 1], [1, 1, 0], [1, 1, 1]])
    report.add("chain", {"stage_dims": [7, 3, 1], "agree": True})
    report.set_verdict(Verdict.true("highest weight", cap=5))
    return report


def test_json_report():
    data = json.loads(emit(_sample(), "json"))
    assert data["command"] == "qh-check"
    assert data["verdict"] == "true"
    assert data["conditional_to_cap"] == 5
    assert data["cartan"][2] == [1, 1, 1]


def test_json_report_is_deterministic():
    assert emit(_sample(), "json") == emit(_sample(), "json")


def test_human_report():
    text = emit(_sample(), "human")
    assert text.startswith("== qh-check ==")
    assert "ordering=['1', '3', '2']" in text
    assert "verdict: true" in text
    assert "  agree: yes" in text
    assert "\n  1 1 1\n" in text


def test_unknown_format():
    with pytest.raises(ValueError):
        emit(_sample(), "xml")


def test_exit_codes():
    assert Report("info").exit_code() == 0
    assert _sample().exit_code() == 0
    assert Report("x").set_verdict(Verdict.false("no")).exit_code() == 1
    assert Report("x").set_verdict(Verdict.undetermined("cap")).exit_code() == 2


def test_report_writer(tmp_path):
    writer = ReportWriter(str(tmp_path / "reports"))
    path = writer.save(_sample(), "run1")
    assert path.endswith("run1.json")
    assert json.loads(open(path, encoding="utf-8").read())["verdict"] == "true"

    explicit = tmp_path / "human.txt"
    writer.save(_sample(), str(explicit), "human")
    assert explicit.read_text(encoding="utf-8").startswith("== qh-check ==")


def test_verdict_conjunction():
    t = Verdict.true("a", cap=4)
    assert all_of([t, Verdict.true("b", cap=3)]).cap == 3
    assert all_of([t, Verdict.undetermined("u"), Verdict.false("f")]).is_false
    assert all_of([t, Verdict.undetermined("u")]).is_undetermined
    assert all_of([]).truth is Truth.TRUE


def test_verdict_cap_only_on_true():
    assert Verdict.false("f").with_cap(3).cap is None
    assert Verdict.true("t").with_cap(3).conditional
    assert str(Verdict.true("ok").with_cap(3)) == "true (to cap 3): ok"
    assert Verdict.of(False, "no").to_dict() == {"verdict": "false", "reason": "no"}
