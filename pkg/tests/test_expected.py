import copy
import json

import pytest

from rank3 import expected


FAST_LABELS = {"wreath-n5", "substab-n7-w3", "mullineux-suite",
               "point-action-params"}


@pytest.fixture
def fast_registry(monkeypatch):
    fast = [c for c in expected.CASES if c[0] in FAST_LABELS]
    fast.append(("skipped-demo", "ingest", "always skipped", lambda: None))
    monkeypatch.setattr(expected, "CASES", fast)
    return fast


def strip_seconds(report):
    r = copy.deepcopy(report)
    for c in r["cases"]:
        c.pop("seconds")
    return r


def test_report_schema_and_order(fast_registry):
    report = expected.run_reproduction_suite("core")
    labels = [c["case"] for c in report["cases"]]
    assert labels == sorted(labels)
    for c in report["cases"]:
        assert set(c) >= {"case", "citation", "expected", "computed",
                          "match", "seconds"}
        assert c["citation"]
    s = report["summary"]
    assert s == {"passed": len(FAST_LABELS), "failed": 0, "skipped": 0}
    json.dumps(report)  # JSON-serializable


def test_skip_semantics(fast_registry):
    report = expected.run_reproduction_suite("ingest")
    skipped = [c for c in report["cases"] if c.get("skipped")]
    assert [c["case"] for c in skipped] == ["skipped-demo"]
    assert report["summary"]["skipped"] == 1
    assert report["summary"]["failed"] == 0


def test_deterministic_across_runs_and_threads(fast_registry, monkeypatch):
    first = expected.run_reproduction_suite("core")
    monkeypatch.setenv("RANK3_THREADS", "4")
    second = expected.run_reproduction_suite("core")
    assert strip_seconds(first) == strip_seconds(second)
    assert json.dumps(strip_seconds(first), sort_keys=True) == \
        json.dumps(strip_seconds(second), sort_keys=True)


def test_thread_cap_parsing(monkeypatch):
    monkeypatch.delenv("RANK3_THREADS", raising=False)
    assert expected.thread_cap() == 1
    monkeypatch.setenv("RANK3_THREADS", "8")
    assert expected.thread_cap() == 8
    monkeypatch.setenv("RANK3_THREADS", "junk")
    assert expected.thread_cap() == 1
    monkeypatch.setenv("RANK3_THREADS", "-2")
    assert expected.thread_cap() == 1


def test_bad_tier_rejected():
    with pytest.raises(ValueError):
        expected.run_reproduction_suite("nope")
