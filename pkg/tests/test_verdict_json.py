"""Verdict serialization and the curated-data override."""

import json

import pytest

from higherfano import classify, data
from higherfano.verdict import Certificate, Status, Verdict, reverify, undetermined


@pytest.mark.parametrize("space,m", [("G2/P2", 3), ("E8/P8", 3), ("Gr(2,5)", 2), ("OG+(5,10)", 3),
                                     ("SG(4,8)", 2), ("E7/P7", 2), ("A1/P1", 2), ("Q^9", 3)])
def test_round_trip(space, m):
    v = classify.check_space(space, m)
    back = Verdict.from_json(v.to_json())
    assert back.to_dict() == v.to_dict()
    if back.certificate is not None:
        assert reverify(back.certificate)


def test_schema_fields():
    d = json.loads(classify.check_space("G2/P2", 3).to_json())
    assert set(d) == {"space", "condition", "status", "certificate", "reason"}
    assert d["condition"] == "F3" and d["status"] == "Fails"
    assert set(d["certificate"]) == {"kind", "summary", "data", "recipe", "args", "provenance", "axioms"}
    assert d["certificate"]["data"]["value"] == "-1"


def test_verdict_invariants():
    with pytest.raises(ValueError):
        Verdict("x", 2, Status.HOLDS)
    with pytest.raises(ValueError):
        Verdict("x", 2, Status.UNDETERMINED)
    with pytest.raises(ValueError):
        Certificate("Guess", "no")
    assert undetermined("x", 2, "why").reason == "why"


def test_tampered_certificate_fails_reverification():
    v = classify.check_space("G2/P2", 3)
    d = v.certificate.to_dict()
    d["data"]["value"] = "1"
    assert not reverify(Certificate.from_dict(d))


def test_data_override(tmp_path, monkeypatch):
    rec = json.loads(data.data_path().read_text())
    for fam in rec["ci_thresholds"]["families"]:
        if fam["key"] == "cubic":
            fam["bound"] = 24
    (tmp_path / data.FILENAME).write_text(json.dumps(rec))
    monkeypatch.setenv(data.ENV_VAR, str(tmp_path))
    assert data.data_path() == tmp_path / data.FILENAME
    report = classify.bounds_report()
    assert [r.key for r in report.disagreements] == ["cubic"]
    monkeypatch.delenv(data.ENV_VAR)
    assert classify.bounds_report().ok


def test_data_override_bad_version(tmp_path, monkeypatch):
    (tmp_path / data.FILENAME).write_text(json.dumps({"version": 99}))
    monkeypatch.setenv(data.ENV_VAR, str(tmp_path))
    with pytest.raises(ValueError):
        data.curated()
