import json
import subprocess
import sys

import pytest

from quasiuc.cli import main
from quasiuc.io import dumps, space_from_json, space_to_json
from quasiuc.space import ValidationReport


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_truncation(capsys, fixtures):
    code, out, _ = run(capsys, "validate", fixtures / "sorgenfrey3.space.json")
    assert code == 0 and "valid" in out


def test_validate_reports_violation(capsys, fixtures):
    code, out, _ = run(capsys, "validate", "--json", fixtures / "triangle-broken.space.json")
    assert code == 1
    obj = json.loads(out)
    assert obj["verdict"] == "invalid"
    assert ValidationReport.from_json(obj).to_json() == {k: obj[k] for k in ("verdict", "violations")}


@pytest.mark.parametrize("name", ["bad-rational.space.json", "malformed.space.json", "missing.space.json"])
def test_validate_parse_errors(capsys, fixtures, name):
    code, _, err = run(capsys, "validate", fixtures / name)
    assert code == 2 and err.startswith("error:")


def test_analyze_entangled(capsys, fixtures):
    code, out, _ = run(capsys, "analyze", "--json", fixtures / "ent3.space.json")
    assert code == 0
    obj = json.loads(out)
    assert obj["t1"] is False and obj["normal"] is False
    assert obj["normality_witness"] == [["c"], ["d"]]
    assert obj["accumulation"] == ["c", "d"] and obj["isolated"] == ["z"]
    assert obj["isolation"] == {"c": "0", "d": "0", "z": "1"}
    assert obj["topology"] == {"forward_in_backward": False, "backward_in_forward": False}


def test_analyze_refuses_invalid(capsys, fixtures):
    code, _, err = run(capsys, "analyze", fixtures / "triangle-broken.space.json")
    assert code == 2 and "triangle" in err


def test_analyze_one_point(capsys, tmp_path):
    p = tmp_path / "one.json"
    p.write_text(json.dumps({"name": "one", "points": ["a"], "d": [["0"]]}))
    code, out, _ = run(capsys, "analyze", p)
    assert code == 0 and "undefined" in out


def test_lebesgue_entangled(capsys, fixtures):
    code, out, _ = run(capsys, "lebesgue", fixtures / "ent3.space.json", fixtures / "ent3.cover.json")
    assert code == 0 and out.startswith("delta_star = 1\n")
    code, out, _ = run(capsys, "--json", "lebesgue", fixtures / "ent3-embedded.cover.json")
    assert code == 0 and json.loads(out)["delta_star"] == "1"


def test_lebesgue_rejects_non_open_cover(capsys, fixtures):
    code, _, err = run(capsys, "lebesgue", fixtures / "ent3.space.json", fixtures / "ent3-notopen.cover.json")
    assert code == 2 and "not forward-open" in err


def test_witness_exit_codes(capsys, fixtures):
    code, out, _ = run(capsys, "witness", "--horizon", 2000, fixtures / "recip-conj-sorgenfrey.witness.json")
    assert code == 0 and "HOLDS" in out
    code, out, _ = run(capsys, "witness", "--json", fixtures / "eps-too-large.witness.json")
    assert code == 1 and json.loads(out)["verdict"]["outcome"] == "fails"


def test_zoo_list_and_emit(capsys, tmp_path):
    code, out, _ = run(capsys, "zoo", "list", "--json")
    assert code == 0 and len(json.loads(out)["spaces"]) == 10
    code, out, _ = run(capsys, "zoo", "emit", "sorgenfrey", 4)
    S = space_from_json(json.loads(out))
    assert code == 0 and len(S) == 4
    assert dumps(space_to_json(S)) == out
    target = tmp_path / "u.json"
    assert run(capsys, "zoo", "emit", "upper", 5, "-o", target)[0] == 0
    assert run(capsys, "validate", target)[0] == 0


def test_zoo_check_non_normal(capsys):
    code, out, _ = run(capsys, "zoo", "check", "non-normal-uc")
    assert code == 0
    assert "d(A,B) = 0" in out and "upper bound" in out
    assert "mismatch" not in out


def test_zoo_check_small_horizon_is_not_a_failure(capsys):
    code, out, _ = run(capsys, "zoo", "check", "sorgenfrey", "--horizon", 10)
    assert code == 0 and "skipped" in out


def test_zoo_unknown_id(capsys):
    assert run(capsys, "zoo", "check", "nope")[0] == 2
    assert run(capsys, "zoo", "emit", "nope", 3)[0] == 2


def test_unknown_flag_is_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["validate", "--frobnicate", "x"])
    assert exc.value.code == 2


def test_suite_part_json(capsys):
    code, out, _ = run(capsys, "suite", "--only", "finite", "--trials", 10, "--seed", 4, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["body"]["params"]["seed"] == 4
    assert dumps(json.loads(out)) == out


def test_json_reemit_is_identical(capsys, fixtures):
    for argv in (
        ["analyze", "--json", fixtures / "ent3.space.json"],
        ["validate", "--json", fixtures / "sorgenfrey3.space.json"],
        ["lebesgue", "--json", fixtures / "ent3-embedded.cover.json"],
        ["zoo", "list", "--json"],
    ):
        _, out, _ = run(capsys, *argv)
        assert dumps(json.loads(out)) == out


def test_module_entry_point(fixtures):
    res = subprocess.run(
        [sys.executable, "-m", "quasiuc", "validate", str(fixtures / "sorgenfrey3.space.json")],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and res.stderr == ""
