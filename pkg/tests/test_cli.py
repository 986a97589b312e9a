import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from syzlef.cli import run
from syzlef.report import Report

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report.schema.json").read_text())
ACI = ["-f", "X^3", "-f", "Y^3", "-f", "Z^3", "-f", "X*Y*Z"]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return code, data


def test_wlp_example():
    code, data = call_json("wlp", *ACI)
    assert code == 0
    assert data["result"]["verdict"] is False
    assert data["result"]["failing_degrees"] == [2]
    assert data["input"] == ["X^3", "Y^3", "Z^3", "X*Y*Z"]


def test_split_example():
    code, data = call_json("split", "-f", "X^2", "-f", "Y^4", "-f", "Z^7", "-f", "X*Y")
    assert code == 0 and data["result"]["twists"] == [-3, -5, -7]


@pytest.mark.parametrize(
    "argv",
    [
        ["hilbert", *ACI],
        ["stable", "-f", "X^4", "-f", "Y^4", "-f", "Z^4", "-f", "X^3*Y", "--audit"],
        ["stable", "-f", "X^2", "-f", "Y^2", "-f", "Z^2", "--strict"],
        ["concord", *ACI],
        ["fuzz", "--kind", "mixed", "--n", "3-4", "--deg", "4", "--trials", "6"],
        ["fuzz", "--kind", "dense", "--n", "4", "--deg", "3", "--trials", "2"],
    ],
)
def test_json_validates_and_round_trips(argv):
    code, data = call_json(*argv)
    assert code == 0
    report = Report.from_dict(data)
    assert report.to_dict() == data
    assert report.to_json() == json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def test_text_and_json_carry_the_same_numbers():
    _, text, _ = call("hilbert", *ACI)
    _, data = call_json("hilbert", *ACI)
    rows = [line.split() for line in text.splitlines()[3:9]]
    assert [int(r[1]) for r in rows] == data["result"]["values"]


def test_output_is_byte_identical_for_equal_seeds():
    a = call("wlp", *ACI, "--seed", "5", "--json")[1]
    b = call("wlp", *ACI, "--seed", "5", "--json")[1]
    c = call("wlp", *ACI, "--seed", "6", "--json")[1]
    assert a == b and a != c


def test_generator_file(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("# almost complete intersection\nX^3\nY^3  # second\n\nZ^3\nX*Y*Z\n", encoding="utf-8")
    code, data = call_json("hilbert", "--file", str(path))
    assert code == 0 and data["result"]["values"] == [1, 3, 6, 6, 3, 0]


@pytest.mark.parametrize(
    "argv",
    [
        ["hilbert", "-f", "X^2*Y + X*Y"],
        ["hilbert", "-f", "X^^2"],
        ["wlp", "-f", "X^2", "-f", "Y^2"],
        ["stable", "-f", "X^2+Y^2", "-f", "Y^2", "-f", "Z^2"],
        ["hilbert"],
        ["hilbert", "--file", "/nonexistent/gens.txt"],
        ["fuzz", "--kind", "dense", "--n", "1"],
        ["nonsense"],
    ],
)
def test_invalid_input_exits_2(argv):
    code, out, _ = call(*argv)
    assert code == 2 and out == ""


def test_negative_verdict_is_success():
    assert call("wlp", *ACI)[0] == 0


def test_paper_examples_exit_code_matches_claims():
    code, data = call_json("paper-examples")
    failed = [c["number"] for c in data["result"]["claims"] if not c["passed"]]
    assert (code == 0) == (not failed)
    assert code in (0, 1)
    _, text, _ = call("paper-examples")
    assert sum(line.startswith(("[PASS]", "[FAIL]")) for line in text.splitlines()) == data["result"]["total"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "syzlef", "split", "-f", "X", "-f", "Y", "-f", "Z", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["twists"] == [-1, -2]
