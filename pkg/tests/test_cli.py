import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from spechtlab.cli import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, EXAMPLES, golden_text, run_captured

SCHEMA = json.loads(resources.files("spechtlab").joinpath("schema/output-1.0.json").read_text())

JSON_RUNS = [
    ["tableaux", "--n", "5", "--k", "1", "--d", "3"],
    ["tableaux", "--n", "5", "--k", "1", "--d", "3", "--count-only"],
    ["basis", "--n", "4", "--k", "2", "--d", "2"],
    ["straighten", "--tableau", "top=1;bottom=2,3,4", "--k", "1"],
    ["wlp", "--n", "4", "--field", "fp:2"],
    ["slp", "--n", "3"],
    ["decomp", "--n", "4", "--k", "1", "--d", "2"],
    ["verify", "--theorem", "perfectD", "--n", "5", "--k", "2", "--field", "fp:2"],
    ["verify", "--theorem", "rad", "--n", "4", "--k", "3"],
    ["verify", "--theorem", "perfect", "--n", "4", "--k", "1", "--field", "fp:3"],
    ["gb", "--gens", "x1 - x2; x2 - x3", "--order", "lex"],
    ["member", "--gens", "x1 - x2; x2 - x3", "--poly", "x1 - x3"],
    ["colon", "--gens", "x1*x2", "--by", "x1"],
    ["colon", "--gens", "x1^2; x1*x2", "--by", "m"],
    ["intersect", "--gens", "x1", "--gens2", "x2"],
    ["saturate", "--gens", "x1^2; x1*x2", "--by", "x2"],
    ["hilbert", "--gens", "x1*x2; x1*x3; x2*x3"],
    ["reproduce", "--example", "i31"],
]


@pytest.mark.parametrize("argv", JSON_RUNS, ids=lambda a: " ".join(a[:3]))
def test_json_output_validates(argv):
    code, out, _ = run_captured(argv + ["--json"])
    assert code == EXIT_OK
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["schema_version"] == "1.0" and doc["command"] == argv[0]


@pytest.mark.parametrize("argv", JSON_RUNS[:6] + JSON_RUNS[7:9], ids=lambda a: " ".join(a[:3]))
def test_reruns_byte_identical(argv):
    first = run_captured(argv + ["--json"])
    second = run_captured(argv + ["--json"])
    assert first == second


def test_count_only():
    code, out, _ = run_captured(["tableaux", "--n", "5", "--k", "1", "--d", "3", "--count-only"])
    assert (code, out.strip()) == (0, "9")


def test_wlp_plain():
    code, out, _ = run_captured(["wlp", "--n", "4", "--field", "fp:2"])
    doc = json.loads(out)
    assert code == 0
    assert doc == {"n": 4, "field": "fp:2", "rank_test": False, "threshold_predicate": False, "agree": True}


def test_verify_perfectD_witness():
    code, out, _ = run_captured(["verify", "--theorem", "perfectD", "--n", "5", "--k", "2", "--field", "fp:2"])
    assert code == EXIT_OK
    assert "x1*x2 + x1*x3 + x2*x3" in out


def test_timing_goes_to_stderr():
    argv = ["verify", "--theorem", "hE", "--n", "5", "--k", "2"]
    code, out, err = run_captured(argv + ["--timing"])
    assert code == 0 and "total" in err
    assert out == run_captured(argv)[1]


@pytest.mark.parametrize("argv,code", [
    (["tableaux", "--n", "x", "--k", "1", "--d", "1"], EXIT_USAGE),
    (["tableaux", "--n", "3", "--k", "2", "--d", "2"], EXIT_USAGE),
    (["verify", "--theorem", "rad", "--n", "5", "--k", "3"], EXIT_USAGE),
    (["gb", "--gens", "x1 +"], EXIT_USAGE),
    (["wlp", "--n", "3", "--field", "fp:4"], EXIT_USAGE),
    ([], EXIT_USAGE),
    (["decomp", "--n", "7", "--k", "1", "--d", "2"], EXIT_INCONCLUSIVE),
    (["verify", "--theorem", "jnk", "--n", "5", "--k", "2", "--field", "fp:2"], EXIT_INCONCLUSIVE),
])
def test_exit_codes(argv, code):
    assert run_captured(argv)[0] == code


def test_allow_large_warns():
    code, _, err = run_captured(["decomp", "--n", "4", "--k", "1", "--d", "2", "--allow-large"])
    assert code == 0 and "warning" in err


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_golden_examples(name):
    assert EXAMPLES[name]() == golden_text(name).rstrip("\n")
    code, out, _ = run_captured(["reproduce", "--example", name])
    assert code == 0 and "golden: match" in out


def test_batch(tmp_path):
    manifest = tmp_path / "jobs.json"
    manifest.write_text(json.dumps([
        ["tableaux", "--n", "4", "--k", "2", "--d", "2", "--count-only"],
        ["verify", "--theorem", "perfectD", "--n", "4", "--k", "1", "--field", "fp:2", "--json"],
    ]))
    code, out, _ = run_captured(["--batch", str(manifest)])
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    runs = doc["result"]["runs"]
    assert runs[0]["stdout"].strip() == "2"
    assert json.loads(runs[1]["stdout"])["result"]["holds"] is True
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert run_captured(["--batch", str(bad)])[0] == EXIT_USAGE


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "spechtlab", "tableaux", "--n", "5", "--k", "1", "--d", "3", "--count-only"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "9"
