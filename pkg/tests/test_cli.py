import json

import pytest

from recipsums.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


def test_represent(capsys):
    doc = run_json(capsys, "represent", "--p", "7", "--k", "1", "--epsilon", "1/1", "--a", "0")
    assert doc["result"] == {"N": 2, "target": 0, "witness": [1, 6]}
    assert doc["config"]["command"] == "represent"
    assert doc["config"]["epsilon"] == "1/1"
    assert doc["version"] == "0.1.0"


def test_represent_with_oracle(capsys):
    doc = run_json(
        capsys, "represent", "--p", "31", "--k", "2", "--epsilon", "1/2", "--a", "17", "--oracle"
    )
    assert doc["diagnostics"]["oracle_N"] == doc["result"]["N"]


def test_nmax(capsys):
    doc = run_json(capsys, "nmax", "--p", "7", "--k", "1", "--epsilon", "1/1")
    assert doc["result"]["n_max"] == 2
    assert doc["result"]["histogram"] == [2, 1, 1, 1, 1, 1, 1]


def test_nmax_oracle(capsys):
    doc = run_json(capsys, "nmax", "--p", "13", "--k", "2", "--epsilon", "1/2", "--oracle")
    assert doc["diagnostics"]["oracle_agrees"] is True


def test_scan_csv(capsys):
    code, out = run_cli(
        capsys, "scan", "--primes", "2..31", "--k", "1", "--epsilon", "1/1", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p,H,base_size,n_max,max_layer,elapsed_ms"
    assert len(lines) == 12
    assert lines[1] == "2,2,1,2,2,0"
    assert "\r" not in out


def test_scan_json(capsys):
    doc = run_json(capsys, "scan", "--primes", "2..11", "--k", "1", "--epsilon", "1/2")
    assert [row["p"] for row in doc["result"]] == [2, 3, 5, 7, 11]
    assert doc["diagnostics"]["timing_suppressed"] is True


def test_grow(capsys):
    doc = run_json(capsys, "grow", "--p", "101", "--k", "1", "--beta", "1/4")
    result = doc["result"]
    assert result["final_size"] > result["threshold_value"]
    assert result["base"]["set_size"] == 2  # primes {2, 3} below floor(101^(1/4)) = 3
    assert result["n"] == len(result["steps"])
    sizes = [s["size_after"] for s in result["steps"]]
    assert sizes == sorted(sizes)


def test_expsum_members(capsys):
    doc = run_json(capsys, "expsum", "--p", "7", "--members", "1,2,3", "--J", "2")
    assert doc["result"]["f0"] == 9
    assert doc["result"]["bilinear"]["holds"] is True
    assert doc["result"]["covering"]["all_covered"] is True
    assert doc["result"]["covering"]["min_count"] == 8


def test_expsum_random_seeded(capsys):
    doc1 = run_json(capsys, "expsum", "--p", "101", "--random-size", "20", "--seed", "5")
    doc2 = run_json(capsys, "expsum", "--p", "101", "--random-size", "20", "--seed", "5")
    assert doc1 == doc2
    assert doc1["result"]["set_size"] == 20


def test_expsum_pipeline_auto_J(capsys):
    doc = run_json(capsys, "expsum", "--p", "101", "--grow", "--k", "1", "--beta", "1/4", "--auto-J")
    covering = doc["result"]["covering"]
    assert covering["all_covered"] is True
    assert covering["min_count"] > 0
    assert covering["j_sufficient"] is True


def test_expsum_minimal_J(capsys):
    doc = run_json(capsys, "expsum", "--p", "7", "--members", "1,2", "--min-J")
    assert doc["result"]["minimal_J"] == 3


def test_baseset(capsys):
    doc = run_json(capsys, "baseset", "--p", "101", "--k", "1", "--beta", "1/2", "--u", "1",
                   "--list-members")
    assert doc["result"]["set_size"] == 4
    assert doc["result"]["members"] == [29, 34, 51, 81]
    assert doc["result"]["regime_holds"] is True


def test_smoothset(capsys):
    doc = run_json(capsys, "smoothset", "--p", "11", "--bound", "2", "--epsilon", "1/2",
                   "--theta", "1/2", "--list-members")
    assert doc["result"]["members"] == [1, 2, 4, 8]
    assert doc["result"]["conditions"]["closure_holds"] is True


def test_domain_error_exit_1(capsys):
    code, out = run_cli(capsys, "represent", "--p", "9", "--k", "1", "--epsilon", "1/1", "--a", "0")
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["type"] == "NotPrime"


def test_out_of_range_epsilon_exit_1(capsys):
    code, out = run_cli(capsys, "represent", "--p", "7", "--epsilon", "3/2", "--a", "0")
    assert code == 1
    assert json.loads(out)["error"]["type"] == "ValueError"


def test_grow_empty_base_exit_1(capsys):
    code, out = run_cli(capsys, "grow", "--p", "11", "--k", "1", "--beta", "3/5", "--u", "3")
    assert code == 1
    assert json.loads(out)["error"]["type"] == "EmptyBase"


def test_usage_error_exit_2(capsys):
    assert main(["represent", "--p", "7"]) == 2  # missing required args
    capsys.readouterr()
    assert main(["nosuchcommand"]) == 2
    capsys.readouterr()
    assert main(["represent", "--p", "7", "--epsilon", "0.5", "--a", "1"]) == 2  # float rejected
    capsys.readouterr()


def test_csv_only_for_scan(capsys):
    code = main(["represent", "--p", "7", "--epsilon", "1/1", "--a", "0", "--format", "csv"])
    assert code == 2


def test_oracle_prime_guard(capsys):
    code = main(["nmax", "--p", "101", "--epsilon", "1/1", "--oracle"])
    assert code == 2


def test_output_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = main(["nmax", "--p", "7", "--epsilon", "1/1", "--output", str(path)])
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["result"]["n_max"] == 2


def test_text_format(capsys):
    code, out = run_cli(capsys, "nmax", "--p", "7", "--epsilon", "1/1", "--format", "text")
    assert code == 0
    assert "result.n_max: 2" in out


def test_json_byte_determinism(capsys):
    args = ["grow", "--p", "499", "--k", "1", "--beta", "1/4"]
    code1, out1 = run_cli(capsys, *args)
    code2, out2 = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
