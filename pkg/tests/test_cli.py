import json
import subprocess
import sys

import pytest

from rmck.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_and_round_trip(tmp_path, capsys):
    code, text, _ = run(capsys, "gen", "--family", "complete", "--n", "6")
    assert code == 0 and text.splitlines()[0] == "6 15"
    f = tmp_path / "k6.txt"
    f.write_text(text)
    code, colored, _ = run(capsys, "color", str(f), "--k", "2")
    assert code == 0
    cf = tmp_path / "k6c.txt"
    cf.write_text(colored)
    # parse + serialize of an already canonical file is byte-identical
    code, again, _ = run(capsys, "color", str(cf), "--k", "2", "--method", "improve")
    assert again == colored
    code, out, _ = run(capsys, "verify", str(cf), "--k", "2")
    d = json.loads(out)
    assert code == 0 and d["schema"] == 1 and d["rmc_k"] is True and d["colors"] == 7


def test_verify_failure_exit_one(tmp_path, capsys):
    f = tmp_path / "c4.txt"
    f.write_text("4 4\n0 1 1\n1 2 2\n2 3 3\n3 0 4\n")
    code, out, _ = run(capsys, "verify", str(f), "--k", "1")
    assert code == 1 and json.loads(out)["failing_pair"] is not None


def test_solve_infeasible_names_precondition(capsys):
    code, _, err = run(capsys, "solve", "@cycle:5", "--k", "2")
    assert code == 1 and "tau(G) >= 2" in err and "partition" in err


def test_solve_and_bounds_json(capsys):
    code, out, _ = run(capsys, "solve", "@complete:4", "--k", "2")
    d = json.loads(out)
    assert code == 0 and d["exact"] == 2 and len(d["witness_coloring"]) == 6
    code, out, _ = run(capsys, "bounds", "@petersen", "--k", "1")
    d = json.loads(out)
    assert d["exact"] == 7 and d["predicate"] == "triangle-free"
    code, out, _ = run(capsys, "solve", "@complete:6", "--k", "2", "--node-limit", "20")
    d = json.loads(out)
    assert d["exact"] is None and d["lower"] >= 7


def test_tau_pack_metrics(capsys):
    code, out, _ = run(capsys, "tau", "@cycle:5")
    assert json.loads(out)["tau"] == "5/4"
    code, out, _ = run(capsys, "pack", "@cycle:5", "--k", "2")
    assert code == 1 and json.loads(out)["witness_partition"]
    code, out, _ = run(capsys, "metrics", "@bipartite:2,3")
    assert json.loads(out)["triangle_free"] is True


def test_normalize_and_perfect(capsys, tmp_path):
    code, out, _ = run(capsys, "color", "@perfect:2,2,4", "--k", "2", "--method", "perfect", "--parts", "2,2,4")
    assert code == 0
    f = tmp_path / "pc.txt"
    f.write_text(out)
    code, out, _ = run(capsys, "normalize", str(f), "--k", "2", "--check")
    d = json.loads(out)
    assert code == 0 and len(d["spanning_classes"]) >= 2 and d["m"] == 32


def test_bad_inputs_exit_two(tmp_path, capsys):
    assert run(capsys, "metrics", str(tmp_path / "missing.txt"))[0] == 2
    f = tmp_path / "bad.txt"
    f.write_text("3 2\n0 1\n")
    assert run(capsys, "metrics", str(f))[0] == 2
    f.write_text("3 1\n0 x\n")
    assert run(capsys, "metrics", str(f))[0] == 2
    assert run(capsys, "verify", "@complete:4", "--k", "1")[0] == 2
    assert run(capsys, "metrics", "@unknown:3")[0] == 2
    assert run(capsys, "experiment", "sweep", "--n", "10", "--p", "0.5")[0] == 2


def test_experiments(capsys, tmp_path):
    csv_path = tmp_path / "rows.csv"
    code, out, _ = run(capsys, "experiment", "stp-formula", "--n", "10", "--p", "1.0", "--trials", "5",
                       "--seed", "0", "--csv", str(csv_path))
    assert code == 0 and json.loads(out)["agreement"] == 1.0
    assert len(csv_path.read_text().splitlines()) == 6
    code, out, _ = run(capsys, "experiment", "sweep", "--n", "20", "--k", "1", "--p-min", "0.05",
                       "--p-max", "0.5", "--p-steps", "4", "--trials", "10", "--seed", "3")
    d = json.loads(out)
    assert code == 0 and len(d["frequencies"]) == 4 and d["p_star"] > 0


def test_stdin_and_console_script():
    proc = subprocess.run([sys.executable, "-m", "rmck.cli", "tau", "-"], input="3 3\n0 1\n1 2\n2 0\n",
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["tau"] == "3/2"


def test_help_lists_subcommands(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    out = capsys.readouterr().out
    for name in ("gen", "metrics", "tau", "pack", "color", "verify", "normalize", "solve", "bounds", "experiment"):
        assert name in out
