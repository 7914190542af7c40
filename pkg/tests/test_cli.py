import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from hlnet.cli import main
from golden_cases import CASES, GOLDEN_DIR, run

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_output(name):
    code, out = run(CASES[name])
    assert code == 0
    assert out == (GOLDEN_DIR / name).read_text()


@pytest.mark.parametrize("name", ["gen_random_hl_4.edgelist", "verify_structure.json", "kappa_q4_g1.json"])
def test_rerun_is_byte_identical(name):
    assert run(CASES[name])[1] == run(CASES[name])[1]


def test_gen_hypercube(capsys):
    code, out, _ = cli(capsys, "gen", "hypercube", "n=3")
    doc = json.loads(out)
    assert code == 0 and doc["order"] == 8 and len(doc["edges"]) == 12
    assert doc["edges"] == sorted(doc["edges"]) and all(u < v for u, v in doc["edges"])
    jsonschema.validate(doc, schema("graph"))


def test_gen_gamma_labels(capsys):
    doc = json.loads(cli(capsys, "gen", "gamma:k=1,l=0")[1])
    assert doc["labels"][0] == "e" and "a1^3b1" in doc["labels"] and len(doc["edges"]) == 12


def test_vq_constructions_give_identical_documents(capsys):
    a = cli(capsys, "gen", "vq-rule", "n=4")[1]
    b = cli(capsys, "gen", "vq-recursive", "n=4")[1]
    assert a == b


def test_formats_share_the_edge_list(capsys):
    doc = json.loads(cli(capsys, "gen", "g84")[1])
    edgelist = cli(capsys, "gen", "g84", "--format", "edgelist")[1]
    assert [list(map(int, line.split())) for line in edgelist.splitlines()] == doc["edges"]
    dot = cli(capsys, "gen", "g84", "--format", "dot")[1]
    assert dot.startswith('graph "g84" {') and dot.count(" -- ") == 12


@pytest.mark.parametrize("argv,value", [(["5", "2"], "10"), (["6", "3"], "15"), (["15", "11"], "103")])
def test_f(capsys, argv, value):
    assert cli(capsys, "f", *argv)[:2] == (0, value + "\n")


def test_f_table_and_errors(capsys):
    assert cli(capsys, "f", "4", "--table")[1] == "4 6 7 7 6\n"
    with pytest.raises(SystemExit) as exc:
        main(["f", "4"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["f", "x", "1"])
    assert exc.value.code == 2


def test_kappa_exact(capsys):
    code, out, _ = cli(capsys, "kappa", "--topology", "hypercube:n=4", "--g", "1", "--mode", "exact")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 6 and doc["status"] == "definitive"
    jsonschema.validate(doc, schema("certificate"))


def test_kappa_star_upper(capsys):
    doc = json.loads(cli(capsys, "kappa", "--topology", "gamma:k=5,l=0", "--g", "11", "--mode", "star-upper")[1])
    assert doc["value"] >= 104 and len(doc["leaves"]) == 11 and doc["validCutset"]
    assert sorted(doc["componentSizes"]) == [12, 32768 - 12 - doc["value"]]
    jsonschema.validate(doc, schema("certificate"))


def test_kappa_bounded_exit_code(capsys):
    code, out, _ = cli(capsys, "kappa", "--topology", "hypercube:n=4", "--g", "1", "--max-cardinality", "5")
    doc = json.loads(out)
    assert code == 4 and doc["status"] == "bounded" and doc["value"] is None
    jsonschema.validate(doc, schema("certificate"))


def test_kappa_size_guard(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["kappa", "--topology", "hypercube:n=7", "--g", "0"])
    assert exc.value.code == 2


def test_kappa_thread_invariance(capsys):
    one = cli(capsys, "kappa", "--topology", "random-hl:n=5,seed=3", "--g", "1", "--threads", "1")[1]
    many = cli(capsys, "kappa", "--topology", "random-hl:n=5,seed=3", "--g", "1", "--threads", "4")[1]
    assert one == many


def test_kappa_from_graph_file(capsys, tmp_path):
    path = tmp_path / "q4.json"
    assert cli(capsys, "gen", "hypercube", "n=4", "-o", str(path))[0] == 0
    doc = json.loads(cli(capsys, "kappa", "--graph", str(path), "--g", "0")[1])
    assert doc["value"] == 4 and doc["spec"] == "hypercube:n=4"


def test_kappa_needs_one_source(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["kappa", "--g", "0"])
    assert exc.value.code == 2


def test_timing_is_opt_in(capsys):
    plain = json.loads(cli(capsys, "verify", "prop-f", "n=6")[1])
    timed = json.loads(cli(capsys, "verify", "prop-f", "n=6", "--timing")[1])
    assert "elapsedMillis" not in plain and timed["elapsedMillis"] >= 0
    jsonschema.validate(timed, schema("report"))


def test_verify_reports_validate(capsys):
    for argv in (["lemma-star", "n=4", "gmax=4"], ["iso-vq-delta", "n=1..10"], ["lemma-common-neighbor", "k=0", "l=4"]):
        code, out, _ = cli(capsys, "verify", *argv)
        doc = json.loads(out)
        assert code == 0 and doc["status"] == "verified"
        jsonschema.validate(doc, schema("report"))


def test_verify_usage_errors(capsys):
    for argv in (["verify", "no-such-claim"], ["verify", "prop-f", "bogus"], ["verify", "prop-f", "m=1"],
                 ["gen", "hypercube", "n=0"], ["gen", "torus", "n=3"], ["decompose", "0", "0"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_verify_list(capsys):
    code, out, _ = cli(capsys, "verify", "--list")
    assert code == 0 and "thm-cor" in out and "lemma-hl" in out


@pytest.mark.slow
def test_verify_refuted_exit_code(capsys):
    code, out, _ = cli(capsys, "verify", "thm-extra-0", "specs=hypercube:n=5", "g=2", "strict=1")
    doc = json.loads(out)
    assert code == 1 and doc["status"] == "refuted" and doc["counterwitness"]["cutset"]
    jsonschema.validate(doc, schema("report"))


@pytest.mark.parametrize("k,l,half", [(1, 0, 4), (2, 0, 32), (0, 3, 4)])
def test_decompose(capsys, k, l, half):
    code, out, _ = cli(capsys, "decompose", str(k), str(l))
    doc = json.loads(out)
    assert code == 0 and doc["witness"]["subgroupOrder"] == half


def test_output_dir_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("HLNET_OUTPUT_DIR", str(tmp_path))
    assert cli(capsys, "f", "5", "2", "-o", "sub/f.txt")[0] == 0
    assert (tmp_path / "sub" / "f.txt").read_text() == "10\n"


def test_io_errors(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _, err = cli(capsys, "f", "5", "2", "-o", str(blocker / "out.txt"))
    assert code == 3 and "I/O error" in err
    code, _, _ = cli(capsys, "kappa", "--graph", str(tmp_path / "missing.json"), "--g", "0")
    assert code == 3


def test_progress_goes_to_stderr():
    proc = subprocess.run([sys.executable, "-m", "hlnet.cli", "-v", "kappa", "--topology", "hypercube:n=3", "--g", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == 4
    assert "cardinality" in proc.stderr


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hlnet.cli", "f", "6", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "15\n"
