import json
import subprocess
import sys

import numpy as np
import pytest

from lapspec.cli import main
from lapspec.graph import cycle_digraph, new_digraph
from lapspec.io import write_digraph, write_matrix
from lapspec.laplacian import l_k_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spectrum(capsys, tmp_path):
    write_matrix(l_k_matrix(4, 3), tmp_path / "k.csv")
    code, out, _ = run(capsys, "spectrum", str(tmp_path / "k.csv"), "--json")
    recs = json.loads(out)
    assert code == 0 and len(recs) == 4
    assert sorted(round(r["re"], 12) for r in recs) == [0, 1, 1, 1]


def test_spectrum_rejects_non_laplacian(capsys, tmp_path):
    write_matrix(np.eye(2), tmp_path / "i.csv")
    assert run(capsys, "spectrum", str(tmp_path / "i.csv"))[0] == 2
    assert run(capsys, "spectrum", str(tmp_path / "i.csv"), "--no-validate")[0] == 0


def test_verify_exit_codes(capsys, tmp_path):
    write_digraph(cycle_digraph(5), tmp_path / "c.tsv")
    code, out, _ = run(capsys, "verify", str(tmp_path / "c.tsv"), "--exact", "--json")
    assert code == 0 and json.loads(out)["pass"] is True
    (tmp_path / "bad.tsv").write_text("2 1\n0 1 3\n")
    code, _, err = run(capsys, "verify", str(tmp_path / "bad.tsv"))
    assert code == 2 and "bad.tsv:2" in err


def test_region(capsys, tmp_path):
    code, out, _ = run(capsys, "region", "--n", "7", "--svg", str(tmp_path / "r.svg"))
    assert code == 0 and "hexagon=True" in out
    assert (tmp_path / "r.svg").read_text().startswith("<svg")


def test_polygon(capsys):
    code, out, _ = run(capsys, "polygon", "--n", "4", "--json")
    d = json.loads(out)
    assert code == 0 and d["z_bounds"]["z_exact"] is None
    assert abs(complex(d["vertices"][1]["re"], d["vertices"][1]["im"]) - (0.25 + 0.25j)) < 1e-12


def test_conjecture(capsys, tmp_path):
    out_file = tmp_path / "rep.json"
    code, _, err = run(capsys, "conjecture", "--n", "5", "--trials", "300", "--seed", "1",
                       "--density", "0.4", "--out", str(out_file), "--violations-dir", str(tmp_path / "v"))
    rep = json.loads(out_file.read_text())
    assert code == 0 and rep["violations"] == 0 and rep["config"]["mode"] == "sparse-digraph"
    assert "violations=0" in err


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--n", "6", "--re", "0.5", "--im", "0.1")
    assert code == 0
    m = np.array([[float(x) for x in line.split(",")] for line in out.splitlines()[1:]])
    assert m.shape == (6, 6)
    assert np.min(np.abs(np.linalg.eigvals(m) - (0.5 + 0.1j))) < 1e-8


def test_witness_outside(capsys):
    assert run(capsys, "witness", "--n", "5", "--re", "0.5", "--im", "0.4")[0] == 1


def test_cycloid(capsys, tmp_path):
    code, out, _ = run(capsys, "cycloid", "--n", "8", "--svg", str(tmp_path / "c.svg"))
    assert code == 0 and "cycloid_gap=4.0" in out


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["polygon"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["polygon", "--n", "1"])
    assert e.value.code == 2


def test_console_script(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "lapspec.cli", "polygon", "--n", "3"],
                          capture_output=True, text=True, check=True)
    assert "lambda_1 = 0.500000000000000 +0.288675134594813i" in proc.stdout
