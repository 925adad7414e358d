import csv
import json

import numpy as np
import pytest

from pyellcop.cli import main
from pyellcop.cli.schemas import EXPERIMENT_COLUMNS


def _read_csv(path):
    with open(path, newline="") as fp:
        return list(csv.reader(fp))


@pytest.fixture
def t_sample(tmp_path):
    path = tmp_path / "u.csv"
    argv = ["sample", "--dim", "3", "--family", "t", "--nu", "5", "--n", "200"]
    assert main(argv + ["--seed", "7", "--out", str(path)]) == 0
    return str(path)


def test_sample_reproducible(tmp_path):
    a, b, rho = tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "rho.csv"
    argv = ["sample", "--dim", "4", "--n", "50", "--seed", "3"]
    assert main(argv + ["--out", str(a), "--rho-out", str(rho)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_text() == b.read_text()
    u = np.array(_read_csv(a), dtype=float)
    assert u.shape == (50, 4)
    assert np.all((u > 0.0) & (u < 1.0))
    assert np.all(np.diag(np.array(_read_csv(rho), dtype=float)) == 1.0)
    manifest = json.loads((tmp_path / "a.manifest.json").read_text())
    assert manifest["command"] == "sample"
    assert manifest["seeds"] == {"seed": 3}


def test_fit(t_sample, tmp_path):
    out = tmp_path / "fit.json"
    argv = ["fit", "--input", t_sample, "--family", "t", "--nu", "5", "--out", str(out)]
    assert main(argv + ["--trace"]) == 0
    result = json.loads(out.read_text())
    assert result["method"] == "ig"
    assert result["family"] == "t"
    assert result["nu"] == 5.0
    assert result["status"] == "Converged"
    assert result["n"] == 200
    assert result["clamped"] == 0
    assert len(result["lambda_trace"]) == result["iterations"] + 1
    rho = np.array(result["rho_hat"])
    assert np.all(np.diag(rho) == 1.0)
    assert result["manifest"]["command"] == "fit"


def test_fit_deterministic(t_sample, tmp_path):
    outputs = []
    for name in ("one.json", "two.json"):
        out = tmp_path / name
        argv = ["fit", "--input", t_sample, "--family", "t", "--nu", "5"]
        assert main(argv + ["--out", str(out)]) == 0
        outputs.append(json.loads(out.read_text()))
    assert outputs[0]["rho_hat"] == outputs[1]["rho_hat"]
    assert outputs[0]["loglik"] == outputs[1]["loglik"]


@pytest.mark.parametrize("method", ["approx", "naive", "moments"])
def test_fit_methods(t_sample, tmp_path, method):
    out = tmp_path / "fit.json"
    argv = ["fit", "--input", t_sample, "--family", "t", "--nu", "5", "--method", method]
    assert main(argv + ["--out", str(out)]) == 0
    assert json.loads(out.read_text())["method"] == method


def test_fit_not_converged(t_sample, tmp_path):
    out = tmp_path / "fit.json"
    argv = ["fit", "--input", t_sample, "--family", "t", "--nu", "5", "--max-iters", "1"]
    assert main(argv + ["--out", str(out)]) == 2
    assert json.loads(out.read_text())["status"] == "MaxIters"


@pytest.mark.parametrize(
    "extra",
    [
        ["--family", "t"],
        ["--family", "gaussian", "--nu", "4"],
        ["--family", "t", "--nu", "4", "--method", "full-t"],
        ["--method", "full-t"],
        ["--family", "t", "--nu", "-1"],
        ["--k1", "2"],
        ["--method", "bogus"],
    ],
)
def test_fit_usage_errors(t_sample, extra):
    assert main(["fit", "--input", t_sample] + extra) == 1


def test_fit_input_errors(tmp_path):
    assert main(["fit", "--input", str(tmp_path / "missing.csv")]) == 1
    bad = tmp_path / "bad.csv"
    bad.write_text("0.1,0.2\n0.3,x\n")
    assert main(["fit", "--input", str(bad)]) == 1


def test_gen_corr(tmp_path):
    out = tmp_path / "rho.csv"
    assert main(["gen-corr", "--dim", "5", "--seed", "2", "--out", str(out)]) == 0
    rho = np.array(_read_csv(out), dtype=float)
    assert rho.shape == (5, 5)
    assert np.all(np.diag(rho) == 1.0)
    assert np.array_equal(rho, rho.T)
    spectrum = _read_csv(tmp_path / "rho.spectrum.csv")
    assert spectrum[0] == ["eigenvalue"]
    eigs = np.array(spectrum[1:], dtype=float).ravel()
    assert eigs.sum() == pytest.approx(5.0, rel=1e-12)
    assert np.allclose(np.linalg.eigvalsh(rho)[::-1], eigs, atol=1e-8)


def test_gen_corr_rejects_small_dimension():
    assert main(["gen-corr", "--dim", "1"]) == 1


def test_experiment(tmp_path):
    out = tmp_path / "exp.csv"
    argv = ["experiment", "--dims", "2", "--nus", "5", "--cases-per-cell", "1"]
    assert main(argv + ["--n-obs", "50", "--jobs", "1", "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert rows[0] == list(EXPERIMENT_COLUMNS)
    assert len(rows) == 2
    record = dict(zip(rows[0], rows[1]))
    assert record["case_id"] == "0"
    assert record["d"] == "2"
    assert float(record["nu"]) == 5.0

    summary = json.loads((tmp_path / "exp.summary.json").read_text())
    assert len(summary["cells"]) == 1
    assert summary["cells"][0]["count"] == 1
    assert summary["manifest"]["command"] == "experiment"


def test_bench(tmp_path):
    out = tmp_path / "bench.json"
    argv = ["bench", "--dim", "3", "--n-obs", "50", "--repeats", "2"]
    assert main(argv + ["--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["d"] == 3
    assert report["nu"] == 5.0
    assert len(report["times"]) == 2
    assert report["max"] >= report["median"]
    assert report["loglik"][0] == report["loglik"][1]


def _bench_dimension_25(tmp_path, repeats):
    out = tmp_path / "bench.json"
    argv = ["bench", "--dim", "25", "--n-obs", "100", "--nu", "5", "--repeats", str(repeats)]
    assert main(argv + ["--out", str(out)]) == 0
    return json.loads(out.read_text())


def test_bench_dimension_25(tmp_path):
    report = _bench_dimension_25(tmp_path, repeats=2)
    assert report["d"] == 25
    assert report["status"] == ["Converged", "Converged"]
    assert report["loglik"][0] == report["loglik"][1]


@pytest.mark.slow
def test_bench_dimension_25_under_a_second(tmp_path):
    report = _bench_dimension_25(tmp_path, repeats=10)
    assert len(report["times"]) == 10
    assert all(status == "Converged" for status in report["status"])
    assert report["max"] < 1.0


def test_bench_gaussian(tmp_path):
    out = tmp_path / "bench.json"
    argv = ["bench", "--dim", "2", "--n-obs", "30", "--repeats", "1", "--family", "gaussian"]
    assert main(argv + ["--out", str(out)]) == 0
    assert json.loads(out.read_text())["nu"] is None


def test_parser_errors(capsys):
    assert main(["unknown"]) == 1
    assert main([]) == 1
    with pytest.raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0
    assert "pyellcop" in capsys.readouterr().out
