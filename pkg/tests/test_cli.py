"""End-to-end tests of the command-line interface."""

import csv
import json
import math

import numpy as np
import pytest

from pradial.cli import main


def run(tmp_path, *argv):
    out = tmp_path / "out"
    code = main(list(argv) + ["--out", str(out)])
    return code, out


def read_json(path):
    with open(path) as fh:
        return json.load(fh)


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


class TestSample:
    def test_cone_outputs_and_manifest(self, tmp_path):
        code, out = run(tmp_path, "sample", "--target", "cone", "--n", "3",
                        "--count", "50", "--seed", "7")
        assert code == 0
        rows = read_csv(out / "samples.csv")
        assert rows[0] == ["x1", "x2", "x3"]
        assert len(rows) == 51
        pts = np.array(rows[1:], dtype=float)
        assert np.allclose(np.sum(pts ** 2, axis=1), 1.0, atol=1e-10)
        man = read_json(out / "manifest.json")
        assert man["artifact"] == "pradial"
        assert man["command"] == "sample"
        assert man["config"]["seed"] == 7
        assert "samples.csv" in man["outputs"]
        assert man["threshold_overridden"] is False

    def test_missing_required_is_usage_error(self, tmp_path):
        code, _ = run(tmp_path, "sample", "--target", "cone")
        assert code == 2

    def test_unknown_target_is_usage_error(self, tmp_path):
        code, _ = run(tmp_path, "sample", "--target", "blob", "--n", "3")
        assert code == 2

    def test_byte_identical_rerun(self, tmp_path):
        args = ("sample", "--target", "pnpw", "--n", "4", "--count", "100",
                "--seed", "99")
        _, out1 = run(tmp_path / "a", *args)
        _, out2 = run(tmp_path / "b", *args)
        assert (out1 / "samples.csv").read_bytes() == \
            (out2 / "samples.csv").read_bytes()

    def test_mcmc_target_writes_diagnostics(self, tmp_path):
        code, out = run(tmp_path, "sample", "--target", "eigen-PH", "--n",
                        "3", "--count", "50", "--seed", "3")
        assert code == 0
        diag = read_json(out / "diagnostics.json")
        assert diag["chain_ok"] is True
        assert 0.2 <= diag["accept_rate"] <= 0.6

    def test_manifest_reruns_as_config(self, tmp_path):
        code, out1 = run(tmp_path / "a", "sample", "--target", "uniform",
                         "--n", "2", "--count", "30", "--seed", "5")
        assert code == 0
        out2 = tmp_path / "b"
        code = main(["sample", "--config", str(out1 / "manifest.json"),
                     "--out", str(out2)])
        assert code == 0
        assert (out1 / "samples.csv").read_bytes() == \
            (out2 / "samples.csv").read_bytes()


class TestNormLaw:
    def test_euclid_passes(self, tmp_path):
        code, out = run(tmp_path, "test-norm-law", "--target", "euclid",
                        "--n", "5", "--count", "5000", "--seed", "11")
        assert code == 0
        rep = read_json(out / "norm_law_report.json")
        assert rep["p_value"] > 0.01
        assert rep["beta_shape_a"] == 2.5  # (5 + 0)/2

    def test_threshold_override_recorded(self, tmp_path):
        code, out = run(tmp_path, "test-norm-law", "--target", "euclid",
                        "--n", "5", "--count", "2000", "--seed", "11",
                        "--ks-pvalue-threshold", "0.5")
        man = read_json(out / "manifest.json")
        assert man["threshold_overridden"] is True

    def test_atom_mixture(self, tmp_path):
        code, out = run(tmp_path, "test-norm-law", "--target", "euclid",
                        "--n", "5", "--count", "4000", "--seed", "13",
                        "--theta", "0.3")
        assert code == 0
        rep = read_json(out / "norm_law_report.json")
        assert rep["atom_fraction"] == pytest.approx(0.3, abs=0.03)
        lo, hi = rep["atom_count_interval"]
        assert lo <= rep["atom_fraction"] * rep["n_samples"] <= hi

    def test_flagged_exit_3(self, tmp_path):
        # an (artificially) extreme p-value threshold trips the gate
        code, out = run(tmp_path, "test-norm-law", "--target", "euclid",
                        "--n", "5", "--count", "2000", "--seed", "17",
                        "--ks-pvalue-threshold", "0.9999")
        assert code == 3


class TestRate:
    def test_beta_scan(self, tmp_path):
        code, out = run(tmp_path, "rate", "--target", "beta-euclid", "--p",
                        "2", "--alpha", "1", "--x-steps", "199")
        assert code == 0
        rep = read_json(out / "rate_report.json")
        # minimizer g/(g+alpha) = 1/3
        assert rep["min_x"] == pytest.approx(1.0 / 3.0, abs=0.01)
        assert rep["min_value"] == pytest.approx(0.0, abs=1e-3)
        rows = read_csv(out / "rate_scan.csv")
        assert rows[0] == ["x", "rate"]
        assert len(rows) == 200

    def test_point_evaluation(self, tmp_path):
        code, out = run(tmp_path, "rate", "--target", "beta-euclid", "--p",
                        "2", "--alpha", "0", "--c", "-0.1", "--x", "0.5")
        rep = read_json(out / "rate_report.json")
        assert rep["value"] == pytest.approx(-0.5 * math.log(0.5) + 0.1,
                                             abs=1e-12)
        assert rep["branch"] == "alpha-zero"

    def test_emp_itemized_summands(self, tmp_path):
        code, out = run(tmp_path, "rate", "--target", "emp-euclid", "--p",
                        "2", "--alpha", "1", "--analytic", "scaled-np",
                        "--z", "1.0")
        assert code == 0
        rep = read_json(out / "rate_report.json")
        assert rep["branch"] == "alpha-positive"
        assert sum(rep["summands"].values()) == pytest.approx(rep["value"],
                                                              abs=1e-9)

    def test_cone_h_arcsine(self, tmp_path):
        code, out = run(tmp_path, "rate", "--target", "cone-H", "--p", "2",
                        "--beta", "2", "--analytic", "arcsine")
        rep = read_json(out / "rate_report.json")
        assert rep["value"] == pytest.approx(math.log(2.0) - 0.25, abs=1e-5)

    def test_atoms_csv_input(self, tmp_path):
        csv_path = tmp_path / "atoms.csv"
        csv_path.write_text("x\n0.1\n0.2\n0.3\n")
        code, out = run(tmp_path, "rate", "--target", "emp-euclid", "--p",
                        "2", "--alpha", "1", "--atoms-csv", str(csv_path))
        rep = read_json(out / "rate_report.json")
        assert rep["branch"] == "cone-infinite"
        assert rep["value"] == "inf"

    def test_invalid_target(self, tmp_path):
        code, _ = run(tmp_path, "rate", "--target", "beta-H", "--p", "2",
                      "--beta", "3")
        assert code == 2


class TestLdpVerify:
    def test_gap_shrinks(self, tmp_path):
        code, out = run(tmp_path, "ldp-verify", "--event-b", "0.1", "--p",
                        "2", "--n-list", "20,40,80", "--seed", "1")
        assert code == 0
        rep = read_json(out / "ldp_report.json")
        assert rep["gap_monotone_decreasing"] is True
        assert rep["gap_final"] < 0.05
        rows = read_csv(out / "ldp_decay.csv")
        assert len(rows) == 4
        # exact decay rates exceed the infimum (upper-bound direction)
        for r in rows[1:]:
            assert float(r[6]) > 0

    def test_monte_carlo_censoring(self, tmp_path):
        # at n = 80 the event probability is ~1e-12: MC sees zero hits and
        # reports the rule-of-three bound with the censoring flag set
        code, out = run(tmp_path, "ldp-verify", "--event-b", "0.1", "--p",
                        "2", "--n-list", "80", "--count", "2000",
                        "--monte-carlo", "--seed", "21")
        assert code == 0
        rows = read_csv(out / "ldp_decay.csv")
        r = rows[1]
        assert int(r[4]) == 1  # censored
        assert float(r[3]) == pytest.approx(3.0 / 2000)


class TestAsymptotics:
    def test_ratios_approach_one(self, tmp_path):
        code, out = run(tmp_path, "asymptotics", "--n-list", "50,400")
        assert code == 0
        rows = read_csv(out / "asymptotics.csv")
        head = rows[0]
        i_lap = head.index("laplace_ratio")
        i_brt = head.index("breitung_ratio")
        i_el = head.index("adapted_laplace_err")
        i_eb = head.index("adapted_breitung_err")
        small, big = rows[1], rows[2]
        assert abs(float(big[i_lap]) - 1.0) < abs(float(small[i_lap]) - 1.0)
        assert abs(float(big[i_brt]) - 1.0) < abs(float(small[i_brt]) - 1.0)
        assert float(big[i_el]) < 0.02
        assert float(big[i_eb]) < 0.02


class TestNormConst:
    def test_constant_weight_exact(self, tmp_path):
        code, out = run(tmp_path, "norm-const", "--weight", "one", "--n",
                        "3", "--p", "2", "--count", "1000", "--seed", "2")
        assert code == 0
        rep = read_json(out / "norm_const.json")
        expected = -3.0 * (math.log(2.0) + math.lgamma(1.5))
        assert rep["log_norm_const"] == pytest.approx(expected, abs=1e-12)

    def test_unknown_weight(self, tmp_path):
        code, _ = run(tmp_path, "norm-const", "--weight", "frob", "--n", "3")
        assert code == 2

    def test_output_root_env(self, tmp_path, monkeypatch):
        root = tmp_path / "envroot"
        monkeypatch.setenv("PRADIAL_OUTPUT_ROOT", str(root))
        monkeypatch.chdir(tmp_path)
        code = main(["norm-const", "--weight", "one", "--n", "2",
                     "--count", "500", "--seed", "4"])
        assert code == 0
        assert (root / "norm_const.json").exists()
