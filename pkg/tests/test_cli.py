import json
import math
import subprocess
import sys

import pytest

from interpk.cli import main


def run_cli(args):
    return main(list(args))


@pytest.fixture
def couple_config(tmp_path):
    cfg = {
        "couple": {"norm0": {"p": 1, "weights": [1, 1, 1]},
                   "norm1": {"p": "inf", "weights": [1, 1, 1]},
                   "strategy": "exact_l1_linf", "offset": 0},
        "vector": {"offset": 0, "entries": [3, 1, 2]},
        "n_min": 0, "n_max": 2,
    }
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg))
    return path


class TestRouting:
    def test_kprofile_json(self, couple_config, tmp_path):
        out = tmp_path / "prof.json"
        assert run_cli(["kprofile", "--config", str(couple_config),
                        "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["report"]["values"] == [3.0, 5.0, 6.0]
        assert data["version"]

    def test_kprofile_csv(self, couple_config, tmp_path):
        out = tmp_path / "prof.csv"
        assert run_cli(["kprofile", "--config", str(couple_config),
                        "--out", str(out), "--format", "csv"]) == 0
        lines = out.read_text().splitlines()
        assert lines[1] == "n,t,K"
        assert lines[2] == "0,1.0,3.0"

    def test_interp_norm(self, tmp_path):
        cfg = {
            "couple": {"norm0": {"p": 1, "weights": [1]},
                       "norm1": {"p": 1, "weights": [1]},
                       "strategy": "power_coordinatewise"},
            "vector": {"offset": 0, "entries": [1.0]},
            "theta": 0.5, "q": 2,
        }
        path = tmp_path / "c.json"
        path.write_text(json.dumps(cfg))
        out = tmp_path / "o.json"
        assert run_cli(["interp-norm", "--config", str(path),
                        "--out", str(out)]) == 0
        val = json.loads(out.read_text())["report"]["value"]
        assert val == pytest.approx(math.sqrt(3.0), abs=1e-5)

    def test_snumbers_csv(self, tmp_path):
        mat = tmp_path / "m.json"
        mat.write_text(json.dumps({"rows": 2, "cols": 2,
                                   "entries": [[1, 1], [1, 1]]}))
        out = tmp_path / "sn.csv"
        assert run_cli(["snumbers", "--matrix", str(mat),
                        "--out", str(out)]) == 0
        lines = [l for l in out.read_text().splitlines()
                 if not l.startswith("#")]
        assert lines[0] == "n,a_n"
        assert float(lines[1].split(",")[1]) == pytest.approx(2.0)

    def test_witness_flags_in_csv(self, tmp_path):
        out = tmp_path / "w.csv"
        assert run_cli(["witness", "--p", "2", "--q", "1", "--n", "65536",
                        "--out", str(out), "--max-rows", "16"]) == 0
        text = out.read_text()
        assert "flag=diverging" in text

    def test_lift_csv(self, tmp_path):
        cfg = tmp_path / "l.json"
        cfg.write_text(json.dumps({
            "epsilon": [1.0, 0.5, 1 / 3, 0.25, 0.2, 1 / 6, 1 / 7, 0.125],
            "h": [2, 4, 6, 8, 10, 12, 14, 16], "N": 4}))
        out = tmp_path / "xi.csv"
        assert run_cli(["lift", "--config", str(cfg), "--out", str(out)]) == 0
        rows = [l.split(",") for l in out.read_text().splitlines()[2:]]
        xi = [float(r[2]) for r in rows]
        assert xi == pytest.approx([1.0, 0.5, 1 / 3, 0.25])

    def test_strictness_csv(self, tmp_path):
        out = tmp_path / "st.csv"
        assert run_cli(["strictness", "--theta", "0.5", "--q", "1",
                        "--n-list", "4", "--out", str(out)]) == 0
        row = out.read_text().splitlines()[-1].split(",")
        assert abs(float(row[3]) - 2.914) <= 1e-3

    def test_verify_pass_exit_zero(self, tmp_path):
        cfg = tmp_path / "v.json"
        cfg.write_text(json.dumps({"family": "l1_geometric", "t": 0.25,
                                   "sizes": [9, 11]}))
        out = tmp_path / "r.json"
        code = run_cli(["verify", "dichotomy", "--config", str(cfg),
                        "--seed", "7", "--out", str(out)])
        assert code == 0
        assert json.loads(out.read_text())["report"]["pass"] is True

    def test_verify_trace_on_request(self, tmp_path):
        cfg = tmp_path / "v.json"
        cfg.write_text(json.dumps({"dims": [2], "count": 10, "budget": 1}))
        out, trace = tmp_path / "r.json", tmp_path / "t.csv"
        code = run_cli(["verify", "mainlema", "--config", str(cfg),
                        "--seed", "3", "--out", str(out),
                        "--trace", str(trace)])
        assert code == 0
        assert json.loads(out.read_text())["report"]["trace_path"] == str(trace)
        lines = trace.read_text().splitlines()
        assert lines[1].split(",")[0] == "index"
        assert len(lines) > 10

    def test_verify_fail_exit_three(self, tmp_path):
        # an impossible lower bound forces a failed band
        cfg = tmp_path / "v.json"
        cfg.write_text(json.dumps({"family": "l1_linf", "t": 0.25,
                                   "sizes": [4], "upper_slack": -0.9}))
        out = tmp_path / "r.json"
        code = run_cli(["verify", "dichotomy", "--config", str(cfg),
                        "--seed", "7", "--out", str(out)])
        assert code == 3
        assert json.loads(out.read_text())["report"]["pass"] is False


class TestConfigErrors:
    def test_unknown_key_exit_two(self, tmp_path, capsys):
        cfg = tmp_path / "bad.json"
        cfg.write_text(json.dumps({"family": "l1_linf", "bogus": 1}))
        code = run_cli(["verify", "dichotomy", "--config", str(cfg),
                        "--seed", "1", "--out", str(tmp_path / "x.json")])
        assert code == 2
        assert "bogus" in capsys.readouterr().err

    def test_malformed_json_exit_two(self, tmp_path, capsys):
        cfg = tmp_path / "broken.json"
        cfg.write_text("{not json")
        code = run_cli(["kprofile", "--config", str(cfg),
                        "--out", str(tmp_path / "x.json")])
        assert code == 2
        assert "broken.json" in capsys.readouterr().err

    def test_missing_required_key(self, tmp_path, capsys):
        cfg = tmp_path / "m.json"
        cfg.write_text(json.dumps({"t": 0.25, "sizes": [4]}))
        code = run_cli(["verify", "dichotomy", "--config", str(cfg),
                        "--seed", "1", "--out", str(tmp_path / "x.json")])
        assert code == 2
        assert "family" in capsys.readouterr().err

    def test_missing_seed_is_usage_error(self, tmp_path):
        code = run_cli(["verify", "dichotomy",
                        "--out", str(tmp_path / "x.json")])
        assert code == 2


class TestDeterminism:
    def test_byte_identical_reports(self, tmp_path):
        cfg = tmp_path / "v.json"
        cfg.write_text(json.dumps({"theta": 0.3, "p": 1.0, "dims": [4, 8],
                                   "count": 30}))
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        for out in (out1, out2):
            assert run_cli(["verify", "sum-intersection", "--config", str(cfg),
                            "--seed", "7", "--out", str(out)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_byte_identical_csv(self, tmp_path):
        outs = []
        for name in ("a.csv", "b.csv"):
            out = tmp_path / name
            assert run_cli(["witness", "--p", "2", "--q", "1", "--n", "4096",
                            "--out", str(out)]) == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]

    def test_subprocess_entry_point(self, tmp_path):
        # the installed console script routes identically
        out = tmp_path / "sp.csv"
        proc = subprocess.run(
            [sys.executable, "-m", "interpk.cli", "strictness", "--theta",
             "0.5", "--q", "1", "--n-list", "1,2", "--out", str(out)],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert out.exists()
