import io
import json

import numpy as np
import pandas as pd
import pytest
from typer.testing import CliRunner

from main import app
from src.config.fourier import settings as fourier_settings
from src.config.subdivision import settings as subdivision_settings
from src.libs.artifacts import read_samples, write_csv
from src.subdivision.entity import SampledFunction

runner = CliRunner()

HAT = {"head": [{"lo": -1, "coeffs": [0.5, 1, 0.5]}]}
BSPLINE = {"head": [{"lo": 0, "coeffs": [0.25, 0.75, 0.75, 0.25]}]}


@pytest.fixture
def invoke(tmp_path):
    def call(*args):
        return runner.invoke(app, ["--log-file", str(tmp_path / "lab.log"), *map(str, args)])
    return call


@pytest.fixture
def write(tmp_path):
    def dump(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path
    return dump


@pytest.fixture
def hat(write):
    return write("hat.json", HAT)


@pytest.fixture
def bspline(write):
    return write("bspline.json", BSPLINE)


def frame(result) -> pd.DataFrame:
    return pd.read_csv(io.StringIO(result.stdout))


class TestSubdivisionCommands:
    def test_phi(self, invoke, hat):
        result = invoke("phi", "--schedule", hat, "--levels", 3)
        assert result.exit_code == 0
        samples = frame(result)
        assert list(samples.columns) == ["t", "re", "im"]
        assert len(samples) == 15
        assert samples.loc[samples["t"] == 0.5, "re"].item() == pytest.approx(0.5)

    def test_phi_to_file(self, invoke, hat, tmp_path):
        out = tmp_path / "phi.csv"
        assert invoke("phi", "--schedule", hat, "--levels", 4, "--out", out).exit_code == 0
        samples = read_samples(out)
        assert samples.level == 4
        assert samples.value_at(0) == pytest.approx(1)

    def test_run_from_csv(self, invoke, hat, tmp_path):
        start = tmp_path / "start.csv"
        write_csv(SampledFunction(0, -2, [1.0, 3.0, -1.0, 2.0]), start)
        result = invoke("run", "--schedule", hat, "--start", start, "--levels", 1)
        assert result.exit_code == 0
        samples = frame(result)
        # odd positions average their neighbours
        assert samples.loc[samples["t"] == -1.5, "re"].item() == pytest.approx(2)

    def test_dimension(self, invoke, hat):
        result = invoke("dimension", "--schedule", hat, "--interval=0,3")
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["bound"] == 5
        assert report["supports"][0] == {"lo": -1.0, "hi": 1.0}

    def test_levels_out_of_range(self, invoke, hat):
        assert invoke("phi", "--schedule", hat, "--levels", 30).exit_code == 2

    def test_limits_follow_settings(self, invoke, hat):
        assert invoke("phi", "--schedule", hat, "--levels", subdivision_settings.max_levels + 1).exit_code == 2
        assert invoke("phi-hat", "--schedule", hat, "--depth", fourier_settings.max_depth).exit_code == 0
        assert invoke("phi-hat", "--schedule", hat, "--depth", fourier_settings.max_depth + 1).exit_code == 2
        assert invoke("omega", "--schedule", hat, "--range", fourier_settings.max_range + 1).exit_code == 2


class TestFourierCommands:
    def test_decay_exit_status(self, invoke, hat):
        result = invoke("decay", "--schedule", hat, "--range", 16)
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["verdict"]["kind"] == "finitely_supported"
        assert report["verdict"]["support"] == [0]
        assert report["lambda"] == {"im": 0.0, "re": 0.0}
        assert invoke("decay", "--schedule", hat, "--lambda", "0.5,0").exit_code == 1

    def test_omega(self, invoke, hat):
        result = invoke("omega", "--schedule", hat, "--range", 16)
        assert result.exit_code == 0
        coefficients = {item["l"]: item["re"] for item in json.loads(result.stdout)["coefficients"]}
        assert coefficients[0] == pytest.approx(1)

    def test_phi_hat(self, invoke, hat):
        result = invoke("phi-hat", "--schedule", hat, "--y", "0.5")
        assert result.exit_code == 0
        value = json.loads(result.stdout)["values"][0]
        assert value["re"] == pytest.approx((2 / np.pi) ** 2)

    def test_hbasis(self, invoke, hat, tmp_path):
        result = invoke(
            "hbasis", "--schedule", hat, "--order", 1, "--window=-2,2", "--levels", 6,
            "--range", 16, "--out", tmp_path / "h.csv",
        )
        assert result.exit_code == 0
        assert json.loads(result.stdout)["consistency"] <= 1e-8
        linear = read_samples(tmp_path / "h_k1.csv")
        np.testing.assert_allclose(linear.values.real, linear.grid, atol=1e-12)

    def test_hbasis_default_levels(self, invoke, bspline):
        result = invoke("hbasis", "--schedule", bspline, "--order", 1, "--window=-2,2")
        assert result.exit_code == 0
        assert json.loads(result.stdout)["consistency"] <= 1e-8

    def test_strang_fix(self, invoke, hat):
        assert invoke("strang-fix", "--schedule", hat, "--order", 1).exit_code == 0
        assert invoke("strang-fix", "--schedule", hat, "--order", 2).exit_code == 1


class TestShiftCommands:
    def test_invariant(self, invoke, write):
        invariant = write("n1.json", {"ambient": 3, "basis": [[0, 1, 0], [0, 0, 1]]})
        assert invoke("invariant", "--subspace", invariant).exit_code == 0
        other = write("n2.json", {"ambient": 3, "basis": [[1, 0, 0], [0, 1, 0]]})
        result = invoke("invariant", "--subspace", other)
        assert result.exit_code == 1
        assert json.loads(result.stdout)["rank_after"] == 3

    def test_minimal(self, invoke):
        result = invoke("minimal", "--vector", "0,1,0")
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["ambient"] == 3
        assert len(report["basis"]) == 2

    def test_minimal_zero_vector(self, invoke):
        result = invoke("minimal", "--vector", "0,0,0")
        assert result.exit_code == 2
        assert "ZeroVectorError" in result.output

    def test_families(self, invoke):
        result = invoke("families", "--controls", 20)
        assert result.exit_code == 0
        assert json.loads(result.stdout)["non_invariant_controls"] == 20


class TestSymbolCommands:
    def test_lagrange(self, invoke, write):
        request = write("lagrange.json", {"polynomial": {"lo": 1, "coeffs": [1]}, "points": [0, 0.5]})
        result = invoke("lagrange", "--input", request)
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["lhs"] == pytest.approx(0.5)
        assert report["holds"] is True

    def test_coincident_points(self, invoke, write):
        request = write("lagrange.json", {"polynomial": {"lo": 1, "coeffs": [1]}, "points": [0.2, 0.2]})
        assert invoke("lagrange", "--input", request).exit_code == 2


class TestGenerationCommands:
    def test_check_zeros(self, invoke, hat, bspline):
        assert invoke("check-zeros", "--schedule", bspline, "--order", 1).exit_code == 0
        result = invoke("check-zeros", "--schedule", hat, "--lambda", "1", "--levels", 3)
        assert result.exit_code == 1
        assert len(json.loads(result.stdout)["rows"]) == 3

    def test_construct_then_verify(self, invoke, write, tmp_path):
        space = write("space.json", {"lambdas": [{"re": 1}]})
        schedule = tmp_path / "schedule.json"
        assert invoke("construct", "--space", space, "--out", schedule).exit_code == 0
        assert json.loads(schedule.read_text())["tail"]["kind"] == "exponential"

        result = invoke("verify-gen", "--schedule", schedule, "--space", space, "--window", "0,4")
        assert result.exit_code == 0
        assert json.loads(result.stdout)["residual"] <= 1e-6

    def test_verify_fails_for_hat(self, invoke, write, hat):
        space = write("space.json", {"lambdas": [{"re": 1}]})
        assert invoke("verify-gen", "--schedule", hat, "--space", space, "--window", "0,4").exit_code == 1

    def test_audit(self, invoke, hat):
        result = invoke("audit", "--schedule", hat, "--lambda", "0", "--lambda", "0,1", "--lambda=-0.5,0")
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["nonzero_count"] == 1
        assert report["inconclusive"] == []

    def test_non_real_spectrum(self, invoke, write):
        space = write("space.json", {"lambdas": [{"re": 0, "im": 1}]})
        result = invoke("construct", "--space", space)
        assert result.exit_code == 2
        assert "NonRealSpectrumError" in result.output


class TestInvalidInput:
    def test_missing_file(self, invoke, tmp_path):
        assert invoke("phi", "--schedule", tmp_path / "missing.json").exit_code == 2

    def test_mask_not_summing_to_two(self, invoke, write):
        schedule = write("bad.json", {"head": [{"coeffs": [0.5, 0.5]}]})
        result = invoke("phi", "--schedule", schedule)
        assert result.exit_code == 2
        assert "InvalidMaskError" in result.output

    def test_malformed_json(self, invoke, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        assert invoke("decay", "--schedule", path).exit_code == 2

    def test_bad_lambda(self, invoke, hat):
        assert invoke("decay", "--schedule", hat, "--lambda", "a,b").exit_code == 2

    def test_empty_interval(self, invoke):
        assert invoke("dimension", "--interval", "1,0").exit_code == 2

    def test_non_dyadic_start(self, invoke, hat, tmp_path):
        start = tmp_path / "start.csv"
        start.write_text("t,re,im\n0,1,0\n0.3,1,0\n0.6,1,0\n", encoding="utf-8")
        assert invoke("run", "--schedule", hat, "--start", start).exit_code == 2


class TestContract:
    @pytest.mark.parametrize("args", [
        ("decay", "--range", 16),
        ("omega", "--order", 1, "--range", 16),
        ("phi-hat", "--y", "0.5,0.25", "--order", 2),
        ("strang-fix", "--order", 1),
        ("check-zeros", "--order", 1, "--levels", 4),
        ("dimension", "--interval=0,4"),
        ("audit", "--lambda", "0", "--lambda", "0.5", "--range", 16),
    ])
    def test_json_is_byte_identical(self, invoke, bspline, args):
        first = invoke(args[0], "--schedule", bspline, *args[1:])
        second = invoke(args[0], "--schedule", bspline, *args[1:])
        assert first.exit_code in (0, 1)
        assert first.stdout == second.stdout
        json.loads(first.stdout)

    def test_repeated_runs_write_identical_files(self, invoke, write, tmp_path):
        space = write("space.json", {"lambdas": [{"re": 0.5, "mult": 1}, {"re": -0.5}]})
        invoke("construct", "--space", space, "--out", tmp_path / "a.json")
        invoke("construct", "--space", space, "--out", tmp_path / "b.json")
        assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()

    def test_fuzzed_inputs_keep_exit_contract(self, invoke, write):
        rng = np.random.default_rng(99)
        commands = [
            ("phi", "--levels", 4),
            ("decay", "--range", 8),
            ("strang-fix", "--range", 8),
            ("check-zeros", "--levels", 3),
            ("dimension",),
        ]
        lambdas = ["0", "0.5,-1", "1e3", "a,b", "1,2,3", "", "-2"]
        documents = [
            lambda: {"head": [{"lo": int(rng.integers(-3, 3)), "coeffs": list(rng.uniform(-1, 2, int(rng.integers(1, 6))))}]},
            lambda: {"head": [{"coeffs": [1.0, 1.0]}, {"lo": -1, "coeffs": [0.5, 1, 0.5]}]},
            lambda: {"head": []},
            lambda: {"head": [{"coeffs": ["x"]}]},
            lambda: [1, 2, 3],
            lambda: {"head": [{"coeffs": [2.0]}], "tail": {"kind": "exponential", "lambdas": [{"re": float(rng.normal())}]}},
        ]
        for i in range(40):
            document = documents[int(rng.integers(len(documents)))]()
            schedule = write(f"fuzz{i}.json", document)
            command = commands[int(rng.integers(len(commands)))]
            args = [command[0], "--schedule", schedule, *command[1:]]
            if command[0] in ("decay", "check-zeros"):
                args.append(f"--lambda={lambdas[int(rng.integers(len(lambdas)))]}")
            result = invoke(*args)
            assert result.exit_code in (0, 1, 2), (args, result.output)
            assert result.exception is None or isinstance(result.exception, SystemExit), (args, result.exception)
