import io
import json
import subprocess
import sys

import pydot
import pytest

from rdet.cli import CliConfig, InputError, main, run
from rdet.determiner import det_set
from rdet.quiver import quiver_from_dict

from conftest import THIRTEEN, THIRTEEN_RELATIONS


def _run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def thirteen_file(tmp_path):
    path = tmp_path / "thirteen.quiver"
    path.write_text(THIRTEEN + "\n" + THIRTEEN_RELATIONS, encoding="utf-8")
    return path


def test_det_json_on_bound_quiver(thirteen_file, capsys):
    code, out, _ = _run(["det", str(thirteen_file), "--format", "json"], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["det_count"] == 21 and obj["predicted"] == 21 and obj["branch"] == "bound:r>=2"
    q = quiver_from_dict(obj)
    assert det_set(q).to_dict() == obj


def test_det_text(capsys):
    code, out, _ = _run(["det", "1 > 2"], capsys)
    assert code == 0
    assert "|Det| = 2, predicted = 2 (path:p=0)" in out


def test_indec_inline_with_relation(capsys):
    code, out, _ = _run(["indec", "1 > 2 > 3;rel: 1 2 3", "--format", "json"], capsys)
    assert code == 0
    mods = json.loads(out)["modules"]
    assert [m["interval"] for m in mods] == [[1, 1], [1, 2], [2, 2], [2, 3], [3, 3]]
    assert mods[1]["labels"] == ["P(1)", "I(2)"]


def test_ar_outputs(tmp_path, capsys):
    code, out, _ = _run(["ar", "1 > 2"], capsys)
    assert code == 0 and "2 irreducible morphisms" in out and "1 almost split sequences" in out
    code, out, _ = _run(["ar", "1 > 2", "--format", "json"], capsys)
    assert json.loads(out)["sequences"] == [{"left": [2, 2], "middle": [[1, 2]], "right": [1, 1]}]
    dot_path = tmp_path / "ar.dot"
    code, out, _ = _run(["ar", "1 < 2 > 3", "--format", "dot", "--out", str(dot_path)], capsys)
    assert code == 0 and out == ""
    (graph,) = pydot.graph_from_dot_data(dot_path.read_text(encoding="utf-8"))
    assert graph.get_name() == "AR"


def test_verify_a2(capsys):
    code, out, _ = _run(["verify", "1 > 2"], capsys)
    assert code == 0
    assert out.strip().endswith("checks passed")
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("1 > 2 < 3\n"))
    code, _, _ = _run(["verify", "-", "--no-oracle"], capsys)
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["det", "1 > 2\nrel: 1 2"],
        ["det", "1 > 2 > 3;rel: 3 2 1"],
        ["det", "1 > 2", "--format", "dot"],
        ["indec", "1 = 2"],
        ["sweep", "--n-max", "40"],
        ["sweep", "--trials", "-1"],
        ["frobnicate"],
        ["det", "/no/such/dir/"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    code, _, _ = _run(argv, capsys)
    assert code == 2


def test_config_validation():
    with pytest.raises(InputError):
        CliConfig("verify", "1 > 2", format="json").validate()
    with pytest.raises(InputError):
        CliConfig("det").validate()
    CliConfig("sweep", n_max=12).validate()


def test_sweep_exhaustive(capsys):
    code, out, _ = _run(["sweep", "--n-max", "8"], capsys)
    assert code == 0
    assert out.startswith("checked 254 cases: 254 path algebras (n = 2..8), 0 bound quiver algebras")


def test_sweep_random_and_mod_reflection(capsys):
    code, out, _ = _run(["sweep", "--n-max", "6", "--relations", "random", "--trials", "40",
                         "--seed", "3", "--mod-reflection"], capsys)
    assert code == 0
    assert "40 bound quiver algebras" in out


def test_sweep_full_suite(capsys):
    code, out, _ = _run(["sweep", "--n-max", "4", "--full"], capsys)
    assert code == 0 and "checked 14 cases" in out


def test_output_is_deterministic(thirteen_file):
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        assert run(CliConfig("det", str(thirteen_file), format="json"), buf) == 0
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]
    sweeps = []
    for _ in range(2):
        buf = io.StringIO()
        run(CliConfig("sweep", n_max=5, relations="random", trials=25, seed=11), buf)
        sweeps.append(buf.getvalue())
    assert sweeps[0] == sweeps[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rdet", "det", "1 > 2 < 3 > 4", "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["det_count"] == 6
