import json
import subprocess
import sys

import pytest

from circleimage.cli import EXIT_INPUT, EXIT_OK, RunConfig, main, rational_parameters
from circleimage.errors import InputError

QUADRATIC = {"terms": [{"k": 2, "re": "1", "im": "0"}, {"k": 1, "re": "3", "im": "0"}, {"k": 0, "re": "1", "im": "0"}]}
JOUKOWSKI = {"terms": [{"k": 1, "re": "1", "im": "0"}, {"k": -1, "re": "1", "im": "0"}]}


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, obj in (("quad", QUADRATIC), ("jouk", JOUKOWSKI)):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(obj))
        out[name] = str(path)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    out["bad"] = str(bad)
    const = tmp_path / "const.json"
    const.write_text(json.dumps({"terms": [{"k": 0, "re": "2", "im": "0"}]}))
    out["const"] = str(const)
    anchors = tmp_path / "anchors.json"
    anchors.write_text(json.dumps({"anchors": [{"re": "1/2", "im": "0"}, {"re": "0", "im": "1/3"}]}))
    out["anchors"] = str(anchors)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_h(files, capsys):
    code, out, _ = run(capsys, "compute-h", files["quad"])
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["h_text"] == "x^4 + 2*x^2*y^2 + y^4 - 4*x^3 - 4*x*y^2 - 5*x^2 - 9*y^2"
    assert data["degrees"]["deg_h"] == 4


def test_classify(files, capsys):
    code, out, _ = run(capsys, "classify", files["jouk"])
    assert code == EXIT_OK and json.loads(out)["verdict"] == "LINE_INFINITE_GAP"


def test_verify(files, capsys):
    code, out, _ = run(capsys, "verify", files["quad"], "--rational", "50")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["summary"] == "50/50 exact zeros"
    assert len(data["gap_points"]) == 1


def test_bound_and_intersections(files, capsys):
    code, out, _ = run(capsys, "bound", "--p", files["jouk"], "--q", files["quad"])
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["bound"] == 4 * 2 - 2 * 0 * 1 and not data["common_factor"]
    code, out, _ = run(capsys, "intersections", "--p", files["jouk"], "--q", files["quad"])
    assert code == EXIT_OK and json.loads(out)["count"] <= data["bound"]


def test_construct(files, capsys):
    code, out, _ = run(capsys, "construct", "--points", files["anchors"])
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["certified_min_modulus"] > 2


def test_plot(files, tmp_path, capsys):
    target = tmp_path / "out.svg"
    code, _, _ = run(capsys, "plot", files["quad"], "-o", str(target), "--resolution", "64")
    svg = target.read_text()
    assert code == EXIT_OK
    assert svg.startswith("<svg") and 'class="circle-image"' in svg and 'class="gap-point"' in svg


def test_plot_is_deterministic(files, capsys):
    _, a, _ = run(capsys, "plot", files["quad"], "--resolution", "48")
    _, b, _ = run(capsys, "plot", files["quad"], "--resolution", "48")
    assert a == b


@pytest.mark.parametrize(
    "argv",
    [
        ["compute-h", "{bad}"],
        ["compute-h", "{const}"],
        ["compute-h", "/nonexistent.json"],
        ["plot", "{quad}", "--bbox", "1,1,0,0"],
        ["plot", "{quad}", "--resolution", "4"],
        ["classify", "{quad}", "--angle-tol", "0"],
    ],
)
def test_input_errors(files, capsys, argv):
    argv = [a.format(**files) for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == EXIT_INPUT and err.startswith("error:")


def test_stdin_and_module_entry(files):
    proc = subprocess.run(
        [sys.executable, "-m", "circleimage.cli", "classify", "-"],
        input=json.dumps(QUADRATIC),
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "FINITE_GAP"


def test_run_config_validation():
    with pytest.raises(InputError):
        RunConfig("plot", delta=-1)


def test_rational_parameters_distinct():
    ts = rational_parameters(20)
    assert len(set(ts)) == 20
