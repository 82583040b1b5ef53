import json

import pytest

from qspectral.cli import main, parse_graph_argument
from qspectral import CycleJoinParams, cone_cycles, cone_cycles_mate, encode
from qspectral.errors import Graph6ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_graph_argument_family_spec():
    g = parse_graph_argument("g:s=2,l=4+3")
    assert g == cone_cycles(CycleJoinParams(2, (4, 3)))
    h = parse_graph_argument("h:s=2,l=4+3")
    assert h == cone_cycles_mate(CycleJoinParams(2, (4, 3)))
    assert parse_graph_argument("Cl").n == 4
    with pytest.raises(Graph6ParseError):
        parse_graph_argument("g:s=2")  # not a family spec, not valid graph6


def test_spectrum_command(capsys):
    code, out, _ = run(capsys, "spectrum", "Cl")
    assert code == 0
    assert json.loads(out)["values"] == pytest.approx([4.0, 2.0, 2.0, 0.0], abs=1e-9)


def test_spectrum_exact_command(capsys):
    code, out, _ = run(capsys, "spectrum", "--exact", "g:s=1,l=3")
    assert code == 0
    data = json.loads(out)
    assert data["coefficients"][0] == "1" and data["coefficients"][1] == "-14"


def test_family_command(capsys):
    code, out, _ = run(capsys, "family", "--kind", "g", "--s", "1", "--cycles", "3")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 5
    tags = [e["tag"] for e in data["closed_form"]["values"]]
    assert "cubic_r1" in tags and "cosine(3,1)" in tags


def test_mate_command(capsys):
    code, out, _ = run(capsys, "mate", "--s", "1", "--cycles", "3")
    assert code == 0
    assert out.strip() == encode(cone_cycles_mate(CycleJoinParams(1, (3,))))
    code, out, _ = run(capsys, "mate", "--s", "0", "--cycles", "3,3")
    assert code == 0 and out.strip() == "none"


def test_cospectral_command(capsys):
    g6_g = encode(cone_cycles(CycleJoinParams(1, (3,))))
    g6_h = encode(cone_cycles_mate(CycleJoinParams(1, (3,))))
    code, out, _ = run(capsys, "cospectral", g6_g, g6_h)
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "cospectral", "Cl", "Cs")
    assert out.strip() == "false"


def test_mates_command(capsys):
    code, out, _ = run(capsys, "mates", "g:s=1,l=3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1


def test_dqs_command(capsys):
    code, out, _ = run(capsys, "dqs", "--kind", "g", "--s", "1", "--cycles", "3")
    assert code == 0
    assert json.loads(out)["matches_prediction"] is True


def test_verify_trace_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "trace", "--max-n", "5")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert report["reports"][0]["graphs"] == 1 + 2 + 4 + 11 + 34


def test_verify_trace_covers_all_classes_to_order_6(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "trace", "--max-n", "6")
    assert code == 0
    assert json.loads(out)["reports"][0]["graphs"] == 156 + 34 + 11 + 4 + 2 + 1


def test_verify_census_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "census", "--max-n", "5")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_interlacing_with_jobs(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "interlacing", "--max-n", "4", "--jobs", "2")
    assert code == 0
    report = json.loads(out)["reports"][0]
    assert report["random_instances"] == 1000 and report["seed"] == 0


def test_spectrum_stdin_batch(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("Cl\n\nBw\n"))
    code, out, _ = run(capsys, "spectrum", "-")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert json.loads(lines[1])["values"] == pytest.approx([4.0, 1.0, 1.0], abs=1e-9)


def test_verify_exit_code_on_violation(capsys, monkeypatch):
    monkeypatch.setattr(
        "qspectral.cli.run_suite",
        lambda name, **kw: {"suite": name, "violations": [{"graph6": "Cl", "check": "synthetic"}]},
    )
    code, out, _ = run(capsys, "verify", "--suite", "trace")
    assert code == 1
    report = json.loads(out)
    assert report["passed"] is False
    assert report["reports"][0]["violations"][0]["graph6"] == "Cl"


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "--suite", "nonsense"])
    assert err.value.code == 2


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "family", "--kind", "h", "--s", "0", "--cycles", "3")
    assert code == 2 and "error" in err


def test_bad_graph6_exit_code(capsys):
    code, _, err = run(capsys, "spectrum", "~~~")
    assert code == 2 and "error" in err
