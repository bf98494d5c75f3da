import json

import numpy as np
import pytest

from muhermite.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_single_point_prints_bare_value(capsys):
    code, out, _ = run(capsys, "eval", "--fn", "hermite", "--mu", "0.5", "--n", "2", "--x", "1")
    assert code == 0
    assert out.strip() == "0"


def test_eval_many_points_prints_csv(capsys):
    code, out, _ = run(
        capsys, "eval", "--fn", "phi", "--mu", "1/2", "--n", "1", "--x", "0.0", "1.0"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "x,value"
    assert len(lines) == 3
    assert float(lines[1].split(",")[1]) == pytest.approx(0.0, abs=1e-15)


def test_gamma_exact_fraction(capsys):
    code, out, _ = run(capsys, "gamma", "--mu", "0", "--n", "4")
    assert (code, out.strip()) == (0, "24")
    code, out, _ = run(capsys, "gamma", "--mu", "1/3", "--n", "3")
    assert (code, out.strip()) == (0, "110/9")


def test_gamma_float_mu(capsys):
    code, out, _ = run(capsys, "gamma", "--mu", "0.25", "--n", "2")
    assert code == 0
    assert float(out) == pytest.approx(3.0)  # 2 * (1 + 2 mu)


def test_domain_guard_exits_two(capsys):
    code, _, err = run(capsys, "gamma", "--mu", "-0.75", "--n", "2")
    assert code == 2
    assert "mu must exceed -1/2" in err


def test_missing_degree_exits_two(capsys):
    code, _, err = run(capsys, "eval", "--fn", "hermite", "--mu", "0.5", "--x", "1")
    assert code == 2
    assert "--n" in err


def test_table_exact_rows(capsys):
    code, out, _ = run(capsys, "table", "--mu", "1/2", "--nmax", "2")
    assert code == 0
    assert out.strip().split("\n") == ["0,1", "1,0,1", "2,-2,0,2"]


def test_quad_csv_shape(capsys):
    code, out, _ = run(capsys, "quad", "--kind", "hermite", "--mu", "0.5", "--n", "5")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "node,weight"
    assert len(lines) == 6
    w = sum(float(l.split(",")[1]) for l in lines[1:])
    assert w == pytest.approx(1.0)  # mass at mu = 1/2 is Gamma(1)


def test_alpha_quad_guard(capsys):
    code, _, err = run(capsys, "quad", "--kind", "alpha", "--mu", "0", "--n", "8")
    assert code == 2
    assert "mu must be positive" in err


def test_transform_csv_columns(capsys):
    code, out, _ = run(
        capsys,
        "transform", "--mu", "0.5", "--family", "gaussian", "--lam", "0.5",
        "--xmin", "-1", "--xmax", "1", "--num", "5",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "x,re,im"
    assert len(lines) == 6
    mid = lines[3].split(",")
    assert float(mid[1]) == pytest.approx(1.0)  # fixed point at the origin
    assert abs(float(mid[2])) < 1e-12


def test_heat_routes_agree_via_cli(capsys):
    base = ["--mu", "0.75", "--t", "0.4", "--alpha", "0.8",
            "--xmin", "-1", "--xmax", "1", "--num", "5"]
    _, closed, _ = run(capsys, "heat", *base, "--route", "closed")
    _, kernel, _ = run(capsys, "heat", *base, "--route", "kernel")
    a = [float(l.split(",")[1]) for l in closed.strip().split("\n")[1:]]
    b = [float(l.split(",")[1]) for l in kernel.strip().split("\n")[1:]]
    assert np.allclose(a, b, rtol=1e-8)


def test_translate_cli(capsys):
    code, out, _ = run(
        capsys,
        "translate", "--mu", "0.75", "--y", "0.9", "--route", "closed",
        "--xmin", "0.5", "--xmax", "1.5", "--num", "3",
    )
    assert code == 0
    assert out.startswith("x,value\n")


def test_oscillator_json_and_exit(capsys):
    code, out, _ = run(capsys, "oscillator", "--mu", "0.5", "--size", "12", "--check", "structure")
    assert code == 0
    blob = json.loads(out)
    assert blob[0]["check"] == "structure"
    assert blob[0]["pass"] is True


def test_oscillator_word_too_long_for_size(capsys):
    code, _, err = run(capsys, "oscillator", "--mu", "0.5", "--size", "8", "--check", "structure")
    assert code == 2
    assert "word length" in err


def test_oscillator_unknown_check(capsys):
    code, _, err = run(capsys, "oscillator", "--mu", "0.5", "--check", "nope")
    assert code == 2
    assert "unknown --check" in err


def test_verify_exact_suite(capsys):
    code, out, _ = run(capsys, "verify", "--mu", "1/3", "--nmax", "6")
    assert code == 0
    blob = json.loads(out)
    assert len(blob) == 12
    assert all(r["pass"] for r in blob)
    assert {r["suite"] for r in blob} == {"exact"}


def test_verify_exact_needs_rational(capsys):
    code, _, err = run(capsys, "verify", "--mu", "0.7")
    assert code == 2
    assert "exact" in err


def test_verify_single_criterion(capsys):
    code, out, _ = run(capsys, "verify", "--criteria", "10")
    assert code == 0
    assert out.startswith("PASS criterion_10")


def test_verify_json_subset(capsys):
    code, out, _ = run(capsys, "verify", "--criteria", "3", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob[0]["criterion"] == 3 and blob[0]["pass"] is True


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "g.txt"
    code = main(["gamma", "--mu", "5/2", "--n", "5", "--out", str(target)])
    capsys.readouterr()
    assert code == 0
    assert target.read_text().strip() == "3840"


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    capsys.readouterr()
    assert exc.value.code == 2
