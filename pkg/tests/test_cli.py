import json

import pytest

from opinv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_hermite_json(capsys):
    code, out, _ = run(
        capsys, "eval", "--family", "hermite", "--n", "2", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"var": "x", "coeffs": ["-1/4", "0", "1/2"]}


def test_eval_latex(capsys):
    code, out, _ = run(
        capsys, "eval", "--family", "hermite", "--n", "2", "--format", "latex"
    )
    assert code == 0
    assert out.strip() == "\\frac{1}{2}x^{2}-\\frac{1}{4}"


def test_eval_missing_parameter_is_usage_error(capsys):
    code, _, err = run(capsys, "eval", "--family", "laguerre", "--n", "1")
    assert code == 2
    assert "requires parameter" in err


def test_unknown_family_rejected_by_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "eval", "--family", "nope", "--n", "1")
    assert exc.value.code == 2
    err = capsys.readouterr().err
    assert "hermite" in err  # choices enumerated in the usage message


def test_verify_pass_exit_code(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--identity", "charlier_inv", "--size", "4",
        "--samples", "3", "--format", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    assert report["elapsed_ms"] is None  # deterministic output


def test_invert_output(capsys):
    code, out, _ = run(
        capsys,
        "invert", "--identity", "chebU_banded_inverse", "--size", "3",
        "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    # inverse row 2 is the band [1, -2x, 1]
    assert obj["inverse"]["rows"][2] == [
        {"var": "x", "coeffs": ["1"]},
        {"var": "x", "coeffs": ["0", "-2"]},
        {"var": "x", "coeffs": ["1"]},
    ]


def test_solve_json_roundtrip(capsys):
    rhs = json.dumps(
        [
            {"var": "x", "coeffs": ["0", "1"]},
            {"var": "x", "coeffs": []},
        ]
    )
    code, out, _ = run(
        capsys,
        "solve", "--family", "hermite", "--rhs", rhs, "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["equal"] is True
    assert obj["generic"]["coeffs"][0] == {"var": "x", "coeffs": ["0", "1"]}
    assert obj["generic"]["coeffs"][1] == {"var": "x", "coeffs": ["0", "0", "-1"]}


def test_gen_hermite_coeffs(capsys):
    code, out, _ = run(
        capsys, "gen-hermite", "coeffs", "--max-n", "3", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["coeffs"][0] == {"var": "x", "coeffs": []}  # a_1 = 0
    assert obj["coeffs"][1] == {"var": "x", "coeffs": ["0", "0", "-2"]}  # a_2


def test_gen_hermite_check(capsys):
    code, out, _ = run(
        capsys, "gen-hermite", "check", "--max-n", "4", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_gen_hermite_with_odd_alphas(capsys):
    code, out, _ = run(
        capsys,
        "gen-hermite", "check", "--max-n", "4",
        "--odd-alphas", "1/2,-2/3", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_suite_deterministic_json(capsys):
    args = ("suite", "--seed", "7", "--samples", "2", "--size", "5",
            "--format", "json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["status"] == "pass"


def test_usage_error_without_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys)
    assert exc.value.code == 2
