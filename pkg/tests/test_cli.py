import json

import pytest

from polytorus import cli, serialize


def run(argv, capsys):
    # argparse exits via SystemExit on parse errors; fold that into the code
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_no_arguments_is_usage_error(capsys):
    code, _, err = run([], capsys)
    assert code == 2


def test_unknown_subcommand(capsys):
    assert run(["no-such-verb"], capsys)[0] == 2


def test_unknown_flag(capsys):
    assert run(["kernel-scaling", "--bogus", "1"], capsys)[0] == 2


def test_kernel_scaling_runs(capsys, tmp_path):
    out = tmp_path / "rows.csv"
    code, text, _ = run(["kernel-scaling", "--n", "1", "--radii", "2,4",
                         "--out", str(out)], capsys)
    assert code == 0
    assert "slope" in text
    lines = out.read_text().strip().splitlines()
    assert lines[0].split(",")[0] == "radius"
    assert len(lines) >= 3


def test_csv_output_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["compare-norms", "--family", "log-reciprocal", "--lengths", "1000",
            "--out"]
    assert run(args + [str(a)], capsys)[0] == 0
    assert run(args + [str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_dirichlet_norms_family(capsys):
    code, text, _ = run(["dirichlet-norms", "--family", "log-reciprocal",
                         "--N", "50", "--bloch"], capsys)
    assert code == 0
    assert "bloch" in text


def test_dirichlet_norms_from_file(capsys, tmp_path):
    from polytorus import dirichlet
    path = tmp_path / "f.json"
    serialize.save_dirichlet(dirichlet.DirichletPolynomial({2: 1.0, 3: 1.0}), path)
    code, text, _ = run(["dirichlet-norms", "--file", str(path), "--p", "4"], capsys)
    assert code == 0


def test_dirichlet_norms_bad_file(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{oops")
    assert run(["dirichlet-norms", "--file", str(path)], capsys)[0] == 2


def test_criteria_window_family(capsys):
    code, text, _ = run(["criteria", "--family", "bloch-not-bmoa", "--J", "3"],
                        capsys)
    assert code == 0
    assert "fefferman" in text or "block" in text


def test_littlewood_paley_subcommand(capsys):
    code, _, _ = run(["littlewood-paley", "--family", "log-reciprocal", "--N",
                      "10", "--samples", "20000"], capsys)
    assert code == 0


def test_helson_subcommand(capsys):
    code, _, _ = run(["helson", "--family", "log-reciprocal", "--N", "10",
                      "--samples", "20000"], capsys)
    assert code == 0


def test_lift_verify_default_demo(capsys):
    assert run(["lift-verify"], capsys)[0] == 0


def test_transference_subcommand(capsys, tmp_path):
    plan_path = tmp_path / "plan.json"
    code, text, _ = run(["transference", "--x", "20", "--verify-max", "1000",
                         "--plan-out", str(plan_path)], capsys)
    assert code == 0
    plan = serialize.load_plan(plan_path)
    assert plan.certificate.margin > 0
    # reusing the saved plan skips the search
    assert run(["transference", "--plan-in", str(plan_path), "--verify-max",
                "500"], capsys)[0] == 0


def test_budget_exhaustion_is_clean_failure(capsys):
    code, _, _ = run(["kernel-scaling", "--n", "2", "--radii", "4,8",
                      "--budget", "10"], capsys)
    assert code == 1


def test_svg_emission(capsys, tmp_path):
    svg = tmp_path / "plot.svg"
    code, _, _ = run(["kernel-scaling", "--n", "1", "--radii", "2,4",
                      "--svg", str(svg)], capsys)
    assert code == 0
    head = svg.read_text()[:200].lstrip()
    assert head.startswith("<?xml") or head.startswith("<svg")


def test_random_bmoa_subcommand(capsys):
    code, _, _ = run(["random-bmoa", "--truncations", "8,16", "--trials", "2"],
                     capsys)
    assert code == 0


def test_kahane_subcommand(capsys):
    code, _, _ = run(["kahane", "--K", "5,10", "--trials", "3",
                      "--resolution", "512"], capsys)
    assert code == 0


def test_smooth_partial_subcommand(capsys):
    code, _, _ = run(["smooth-partial", "--primes", "2,3", "--cut", "10",
                      "--trials", "2", "--resolution", "512"], capsys)
    assert code == 0


def test_projection_search_subcommand(capsys):
    code, text, _ = run(["projection-search", "--p", "4", "--starts", "1",
                         "--iterations", "10"], capsys)
    assert code == 0


def test_refor_subcommand(capsys):
    code, _, _ = run(["refor", "--q", "1.5", "--n", "4", "--radii", "2,4"],
                     capsys)
    assert code == 0


def test_refor_rejects_low_dims(capsys):
    assert run(["refor", "--q", "1.5", "--n", "3", "--radii", "2,4"],
               capsys)[0] == 2
