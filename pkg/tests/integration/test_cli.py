import json

import pytest

from src.cli import main as cli
from src.core.exceptions import RouteMismatchError
from src.quadrature.integrator import QuadResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


def test_compute_csv(capsys):
    code, out = run(capsys, "compute", "--n-max", "6", "--format", "csv")
    assert code == 0
    lines = out.out.splitlines()
    assert lines[0] == "n,c_n,mu_n,decimal"
    assert len(lines) == 8
    assert lines[2].startswith("1,1/2,1/2,")
    assert lines[-1].startswith("6,19087/84,19087/60480,")


def test_compute_single_row(capsys):
    code, out = run(capsys, "compute", "--n-max", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out.out)
    assert payload["routes_agree"] is True
    assert len(payload["entries"]) == 1
    assert (payload["entries"][0]["c_n"], payload["entries"][0]["mu_n"]) == ("1", "1")


def test_compute_beyond_bound(capsys):
    code, out = run(capsys, "compute", "--n-max", "300")
    assert code == 1
    assert "exceeds" in out.err


def test_compute_with_raised_bound(capsys, tmp_path):
    target = tmp_path / "table.json"
    code, _ = run(capsys, "compute", "--n-max", "260", "--table-bound", "260", "--format", "json", "--out", str(target))
    assert code == 0
    assert len(json.loads(target.read_text(encoding="utf-8"))["entries"]) == 261


def test_route_mismatch_is_internal(capsys, monkeypatch):
    def disagree(n_max, *, bound=None):
        raise RouteMismatchError("routes disagree at n=3", index=3)

    monkeypatch.setattr(cli, "build_cauchy_table", disagree)
    code, out = run(capsys, "compute", "--n-max", "5")
    assert code == 2
    assert "internal error" in out.err


def test_quad_matches_exact(capsys):
    code, out = run(capsys, "quad", "--n", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out.out)
    assert payload["exact"] == "1/2"
    assert payload["converged"] is True
    assert payload["value"].startswith("0.5")


def test_quad_non_convergence(capsys, monkeypatch):
    def stuck(spec, tol, precision, *, rule=None):
        ctx_value = cli.working_context(precision).mpf(1) / 2
        return QuadResult(ctx_value, ctx_value, 1536, False, precision, "gauss-legendre")

    monkeypatch.setattr(cli, "integrate", stuck)
    code, _ = run(capsys, "quad", "--n", "1")
    assert code == 3


def test_eval_F(capsys):
    code, out = run(capsys, "eval", "F", "--z", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out.out)
    assert payload["value"].startswith("0.72134752")
    assert payload["closed_form"].startswith("0.72134752")


def test_eval_h_at_zero(capsys):
    code, out = run(capsys, "eval", "h", "--n", "2", "--t", "0", "--format", "json")
    assert code == 0
    assert json.loads(out.out)["value"].startswith("0.4166666666")


def test_eval_general_h(capsys):
    code, _ = run(capsys, "eval", "hs", "--s", "1/2", "--t", "1", "--format", "json")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "F"),
        ("eval", "h", "--t", "1"),
        ("quad",),
        ("eval", "F", "--z", "-1"),
        ("eval", "h", "--n", "2", "--t", "-1"),
        ("quad", "--n", "1", "--tol", "0"),
    ],
)
def test_domain_violations_exit_one(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 1
    assert out.err


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["compute", "--format", "xml"])
    assert excinfo.value.code == 1


def test_verify_log_convexity(capsys):
    code, out = run(capsys, "verify", "--suite", "logconvex", "--n-bound", "100", "--format", "json")
    assert code == 0
    report = json.loads(out.out)
    suite = report["suites"]["logconvex"]
    assert (suite["passed"], suite["failed"]) == (99, 0)
    assert report["summary"]["cases"] == 99


def test_verify_literal_discrepancy(capsys):
    code, out = run(capsys, "verify", "--suite", "thm3-literal", "--format", "json")
    assert code == 0
    literal = json.loads(out.out)["discrepancies"]["thm3-literal"]
    assert literal["counterexamples"][0] == "m=1 n=1 a=(0)"
    first = next(case for case in literal["cases"] if case["key"] == "m=1 n=1 a=(0)")
    assert (first["lhs"]["numerator"], first["lhs"]["denominator"]) == ("-1", "2")


def test_verify_minimality_plain(capsys):
    code, out = run(capsys, "verify", "--suite", "minimality", "--epsilon", "3/4", "--depth", "200")
    assert code == 0
    assert "witness k=1" in out.out


def test_verify_csv(capsys):
    code, out = run(capsys, "verify", "--suite", "thm5", "--format", "csv")
    assert code == 0
    assert out.out.splitlines()[0] == "suite,key,holds,lhs,rhs,margin,margin_exact,note"


def test_verify_output_is_deterministic(capsys):
    argv = ("verify", "--suite", "thm6", "--suite", "thm4", "--seed", "3", "--format", "json")
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first.out == second.out


def test_schema(capsys, tmp_path):
    code, out = run(capsys, "schema")
    assert code == 0
    schema = json.loads(out.out)
    assert schema["title"] == "VerificationReport"
    target = tmp_path / "schema.json"
    assert run(capsys, "schema", "--out", str(target))[0] == 0
    assert json.loads(target.read_text(encoding="utf-8")) == schema
