import json

import pytest

from jkres.cli import main

PAPER = {"betas": [[1, 0]] * 3 + [[0, 1]] * 3 + [[1, 1]] * 3}
TRIANGLE = {"betas": [[1, 0], [0, 1], [1, 1]]}


def run(capsys, *argv, doc=None):
    args = list(argv)
    if doc is not None:
        args += ["--json", json.dumps(doc)]
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_count_paper(capsys):
    code, out = run(capsys, "count", doc={**PAPER, "xi": [5, 2]})
    assert code == 0
    assert json.loads(out)["count"] == "321"


def test_volume_segment(capsys):
    code, out = run(capsys, "volume", doc={"betas": [[1], [1]], "xi": [5]})
    assert json.loads(out)["volume"] == "5"


def test_non_unimodular_gate(capsys):
    doc = {"betas": [[2], [1]], "xi": [5]}
    code, out = run(capsys, "count", doc=doc)
    assert code == 4 and json.loads(out)["error"] == "non_unimodular"
    code, out = run(capsys, "count", "--oracle", doc=doc)
    assert code == 0 and json.loads(out)["count"] == "3"


def test_budget_exit(capsys):
    code, out = run(capsys, "oracle-count", "--budget", "4", doc={"betas": [[1], [1]], "xi": [40]})
    assert code == 3 and json.loads(out)["error"] == "budget_exceeded"


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("JKRES_BUDGET", "4")
    code, _ = run(capsys, "oracle-count", doc={"betas": [[1], [1]], "xi": [40]})
    assert code == 3


@pytest.mark.parametrize("argv, doc, code", [
    (["count"], {"betas": [[1], [-1]], "xi": [1]}, "not_pointed"),
    (["count"], {"betas": [[1, 0], [2, 0]], "xi": [1, 0]}, "not_spanning"),
    (["count"], {"betas": [[0, 0], [1, 0], [0, 1]], "xi": [1, 0]}, "zero_form"),
    (["count"], {"betas": [[1], [1]]}, "bad_request"),
    (["count"], {"betas": [[1], [1]], "xi": ["1/2"]}, "not_integral"),
    (["count"], {"betas": [[1], [1]], "xi": [1, 2]}, "bad_request"),
    (["ehrhart"], {"betas": [[1], [1]], "xi": [-1]}, "infeasible"),
    (["chamber", "--chamber-point=-1,0"], TRIANGLE, "outside_cone"),
    (["volume-poly", "--chamber-point=-1,1"], TRIANGLE, "infeasible"),
    (["toric-integral"], {**TRIANGLE, "xi": [3, 2]}, "bad_request"),
])
def test_validation_errors(capsys, argv, doc, code):
    rc, out = run(capsys, *argv, doc=doc)
    assert rc == 2
    assert json.loads(out)["error"] == code


def test_bad_json(capsys):
    assert main(["count", "--json", "{nope"]) == 2
    assert json.loads(capsys.readouterr().out)["error"] == "bad_request"


def test_file_and_stdin(capsys, tmp_path, monkeypatch):
    path = tmp_path / "inst.json"
    path.write_text(json.dumps({**TRIANGLE, "xi": [3, 2]}))
    assert main(["volume", "--file", str(path)]) == 0
    assert json.loads(capsys.readouterr().out)["volume"] == "2"
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({**TRIANGLE, "xi": [3, 2]})))
    assert main(["count"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == "3"


def test_chamber_output(capsys):
    _, out = run(capsys, "chamber", doc={**TRIANGLE, "xi": [1, 1]})
    doc = json.loads(out)
    assert doc["chamber"]["feasible_bases"] == [[0, 1], [1, 2]]
    assert doc["regular"] is False


def test_polynomial_commands(capsys):
    _, out = run(capsys, "count-poly", "--chamber-point", "3,2", doc=TRIANGLE)
    terms = json.loads(out)["polynomial"]["terms"]
    assert terms == [{"exponents": [0, 1], "coeff": "1"}, {"exponents": [0, 0], "coeff": "1"}]
    _, out = run(capsys, "volume-poly", doc={**TRIANGLE, "xi": [3, 2]})
    assert json.loads(out)["polynomial"]["terms"] == [{"exponents": [0, 1], "coeff": "1"}]
    _, out = run(capsys, "volume", "--symbolic", doc={**TRIANGLE, "xi": [3, 2]})
    assert json.loads(out)["polynomial"]["kind"] == "volume"


def test_ehrhart_and_check(capsys):
    _, out = run(capsys, "ehrhart", doc={"betas": [[1], [1], [1]], "xi": [1]})
    assert json.loads(out)["ehrhart"] == ["1/2", "3/2", "1"]
    _, out = run(capsys, "ehrhart", "--oracle", doc={"betas": [[1], [1], [1]], "xi": [1]})
    assert json.loads(out)["ehrhart"] == ["1/2", "3/2", "1"]
    _, out = run(capsys, "check", doc={**PAPER, "xi": [4, 3]})
    doc = json.loads(out)
    assert doc["agree"] is True and doc["count"]["residue"] == doc["count"]["oracle"]
    _, out = run(capsys, "count", "--check", doc={**PAPER, "xi": [2, 2]})
    assert json.loads(out)["agree"] is True
    _, out = run(capsys, "check", doc={"betas": [[1, 0], [1, 2], [0, 1]], "xi": [2, 2]})
    assert "count" not in json.loads(out)


def test_toric_integral(capsys):
    doc = {"betas": [[1], [1], [1]], "xi": [1], "poly": [{"exponents": [2], "coeff": "1"}]}
    _, out = run(capsys, "toric-integral", doc=doc)
    assert json.loads(out) == {"integral": "1"}


def test_oracle_commands(capsys):
    _, out = run(capsys, "oracle-volume", doc={"betas": [[1], [1]], "xi": [5]})
    assert json.loads(out)["volume"] == "5"
    _, out = run(capsys, "oracle-count", doc={**PAPER, "xi": [1, 1]})
    assert json.loads(out)["count"] == "12"


def test_gen(capsys):
    assert main(["gen", "kostant", "--rank", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["betas"] == [[1, 0], [1, 1], [0, 1]]
    assert main(["gen", "transport", "--rows", "2,1", "--cols", "1,2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["xi"] == ["2", "1", "1"]
    assert main(["count", "--json", json.dumps(doc)]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == "2"
    assert main(["gen", "network", "--arcs", "a>b,a>b"]) == 0
    assert json.loads(capsys.readouterr().out)["betas"] == [[1], [1]]
    assert main(["gen", "transport", "--rows", "2,1", "--cols", "1,1"]) == 2
    assert json.loads(capsys.readouterr().out)["error"] == "margin_mismatch"
    assert main(["gen", "network", "--arcs", "a>b,c>d"]) == 2


def test_text_format(capsys):
    _, out = run(capsys, "count", "--format", "text", doc={**PAPER, "xi": [5, 2]})
    assert 'count: "321"' in out


def test_output_is_byte_identical(capsys):
    outs = {run(capsys, "count-poly", doc={**PAPER, "xi": [3, 1]})[1] for _ in range(3)}
    assert len(outs) == 1


def test_selftest_quick(capsys):
    assert main(["selftest", "--quick"]) == 0
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 3
