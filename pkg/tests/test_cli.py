import json

import pytest

from singcurve.cli import (
    InputDocument,
    cmd_beta,
    cmd_hilbert,
    cmd_verify,
    cmd_wspace,
    fixture_names,
    fixture_path,
    load_fixture,
    main,
)


def write_doc(tmp_path, generators, variables=("x", "y", "z"), **extra):
    doc = {"field": {"type": "prime", "p": 10007}, "variables": list(variables),
           "generators": list(generators), "options": {}}
    doc.update(extra)
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(doc))
    return str(path)


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_fixture_corpus():
    assert fixture_names() == sorted([
        "coordinate_axes", "cuspidal_cubic", "line", "nodal_cubic",
        "smooth_conic", "smooth_quartic", "twisted_cubic"])
    for name in fixture_names():
        doc = load_fixture(name)
        known = doc.comment["known"]
        assert {"d", "p_a", "g_tilde"} <= set(known)
        assert doc.comment["provenance"]


@pytest.mark.parametrize("name", ["line", "smooth_conic", "nodal_cubic", "cuspidal_cubic",
                                  "smooth_quartic", "twisted_cubic", "coordinate_axes"])
def test_fixture_known_values_match_computation(name):
    doc = load_fixture(name)
    report, status = cmd_hilbert(doc)
    assert status == 0
    known = doc.comment["known"]
    assert report["invariants"]["d"] == known["d"]
    assert report["invariants"]["p_a"] == known["p_a"]


def test_hilbert_line_and_nodal(capsys):
    status, out, _ = run(capsys, "hilbert", str(fixture_path("line")), "--json")
    rep = json.loads(out)
    assert status == 0 and rep["invariants"]["d"] == 1 and rep["invariants"]["p_a"] == 0
    status, out, _ = run(capsys, "hilbert", "fixture:nodal_cubic")
    assert status == 0 and "d=3, p_a=1" in out


def test_malformed_generator_exit_2(tmp_path, capsys):
    path = write_doc(tmp_path, ["x + + y"])
    status, _, err = run(capsys, "hilbert", path)
    assert status == 2 and "PolynomialSyntaxError" in err


@pytest.mark.parametrize("doc", [
    {"variables": ["x"], "generators": []},
    {"variables": ["x", "x"], "generators": ["x"]},
    {"variables": ["x", "y"], "generators": ["x + y^2"]},
    {"variables": ["x", "y"], "generators": ["t"]},
])
def test_bad_documents_exit_2(tmp_path, capsys, doc):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert run(capsys, "hilbert", str(path))[0] == 2


def test_missing_file_and_bad_json(tmp_path, capsys):
    assert run(capsys, "hilbert", str(tmp_path / "nope.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "hilbert", str(bad))[0] == 2
    assert run(capsys, "hilbert")[0] == 2


def test_not_a_curve_exit_3(tmp_path, capsys):
    path = write_doc(tmp_path, ["x0"], variables=("x0", "x1", "x2", "x3"))
    status, out, _ = run(capsys, "hilbert", path, "--json")
    rep = json.loads(out)
    assert status == 3
    assert rep["hilbert"]["polynomial"] == "1/2*l^2 + 3/2*l + 1"
    assert rep["error"].startswith("NotACurve")


def test_wspace(capsys):
    report, status = cmd_wspace(load_fixture("nodal_cubic"), 6)
    assert status == 0 and report["wspace"]["dim_W"] == 1
    # f^2 with f = y^2*z - x^3 - x^2*z, normalized so the leading x^6 coefficient is 1
    assert report["wspace"]["basis"] == [
        "x^6 + 2*x^5*z - 2*x^3*y^2*z + x^4*z^2 - 2*x^2*y^2*z^2 + y^4*z^2"]
    report, _ = cmd_wspace(load_fixture("line"), 1)
    assert report["wspace"]["dim_W"] == 0


def test_wspace_char_divides_degree(capsys):
    assert run(capsys, "wspace", "fixture:nodal_cubic", "10007")[0] == 3
    assert run(capsys, "wspace", "fixture:nodal_cubic", "7", "--field", "prime:7")[0] == 3


def test_verify_suites():
    report, status = cmd_verify(load_fixture("nodal_cubic"))
    assert status == 0
    assert {c["name"]: c["verdict"] for c in report["checks"]} == {
        "nesting": "PASS", "lci": "PASS", "codim_formula": "PASS", "plane_theorem": "PASS"}
    assert report["invariants"]["mu"] == 1

    report, status = cmd_verify(load_fixture("twisted_cubic"))
    verdicts = {c["name"]: c["verdict"] for c in report["checks"]}
    assert status == 0
    assert verdicts == {"nesting": "PASS", "lci": "PASS", "codim_formula": "PASS",
                        "plane_theorem": "SKIPPED"}

    report, status = cmd_verify(load_fixture("coordinate_axes"))
    verdicts = {c["name"]: c["verdict"] for c in report["checks"]}
    assert status == 1
    assert verdicts == {"nesting": "PASS", "lci": "FAIL"}


def test_verify_continues_after_errors(tmp_path, capsys):
    path = write_doc(tmp_path, ["x0"], variables=("x0", "x1", "x2", "x3"))
    status, out, _ = run(capsys, "verify", path, "--json")
    rep = json.loads(out)
    verdicts = {c["name"]: c["verdict"] for c in rep["checks"]}
    assert status == 1
    assert verdicts["nesting"] == "PASS" and verdicts["invariants"] == "ERROR"


def test_beta_command(capsys):
    report, status = cmd_beta(2, 1, 3, 6)
    assert status == 0 and report["beta"]["closed_form"] == 27
    status, out, _ = run(capsys, "beta", "2", "1", "3", "6", "--brute", "x^3", "--json")
    rep = json.loads(out)
    assert status == 0
    assert rep["beta"] == {"closed_form": 27, "bruteforce": 27, "verdict": "PASS"}
    assert run(capsys, "beta", "2", "1", "3", "5")[0] == 3
    assert run(capsys, "beta", "2", "1", "3", "6", "--brute", "x^2")[0] == 2
    assert run(capsys, "beta", "3", "1", "2", "5", "--brute", "x0^2 - 3*x1*x2")[0] == 0


def test_overrides_and_out(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    status, out, _ = run(capsys, "hilbert", "fixture:twisted_cubic", "--window", "2:9",
                         "--field", "rational", "--out", str(out_path))
    rep = json.loads(out_path.read_text())
    assert status == 0 and "Hilbert polynomial of S/I: 3*l + 1" in out
    assert rep["command"]["window"] == [2, 9]
    assert rep["command"]["document"]["field"] == {"type": "rational"}
    assert [r["l"] for r in rep["table"]] == list(range(2, 10))
    assert run(capsys, "hilbert", "fixture:line", "--window", "5")[0] == 2


def test_gtilde_flag(capsys):
    status, out, _ = run(capsys, "verify", "fixture:smooth_quartic", "--gtilde", "3", "--json")
    rep = json.loads(out)
    assert status == 0 and rep["invariants"]["mu"] == 0 and rep["invariants"]["g_plus_mu"] == 3


def test_backend_cross_check(tmp_path, capsys):
    path = write_doc(tmp_path, ["y^2*z - x^3 - x^2*z"], options={"backend": "both", "window": [1, 8]})
    status, out, _ = run(capsys, "hilbert", path, "--json")
    rep = json.loads(out)
    assert status == 0 and rep["cross_check"]["agree"] and not rep["warnings"]
    # over GF(2) this cubic's partials degenerate differently than over QQ
    path = write_doc(tmp_path, ["x^2*y + y^2*z"], field={"type": "prime", "p": 2},
                     options={"backend": "both", "window": [1, 7]})
    status, out, _ = run(capsys, "hilbert", path, "--json")
    rep = json.loads(out)
    assert rep["cross_check"]["agree"] is False
    assert "possible bad-prime artifact" in rep["warnings"][0]


def test_report_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "verify", "fixture:nodal_cubic", "--out", str(a))
    run(capsys, "verify", "fixture:nodal_cubic", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_input_document_roundtrip():
    doc = InputDocument.from_dict({"variables": ["a", "b", "c"], "generators": ["a*b - c^2"]})
    assert doc.field.p == 10007
    assert doc.ideal().n == 2
