import json

import pytest

from turanlab.catalog import path
from turanlab.graph import graph6_decode, graph6_encode, is_isomorphic
from turanlab.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from turanlab.models import Certificate


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture
def p4_certificate(tmp_path, p4, p4_gadgets):
    def write(coefficients):
        certificate = Certificate(h=p4, k=5, gadgets=p4_gadgets, coefficients=coefficients)
        target = tmp_path / "p4-k5.json"
        target.write_text(certificate.model_dump_json(), encoding="utf-8")
        return str(target)

    return write


def test_count(capsys):
    assert _run(capsys, "count", "--h", "P3", "--g", "K3") == (EXIT_OK, "3\n")
    assert _run(capsys, "count", "--h", "Bg", "--g", "4; 0-1,1-2,2-3,3-0") == (EXIT_OK, "4\n")


def test_induced(capsys):
    assert _run(capsys, "induced", "--h", "P3", "--g", "K3") == (EXIT_OK, "0\n")
    assert _run(capsys, "count", "--induced", "--h", "P3", "--g", "C4") == (EXIT_OK, "4\n")


def test_turan(capsys, p4):
    assert _run(capsys, "turan", "--h", graph6_encode(p4), "--parts", "2,2,2") == (EXIT_OK, "84\n")
    assert _run(capsys, "turan", "--h", "K3", "--n", "5", "--k", "4") == (EXIT_OK, "4\n")


def test_certify_pass_and_fail(capsys, p4_certificate):
    code, out = _run(capsys, "certify", "--cert", p4_certificate(["2", "1", "2"]), "--bound-at", "7")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["verdict"] == "pass"
    assert payload["bounds"][0]["lhs"] == payload["bounds"][0]["rhs"]
    assert payload["identity"]["lhs"]

    code, out = _run(capsys, "certify", "--cert", p4_certificate(["1", "0", "0"]), "--format", "text")
    assert code == EXIT_FAILED
    assert out.startswith("fail: certificate fails at type")


def test_malformed_input_is_a_usage_error(capsys):
    assert _run(capsys, "count", "--h", "B!", "--g", "K3")[0] == EXIT_USAGE
    assert _run(capsys, "certify", "--cert", "{not json")[0] == EXIT_USAGE
    assert _run(capsys, "turan", "--h", "P3")[0] == EXIT_USAGE
    assert _run(capsys, "nonsense")[0] == EXIT_USAGE


def test_zero_denominator_is_a_usage_error(capsys, tmp_path, p4, p4_gadgets):
    document = {
        "h": graph6_encode(p4),
        "k": 5,
        "gadgets": [graph6_encode(b) for b in p4_gadgets],
        "coefficients": ["2", "1/0", "2"],
    }
    target = tmp_path / "broken.json"
    target.write_text(json.dumps(document), encoding="utf-8")
    assert _run(capsys, "certify", "--cert", str(target)) == (EXIT_USAGE, "")
    with pytest.raises(ValueError):
        Certificate.model_validate(document)


def test_table_output(capsys):
    code, out = _run(capsys, "table", "--h", "P4", "--k", "unbounded", "--gadget", "M2", "--gadget", "K3+K1",
                     "--gadget", "K4")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "#k,unbounded"
    assert len(out.splitlines()[1].split(",")) == 6

    code, out = _run(capsys, "table", "--h", "P5", "--k", "4", "--gadget", "bowtie", "--format", "json")
    payload = json.loads(out)
    assert payload["k"] == 4
    assert len(payload["columns"]) == 14


def test_gen(capsys):
    code, out = _run(capsys, "gen", "--n", "4")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 11
    assert len(_run(capsys, "gen", "--n", "5", "--k", "3", "--maximal")[1].splitlines()) == 3
    assert len(_run(capsys, "gen", "--n", "5", "--k", "4", "--contains", "P5")[1].splitlines()) == 14
    assert _run(capsys, "gen", "--n", "2", "--format", "text")[1] == "2;\n2; 0-1\n"
    records = json.loads(_run(capsys, "gen", "--n", "3", "--k", "3", "--format", "json")[1])
    assert sorted(len(record["edges"]) for record in records) == [0, 1, 2]
    assert all(record["n"] == 3 for record in records)
    assert all([list(e) for e in graph6_decode(record["graph6"]).edges()] == record["edges"] for record in records)


def test_find_cert(capsys):
    code, out = _run(capsys, "find-cert", "--h", "P4", "--k", "5", "--gadget", "M2", "--gadget", "K3+K1",
                     "--gadget", "K4")
    assert code == EXIT_OK
    assert json.loads(out)["coefficients"] == ["2", "1", "2"]

    code, out = _run(capsys, "find-cert", "--h", "P4", "--k", "5", "--gadget", "M2", "--gadget", "K4")
    assert code == EXIT_FAILED
    assert json.loads(out)["separating_columns"]


def test_gadget_file(capsys, tmp_path):
    pool = tmp_path / "pool.g6"
    pool.write_text("# P5 gadgets\nM2+K1\nK2+K3\nbowtie\n", encoding="utf-8")
    code, out = _run(capsys, "find-cert", "--h", "P5", "--k", "6", "--gadget", str(pool))
    assert code == EXIT_OK
    assert json.loads(out)["coefficients"] == ["1", "3", "1"]


def test_extremal(capsys):
    code, out = _run(capsys, "extremal", "--h", "K3", "--n", "5", "--k", "4")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["maximum"] == 4
    assert report["turan_is_unique_max"]


def test_registry_commands(capsys, tmp_path):
    code, out = _run(capsys, "registry", "check", "--h", "P4", "--k", "5")
    assert code == EXIT_OK
    assert json.loads(out)["provenance"] == "path-p4-certificate"
    assert json.loads(_run(capsys, "registry", "check", "--h", "C5", "--k", "4")[1]) is None

    saved = tmp_path / "registry.jsonl"
    code, out = _run(capsys, "registry", "axiom", "--h", "C7", "--k-condition", "k>=9", "--note", "cli test",
                     "--save", str(saved))
    assert code == EXIT_OK
    assert json.loads(out)["provenance"] == "user-axiom"
    assert "cli test" in saved.read_text(encoding="utf-8")

    code, out = _run(capsys, "registry", "attach", "--h", "K2", "--k", "3", "--x", "0", "--join", "0-0")
    assert code == EXIT_OK
    assert is_isomorphic(graph6_decode(json.loads(out)["graph"]), path(4))
