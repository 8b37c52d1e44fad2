import json

import pytest

from eirep import __version__, corpus
from eirep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "case5", "--char", "2")
    assert code == 0 and out.strip() == "Infinite (string-band)"


def test_classify_json_report(capsys, monkeypatch):
    monkeypatch.setenv("EIREP_SEED", "7")
    code, out, _ = run(capsys, "classify", "z2_z3_triple", "--char", "5", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["seed"] == 7
    assert rep["tool"] == {"name": "eirep", "version": __version__}
    assert rep["result"]["verdict"] == "Finite" and len(rep["input_sha256"]) == 64


def test_unknown_is_not_an_error(capsys):
    code, out, _ = run(capsys, "classify", "diamond_poset", "--char", "2")
    assert code == 0 and out.startswith("Unknown")


def test_bad_seed(capsys, monkeypatch):
    monkeypatch.setenv("EIREP_SEED", "abc")
    code, _, err = run(capsys, "validate", "a2")
    assert code == 2 and "EIREP_SEED" in err


def test_parse_error_has_location(capsys, tmp_path):
    f = tmp_path / "broken.json"
    f.write_text('{"objects": [\n  "x",\n}')
    code, out, _ = run(capsys, "validate", str(f))
    assert code == 1 and "line 3" in out


def test_axiom_violation_reported(capsys, tmp_path):
    raw = corpus.a2().to_json()
    raw["compose"] = raw["compose"][1:]
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(raw))
    code, out, _ = run(capsys, "validate", str(f), "--json")
    rep = json.loads(out)
    assert code == 1 and rep["error"]["type"] == "DomainMismatch"


def test_missing_input(capsys):
    code, out, _ = run(capsys, "validate", "no/such/thing.json")
    assert code == 1 and "no such file" in out


def test_char_required(capsys):
    code, out, _ = run(capsys, "algebra", "a2")
    assert code == 1 and "--char" in out


def test_bundle_then_validate_directory(capsys, tmp_path):
    code, out, _ = run(capsys, "bundle", str(tmp_path))
    assert code == 0 and len(out.split()) == len(corpus.CORPUS)
    code, out, _ = run(capsys, "validate", str(tmp_path), "--json")
    reps = json.loads(out)
    assert code == 0 and len(reps) == len(corpus.CORPUS)
    assert all("result" in r for r in reps)
    again = json.loads((tmp_path / "case5.json").read_text())
    assert again == corpus.case(5).to_json()


@pytest.mark.parametrize("argv,expected", [
    (["oracle-count", "kronecker", "--dim", "1,1", "--char", "2"], "3"),
    (["oracle-count", "kronecker", "--dim", "1,1", "--char", "2", "--ext", "2"], "5"),
    (["radical", "z2_z3_triple", "--char", "3"], "dim rad = 5; rad^i dims [5, 3, 1, 0]"),
    (["idempotents", "z2_z3_triple", "--char", "2"], "4 primitive idempotents, 4 simple modules (over F_4)"),
    (["ei", "c_prime"], "ei=yes  endotrivial=no  skeletal=yes"),
    (["algebra", "case1", "--char", "2"], "dim kC = 5 over F_2"),
])
def test_text_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_endotrivialize_c_prime(capsys):
    code, out, _ = run(capsys, "endotrivialize", "c_prime", "--json")
    rep = json.loads(out)
    assert rep["result"]["quotient"]["hom_sizes"] == {"a->a": 1, "a->b": 1, "b->b": 1}


def test_characteristic_zero_note(capsys):
    code, out, _ = run(capsys, "classify", "z2_z3_triple", "--char", "0", "--json")
    rep = json.loads(out)
    assert code == 0 and "characteristic 0" in rep["result"]["note"]


def test_version(capsys):
    with pytest.raises(SystemExit):
        main(["--version"])
    assert __version__ in capsys.readouterr().out
