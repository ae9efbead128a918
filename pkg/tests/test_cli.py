import json
import shutil

import pytest

from twocolour.cli import CORPUS_DIR, main, run_trial, trial_failed

from conftest import HOPF, TREFOIL, VIRTUAL_HOPF, WITNESS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_trefoil(capsys):
    code, out, _ = run(capsys, "invariants", TREFOIL)
    assert code == 0
    assert "j2: [2]" in out
    assert "flags.slice_obstructed: True" in out


def test_invariants_virtual_hopf(capsys):
    code, out, _ = run(capsys, "invariants", VIRTUAL_HOPF, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["two_colourable"] is False and data["naive"] == 1
    assert data["j2"] is None


def test_invariants_json_schema(capsys):
    code, out, _ = run(capsys, "invariants", HOPF, "--json")
    data = json.loads(out)
    assert list(data) == sorted(data)
    assert data == {
        "chords": 2, "components": 2, "two_colourable": True, "j2": [0, 2], "j2_self": 0,
        "naive": 2, "ip_self": 0, "ip_candidates": [0, 2], "lk": [[0, 2], [2, 0]],
        "flags": {"amphichiral_obstructed": True, "cb_concordance_obstructed": False,
                  "chequerboard_certified": True, "compatible": False,
                  "slice_obstructed": True},
    }


def test_json_is_byte_stable(capsys):
    outs = {run(capsys, "invariants", WITNESS, "--json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_oracle_and_check_agree(capsys):
    a = run(capsys, "invariants", WITNESS, "--json", "--oracle")[1]
    b = run(capsys, "invariants", WITNESS, "--json", "--check")[1]
    c = run(capsys, "invariants", WITNESS, "--json")[1]
    assert a == b == c


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "invariants", "O1+ U1-")[0] == 2
    assert run(capsys, "invariants", VIRTUAL_HOPF, "--field", "j2")[0] == 3
    assert run(capsys, "invariants", VIRTUAL_HOPF, "--field", "naive")[0] == 0
    assert run(capsys, "project", VIRTUAL_HOPF, "00")[0] == 3


def test_file_and_stdin_input(capsys, tmp_path, monkeypatch):
    f = tmp_path / "hopf.gauss"
    f.write_text("# Hopf link\nO1+ U2+\nO2+ U1+\n")
    code, out, _ = run(capsys, "invariants", str(f), "--field", "j2", "--json")
    assert json.loads(out) == {"j2": [0, 2]}
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(TREFOIL))
    code, out, _ = run(capsys, "invariants", "-", "--field", "j2", "--json")
    assert json.loads(out) == {"j2": [2]}


def test_colourings(capsys):
    code, out, _ = run(capsys, "colourings", HOPF)
    assert out.splitlines() == ["count: 4", "00 0", "01 2"]
    assert run(capsys, "colourings", VIRTUAL_HOPF)[1].splitlines() == ["count: 0"]
    assert run(capsys, "colourings", "_")[1].splitlines() == ["count: 2", "0 0"]


def test_project(capsys):
    assert run(capsys, "project", TREFOIL, "0")[1].strip() == "_"
    assert run(capsys, "project", HOPF, "00")[1].strip() == HOPF


def test_compare(capsys):
    out = run(capsys, "compare", HOPF)[1].splitlines()
    assert out[1].split() == ["0", "2", "0", "2", "0", "0", "2"]


def test_census_bundled_corpus(capsys):
    code, out, err = run(capsys, "census", "--workers", "2")
    assert code == 0, err
    rows = out.splitlines()
    assert rows[0].split("\t")[0] == "name"
    names = {r.split("\t")[0] for r in rows[1:]}
    assert {"unknot", "unlink2", "virtual_trefoil", "hopf", "virtual_hopf",
            "lk_zero_witness"} <= names


def test_census_detects_bad_golden(capsys, tmp_path):
    shutil.copy(CORPUS_DIR / "hopf.json", tmp_path / "hopf.json")
    data = json.loads((tmp_path / "hopf.json").read_text())
    data["expected"]["j2"] = [0, 4]
    (tmp_path / "hopf.json").write_text(json.dumps(data))
    (tmp_path / "broken.json").write_text(json.dumps({"name": "broken", "gauss_code": "O1+"}))
    code, out, err = run(capsys, "census", str(tmp_path), "--workers", "1")
    assert code == 1
    assert "MISMATCH hopf: j2" in err
    assert "broken: parse error" in err


def test_census_empty_directory(capsys, tmp_path):
    code, out, _ = run(capsys, "census", str(tmp_path))
    assert code == 0
    assert len(out.splitlines()) == 1


def test_bundled_goldens_match_enumeration():
    from twocolour.cli import load_corpus
    from twocolour.diagram import parse
    from twocolour.invariants import report

    for _, entry in load_corpus(CORPUS_DIR):
        assert report(parse(entry.gauss_code), "enum").to_json() == entry.expected


def test_fuzz_small(capsys, tmp_path):
    code, out, _ = run(capsys, "fuzz", "--steps", "100", "--trials", "4", "--seed", "3",
                       "--out", str(tmp_path), "--workers", "2")
    assert code == 0
    assert "PASS" in out


def test_trial_report_shape():
    r = run_trial(HOPF, 50, 0, 10)
    assert not trial_failed(r)
    assert r["steps"] == 50


def test_search_command(capsys):
    code, out, _ = run(capsys, "search", "--max-chords", "4")
    assert code == 0
    assert out.split("\t")[0] == WITNESS
