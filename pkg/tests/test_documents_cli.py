import json
import os
import subprocess
import sys

from fractions import Fraction as F

import pytest

from cdga import (
    DocumentError,
    canonical_json,
    load_cdga,
    load_complex,
    load_glie,
    load_gram,
    load_lie,
    resolve_input,
    validate_document,
)
from cdga.documents import builtin_names, format_rational, parse_rational, load_json
from cdga.cli import main


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "cdga.cli", *args],
        capture_output=True,
        text=True,
        timeout=600,
    )
    return proc.returncode, proc.stdout, proc.stderr


# -- document layer -----------------------------------------------------------------


def test_parse_and_format_rational():
    assert parse_rational("3/2") == F(3, 2)
    assert parse_rational("-7") == F(-7)
    assert parse_rational(4) == F(4)
    assert format_rational(F(3, 2)) == "3/2"
    assert format_rational(F(-2)) == "-2"
    with pytest.raises(DocumentError):
        parse_rational("1.5")
    with pytest.raises(DocumentError):
        parse_rational("3/0")


def test_canonical_json_is_sorted_and_newline_terminated():
    s = canonical_json({"b": 1, "a": [2, 3]})
    assert s == '{"a":[2,3],"b":1}\n'


def test_builtin_documents_validate():
    names = builtin_names()
    assert "cdga_sphere3.json" in names
    assert "lie_cross3.json" in names
    for name in names:
        doc = load_json(resolve_input(name))
        kind = validate_document(doc)
        if kind == "cdga":
            load_cdga(doc)
        elif kind == "lie":
            load_lie(doc)


def test_validate_document_rejects_unknown_kind():
    with pytest.raises(DocumentError):
        validate_document({"kind": "mystery"})
    with pytest.raises(DocumentError):
        validate_document([1, 2, 3])


def test_load_cdga_rejects_bad_expression():
    doc = {
        "kind": "cdga",
        "generators": [["x", 2], ["y", 3]],
        "differential": {"y": "x^2 +"},
    }
    with pytest.raises(DocumentError):
        load_cdga(doc)


def test_load_complex_with_map(tmp_path):
    doc = {
        "kind": "complex",
        "map": {
            "source": {
                "degrees": {"0": ["s0"], "1": ["s1"]},
                "differential": {"0": [["1"]]},
            },
            "target": {"degrees": {"0": ["t0"]}, "differential": {}},
            "components": {"0": [["1"]]},
        },
    }
    c, f = load_complex(doc)
    assert f is not None
    assert f.is_chain_map()
    assert c.support() == [0, 1]


def test_load_gram_and_glie():
    gd = {"kind": "gram", "grams": {"1": [["2", "1"], ["1", "2"]]}}
    ip = load_gram(gd)
    assert ip.grams[1][(0, 1)] == 1
    ld = {
        "kind": "glie",
        "basis": [["p", 1], ["q", 2]],
        "boundary": {"p": {"q": "3"}},
    }
    data = load_glie(ld)
    assert data.degree_of("q") == 2


def test_resolve_input_order(tmp_path, monkeypatch):
    lib = tmp_path / "library"
    lib.mkdir()
    target = lib / "my_doc.json"
    target.write_text('{"kind": "lie", "basis": ["x1"]}')
    monkeypatch.setenv("CDGA_LIBRARY", str(lib))
    assert resolve_input("my_doc.json") == str(target)
    assert resolve_input("my_doc") == str(target)
    # literal paths win over the library
    direct = tmp_path / "direct.json"
    direct.write_text("{}")
    assert resolve_input(str(direct)) == str(direct)
    with pytest.raises(DocumentError):
        resolve_input("no_such_document")


# -- CLI ----------------------------------------------------------------------------


def test_cli_homotopy_sphere3_json():
    rc, out, err = run_cli(
        "homotopy", "--input", "cdga_sphere3", "--format", "json"
    )
    assert rc == 0, err
    assert out == '{"certified_through":8,"pi":{"3":1}}\n'


def test_cli_homology_text():
    rc, out, err = run_cli("homology", "--input", "cdga_cp2")
    assert rc == 0
    assert "betti" in out or "degree" in out


def test_cli_check_all_builtins():
    for name in builtin_names():
        rc, out, err = run_cli("check", "--input", name)
        assert rc == 0, (name, err)


def test_cli_exit_code_document_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "cdga", "generators": [["x", 0]]}')
    rc, out, err = run_cli("check", "--input", str(bad))
    assert rc == 2
    assert "document error" in err


def test_cli_exit_code_math_error(tmp_path):
    bad = tmp_path / "bad_lie.json"
    bad.write_text(
        json.dumps(
            {
                "kind": "lie",
                "basis": ["x1", "x2"],
                "brackets": {"x1,x2": {"x1": 1}, "x2,x1": {"x1": 1}},
            }
        )
    )
    rc, out, err = run_cli("check", "--input", str(bad))
    assert rc == 1
    assert "rejected" in err


def test_cli_missing_input_resolves_to_error():
    rc, out, err = run_cli("homology", "--input", "nonexistent_doc")
    assert rc == 2


def test_cli_truncation_guard():
    rc, out, err = run_cli(
        "homology", "--input", "cdga_sphere3", "--truncation", "17"
    )
    assert rc == 2
    assert "force-truncation" in err


def test_cli_window_parsing():
    rc, out, err = run_cli(
        "homology",
        "--input",
        "cdga_sphere3",
        "--window",
        "0..4",
        "--format",
        "json",
    )
    assert rc == 0
    payload = json.loads(out)
    assert payload["window"] == [0, 4]
    rc2, _, err2 = run_cli(
        "homology", "--input", "cdga_sphere3", "--window", "4..0"
    )
    assert rc2 == 2


def test_cli_ce_and_weil_json():
    rc, out, _ = run_cli("ce", "--input", "lie_solvable2", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["betti"] == {"0": 1, "1": 1, "2": 0}
    rc2, out2, _ = run_cli(
        "weil", "--input", "lie_abelian1", "--format", "json"
    )
    assert rc2 == 0
    payload2 = json.loads(out2)
    assert payload2["weil_betti"]["0"] == 1
    assert all(v == 0 for k, v in payload2["weil_betti"].items() if k != "0")
    assert payload2["basic_betti"] == {"0": 1, "1": 0, "2": 1}


def test_cli_cone_and_cyl(tmp_path):
    doc = {
        "kind": "complex",
        "map": {
            "source": {
                "degrees": {"0": ["s0"], "1": ["s1"]},
                "differential": {"0": [["1"]]},
            },
            "target": {"degrees": {"0": ["t0"]}, "differential": {}},
            "components": {"0": [["1"]]},
        },
    }
    p = tmp_path / "map.json"
    p.write_text(json.dumps(doc))
    rc, out, _ = run_cli("cone", "--input", str(p), "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["weak_equivalence"] is False
    rc2, out2, _ = run_cli("cyl", "--input", str(p), "--format", "json")
    assert rc2 == 0
    payload2 = json.loads(out2)
    # the cylinder always retracts onto its target
    assert payload2["projection_weak_equivalence"] is True

    plain = {
        "kind": "complex",
        "complex": {"degrees": {"0": ["a"], "1": ["b"]}, "differential": {"0": [["1"]]}},
    }
    p2 = tmp_path / "plain.json"
    p2.write_text(json.dumps(plain))
    rc3, out3, _ = run_cli("cone", "--input", str(p2), "--format", "json")
    assert rc3 == 0
    assert json.loads(out3)["acyclic"] is True
    rc4, _, err4 = run_cli("cyl", "--input", str(p2))
    assert rc4 == 2  # cyl needs a map document


def test_cli_hodge(tmp_path):
    plain = {
        "kind": "complex",
        "complex": {
            "degrees": {"0": ["a"], "1": ["b", "c"]},
            "differential": {"0": [["1"], ["0"]]},
        },
    }
    p = tmp_path / "cx.json"
    p.write_text(json.dumps(plain))
    rc, out, _ = run_cli("hodge", "--input", str(p), "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["match"] is True
    assert payload["betti"] == {"0": 0, "1": 1}


def test_cli_number_op(tmp_path):
    doc = {
        "kind": "glie",
        "basis": [["p", 1], ["q", 2]],
        "boundary": {"p": {"q": "3"}},
    }
    p = tmp_path / "glie.json"
    p.write_text(json.dumps(doc))
    rc, out, _ = run_cli(
        "number-op", "--input", str(p), "--truncation", "4", "--format", "json"
    )
    assert rc == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["ccr"] is True


def test_cli_main_callable_directly(tmp_path, capsys):
    # main() returns the exit code without raising SystemExit
    rc = main(["homology", "--input", "cdga_sphere3", "--format", "json"])
    assert rc == 0
    out = capsys.readouterr().out
    assert json.loads(out)["betti"]["3"] == 1
