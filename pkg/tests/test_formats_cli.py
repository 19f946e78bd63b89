import json
import subprocess
import sys

import pytest

from conftest import DATA
from oqkit.catalog import boolean_algebra, cylindric_set_algebra, with_simple_quantifiers
from oqkit.cli import main
from oqkit.dot import frame_to_dot
from oqkit.errors import ParseError, ValidationError
from oqkit.formats import canonicalize, document_for, dumps, loads, parse, to_dict
from oqkit.frames import CylindricOrthoFrame, maclaren_frame
from oqkit.transforms import qca_to_cqia

DATA_FILES = sorted(p.name for p in DATA.glob("*.json"))


# -- formats ------------------------------------------------------------------


def test_b2_qca_document():
    doc = parse(DATA / "b2_qca.json")
    assert doc.kind == "qca"
    assert doc.payload.n == 4
    assert doc.payload == with_simple_quantifiers(boolean_algebra(2), 2)


@pytest.mark.parametrize("name", DATA_FILES)
def test_data_files_are_canonical(name):
    text = (DATA / name).read_text(encoding="utf-8")
    assert dumps(parse(DATA / name)) == text
    assert canonicalize(text) == text


def test_key_order_and_meet_join_not_stored():
    d = to_dict(document_for(cylindric_set_algebra(2, 2)))
    assert list(d) == ["kind", "n", "labels", "leq", "ocomp", "bot", "top", "dims", "exists", "diag"]
    assert "meet" not in d and "join" not in d


def test_roundtrip_every_kind():
    C = qca_to_cqia(cylindric_set_algebra(2, 2))
    for obj in (boolean_algebra(2), cylindric_set_algebra(2, 2), C, C.qia, maclaren_frame(C)):
        doc = document_for(obj)
        assert loads(dumps(doc)) == doc


def _b2_qca_dict():
    return json.loads((DATA / "b2_qca.json").read_text())


def test_ocomp_out_of_range_is_validation_error():
    d = _b2_qca_dict()
    d["ocomp"][1] = 9
    with pytest.raises(ValidationError, match="ocomp"):
        loads(json.dumps(d))


def test_non_square_perp_is_parse_error():
    d = json.loads((DATA / "b2_maclaren_frame.json").read_text())
    d["perp"][0] = d["perp"][0][:-1]
    with pytest.raises(ParseError, match="perp"):
        loads(json.dumps(d))


@pytest.mark.parametrize(
    "mutate,error",
    [
        (lambda d: d.pop("leq"), ParseError),
        (lambda d: d.update(kind="lattice"), ParseError),
        (lambda d: d.update(extra=1), ParseError),
        (lambda d: d.update(n="4"), ParseError),
        (lambda d: d.update(labels=["x"]), ParseError),
        (lambda d: d.update(top=0), ValidationError),
        (lambda d: d["leq"][0].__setitem__(1, 2), ValidationError),
        (lambda d: d["exists"][0].__setitem__(0, -1), ValidationError),
    ],
)
def test_malformed_documents(mutate, error):
    d = _b2_qca_dict()
    mutate(d)
    with pytest.raises(error):
        loads(json.dumps(d))


def test_invalid_json_is_parse_error():
    with pytest.raises(ParseError, match="line"):
        loads("{\n  nope\n}")


def test_missing_file_is_parse_error(tmp_path):
    with pytest.raises(ParseError):
        parse(tmp_path / "missing.json")


# -- dot ----------------------------------------------------------------------


def test_b2_maclaren_dot():
    F = maclaren_frame(qca_to_cqia(with_simple_quantifiers(boolean_algebra(2), 2)))
    text = frame_to_dot(F)
    assert text.count("[label=") == 3
    perp_edges = [ln for ln in text.splitlines() if "dir=none" in ln]
    assert perp_edges == ["  p0 -> p1 [dir=none, style=solid];"]
    assert frame_to_dot(F) == text
    assert text == (DATA / "b2_maclaren.dot").read_text()


def test_dot_without_dims_has_no_dashed_edges():
    F = CylindricOrthoFrame(2, ((False, True), (True, False)), (), ())
    assert "dashed" not in frame_to_dot(F)


def test_dot_loops_and_delta_fill():
    F = maclaren_frame(qca_to_cqia(cylindric_set_algebra(2, 2)))
    plain, loops = frame_to_dot(F), frame_to_dot(F, loops=True)
    assert all(f"p{p} -> p{p} " not in plain for p in range(F.m))
    assert "p0 -> p0 [style=dashed" in loops
    filled = frame_to_dot(F, delta=(0, 1))
    assert filled.count("fillcolor") == len(F.deltas[0][1]) == 3


# -- cli ----------------------------------------------------------------------


def test_check_exit_codes(capsys):
    assert main(["check", str(DATA / "mo2_qca.json")]) == 0
    assert main(["check", str(DATA / "o6_as_oml.json")]) == 1
    out = capsys.readouterr().out
    assert "oml" in out and "witness=(a, b)" in out
    assert main(["check", str(DATA / "o6_ol.json")]) == 0


def test_missing_input_exits_2(tmp_path, capsys):
    assert main(["convert", "--to", "qia", str(tmp_path / "missing.json")]) == 2
    assert "error" in capsys.readouterr().err


def test_usage_errors_exit_2():
    assert main([]) == 2
    assert main(["convert", str(DATA / "b2_qca.json")]) == 2
    assert main(["convert", "--to", "qca", str(DATA / "b2_qca.json")]) == 2


def test_convert_round_trip_bytes(tmp_path):
    for stem in ("b2", "mo2", "cylset_2_2"):
        src = DATA / f"{stem}_qca.json"
        mid, back = tmp_path / f"{stem}_cqia.json", tmp_path / f"{stem}_back.json"
        assert main(["convert", "--to", "qia", str(src), "-o", str(mid)]) == 0
        assert mid.read_bytes() == (DATA / f"{stem}_cqia.json").read_bytes()
        assert main(["convert", "--to", "qca", str(mid), "-o", str(back)]) == 0
        assert back.read_bytes() == src.read_bytes()


def test_convert_oml_to_qia_and_back(tmp_path):
    q, back = tmp_path / "q.json", tmp_path / "back.json"
    assert main(["convert", "--to", "qia", str(DATA / "mo2_oml.json"), "-o", str(q)]) == 0
    assert main(["convert", "--to", "qca", str(q), "-o", str(back)]) == 0
    assert parse(back).payload == parse(DATA / "mo2_oml.json").payload
    assert main(["convert", "--to", "qia", str(DATA / "o6_as_oml.json")]) == 1


def test_roundtrip_command(capsys):
    assert main(["roundtrip", str(DATA / "cylset_2_2_qca.json")]) == 0
    out = capsys.readouterr().out
    assert "structure identical: yes" in out and "bytes identical: yes" in out


def test_report_json_is_stable(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["report", str(DATA / "o6_as_oml.json"), "--json", str(a)]) == 1
    assert main(["report", str(DATA / "o6_as_oml.json"), "--json", str(b)]) == 1
    assert a.read_bytes() == b.read_bytes()
    rep = json.loads(a.read_text())
    assert rep["passed"] is False
    oml = [c for c in rep["checks"] if c["name"] == "orthomodular"][0]
    assert {"axiom": "oml", "dims": [], "witness": ["a", "b"]} in oml["violations"]


def test_frame_command(tmp_path):
    out, dot = tmp_path / "f.json", tmp_path / "f.dot"
    args = ["frame", "--kind", "goldblatt", str(DATA / "cylset_2_2_cqia.json"), "-o", str(out)]
    assert main(args + ["--dot", str(dot), "--delta", "0,1"]) == 0
    assert out.read_bytes() == (DATA / "cylset_2_2_goldblatt_frame.json").read_bytes()
    assert dot.read_bytes() == (DATA / "cylset_2_2_goldblatt.dot").read_bytes()
    assert main(args + ["--delta", "0,5"]) == 2
    assert main(args + ["--max-source", "4"]) == 2


def test_filters_command(capsys):
    assert main(["filters", str(DATA / "b2_cqia.json")]) == 0
    assert capsys.readouterr().out.splitlines() == ["{1}", "{a, 1}", "{b, 1}"]


def test_catalog_command_and_env_cap(tmp_path, monkeypatch):
    out = tmp_path / "c.json"
    assert main(["catalog", "cylset:2:2", "-o", str(out)]) == 0
    assert out.read_bytes() == (DATA / "cylset_2_2_qca.json").read_bytes()
    assert main(["catalog", "bogus"]) == 2
    monkeypatch.setenv("OQKIT_MAX_ELEMS", "8")
    assert main(["catalog", "cylset:2:2"]) == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "oqkit", "check", str(DATA / "b2_oml.json")], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "orthomodular: passed" in proc.stdout
