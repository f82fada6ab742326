import io
import json

import pytest

from cospectra.cli import main
from cospectra.constructions import APPENDIX_A_SPECTRA


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_spectrum_json():
    code, text = run("spectrum", "appendixA:1")
    assert code == 0
    rows = json.loads(text)
    assert {r["eigenvalue"]: r["multiplicity"] for r in rows} == APPENDIX_A_SPECTRA[0]


def test_spectrum_fast_matches():
    assert run("spectrum", "appendixA:4", "--fast") == run("spectrum", "appendixA:4")
    code, _ = run("spectrum", "Z4:1,3", "--fast")
    assert code == 1


def test_spectrum_table_layout():
    code, text = run("spectrum", *(f"appendixA:{k}" for k in range(1, 7)), "--format", "table")
    assert code == 0
    lines = text.splitlines()
    assert lines[0].split("|")[1].strip() == "Degree"
    assert lines[2] == "1) |     10 | {-6^(1), -4^(4), -2^(8), 0^(8), 2^(6), 4^(4), 10^(1)}"
    assert lines[7].startswith("6) |     15 | {-5^(4)")
    assert len(lines) == 8


def test_spectrum_multiple_json():
    code, text = run("spectrum", "appendixA:1", "hypercube:2")
    assert code == 0
    data = json.loads(text)
    assert [d["graph"] for d in data] == ["appendixA:1", "hypercube:2"]


def test_cospectral_verify():
    code, text = run("cospectral", "appendixA:1", "--verify")
    assert code == 0
    data = json.loads(text)
    assert data["hSize"] == 4
    assert data["oracleAgreement"] is True
    assert all(v in (True, None) for v in data["verdicts"].values())


def test_cospectral_non_cubelike_inline():
    code, text = run("cospectral", "Z2xZ3:[[1,0],[0,1],[0,2]]", "--verify")
    assert code == 0
    data = json.loads(text)
    assert data["H"] == [[0, 0], [1, 0]]
    assert data["verdicts"]["cubeMult"] is None


def test_pst():
    code, text = run("pst", "appendixA:1")
    assert code == 0
    assert json.loads(text) == {"sigma": "11111", "amplitude": {"re": -32, "im": 0}, "pst": True}
    code, text = run("pst", "Z2^2:10,01,11")
    assert code == 0
    assert json.loads(text)["sigma"] is None


def test_construct_roundtrip(tmp_path):
    for k in range(1, 7):
        path = tmp_path / f"a{k}.json"
        assert run("construct", f"appendixA:{k}", "--out", str(path))[0] == 0
        code, text = run("spectrum", f"@{path}")
        assert code == 0
        assert {r["eigenvalue"]: r["multiplicity"] for r in json.loads(text)} == APPENDIX_A_SPECTRA[k - 1]


@pytest.mark.parametrize("argv, vertices", [
    (("odd", "5"), 32),
    (("even", "6"), 64),
    (("hypercube", "3"), 8),
    (("product", "appendixA:1", "3"), 96),
])
def test_construct_kinds(argv, vertices):
    code, text = run("construct", *argv)
    assert code == 0
    data = json.loads(text)
    assert set(data) == {"group", "connectionSet"}
    from cospectra.constructions import graph_from_json
    assert graph_from_json(data).num_vertices == vertices


def test_search():
    code, text = run("search", "5", "20", "4", "99")
    assert code == 0
    assert text == run("search", "5", "20", "4", "99")[1]
    for item in json.loads(text):
        assert item["hSize"] >= 4


def test_exit_codes(monkeypatch):
    assert run("spectrum", "Z4:1")[0] == 1
    assert run("spectrum", "Z2^5:f5")[0] == 1
    assert run("construct", "odd", "4")[0] == 1
    assert run("construct", "product", "appendixA:1", "4")[0] == 1
    assert run("spectrum", "@/nonexistent/file.json")[0] == 1
    with pytest.raises(SystemExit) as err:
        run("frobnicate")
    assert err.value.code == 1
    monkeypatch.setenv("COSPECTRA_MAX_VERTICES", "16")
    assert run("cospectral", "hypercube:5", "--verify")[0] == 3


def test_deterministic_output():
    for argv in (("spectrum", "even:6"), ("cospectral", "odd:7"), ("pst", "odd:5")):
        assert run(*argv) == run(*argv)
