import json

import pytest

from srglab.cli import load_catalog, run
from srglab.constructions import shrikhande
from srglab.graph import SrgParams
from srglab.io import to_graph6


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def js(capsys, *argv):
    code, out, _ = call(capsys, *argv)
    return code, json.loads(out)


def test_theta_srg(capsys):
    code, data = js(capsys, "theta", "--srg", "16,6,2,2")
    assert code == 0
    assert data["results"]["theta"] == 4 and data["results"]["theta_complement"] == 4
    assert set(data) == {"command", "inputs", "results", "checks"}


def test_deterministic_output(capsys):
    _, a, _ = call(capsys, "spectrum", "--srg", "45,22,10,11")
    _, b, _ = call(capsys, "spectrum", "--srg", "45,22,10,11")
    assert a == b
    assert "3.85410196625" in a


def test_graph_input_from_file(tmp_path, capsys):
    path = tmp_path / "s.g6"
    path.write_text(to_graph6(shrikhande()) + "\n")
    code, data = js(capsys, "induced-cycles", str(path), "--max", "16")
    assert data["results"]["lengths"] == [3, 4, 5, 6, 8]
    code, data = js(capsys, "energy", str(path))
    assert data["results"]["energy"] == pytest.approx(36)
    code, data = js(capsys, "invariants", str(path))
    assert data["results"] == {"alpha": 4, "omega": 3, "chi": 4, "chi_complement": 6}


def test_construct_and_stdin(capsys, monkeypatch):
    import io

    code, out, _ = call(capsys, "construct", "petersen", "--emit", "edgelist")
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, data = js(capsys, "theta", "-")
    assert data["results"]["theta"] == pytest.approx(4, abs=1e-6)
    code, data = js(capsys, "construct", "rook", "4")
    assert data["results"]["srg"] == [16, 6, 2, 2]


def test_feasible(capsys):
    code, out, err = call(capsys, "feasible", "--srg", "7,3,1,1")
    assert code == 0
    assert json.loads(out)["results"]["feasible"] is False
    assert "FAIL" in err
    code, _, _ = call(capsys, "feasible", "--srg", "7,3,1,1", "--assert")
    assert code == 1


def test_spanning_and_assert(capsys):
    code, data = js(capsys, "spanning-check", "--g", "45,28,15,21", "--h", "45,22,10,11")
    assert code == 0
    assert data["results"]["verdict"] == "Excluded"
    assert data["results"]["simple"]["verdict"] == "Inconclusive"
    code, _, _ = call(capsys, "spanning-check", "--g-named", "srg-45-host", "--h-named", "srg-45-guest", "--assert")
    assert code == 1


def test_induced_check(capsys):
    code, data = js(capsys, "induced-check", "--named", "shrikhande", "--cycle", "9")
    assert data["results"]["verdict"] == "Excluded"
    code, data = js(capsys, "induced-check", "--g", "496,60,30,4", "--h-named", "gewirtz")
    assert data["results"]["verdict"] == "Inconclusive"


def test_triangular_host(capsys):
    code, data = js(capsys, "triangular-host", "--h", "56,10,0,2", "--l-range", "4..40")
    assert data["results"]["excluded"] == list(range(4, 32))


def test_invariant_bounds(capsys):
    code, data = js(capsys, "invariant-bounds", "--srg", "15,8,4,4", "--actual", "chi_complement=4")
    assert data["results"]["chi_complement_lb"] == 3
    tight = {c["name"]: c["tight"] for c in data["checks"]}
    assert tight["chi_complement"] is False and tight["alpha"] is None
    code, data = js(capsys, "invariant-bounds", "--ell", "16,6,2")
    assert data["results"]["alpha_ub"] == 4


def test_verify_friendship(capsys):
    code, out, _ = call(capsys, "verify-friendship", "--max-n", "5")
    assert code == 0 and out.strip().endswith("PASS")
    code, data = js(capsys, "verify-friendship", "--max-n", "3", "--format", "json")
    assert data["results"]["all_windmills"] is True


def test_table_symplectic(capsys):
    code, data = js(capsys, "table", "symplectic", "--q", "2", "--n", "3..5", "--cap", "300")
    rows = {r["n"]: r for r in data["results"]["rows"]}
    assert (rows[3]["ell"], rows[3]["theta_H"], rows[3]["theta_Hbar"]) == (16, 7, 9)
    assert (rows[4]["theta_H"], rows[4]["theta_Hbar"]) == (15, 17)
    assert (rows[5]["theta_H"], rows[5]["theta_Hbar"]) == (31, 33)
    assert rows[3]["constructed"] is True and rows[5]["constructed"] is None


def test_text_format(capsys):
    code, out, _ = call(capsys, "theta", "--srg", "10,3,0,1", "--format", "text")
    assert code == 0 and "theta" in out and not out.startswith("{")


def test_exit_codes(capsys):
    assert call(capsys, "theta", "--srg", "1,2")[0] == 2
    assert call(capsys, "nonsense")[0] == 2
    assert call(capsys, "table", "symplectic", "--q", "4", "--n", "3")[0] == 3
    assert call(capsys, "construct", "dodecahedron")[0] == 2
    assert call(capsys, "invariants", "/nonexistent/file")[0] == 3
    assert call(capsys, "energy", "--srg", "7,3,1,1")[0] == 0


def test_catalog_entries_are_valid():
    catalog = load_catalog()
    assert {"petersen", "shrikhande", "gewirtz", "sp6-2-complement"} <= set(catalog)
    for name, entry in catalog.items():
        SrgParams(*entry["params"])
        assert entry["note"]
