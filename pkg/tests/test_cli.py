from __future__ import annotations

import json
import subprocess
import sys

from projmet import family as fam
from projmet.cli import EXIT_BUDGET, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, FamilySpec, run
from projmet.field import gf
from projmet.parent import hamming_code
from projmet.weight import WeightTable


def call(capsys, *argv):
    rc = run(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_spheres_csv(capsys):
    rc, out, _ = call(capsys, "spheres", "--family", "phase_rotation:4", "--q", "2")
    assert rc == EXIT_OK
    assert out.split() == ["t,sphere,ball", "0,1,1", "1,5,6", "2,10,16"]


def test_spheres_export(capsys, tmp_path):
    path = tmp_path / "t.bin"
    rc, _, _ = call(capsys, "spheres", "--family", "hamming:3", "--q", "3", "--export", str(path))
    assert rc == EXIT_OK
    T = WeightTable.from_bytes(path.read_bytes(), gf(3))
    assert T.sphere_sizes == [1, 6, 12, 8]


def test_weight(capsys):
    rc, out, _ = call(capsys, "weight", "--family", "rank:2,2", "--q", "2", "--vector", "1,0,0,1")
    assert (rc, out.strip()) == (EXIT_OK, "2")
    rc, out, _ = call(capsys, "weight", "--family", "phase_rotation:4", "--vector", "1,1,0,1", "--json")
    data = json.loads(out)
    assert data["weight"] == 2 and len(data["representation"]) == 2


def test_parent(capsys):
    rc, out, _ = call(capsys, "parent", "--family", "phase_rotation:3", "--q", "2", "--json")
    data = json.loads(out)
    assert data["code"]["basis"] == [[1, 1, 1, 1]]
    assert data["distance"] == 4
    assert data["coset_distribution"][:2] == [1, 4]


def test_equiv_and_aut(capsys):
    rc, out, _ = call(capsys, "equiv", "--family", "row:2,2", "--family", "column:2,2")
    assert rc == EXIT_OK and out.strip() != "NONE"
    rc, out, _ = call(capsys, "equiv", "--family", "hamming:3", "--family", "phase_rotation:2")
    assert out.strip() == "NONE"
    rc, out, _ = call(capsys, "aut", "--family", "phase_rotation:2", "--json")
    assert json.loads(out)["order"] == 6


def test_matroid_extend(capsys):
    rc, out, _ = call(capsys, "matroid", "--family", "phase_rotation:3", "--q", "3", "--extend", "--json")
    data = json.loads(out)
    assert len(data["extended"]) == 7 and data["closed"] is False


def test_bounds(capsys):
    rc, out, _ = call(capsys, "bounds", "--family", "rank:2,3", "--d", "2", "--json")
    data = json.loads(out)
    assert data["mu"] == [0, 3, 6] and data["projective_singleton"] == 8


def test_bounds_anticode(capsys, tmp_path):
    from projmet.bounds import anticode_gap_example
    path = tmp_path / "gap.json"
    path.write_text(json.dumps(anticode_gap_example().to_json()))
    rc, out, _ = call(capsys, "bounds", "--family", f"@{path}", "--d", "3", "--anticode", "2",
                      "--dim-cap", "3", "--json")
    data = json.loads(out)
    assert data["anticode"]["dim"] == 3 and data["anticode"]["gap"] is True


def test_perfect(capsys, tmp_path):
    path = tmp_path / "code.json"
    path.write_text(json.dumps(hamming_code(gf(2), 3).to_json()))
    rc, out, _ = call(capsys, "perfect", "--family", "phase_rotation:6", "--code", str(path), "--json")
    data = json.loads(out)
    assert rc == EXIT_OK
    assert data["perfect"] and data["t"] == 1 and data["distance"] == 3
    assert data["packing_ratio"] == "1"


def test_embed(capsys, tmp_path):
    path = tmp_path / "w.json"
    path.write_text(json.dumps([0, 1, 1, 2]))
    rc, out, _ = call(capsys, "embed", "--weights", str(path), "--json")
    data = json.loads(out)
    assert (data["r"], data["a"], data["b"], data["verified"]) == (4, 1, 1, True)


def test_verify(capsys):
    rc, out, _ = call(capsys, "verify")
    assert rc == EXIT_OK
    assert out.strip().splitlines()[-1].endswith("passed")
    passed, total = out.strip().splitlines()[-1].split()[0].split("/")
    assert passed == total


def test_exit_codes(capsys, tmp_path):
    assert call(capsys, "spheres", "--family", "nope:3")[0] == EXIT_USAGE
    assert call(capsys, "weight", "--family", "hamming:2", "--vector", "1,0,1")[0] == EXIT_USAGE
    assert call(capsys, "spheres")[0] == EXIT_USAGE
    assert call(capsys, "spheres", "--family", "hamming:3", "--q", "6")[0] == EXIT_DOMAIN
    assert call(capsys, "spheres", "--family", "discrete:3", "--max-states", "4")[0] == EXIT_BUDGET
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([0, 1, 1, 3]))
    assert call(capsys, "embed", "--weights", str(bad))[0] == EXIT_DOMAIN
    assert call(capsys, "frobnicate")[0] == EXIT_USAGE
    assert call(capsys, "bounds", "--family", "hamming:2")[0] == EXIT_USAGE
    assert call(capsys, "--help")[0] == EXIT_OK


def test_family_spec_forms(tmp_path):
    f = gf(2)
    assert FamilySpec("sum_rank:1x2,2x1").build(f) == fam.sum_rank(f, [(1, 2), (2, 1)])
    assert FamilySpec("tensor_rank:2,2").build(f) == fam.tensor_rank(f, [2, 2])
    assert FamilySpec("combinatorial:4;0,1;2,3").build(f).point_set() == \
        fam.combinatorial(f, 4, [[0, 1], [2, 3]]).point_set()
    F = fam.phase_rotation(gf(3), 3)
    path = tmp_path / "f.json"
    path.write_text(json.dumps(F.to_json()))
    assert FamilySpec(f"@{path}").build(f) == F


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "projmet", "weight", "--family", "rank:2,2",
                           "--vector", "1,0,0,1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "2"
    proc = subprocess.run([sys.executable, "-m", "projmet"], capture_output=True, text=True)
    assert proc.returncode == EXIT_USAGE
