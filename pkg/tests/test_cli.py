import json
import subprocess
import sys

from hypothesis import given, settings, strategies as st

from eqeuler import io
from eqeuler.catalog import by_name, small_groups
from eqeuler.cli import main
from eqeuler.gcomplex import GSimplicialComplex, s3_sphere3, validate_and_subdivide

import oracles

S3 = {"degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}
POINT = {"vertices": 1, "simplices": [[0]], "action": {"generator_images": [[0]]}}


def run(args, stdin=None):
    proc = subprocess.run([sys.executable, "-m", "eqeuler", *args], input=stdin, capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def test_builtin_piped_into_euler():
    code, bundle, _ = run(["builtin", "s3-sphere3"])
    assert code == 0
    code, out, err = run(["euler", "-", "--field", "R"], stdin=bundle)
    assert code == 0, err
    rep = json.loads(out)["euler"]
    assert rep["h0"]["free_rank"] == 3 and rep["h0"]["torsion"] == [2]
    assert rep["class"]["order"] == 2
    assert rep["universal_euler_char"] == [1, -2, -1, 1, 1]
    assert all(c["passed"] for c in rep["verification"])


def test_euler_point_z5(tmp_path, capsys):
    g = write(tmp_path, "z5.json", {"degree": 5, "generators": [[1, 2, 3, 4, 0]]})
    x = write(tmp_path, "pt.json", POINT)
    assert main(["euler", g, x, "--field", "R"]) == 0
    rep = json.loads(capsys.readouterr().out)["euler"]
    assert rep["h0"]["free_rank"] == 3


def test_group_info_trivial(tmp_path, capsys):
    g = write(tmp_path, "triv.json", {"degree": 1, "generators": []})
    assert main(["group-info", g]) == 0
    info = json.loads(capsys.readouterr().out)["group"]
    assert info["order"] == 1 and len(info["subgroup_classes"]) == 1


def test_reps_marks_category(tmp_path, capsys):
    g = write(tmp_path, "s3.json", S3)
    assert main(["reps", "table", g, "--field", "C"]) == 0
    rep = json.loads(capsys.readouterr().out)["reps"]
    assert [r["degree"] for r in rep["irreducibles"]] == [1, 1, 2]
    assert rep["irreducibles"][2]["character"][2] == {"e": 1, "coeffs": ["-1/1"]}
    assert main(["marks", g]) == 0
    marks = json.loads(capsys.readouterr().out)["marks"]
    assert marks["table_of_marks"] == [[6, 0, 0, 0], [3, 1, 0, 0], [2, 0, 2, 0], [1, 1, 1, 1]]
    b = write(tmp_path, "b.json", io.bundle(s3_sphere3().group, s3_sphere3()))
    assert main(["category", b]) == 0
    cat = json.loads(capsys.readouterr().out)["category"]
    assert len(cat["objects"]) == 5
    assert cat["mor_cardinalities"][1][3] == 1


def test_rationals_serialised_as_fractions(tmp_path, capsys):
    b = write(tmp_path, "b.json", io.bundle(s3_sphere3().group, s3_sphere3()))
    out = tmp_path / "r.json"
    assert main(["euler", b, "--field", "Q", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())["euler"]
    assert rep["orbifold_euler_chars"] == ["0/1", "0/1", "0/1", "1/1", "1/1"]
    assert rep["h0"]["torsion"] == [2]


def test_verify_command(tmp_path, capsys):
    b = write(tmp_path, "b.json", io.bundle(s3_sphere3().group, s3_sphere3()))
    assert main(["verify", b]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] is True


def test_input_errors(tmp_path, capsys):
    bad = write(tmp_path, "bad.json", {"degree": 3, "generators": [[0, 0, 1]]})
    assert main(["group-info", bad]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "InvalidPermutation"
    missing = str(tmp_path / "nope.json")
    assert main(["group-info", missing]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "InputError"
    g = write(tmp_path, "s3.json", S3)
    x = write(tmp_path, "x.json", {"vertices": 3, "simplices": [[0, 1], [2]],
                                   "action": {"generator_images": [[0, 2, 1], [0, 1, 2]]}})
    assert main(["euler", g, x]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "NotSimplicialAction"
    notjson = tmp_path / "n.json"
    notjson.write_text("{")
    assert main(["group-info", str(notjson)]) == 1


def test_order_cap_env(tmp_path, monkeypatch, capsys):
    g = write(tmp_path, "s3.json", S3)
    monkeypatch.setenv("EQEULER_GROUP_CAP", "4")
    assert main(["group-info", g]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "OrderCapExceeded"


def test_rep_sphere_builtin(tmp_path, capsys):
    spec = {"group": S3, "pieces": [{"type": "trivial"}, {"type": "sign", "signs": [1, -1]},
                                    {"type": "dihedral", "n": 3, "generators": [[1, False], [0, True]]}]}
    s = write(tmp_path, "spec.json", spec)
    assert main(["builtin", "rep-sphere", s]) == 0
    bundle = json.loads(capsys.readouterr().out)
    assert bundle["complex"]["vertices"] == 10
    bad = write(tmp_path, "badspec.json", {"group": S3, "pieces": [{"type": "sign"}]})
    assert main(["builtin", "rep-sphere", bad]) == 1


def test_reports_are_byte_identical():
    _, bundle, _ = run(["builtin", "s3-sphere3"])
    first = run(["euler", "-"], stdin=bundle)[1]
    second = run(["euler", "-"], stdin=bundle)[1]
    assert first == second and first


def test_group_round_trip(groups16):
    for name, G in groups16:
        H = io.group_from_json(json.loads(json.dumps(io.group_to_json(G))))
        assert [p.images for p in H.elements] == [p.images for p in G.elements]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([n for n, _ in small_groups(8)]), st.randoms(use_true_random=False))
def test_complex_round_trip(name, rng):
    G = by_name(name)
    X = validate_and_subdivide(GSimplicialComplex.from_data(G, *oracles.random_complex_data(G, rng)))
    data = json.loads(json.dumps(X.to_json()))
    Y = io.complex_from_json(G, data)
    assert Y.simplices == X.simplices and Y.action == X.action
    assert Y.to_json() == data
