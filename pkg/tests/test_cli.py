import json
from importlib import resources

import jsonschema
import pytest

from grassmori import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--output", "json")
    assert code == 0
    return json.loads(out)


def schema(name):
    text = resources.files("grassmori").joinpath("schemas", f"{name}.json").read_text()
    return json.loads(text)


@pytest.mark.parametrize("argv, status", [
    (("classify", "--family", "quadric", "--n", "3", "--k", "6"), "WeakFanoNotFano"),
    (("classify", "--family", "grassmannian", "--r", "1", "--n", "4", "--k", "5"), "NotWeakFano"),
    (("classify", "--family", "projective", "--n", "2", "--k", "8"), "Fano"),
])
def test_classify_examples(capsys, argv, status):
    assert run_json(capsys, *argv)["status"] == status


@pytest.mark.parametrize("r, n, k, c", [(1, 7, 4, 1), (1, 8, 4, 2), (0, 5, 3, 0)])
def test_complexity_examples(capsys, r, n, k, c):
    data = run_json(capsys, "complexity", "--r", str(r), "--n", str(n), "--k", str(k))
    assert data["complexity"] == c


def test_sbld_examples(capsys):
    data = run_json(capsys, "sbld", "--r", "2", "--n", "5", "--D", "1,-2")
    assert data["chamber"] == "C_1" and data["base_locus"] == {"kind": "schubert", "m": 1, "dim": 5}
    data = run_json(capsys, "sbld", "--r", "2", "--n", "5", "--D", "1,0")
    assert data["label"] == "C0_Nef" and data["base_locus"]["kind"] == "empty"
    data = run_json(capsys, "sbld", "--r", "2", "--n", "5", "--D", "1,-4")
    assert data["label"] == "NotEffective"


ALL = [
    ("classify", ("classify", "--family", "cubic", "--n", "3", "--k", "2")),
    ("classify", ("classify", "--family", "g14", "--c", "1", "--k", "3")),
    ("complexity", ("complexity", "--r", "2", "--n", "8", "--k", "3")),
    ("spherical", ("spherical", "--r", "1", "--n", "5", "--k", "3")),
    ("effcone", ("effcone", "--r", "1", "--n", "6", "--k", "2")),
    ("cones", ("cones", "--r", "2", "--n", "7")),
    ("sbld", ("sbld", "--r", "1", "--n", "4", "--D", "0,1")),
    ("schubert", ("schubert", "--r", "1", "--n", "4", "--m", "2", "--verify")),
    ("osculate", ("osculate", "--r", "2", "--n", "5", "--m", "3")),
    ("multiplicity", ("multiplicity", "--r", "1", "--n", "3", "--j", "2")),
    ("table", ("table", "fano")),
    ("table", ("table", "many-point")),
]


@pytest.mark.parametrize("name, argv", ALL, ids=[a[1][0] + "-" + str(i) for i, a in enumerate(ALL)])
def test_json_matches_schema(capsys, name, argv):
    jsonschema.validate(run_json(capsys, *argv), schema(name))


@pytest.mark.parametrize("name, argv", ALL[:10])
def test_table_output_runs(capsys, name, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip()


def test_same_seed_same_bytes(capsys):
    argv = ("complexity", "--r", "2", "--n", "9", "--k", "3", "--seed", "5", "--output", "json")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("GRASSMORI_SEED", "42")
    data = run_json(capsys, "complexity", "--r", "1", "--n", "6", "--k", "3")
    assert data["seed"] == 42
    data = run_json(capsys, "complexity", "--r", "1", "--n", "6", "--k", "3", "--seed", "3")
    assert data["seed"] == 3


@pytest.mark.parametrize("argv", [
    ("classify", "--family", "torus", "--n", "3", "--k", "1"),
    ("classify", "--family", "quadric", "--n", "x", "--k", "1"),
    ("sbld", "--r", "2", "--n", "5", "--D", "1,a"),
    ("sbld", "--r", "2", "--n", "5", "--D", "0,0"),
    ("complexity", "--r", "1", "--n", "5"),
    ("complexity", "--r", "1", "--n", "5", "--k", "2", "--samples", "0"),
    ("schubert", "--r", "1", "--n", "4", "--m", "3"),
    ("frobnicate",),
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        cli.main(list(argv))
    assert info.value.code == 2


@pytest.mark.parametrize("argv", [
    ("complexity", "--r", "1", "--n", "5", "--k", "6"),
    ("effcone", "--r", "2", "--n", "7", "--k", "2"),
    ("cones", "--r", "2", "--n", "4"),
])
def test_unsupported_exit_3(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 3 and "unsupported" in err and not out
