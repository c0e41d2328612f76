"""End-to-end runs of the command line interface, in process and installed."""

import json
import subprocess
import sys

import pytest

from cagekit.cage import axis_cage
from cagekit.cli import main
from cagekit.field import FieldDescriptor
from cagekit.serialize import cage_to_json, configuration_to_json
from cagekit.viete import Configuration

F = FieldDescriptor.rationals()


def run(tmp_path, *argv):
    """Invoke the CLI with -o, returning (exit code, parsed or raw output)."""
    out = tmp_path / "out.json"
    code = main([*argv, "-o", str(out)])
    if not out.exists():
        return code, None
    text = out.read_text()
    try:
        return code, json.loads(text)
    except json.JSONDecodeError:
        return code, text


@pytest.fixture
def square_cage(tmp_path):
    cage = axis_cage(F, [(0, 0), (1, 1)])
    path = tmp_path / "square.json"
    path.write_text(json.dumps(cage_to_json(cage)))
    return str(path)


@pytest.fixture
def cube_config(tmp_path):
    config = Configuration(F, [(0, 2, 4), (1, 3, 5)])
    path = tmp_path / "cube-points.json"
    path.write_text(json.dumps(configuration_to_json(config)))
    return str(path)


# -- generation ----------------------------------------------------------------


def test_gen_random_then_validate_and_verify(tmp_path):
    cage_path = tmp_path / "cage.json"
    code = main(["gen", "--kind", "random", "--seed", "5", "--d", "3",
                 "--n", "2", "-o", str(cage_path)])
    assert code == 0
    blob = json.loads(cage_path.read_text())
    assert blob["kind"] == "cage" and (blob["n"], blob["d"]) == (2, 3)

    code, report = run(tmp_path, "validate", "--cage", str(cage_path))
    assert code == 0
    assert report["valid"] is True and report["node_count"] == 9

    code, report = run(tmp_path, "verify", "--cage", str(cage_path),
                       "--checks", "all", "--no-timestamp")
    assert code == 0
    assert report["pass"] is True
    assert "elapsed_s" not in report


def test_gen_random_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["gen", "--kind", "random", "--seed", "7", "--d", "2", "--n", "3"]
    assert main([*argv, "-o", str(a)]) == 0
    assert main([*argv, "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_random_needs_its_flags(tmp_path, capsys):
    assert main(["gen", "--kind", "random", "--d", "2", "--n", "2"]) == 2
    assert "error:" in capsys.readouterr().err


def test_gen_axis_and_viete(tmp_path, cube_config):
    code, blob = run(tmp_path, "gen", "--kind", "axis",
                     "--points", cube_config)
    assert code == 0
    assert (blob["n"], blob["d"]) == (3, 2)

    flat = tmp_path / "flat.json"
    flat.write_text(json.dumps(configuration_to_json(
        Configuration(F, [(1, 3), (2, 4)]))))
    code, blob = run(tmp_path, "gen", "--kind", "viete",
                     "--points", str(flat))
    assert code == 0
    assert (blob["n"], blob["d"]) == (2, 2)
    cage_path = tmp_path / "viete-cage.json"
    cage_path.write_text(json.dumps(blob))
    code, report = run(tmp_path, "validate", "--cage", str(cage_path))
    assert code == 0 and report["valid"] is True


# -- inspection -----------------------------------------------------------------


def test_nodes_listing(tmp_path, square_cage):
    code, blob = run(tmp_path, "nodes", "--cage", square_cage)
    assert code == 0
    assert blob["kind"] == "nodes"
    assert [nd["index"] for nd in blob["nodes"]] == [
        [1, 1], [1, 2], [2, 1], [2, 2]]


def test_hilbert_table(tmp_path):
    cage_path = tmp_path / "cage.json"
    main(["gen", "--kind", "random", "--seed", "5", "--d", "3", "--n", "2",
          "-o", str(cage_path)])
    code, blob = run(tmp_path, "hilbert", "--cage", str(cage_path),
                     "--max-k", "4")
    assert code == 0
    assert blob["points"] == 9
    assert blob["k"] == [0, 1, 2, 3, 4]
    assert blob["h"][:2] == [1, 3]
    # nine nodes leave exactly the two group products in degree 3
    assert blob["h"][3] == 8

    code, blob = run(tmp_path, "hilbert", "--cage", str(cage_path),
                     "--max-k", "3", "--selection", "simplicial")
    assert code == 0 and blob["points"] == 6


# -- inscription ------------------------------------------------------------------


def test_inscribe_documented_example(tmp_path, square_cage):
    code, blob = run(tmp_path, "inscribe", "--cage", square_cage,
                     "--node", "1,1", "--tangent", "1,2", "--s", "1")
    assert code == 0
    assert blob["kind"] == "variety"
    assert blob["s"] == 1
    assert blob["lambda"] == [["-2", "1"]]


def test_inscribe_rejects_wrong_codimension(tmp_path, square_cage, capsys):
    code = main(["inscribe", "--cage", square_cage,
                 "--node", "1,1", "--tangent", "1,2", "--s", "2"])
    assert code == 2
    assert "codimension" in capsys.readouterr().err


def test_inscribe_rejects_bad_index(square_cage, capsys):
    assert main(["inscribe", "--cage", square_cage, "--node", "1;1",
                 "--tangent", "1,2"]) == 2
    assert main(["inscribe", "--cage", square_cage, "--node", "3,1",
                 "--tangent", "1,2"]) == 2
    capsys.readouterr()


def test_propagate(tmp_path, square_cage):
    code, blob = run(tmp_path, "propagate", "--cage", square_cage,
                     "--node", "1,1", "--tangent", "1,2")
    assert code == 0
    assert blob["kind"] == "tangent-field"
    assert blob["start"] == [1, 1]
    assert len(blob["tangents"]) == 4
    assert all(t["kind"] == "tangent" for t in blob["tangents"])


# -- reports ------------------------------------------------------------------------


def test_counterexample(tmp_path):
    code, blob = run(tmp_path, "counterexample", "--no-timestamp")
    assert code == 0
    assert blob["pass"] is True
    assert any("witness" in c for c in blob["checks"])


def test_counterexample_deterministic_output(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["counterexample", "--no-timestamp", "-o", str(a)]) == 0
    assert main(["counterexample", "--no-timestamp", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_demo_command(tmp_path, capsys):
    code, blob = run(tmp_path, "demo", "--list")
    assert code == 0
    assert "fermat-conic" in blob["demos"]
    code, blob = run(tmp_path, "demo", "fermat-conic", "--no-timestamp")
    assert code == 0 and blob["pass"] is True
    assert main(["demo", "escher-staircase"]) == 2
    assert main(["demo"]) == 2
    capsys.readouterr()


# -- failure surfaces -----------------------------------------------------------------


def test_invalid_cage_fails_validation_and_verification(tmp_path):
    cage = axis_cage(F, [(0, 0), (1, 1)])
    blob = cage_to_json(cage)
    blob["groups"][0][1] = blob["groups"][0][0]
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(blob))

    code, report = run(tmp_path, "validate", "--cage", str(path))
    assert code == 1
    assert report["valid"] is False
    assert report["failures"]
    code, report = run(tmp_path, "verify", "--cage", str(path),
                       "--no-timestamp")
    assert code == 1 and report["pass"] is False
    # node-consuming commands refuse the broken cage outright
    assert main(["nodes", "--cage", str(path)]) == 2


def test_malformed_json_is_a_usage_error(tmp_path, capsys):
    path = tmp_path / "mangled.json"
    path.write_text("{\"kind\": \"cage\",")
    assert main(["validate", "--cage", str(path)]) == 2
    err = capsys.readouterr().err
    assert "malformed JSON" in err
    assert main(["validate", "--cage", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()


# -- grid sampling ----------------------------------------------------------------------


def test_sample_grid_csv(tmp_path, cube_config):
    cage_path = tmp_path / "cube.json"
    main(["gen", "--kind", "axis", "--points", cube_config,
          "-o", str(cage_path)])
    variety_path = tmp_path / "curve.json"
    code = main(["inscribe", "--cage", str(cage_path), "--node", "1,1,1",
                 "--tangent", "1,2,3", "-o", str(variety_path)])
    assert code == 0

    code, text = run(tmp_path, "sample-grid", "--variety", str(variety_path),
                     "--box", "0", "1", "2", "3", "4", "5",
                     "--resolution", "3")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "x,y,z,value"
    assert len(lines) == 1 + 27
    # the box corner (0,2,4) is the inscription node, so the curve hits it
    assert lines[1] == "0.0,2.0,4.0,0.0"
    values = [float(line.split(",")[3]) for line in lines[1:]]
    assert all(v >= 0 for v in values)

    assert main(["sample-grid", "--variety", str(variety_path),
                 "--box", "0", "1", "2", "3", "4", "5",
                 "--resolution", "1", "-o", str(tmp_path / "junk.csv")]) == 2


def test_sample_grid_guards(tmp_path, square_cage, capsys):
    flat_variety = tmp_path / "flat.json"
    code = main(["inscribe", "--cage", square_cage, "--node", "1,1",
                 "--tangent", "1,2", "-o", str(flat_variety)])
    assert code == 0
    assert main(["sample-grid", "--variety", str(flat_variety),
                 "--box", "0", "1", "0", "1", "0", "1",
                 "--resolution", "3"]) == 2
    capsys.readouterr()


# -- installed entry point ----------------------------------------------------------------


def test_console_script_smoke():
    proc = subprocess.run(["cagekit", "demo", "--list"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "cube-elliptic" in proc.stdout


def test_module_invocation_smoke():
    proc = subprocess.run([sys.executable, "-m", "cagekit.cli", "demo",
                           "--list"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "fermat-conic" in proc.stdout
