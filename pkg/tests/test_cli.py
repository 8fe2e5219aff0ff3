import io
import json

import pytest

from nestedcycles import cli, families
from nestedcycles.cli import EXIT_INVARIANT, EXIT_OK, EXIT_REJECTED, EXIT_USAGE, run_command
from nestedcycles.formats import serialize_graph
from nestedcycles.graphcore import InvariantViolation

GENERATE_KEYS = {"host", "extension_edges", "generators", "rank", "dimension", "nested", "aut_invariant"}
GENERATOR_KEYS = {"edges", "vertices", "length", "block", "part", "kind"}


@pytest.fixture
def write(tmp_path):
    def _write(g, name):
        path = tmp_path / f"{name}.g"
        path.write_text(serialize_graph(g, name))
        return str(path)

    return _write


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run_command(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def test_generate_k4_json(write):
    status, out, _ = run("generate", "--input", write(families.k4(), "k4"), "--json")
    data = json.loads(out)
    assert status == EXIT_OK
    assert set(data) == GENERATE_KEYS
    assert all(set(g) == GENERATOR_KEYS for g in data["generators"])
    assert len(data["generators"]) == 4
    assert (data["rank"], data["nested"], data["aut_invariant"]) == (3, True, True)


def test_generate_extension_edges(write):
    status, out, _ = run("generate", "-i", write(families.four_paths(), "s4"), "--json")
    data = json.loads(out)
    assert status == EXIT_OK
    assert data["extension_edges"] == [["+x~y", "x", "y"]]
    assert data["rank"] == data["dimension"] == 4


def test_audit_reports_impossible_with_exit_zero(write):
    status, out, _ = run("audit", "--input", write(families.four_paths(), "star4paths"))
    data = json.loads(out)
    assert status == EXIT_OK
    assert data["status"] == "Impossible"
    assert data["report"] == "no canonical nested generating family exists; crossing witness per embedding"
    assert len(data["witnesses"]) == data["planar_rotation_systems"] == 6


def test_verify_cube_duality(write):
    status, out, _ = run("verify", "--input", write(families.cube(), "cube"), "--check", "duality")
    data = json.loads(out)
    assert status == EXIT_OK
    assert data["checks"]["duality"]["violations"] == []
    assert data["checks"]["duality"]["circuits"] == 28


def test_verify_all(write):
    status, out, _ = run("verify", "-i", write(families.prism(), "prism"))
    checks = json.loads(out)["checks"]
    assert status == EXIT_OK
    assert set(checks) == {"duality", "nested", "transfer", "td", "facial", "graded", "circuits", "canonical"}
    assert all(c["pass"] for c in checks.values())


@pytest.mark.parametrize("command", ["embed", "faces", "dual", "decompose"])
def test_inspection_commands(write, command):
    status, out, _ = run(command, "-i", write(families.theta(3), "theta"))
    assert status == EXIT_OK and json.loads(out)


def test_text_and_dot_output(write):
    path = write(families.k4(), "k4")
    status, out, _ = run("faces", "-i", path, "--format", "text")
    assert status == EXIT_OK and out.startswith("faces:")
    status, out, _ = run("generate", "-i", path, "--format", "dot")
    assert status == EXIT_OK and out.startswith("graph")


def test_express(write):
    path = write(families.four_paths(), "s4")
    status, out, _ = run("express", "-i", path, "--cycle", "1,2,3,4")
    data = json.loads(out)
    assert status == EXIT_OK and data["in_span"] and len(data["generators"]) == 2
    status, _, err = run("express", "-i", path, "--cycle", "1,2")
    assert status == EXIT_REJECTED and "not a circuit" in err


def test_precondition_rejections(write, tmp_path):
    status, _, err = run("generate", "-i", write(families.complete(5), "k5"))
    assert status == EXIT_REJECTED and "genus-0" in err
    status, _, _ = run("generate", "-i", write(families.four_paths(), "s4"), "--strict")
    assert status == EXIT_REJECTED
    bad = tmp_path / "bad.g"
    bad.write_text("graph bad\nv 2\ne 1 1 9\n")
    status, _, err = run("generate", "-i", str(bad))
    assert status == EXIT_REJECTED and "line 3" in err and "9" in err
    status, _, _ = run("embed", "-i", str(tmp_path / "missing.g"))
    assert status == EXIT_REJECTED


def test_budget_exhaustion_is_a_rejection(write):
    status, _, _ = run("audit", "-i", write(families.dodecahedron(), "dodeca"))
    assert status == EXIT_REJECTED


def test_usage_errors():
    assert run("bogus")[0] == EXIT_USAGE
    assert run("generate")[0] == EXIT_USAGE
    status, _, err = run("generate", "--input", "x.g", "--wat")
    assert status == EXIT_USAGE and "usage" in err


def test_stdin_input(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(serialize_graph(families.k4())))
    status, out, _ = run("generate", "-i", "-")
    assert status == EXIT_OK and json.loads(out)["rank"] == 3


def test_invariant_violation_exit_code(write, monkeypatch):
    def broken(*args, **kwargs):
        raise InvariantViolation("dual minus the cycle has 3 components")

    monkeypatch.setattr(cli, "generate_full", broken)
    status, _, err = run("generate", "-i", write(families.k4(), "k4"))
    assert status == EXIT_INVARIANT and "invariant violated" in err


def test_seeded_canonicity_check(write):
    path = write(families.four_paths(), "s4")
    status, out, _ = run("verify", "-i", path, "--check", "canonical", "--seed", "3")
    data = json.loads(out)["checks"]["canonical"]
    assert status == EXIT_OK and data["pass"] and data["seed"] == 3
