from __future__ import annotations

import json

import pytest

from qhstruct.cli import SCHEMA, main
from qhstruct.counting import count_D2


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count(capsys):
    assert run(capsys, "count", "A5")[:2] == (0, "42\n")
    assert run(capsys, "count", "Q(1,3,2)")[1] == "322\n"
    assert run(capsys, "count", "D15", "--method", "brute")[1] == "42\n"


def test_count_verify(capsys):
    code, out, _ = run(capsys, "count", "D15", "--verify")
    assert code == 0
    assert {line.split(": ")[1] for line in out.splitlines()} == {"42"}


def test_count_method_not_applicable(capsys):
    code, _, err = run(capsys, "count", "Z4", "--method", "formula")
    assert code == 1 and "error" in err


def test_lattice_z4(capsys):
    code, out, _ = run(capsys, "lattice", "Z4")
    assert code == 0 and out.startswith("not a lattice") and "Z_4" in out


def test_lattice_json(capsys):
    code, out, _ = run(capsys, "lattice", "A4", "--json", "-")
    data = json.loads(out)
    assert data["schema"] == SCHEMA and data["lattice"] and data["structures"] == 14


def test_enumerate_dot(capsys):
    code, out, _ = run(capsys, "enumerate", "K3", "--dot", "-")
    assert code == 0 and out.startswith("digraph") and out.count("label=") == 6


def test_enumerate_threads_are_deterministic(capsys):
    _, one, _ = run(capsys, "enumerate", "Q(1,2,1)", "--json", "-", "--threads", "1")
    _, three, _ = run(capsys, "enumerate", "Q(1,2,1)", "--json", "-", "--threads", "3")
    assert one == three and json.loads(one)["count"] == count_D2(5)


def test_deconcat(capsys):
    _, out, _ = run(capsys, "deconcat", "Dtilde4")
    data = json.loads(out)
    assert data["schema"] == SCHEMA
    code, _, err = run(capsys, "deconcat", "A3", "--at", "2")
    assert code == 1 and "neither" in err


def test_tilting_and_lift(capsys, tmp_path):
    order = tmp_path / "o.json"
    order.write_text(json.dumps({"n": 3, "pairs": [[1, 2], [3, 2]]}))
    _, out, _ = run(capsys, "tilting", "A3", "--order", str(order))
    assert json.loads(out)["tilting_supports"] == {"1": [1], "2": [1, 2, 3], "3": [3]}
    order.write_text(json.dumps({"n": 4, "pairs": [[1, 4]]}))
    code, out, _ = run(capsys, "lift", "A4", "--subset", "1,4", "--order", str(order))
    assert code == 0 and json.loads(out)["schema"] == SCHEMA


def test_tamari_and_tree_order(capsys):
    assert "5 trees, 5 covers, lattice: True" in run(capsys, "tamari", "3")[1]
    assert run(capsys, "tree-order", "(())()")[1].strip() == "1<2 3<2"


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["count", "nonsense"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_size_error_exit_code(capsys):
    assert run(capsys, "enumerate", "A11")[0] == 1


def test_verify_only(capsys):
    code, out, _ = run(capsys, "verify", "--only", "1,6")
    assert code == 0 and out.count("[PASS]") == 2
