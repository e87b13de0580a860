from __future__ import annotations

import json

import pytest

from triorbit.cli import export_ar_quiver, run
from triorbit.orbitcat import cluster_category
from triorbit.quiverrep import Quiver


def _json(capsys, argv, code=0):
    assert run(argv) == code
    return json.loads(capsys.readouterr().out)


def test_quiver_validate(capsys, tmp_path):
    assert _json(capsys, ["quiver", "validate", "--n", "3"])["class"] == "A_3"
    f = tmp_path / "q.txt"
    f.write_text("vertices 3\n# comment\narrow 2 1\narrow 2 3\n")
    assert _json(capsys, ["quiver", "validate", "--quiver", str(f)])["class"] == "A_3"


def test_cyclic_quiver_exit_2(capsys):
    assert run(["quiver", "validate", "--inline", "vertices 3; arrow 1 2; arrow 2 3; arrow 3 1"]) == 2
    assert "oriented cycle" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(["geom", "frobnicate"]) == 2
    assert run(["quiver", "validate", "--field", "4"]) == 2
    assert run(["quiver", "validate", "--quiver", "/nonexistent/q.txt"]) == 2
    capsys.readouterr()


def test_tilting_count(capsys):
    doc = _json(capsys, ["geom", "tilting-count", "--n", "3"])
    assert doc == {"schema": 1, "count": 14}


def test_geom_commands(capsys):
    assert _json(capsys, ["geom", "diagonals", "--n", "3"])["count"] == 9
    doc = _json(capsys, ["geom", "bijection", "--n", "3", "--check"])
    assert doc["transports_triangulations"] is True
    assert len(doc["mapping"]) == 9
    assert run(["geom", "bijection", "--n", "2", "--dot"]) == 0
    assert capsys.readouterr().out.startswith("graph bijection {")


def test_db_commands(capsys):
    doc = _json(capsys, ["db", "homs", "--n", "2", "--shifts", "0", "0"])
    assert len(doc["homs"]) == 9
    assert _json(capsys, ["db", "serre-check", "--n", "3"])["ok"] is True
    assert run(["db", "homs", "--n", "2", "--format", "table"]) == 0
    assert "Hom" in capsys.readouterr().out


def test_orbit_commands(capsys):
    assert _json(capsys, ["orbit", "indecs", "--n", "3"])["count"] == 9
    assert _json(capsys, ["orbit", "cy-check", "--n", "3"])["ok"] is True
    assert _json(capsys, ["orbit", "dg-compare", "--n", "2"])["ok"] is True
    homs = _json(capsys, ["orbit", "homs", "--n", "1"])["homs"]
    assert [h["total"] for h in homs] == [1, 0, 0, 1]


def test_orbit_cy_check_fails_for_non_cluster_functor(capsys):
    assert run(["orbit", "cy-check", "--n", "2", "--functor", "0", "1"]) == 1
    capsys.readouterr()


def test_braid_commands(capsys):
    assert _json(capsys, ["braid", "check", "--m", "4"])["braid_relations"] is True
    assert _json(capsys, ["braid", "quotient", "--m", "2"])["trivial"] is True
    assert _json(capsys, ["braid", "quotient", "--m", "3"], code=1)["trivial"] is False


def test_verify_all_small(capsys):
    doc = _json(capsys, ["verify", "all", "--n", "2"])
    assert doc["ok"] is True
    names = {r["suite"] for r in doc["reports"]}
    assert {"serre", "two_cy", "finiteness_dg", "counting", "braid", "cone", "homotopy", "cofibration"} == names


def test_ar_quiver_a1():
    dot = export_ar_quiver(cluster_category(Quiver.linear(1)))
    assert dot.count("[color=") == 3
    assert "->" not in dot


def test_ar_quiver_a2_colors_and_determinism(capsys):
    dot = export_ar_quiver(cluster_category(Quiver.linear(2)))
    colors = {line.split("color=")[1].split(",")[0] for line in dot.splitlines() if "[color=" in line}
    assert len(colors) == 5
    assert run(["orbit", "ar-quiver", "--n", "2"]) == 0
    first = capsys.readouterr().out
    assert run(["orbit", "ar-quiver", "--n", "2"]) == 0
    assert capsys.readouterr().out == first == dot


def test_ar_quiver_mesh_edges_a3():
    dot = export_ar_quiver(cluster_category(Quiver.linear(3)), (0, 0))
    # the module category of A_3 has 6 indecomposables and 6 irreducible maps
    assert dot.count("[color=") == 6
    assert dot.count("->") == 6
