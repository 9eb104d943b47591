import math
import os
from pathlib import Path

import pytest

import capzip

DATA = Path(os.environ.get("CAPZIP_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_known_curvatures():
    cap = capzip.build_cap(capzip.CapParams(0.1, 0.02, 0.1))
    assert cap["schema"] == "capzip.cap/1"
    assert cap["curvature_deg"]["a1"] == pytest.approx(1.9, abs=0.05)
    assert cap["curvature_deg"]["c"] == pytest.approx(5.6, abs=0.05)
    assert cap["convex"]


def test_solve_params_round_trip():
    p = capzip.solve_params(5.0, 10.0, 0.1)
    cap = capzip.build_cap(p)
    assert cap["curvature_deg"]["a2"] == pytest.approx(5.0, abs=1e-9)
    assert cap["curvature_deg"]["c"] == pytest.approx(10.0, abs=1e-9)


def test_lemma_one_angle():
    r = capzip.lemma(1)
    assert 65.0 <= r["angles"][0]["value_deg"] <= 75.0
    assert not r["straight"]["verdict"]["unzipping"]


def test_check_verdicts():
    assert not capzip.check(type="caaab")["unzipping"]
    arc = capzip.check(type="acaab", strategy="lemma-arc")
    assert arc["left_C"] and arc["crossings"] == 0
    closed = capzip.check(type="acaab", strategy="lemma-arc", closed=True)
    assert closed["unzipping"] and closed["pieces"] == 1


def test_develop_and_custom_path():
    path = {
        "name": "custom",
        "stops": ["a1", "c", "a2", "a3", "b3"],
        "segments": [{"kind": "geodesic"}] * 4,
    }
    d = capzip.develop(path=path)
    assert d["schema"] == "capzip.development/1"
    assert d["oracle_gap"] < 1e-9
    assert d["crossings"] >= 1


def test_small_sweep():
    r = capzip.sweep({"omega_a_deg": [1, 5], "omega_c_deg": [10], "epsilon": [0.01]}, workers=2)
    assert r["schema"] == "capzip.sweep/1"
    assert r["unzippings"] == 0
    assert len(r["cells"]) == 2


def test_edge_unzip():
    assert capzip.hamiltonian_path_count(DATA / "solids" / "rhombic_dodecahedron.obj") == 0
    r = capzip.edge_unzip(DATA / "solids" / "cube.obj")
    assert r["unzipping_found"] and r["hamiltonian_paths"] == 72


def test_small_helpers():
    assert capzip.min_cut_degree(8 * math.pi + 0.01) == 5
    assert capzip.radially_monotone([(0, 0), (1, 0), (2, 0)])
    assert not capzip.radially_monotone([(0, 0), (1, 0), (0.5, 0.5)])
    assert "closed-unzipping" in capzip.figure_names()
    assert capzip.render_figure("cap-projection", capzip.standard_params()).startswith("<?xml")


def test_errors():
    with pytest.raises(capzip.ParameterError):
        capzip.build_cap(capzip.CapParams(-1.0, 0.02, 0.1))
    with pytest.raises(capzip.ParseError):
        capzip.check(path="{ nope")
    with pytest.raises(capzip.Error):
        capzip.lemma(9)
