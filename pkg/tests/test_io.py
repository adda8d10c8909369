import json

import numpy as np
import pytest

from hyperlat import io
from hyperlat.errors import DomainError
from hyperlat.graph import SchlafliSpec
from hyperlat.growth import convergence_table
from hyperlat.linegraph import random_orientation, signed_line_graph
from hyperlat.spectra import coupling_matrix, eigen_spectrum, histogram
from hyperlat.tiling import catalog_instance, generate_layout


@pytest.fixture
def layout():
    return generate_layout(SchlafliSpec(5, 4), 2)


def test_layout_roundtrip(layout, tmp_path):
    path = tmp_path / "layout.json"
    io.write_json(path, io.layout_to_dict(layout))
    back = io.read_layout(path)
    assert back.graph.edges == layout.graph.edges
    assert back.ring_of == layout.ring_of and back.type_of == layout.type_of
    assert back.faces == layout.faces and back.spec == layout.spec


def test_catalog_roundtrip(tmp_path):
    g = catalog_instance("dodecahedron")
    io.write_json(tmp_path / "d.json", io.layout_to_dict(g))
    assert io.read_layout(tmp_path / "d.json").name == "dodecahedron"


def test_signed_line_graph_json(layout, tmp_path):
    o = random_orientation(layout.graph, np.random.default_rng(1))
    slg = signed_line_graph(layout, o)
    d = io.signed_line_graph_to_dict(layout, slg)
    assert d["kind"] == "signed_line_graph"
    assert len(d["vertices"]) == layout.m
    assert {s for _, _, s in d["signs"]} <= {-1, 1}
    io.write_json(tmp_path / "s.json", d)
    assert io.read_orientation(tmp_path / "s.json", layout) == o


@pytest.mark.parametrize("mutate", [
    lambda d: d["edges"].append([0, 999]),
    lambda d: d["vertices"].__setitem__(0, {"id": 7, "ring": 1, "type": "b"}),
    lambda d: d["vertices"][0].__setitem__("type", "x"),
    lambda d: d.pop("p"),
])
def test_malformed_layout(layout, tmp_path, mutate):
    d = io.layout_to_dict(layout)
    mutate(d)
    (tmp_path / "bad.json").write_text(json.dumps(d))
    with pytest.raises(DomainError):
        io.read_layout(tmp_path / "bad.json")


def test_wrong_kind_and_bad_json(layout, tmp_path):
    io.write_json(tmp_path / "lg.json", io.line_graph_to_dict(layout))
    with pytest.raises(DomainError):
        io.read_layout(tmp_path / "lg.json")
    (tmp_path / "junk.json").write_text("{not json")
    with pytest.raises(DomainError):
        io.read_layout(tmp_path / "junk.json")


def test_spectrum_and_histogram_csv(tmp_path):
    s = eigen_spectrum(coupling_matrix(catalog_instance("dodecahedron"), "full"))
    io.write_spectrum_csv(tmp_path / "s.csv", s)
    rows = io.read_spectrum_csv(tmp_path / "s.csv")
    assert [k for _, k in rows] == [10, 3, 4, 4, 5, 3, 1]
    assert rows[0][0] == -2.0
    counts, edges, flat = histogram(s, 12)
    io.write_histogram_csv(tmp_path / "h.csv", counts, edges, flat)
    bins, flat_back = io.read_histogram_csv(tmp_path / "h.csv")
    assert flat_back == 10 and sum(c for *_, c in bins) == 30 and len(bins) == 12


def test_convergence_csv(tmp_path):
    io.write_convergence_csv(tmp_path / "c.csv", convergence_table(SchlafliSpec(6, 4), 5))
    lines = (tmp_path / "c.csv").read_text().splitlines()
    assert lines[0] == "ring,f_ell,f_inf,ratio" and len(lines) == 6
