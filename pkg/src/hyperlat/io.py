"""Readers and writers for the JSON and CSV artifacts."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from hyperlat.errors import DomainError
from hyperlat.graph import Graph, SchlafliSpec
from hyperlat.linegraph import Orientation, SignedLineGraph, line_graph
from hyperlat.spectra import SpectrumMultiset
from hyperlat.tiling import LayoutGraph


def _fmt(value: float) -> str:
    if abs(value) < 1e-12:
        value = 0.0
    return f"{value:.12g}"


def layout_to_dict(layout: LayoutGraph) -> dict:
    d = {
        "kind": "layout",
        "p": layout.spec.p,
        "q": layout.spec.q,
        "rings": layout.rings,
        "vertices": [
            {"id": v, "ring": r, "type": k}
            for v, (r, k) in enumerate(zip(layout.ring_of, layout.type_of))
        ],
        "edges": [list(e) for e in layout.graph.edges],
        "faces": [list(f) for f in layout.faces],
    }
    if layout.name:
        d["name"] = layout.name
    return d


def line_graph_to_dict(layout: LayoutGraph) -> dict:
    lg, back = line_graph(layout)
    return {
        "kind": "line_graph",
        "p": layout.spec.p,
        "q": layout.spec.q,
        "rings": layout.rings,
        "vertices": [
            {"id": k, "ring": max(layout.ring_of[u], layout.ring_of[v]), "type": "-", "edge": [u, v]}
            for k, (u, v) in enumerate(back)
        ],
        "edges": [list(e) for e in lg.edges],
    }


def signed_line_graph_to_dict(layout: LayoutGraph, slg: SignedLineGraph) -> dict:
    d = line_graph_to_dict(layout)
    d["kind"] = "signed_line_graph"
    d["signs"] = [[i, j, s] for (i, j), s in sorted(slg.signs.items())]
    d["orientation"] = [list(pair) for pair in slg.orientation.pairs]
    return d


def write_json(path, data) -> None:
    Path(path).write_text(json.dumps(data, indent=1) + "\n")


def _read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: invalid JSON ({exc})") from None


def layout_from_dict(data: dict) -> LayoutGraph:
    """Parse and validate the layout graph schema."""
    try:
        spec = SchlafliSpec(int(data["p"]), int(data["q"]))
        rings = int(data["rings"])
        vertices = data["vertices"]
        edges = data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed graph JSON: {exc!r}") from None
    n = len(vertices)
    ring_of = [0] * n
    type_of = ["-"] * n
    seen = set()
    for entry in vertices:
        vid = int(entry["id"])
        if not 0 <= vid < n or vid in seen:
            raise DomainError(f"vertex ids must be a permutation of 0..{n - 1}; bad id {vid}")
        seen.add(vid)
        ring_of[vid] = int(entry.get("ring", 0))
        kind = entry.get("type", "-")
        if kind not in ("b", "B", "-"):
            raise DomainError(f"vertex {vid} has unknown type {kind!r}")
        type_of[vid] = kind
    graph = Graph(n, edges)
    faces = tuple(tuple(int(v) for v in f) for f in data.get("faces", ()))
    return LayoutGraph(graph, spec, rings, tuple(ring_of), tuple(type_of), faces, data.get("name"))


def read_layout(path) -> LayoutGraph:
    data = _read_json(path)
    if data.get("kind", "layout") != "layout":
        raise DomainError(f"{path}: expected a layout graph, found {data.get('kind')!r}")
    return layout_from_dict(data)


def read_orientation(path, layout: LayoutGraph) -> Orientation:
    """Orientation stored in a signed line graph JSON file."""
    data = _read_json(path)
    try:
        pairs = tuple((int(f), int(h)) for f, h in data["orientation"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"{path}: malformed orientation ({exc!r})") from None
    if len(pairs) != layout.m:
        raise DomainError(f"{path}: orientation has {len(pairs)} entries, layout has {layout.m} edges")
    return Orientation(pairs)


def write_spectrum_csv(path, spectrum: SpectrumMultiset) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["eigenvalue", "multiplicity"])
        for value, mult in spectrum.entries:
            w.writerow([_fmt(value), mult])


def read_spectrum_csv(path) -> list[tuple[float, int]]:
    with open(path, newline="") as fh:
        return [(float(r["eigenvalue"]), int(r["multiplicity"])) for r in csv.DictReader(fh)]


def write_histogram_csv(path, counts: np.ndarray, edges: np.ndarray, flat_count: int) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["bin_left", "bin_right", "count"])
        for lo, hi, c in zip(edges[:-1], edges[1:], counts):
            w.writerow([_fmt(lo), _fmt(hi), int(c)])
        fh.write(f"# flat_band_count,{flat_count}\n")


def read_histogram_csv(path) -> tuple[list[tuple[float, float, int]], int | None]:
    rows, flat = [], None
    with open(path) as fh:
        lines = fh.read().splitlines()
    for line in lines[1:]:
        if line.startswith("# flat_band_count,"):
            flat = int(line.split(",")[1])
        elif line:
            lo, hi, c = line.split(",")
            rows.append((float(lo), float(hi), int(c)))
    return rows, flat


def write_flat_states(csv_path, json_path, states) -> None:
    if not states:
        Path(csv_path).write_text("vertex\n")
        write_json(json_path, [])
        return
    mat = np.column_stack([s.vector for s in states])
    integral = all(s.source == "even_cycle" for s in states)
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["vertex"] + [f"state_{i}" for i in range(len(states))])
        for k, row in enumerate(mat):
            w.writerow([k] + [str(int(x)) if integral else _fmt(x) for x in row])
    write_json(json_path, [
        {"state": i, "source": s.source, "cycle": list(s.cycle) if s.cycle else None}
        for i, s in enumerate(states)
    ])


def write_convergence_csv(path, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["ring", "f_ell", "f_inf", "ratio"])
        for r in rows:
            w.writerow([r.ring, _fmt(r.f_ell), _fmt(r.f_inf), _fmt(r.ratio)])
