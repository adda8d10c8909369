"""Exact reference spectra shipped with the package.

Values are stored as ``a + b*sqrt(5)`` with rational ``a`` and ``b`` and only
expanded to floats when compared.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import numpy as np

from hyperlat.spectra import SpectrumMultiset, max_pairwise_deviation


class MatrixKind(enum.Enum):
    LAYOUT_ADJACENCY = "adjacency"
    FULL_WAVE = "full"
    HALF_WAVE = "half"


@dataclass(frozen=True)
class QuadraticSurd:
    a: Fraction
    b_sqrt5: Fraction

    def __float__(self):
        return float(self.a) + float(self.b_sqrt5) * math.sqrt(5)


@dataclass(frozen=True)
class GoldenSpectrum:
    name: str
    kind: MatrixKind
    entries: tuple[tuple[QuadraticSurd, int], ...]

    @property
    def dimension(self) -> int:
        return sum(k for _, k in self.entries)

    def values(self) -> np.ndarray:
        """Expanded, sorted eigenvalue list (with repetition)."""
        return np.sort(np.concatenate([np.full(k, float(v)) for v, k in self.entries]))

    def multiplicities(self) -> list[int]:
        """Multiplicities in ascending order of eigenvalue."""
        return [k for v, k in sorted(self.entries, key=lambda e: float(e[0]))]

    def matches(self, spectrum: SpectrumMultiset, tol: float = 1e-9) -> bool:
        """Per-value agreement within ``tol`` and exact multiplicities."""
        expected = sorted((float(v), k) for v, k in self.entries)
        if len(expected) != len(spectrum.entries):
            return False
        return all(
            k == k2 and abs(v - v2) <= tol for (v, k), (v2, k2) in zip(expected, spectrum.entries)
        ) and max_pairwise_deviation(self.values(), spectrum.values) <= tol


@lru_cache(maxsize=None)
def _load() -> dict:
    text = resources.files("hyperlat").joinpath("data/golden.json").read_text()
    return json.loads(text)


def golden_names() -> tuple[str, ...]:
    return tuple(_load())


def golden(name: str, kind: MatrixKind | str) -> GoldenSpectrum:
    kind = MatrixKind(kind)
    data = _load()
    try:
        rows = data[name][kind.value]
    except KeyError:
        raise LookupError(f"no golden spectrum for ({name!r}, {kind.value!r})") from None
    entries = tuple(
        (QuadraticSurd(Fraction(r["value"]["a"]), Fraction(r["value"]["b_sqrt5"])), int(r["mult"]))
        for r in rows
    )
    spectrum = GoldenSpectrum(name, kind, entries)
    expected_dim = data[name]["dimension"][kind.value]
    if spectrum.dimension != expected_dim:
        raise ValueError(f"golden fixture {name}/{kind.value} has {spectrum.dimension} states, expected {expected_dim}")
    return spectrum
