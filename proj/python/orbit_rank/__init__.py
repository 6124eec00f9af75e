"""Exact C*-invariants of exponential solvable Lie groups."""

import json
from pathlib import Path

from ._core import (
    Contradiction,
    FiltrationError,
    LieAlgebra,
    LieError,
    RefusalError,
    catalog_entries,
    has_open_orbits,
    p_polynomial,
    pfaffian,
    real_rank,
    stable_rank,
)
from . import _core

__all__ = [
    "Contradiction",
    "FiltrationError",
    "LieAlgebra",
    "LieError",
    "RefusalError",
    "analyze",
    "catalog",
    "catalog_entries",
    "has_open_orbits",
    "infer",
    "load",
    "p_polynomial",
    "pfaffian",
    "real_rank",
    "stable_rank",
]


def catalog(spec):
    """Built-in algebra by spec, e.g. ``"heisenberg:2"`` or ``"axb+axb"``."""
    return LieAlgebra.from_catalog(spec)


def load(path):
    """Read and validate a ``.lie`` file."""
    return LieAlgebra.from_text(Path(path).read_text())


def analyze(algebra, samples=200, seed=0, assume_exponential=False, simply_connected=True):
    """Full report as a dict plus the exit code the CLI would use (0 or 2)."""
    text, code = _core.analyze_json(algebra, samples, seed, assume_exponential, simply_connected)
    return json.loads(text), code


def infer(source, is_json=None):
    """Run the filtration inference engine on text or a path; returns a dict."""
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source and Path(source).is_file()):
        path = Path(source)
        if is_json is None:
            is_json = path.suffix == ".json"
        source = path.read_text()
    return json.loads(_core.infer_json(source, bool(is_json)))
