"""Exact free Lie algebra operators and finite symmetry labs."""

import json

from . import _core
from ._core import (
    ParseError,
    bloch_wigner,
    dilog,
    dk_dimensions,
    group_lab_ids,
    ihara,
    project,
    residual,
    torsor_lab_ids,
)

__all__ = [
    "ParseError",
    "bloch_wigner",
    "bloch_wigner_sweep",
    "dilog",
    "dk_dimensions",
    "fp_cycle",
    "from_json",
    "group_lab_ids",
    "ihara",
    "lab",
    "normalize",
    "project",
    "residual",
    "run",
    "to_json",
    "torsor_lab_ids",
]


def normalize(text, alphabet=("x", "y"), max_degree=8):
    return _core.normalize(text, list(alphabet), max_degree)


def to_json(text, alphabet=("x", "y"), max_degree=8):
    return json.loads(_core.to_json(text, list(alphabet), max_degree))


def from_json(doc):
    return _core.from_json(json.dumps(doc))


def lab(kind, id, **options):
    """Run a group or torsor lab and return its report as a dict."""
    return json.loads(_core.lab(kind, id, **options))


def fp_cycle(p):
    return json.loads(_core.fp_cycle(p))


def bloch_wigner_sweep(samples, seed, tolerance=1e-10, margin=1e-3, jobs=1):
    return json.loads(_core.bloch_wigner_sweep(samples, seed, tolerance, margin, jobs))


def run(*args):
    """Run the command line front end; returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])
