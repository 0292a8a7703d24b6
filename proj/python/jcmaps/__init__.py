"""Exact checks, inversion and properness probes for polynomial maps.

Maps are given in the text format ``n=2; P1 = x1 + x2^3; P2 = x2`` and
matrices as comma-separated rows. Every analysis returns the same report
dictionary that ``jcmaps --json`` prints.
"""

import json

from . import _core
from ._core import ParseError, RowspaceEmpty, normalize_map, normalize_matrix

__all__ = [
    "ParseError",
    "RowspaceEmpty",
    "catalog_list",
    "catalog_run",
    "check",
    "check_dmap",
    "invert",
    "normalize_map",
    "normalize_matrix",
    "probe",
    "realify",
    "run_cli",
    "wang_check",
    "witness",
]


def _matrix_text(matrix):
    if isinstance(matrix, str):
        return matrix
    return "\n".join(", ".join(str(x) for x in row) for row in matrix)


def check(text):
    return json.loads(_core.check(text))


def check_dmap(matrix):
    return json.loads(_core.check_dmap(_matrix_text(matrix)))


def invert(text, method="series", max_degree=None):
    return json.loads(_core.invert(text, method, max_degree))


def wang_check(text):
    return json.loads(_core.wang_check(text))


def realify(text, samples=20, seed=None):
    return json.loads(_core.realify(text, samples, seed))


def probe(matrix, form="standard", r0=10.0, factor=10.0, count=6, restarts=8, seed=None, threads=1):
    return json.loads(_core.probe(_matrix_text(matrix), form, r0, factor, count, restarts, seed, threads))


def witness(matrix, vector=None, restarts=8, seed=None):
    vec = None if vector is None else [float(x) for x in vector]
    return json.loads(_core.witness(_matrix_text(matrix), vec, restarts, seed))


def catalog_list():
    return json.loads(_core.catalog_list())["entries"]


def catalog_run(name, seed=None):
    return json.loads(_core.catalog_run(name, seed))


def run_cli(args):
    """Run one jcmaps command in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
