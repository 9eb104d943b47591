"""Python access to the capzip engine.

Every function returns plain Python objects decoded from the engine's JSON.
"""

import json

from . import _core
from ._core import (
    CapParams,
    Error,
    GeometryError,
    ParameterError,
    ParseError,
    figure_names,
    min_cut_degree,
    radially_monotone,
    render_figure,
    solve_params,
)

__all__ = [
    "CapParams",
    "Error",
    "GeometryError",
    "ParameterError",
    "ParseError",
    "build_cap",
    "cap_obj",
    "check",
    "develop",
    "edge_unzip",
    "figure_names",
    "hamiltonian_path_count",
    "lemma",
    "min_cut_degree",
    "radially_monotone",
    "render_figure",
    "solve_params",
    "standard_params",
    "sweep",
]


def standard_params():
    """The cap with 5 degree apron curvature, 10 degree apex curvature and epsilon 0.1."""
    return solve_params(5.0, 10.0, 0.1)


def _params(params):
    return standard_params() if params is None else params


def build_cap(params=None):
    return json.loads(_core.cap_json(_params(params)))


def cap_obj(params=None):
    return _core.cap_obj(_params(params))


def _path_arg(path):
    if path is None:
        return ""
    return path if isinstance(path, str) else json.dumps(path)


def check(params=None, type="acaab", strategy="straight", closed=False, path=None):
    return json.loads(_core.check_json(_params(params), type, strategy, closed, _path_arg(path)))


def develop(params=None, type="acaab", strategy="straight", closed=False, path=None):
    return json.loads(_core.develop_json(_params(params), type, strategy, closed, _path_arg(path)))


def lemma(n, params=None):
    return json.loads(_core.lemma_json(n, _params(params)))


def sweep(config=None, workers=0):
    text = "" if config is None else (config if isinstance(config, str) else json.dumps(config))
    return json.loads(_core.sweep_json(text, workers))


def edge_unzip(obj_path, limit=1000):
    return json.loads(_core.edge_unzip_json(str(obj_path), limit))


def hamiltonian_path_count(obj_path, limit=1000000):
    return _core.hamiltonian_path_count(str(obj_path), limit)
