"""Exact piecewise-linear systems and parametric lattice minima.

Thin wrapper over the compiled module: rationals are passed as strings
("p/q"), JSON payloads are decoded into dicts here.
"""

import json

from ._pgnlab import (
    block_figure_tsv,
    build_system_json,
    scaling_check,
    successive_minima,
    trace_csv,
    validate_system_json,
)

__all__ = [
    "block_figure_tsv",
    "build_system",
    "build_system_json",
    "scaling_check",
    "successive_minima",
    "trace_csv",
    "validate_system",
    "validate_system_json",
]


def build_system(n, k, theta="1", m0=0, m1=1):
    """Build a system and return it as a dict matching the file schema."""
    return json.loads(build_system_json(n, k, theta, m0, m1))


def validate_system(system):
    """Run the axiom suite on a system dict; returns the report as a dict."""
    return json.loads(validate_system_json(json.dumps(system)))
