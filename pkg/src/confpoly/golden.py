"""Bundled reference tables, shared by the test suite and the CLI.

Each file holds one published table; the CLI's table command and the
acceptance tests read the same data, so there is a single source of truth
for every expected value.
"""

from __future__ import annotations

import json
from functools import cache
from importlib import resources


@cache
def _load(name: str):
    path = resources.files("confpoly").joinpath(f"data/{name}.json")
    return json.loads(path.read_text(encoding="utf-8"))


def pgl2_ordered() -> dict[int, str]:
    """Ordered configuration values of PGL2, n = 1..7."""
    return {int(k): v for k, v in _load("pgl2_ordered").items()}


def pgl2_unordered() -> dict[int, str]:
    """Unordered configuration values of PGL2, n = 2..7."""
    return {int(k): v for k, v in _load("pgl2_unordered").items()}


def plus_minus_forms() -> dict[int, dict[str, list[int]]]:
    """Closed-form solver coefficients for n = 2, 3, 4.

    For each irrep label, the integer vector of coefficients over the
    right-hand sides indexed by the canonical partition order.
    """
    return {int(k): v for k, v in _load("plus_minus_forms").items()}


def fixed_dims_small() -> dict[int, list[list[int]]]:
    """Fixed-space dimension matrices for n = 2 and n = 3."""
    return {int(k): v for k, v in _load("fixed_dims_small").items()}


def gl2_cstar() -> dict:
    """Published equivariant results for the GL2 / scalar-action example.

    rows[n] carries the equivariant coefficients plus the plain and
    full-quotient values; the n = 2 row is marked disputed because the
    published numbers there are inconsistent with the published n = 2
    unordered table (see the README).
    """
    return _load("gl2_cstar")
