"""Cohomology of moment-angle complexes from finite combinatorial models."""

import json

from ._core import (
    InputError,
    SimplicialComplex,
    TruncationError,
    random_complex,
    set_thread_count,
    verify,
)
from . import _core

__all__ = [
    "InputError",
    "SimplicialComplex",
    "TruncationError",
    "betti",
    "glm",
    "hochster",
    "random_complex",
    "ring",
    "set_thread_count",
    "verify",
]


def betti(sigma, arena="complex", model="b", coeff="z", maxdeg=None, truncate=None):
    """Cohomology groups of a model: [{"degree", "rank", "torsion"}, ...]."""
    return json.loads(_core._betti_json(sigma, model, arena, coeff, maxdeg, truncate))


def ring(sigma, arena="complex", model="b", coeff="z", maxdeg=None, truncate=None):
    """Ring presentation with degrees, basis and structure constants."""
    return json.loads(_core._ring_json(sigma, model, arena, coeff, maxdeg, truncate))


def hochster(sigma, arena="complex", coeff="z", alphas=None):
    """Bigraded table of the alpha-components of the B-model."""
    return json.loads(_core._hochster_json(sigma, arena, coeff, alphas))


def glm(sigma, maxdeg=None, coeff="z"):
    """Ring of the pairs (P, P_alpha); polytopality of sigma is assumed, not checked."""
    return json.loads(_core._glm_json(sigma, maxdeg, coeff))
