"""Hot numeric kernels with two interchangeable backends.

The numba backend is used when numba imports and ``SDCLASS_NUMBA`` is not
falsy; otherwise the vectorised numpy backend is used. Both backends return
identical arrays for identical inputs, so canonical forms and databases do
not depend on the backend.

Kernels
-------
span(gens)                     all XOR combinations, index bit r-1-j selects gens[j]
popcount(a)                    per-element bit counts
refine(inc, coord_cell, word_cell)
                               colour refinement of a word/coordinate incidence
                               matrix; returns (coord_cell, word_cell, invariant)
certificate(inc, pos)          relabelled words, sorted descending
permute_words(words, pos, n)   move bit of coordinate i to coordinate pos[i]
orbit_labels(images)           smallest orbit member for each point
"""
from __future__ import annotations

from types import ModuleType

from .._accel import USE_NUMBA
from . import _numpy

BACKEND = "numba" if USE_NUMBA else "numpy"


def backend_module(name: str) -> ModuleType:
    if name == "numba":
        from . import _numba

        return _numba
    if name == "numpy":
        return _numpy
    raise ValueError(f"unknown kernel backend {name!r}")


_impl = backend_module(BACKEND)

span = _impl.span
popcount = _impl.popcount
refine = _impl.refine
certificate = _impl.certificate
permute_words = _impl.permute_words
orbit_labels = _impl.orbit_labels

__all__ = [
    "BACKEND",
    "backend_module",
    "span",
    "popcount",
    "refine",
    "certificate",
    "permute_words",
    "orbit_labels",
]
