"""Bulk table kernels over the indecomposables of one algebra.

Indecomposables are passed as endpoint arrays ``a``, ``b``; ``right`` is a
bool array of length ``n + 1`` with ``right[k]`` true iff arrow ``k`` points
``k -> k+1`` (entries 0 and ``n`` are padding).

* ``hom_table(a, b, right, n)`` -> ``H[x, y]`` = dim Hom(x, y) as uint8.
* ``composite_table(H, a, b)`` -> ``T[x, z, y]``: basis maps x -> z -> y
  compose to a non-zero map.
* ``irreducible_table(H, T)`` -> basis map x -> y is irreducible.
* ``oracle_marks(H, T, x, y)`` -> for each candidate C, whether the basis
  map x -> y is right determined by C.

The backend is numba when importable unless ``RDET_BACKEND=numpy`` is set.
"""

import os

import numpy as np

from . import _numpy as numpy_kernels

_requested = os.environ.get("RDET_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"RDET_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

numba_kernels = None
if _requested == "numba":
    try:
        from . import _numba as numba_kernels
    except ImportError:  # pragma: no cover - numba missing
        numba_kernels = None

_impl = numba_kernels if numba_kernels is not None else numpy_kernels
BACKEND = "numba" if _impl is numba_kernels else "numpy"


def right_mask(orientation, n):
    right = np.zeros(n + 1, dtype=np.bool_)
    for k, d in enumerate(orientation, start=1):
        right[k] = d == "R"
    return right


def hom_table(a, b, right, n):
    return _impl.hom_table(a, b, right, n)


def composite_table(H, a, b):
    return _impl.composite_table(H, a, b)


def irreducible_table(H, T):
    return _impl.irreducible_table(H, T)


def oracle_marks(H, T, x, y):
    return _impl.oracle_marks(H, T, x, y)
