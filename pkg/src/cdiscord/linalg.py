"""Vectorization and Kronecker helpers.

``vec`` stacks columns (column-major). Under that convention

    vec(A @ C @ B.T) == kron(B, A) @ vec(C)

whereas ``kron(A, B)`` is the matching operator for the row-major
(row-stacking) vectorization, ``vec(.., order="C")``.
"""
from __future__ import annotations

import numpy as np

from .errors import SizeMismatch


def vec(m, order="F") -> np.ndarray:
    """Flatten a matrix by stacking its columns (``order="F"``) or rows (``"C"``)."""
    return np.asarray(m).reshape(-1, order=order)


def unvec(v, rows: int, cols: int, order="F") -> np.ndarray:
    """Inverse of :func:`vec`."""
    v = np.asarray(v)
    if v.ndim != 1 or v.size != rows * cols:
        raise SizeMismatch(f"cannot reshape {v.shape} into {rows}x{cols}")
    return v.reshape((rows, cols), order=order)


def kron(a, b) -> np.ndarray:
    return np.kron(np.asarray(a), np.asarray(b))


def sandwich_operator(a, b, order="F") -> np.ndarray:
    """Matrix ``K`` with ``K @ vec(C) == vec(a @ C @ b.T)``."""
    return kron(b, a) if order == "F" else kron(a, b)


def b_noise_operator(m, d_a: int, order="F") -> np.ndarray:
    """Operator taking ``vec(p)`` to ``vec(p @ m.T)`` for a ``d_a x d`` state ``p``.

    This is the identity-on-A, ``m``-on-B map whose fixed points are the
    zero-discord states of ``m``.
    """
    return sandwich_operator(np.eye(d_a), np.asarray(m), order=order)
