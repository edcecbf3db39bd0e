"""Sparse dot product and the factorized tensor-product kernel.

The learner trains on explicit pair features; :func:`tensor_kernel` is
the factorized equivalent, kept as a verified library function and test
oracle.  Both are pure and safe for concurrent use.
"""

from __future__ import annotations

from . import _ops

BACKEND = _ops.BACKEND


def dot(a: dict, b: dict) -> float:
    """Sum over shared keys of the products of values; symmetric."""
    return _ops.dot(a, b)


def tensor_kernel(q1: dict, u1: dict, q2: dict, u2: dict) -> float:
    """Kernel between two (query, utterance) pairs of side-local vectors.

    Computed as the product of the side dot products, which equals the
    dot product of the two explicit pair-feature maps.
    """
    return _ops.dot(q1, q2) * _ops.dot(u1, u2)
