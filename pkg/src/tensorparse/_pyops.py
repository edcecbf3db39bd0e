"""Pure-Python implementations of the hot sparse-vector kernels.

Mirrors the compiled ``_speedups`` extension; one of the two is selected
at import time by ``_ops``.
"""

from __future__ import annotations


def dot(a: dict, b: dict) -> float:
    """Sparse dot product: sum of products over shared keys."""
    if len(b) < len(a):
        a, b = b, a
    total = 0.0
    get = b.get
    for k, v in a.items():
        w = get(k)
        if w is not None:
            total += v * w
    return total


def tensor_pair(query_vec: dict, utterance_vec: dict) -> dict:
    """Cartesian pair features with ``p:<q>|<u>`` keys, values multiplied."""
    out = {}
    for qt, qval in query_vec.items():
        prefix = "p:" + qt + "|"
        for ut, uval in utterance_vec.items():
            out[prefix + ut] = qval * uval
    return out
