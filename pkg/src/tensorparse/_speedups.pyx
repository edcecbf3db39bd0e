# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled implementations of the hot sparse-vector kernels.

Semantics must match ``_pyops`` exactly, including dict insertion order.
"""


def dot(dict a, dict b):
    """Sparse dot product: sum of products over shared keys."""
    cdef double total = 0.0
    cdef dict small, big
    if len(b) < len(a):
        small, big = b, a
    else:
        small, big = a, b
    cdef object k, v, w
    for k, v in small.items():
        w = big.get(k)
        if w is not None:
            total += (<double> v) * (<double> w)
    return total


def tensor_pair(dict query_vec, dict utterance_vec):
    """Cartesian pair features with ``p:<q>|<u>`` keys, values multiplied."""
    cdef dict out = {}
    cdef object qt, qval, ut, uval
    cdef str prefix
    for qt, qval in query_vec.items():
        prefix = "p:" + <str> qt + "|"
        for ut, uval in utterance_vec.items():
            out[prefix + <str> ut] = (<double> qval) * (<double> uval)
    return out
