# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled local-move kernels.

Keep every floating-point expression structurally identical to the
pure-Python twin in ``_pure.py`` so both backends produce bit-identical
results for the same inputs.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport log2

BACKEND = "speed"


cdef inline double _plogp(double x) nogil:
    if x > 0.0:
        return x * log2(x)
    return 0.0


def louvain_sweep(cnp.int64_t[::1] indptr, cnp.int64_t[::1] indices,
                  cnp.float64_t[::1] weights, cnp.float64_t[::1] strength,
                  cnp.int64_t[::1] order, cnp.int64_t[::1] node_comm,
                  cnp.float64_t[::1] comm_strength, double gamma, double two_w):
    """One full greedy sweep of modularity local moves (see _pure twin)."""
    cdef Py_ssize_t n = strength.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] acc_arr = np.zeros(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] touched_arr = np.zeros(n, dtype=np.int64)
    cdef double[::1] acc = acc_arr
    cdef cnp.int64_t[::1] touched = touched_arr

    cdef Py_ssize_t i, e, t, n_touched
    cdef cnp.int64_t node, other, c, c_old, best_comm
    cdef double s, base, gain, best_gain
    cdef long moves = 0

    for i in range(order.shape[0]):
        node = order[i]
        n_touched = 0
        for e in range(indptr[node], indptr[node + 1]):
            other = indices[e]
            if other == node:
                continue
            c = node_comm[other]
            if acc[c] == 0.0:
                touched[n_touched] = c
                n_touched += 1
            acc[c] += weights[e]

        c_old = node_comm[node]
        s = strength[node]
        comm_strength[c_old] -= s
        base = acc[c_old] - gamma * s * comm_strength[c_old] / two_w
        best_comm = c_old
        best_gain = base
        for t in range(n_touched):
            c = touched[t]
            if c == c_old:
                continue
            gain = acc[c] - gamma * s * comm_strength[c] / two_w
            if gain > best_gain:
                best_comm = c
                best_gain = gain
            elif gain == best_gain and best_comm != c_old and c < best_comm:
                best_comm = c

        if best_comm != c_old:
            node_comm[node] = best_comm
            comm_strength[best_comm] += s
            moves += 1
        else:
            comm_strength[c_old] += s

        for t in range(n_touched):
            acc[touched[t]] = 0.0

    return moves


def infomap_sweep(cnp.int64_t[::1] indptr, cnp.int64_t[::1] indices,
                  cnp.float64_t[::1] weights, cnp.float64_t[::1] ext_strength,
                  cnp.float64_t[::1] p_node, cnp.int64_t[::1] order,
                  cnp.int64_t[::1] node_comm, cnp.float64_t[::1] comm_cut,
                  cnp.float64_t[::1] comm_p, double inv_two_w, double qtot_raw):
    """One full greedy sweep of map-equation local moves (see _pure twin)."""
    cdef Py_ssize_t n = p_node.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] acc_arr = np.zeros(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] touched_arr = np.zeros(n, dtype=np.int64)
    cdef double[::1] acc = acc_arr
    cdef cnp.int64_t[::1] touched = touched_arr

    cdef Py_ssize_t i, e, t, n_touched
    cdef cnp.int64_t node, other, c, c_old, best_comm
    cdef double e_n, p_n, cut_a, p_a, cut_a_new, p_a_new
    cdef double q_old, qa, qa_new, before_a, after_a
    cdef double cut_b, p_b, cut_b_new, p_b_new, qb, qb_new, q_new, delta
    cdef double best_delta, best_cut_b_new
    cdef double qtot = qtot_raw
    cdef long moves = 0

    for i in range(order.shape[0]):
        node = order[i]
        n_touched = 0
        for e in range(indptr[node], indptr[node + 1]):
            other = indices[e]
            if other == node:
                continue
            c = node_comm[other]
            if acc[c] == 0.0:
                touched[n_touched] = c
                n_touched += 1
            acc[c] += weights[e]

        c_old = node_comm[node]
        e_n = ext_strength[node]
        p_n = p_node[node]

        cut_a = comm_cut[c_old]
        p_a = comm_p[c_old]
        cut_a_new = cut_a - e_n + 2.0 * acc[c_old]
        p_a_new = p_a - p_n

        q_old = qtot * inv_two_w
        qa = cut_a * inv_two_w
        qa_new = cut_a_new * inv_two_w
        before_a = -2.0 * _plogp(qa) + _plogp(qa + p_a)
        after_a = -2.0 * _plogp(qa_new) + _plogp(qa_new + p_a_new)

        best_comm = c_old
        best_delta = 0.0
        best_cut_b_new = 0.0
        for t in range(n_touched):
            c = touched[t]
            if c == c_old:
                continue
            cut_b = comm_cut[c]
            p_b = comm_p[c]
            cut_b_new = cut_b + e_n - 2.0 * acc[c]
            p_b_new = p_b + p_n
            qb = cut_b * inv_two_w
            qb_new = cut_b_new * inv_two_w
            q_new = (qtot + (cut_a_new - cut_a) + (cut_b_new - cut_b)) * inv_two_w
            delta = (
                (_plogp(q_new) - _plogp(q_old))
                + (after_a - before_a)
                + (-2.0 * _plogp(qb_new) + _plogp(qb_new + p_b_new))
                - (-2.0 * _plogp(qb) + _plogp(qb + p_b))
            )
            if delta < best_delta:
                best_comm = c
                best_delta = delta
                best_cut_b_new = cut_b_new
            elif delta == best_delta and best_comm != c_old and c < best_comm:
                best_comm = c
                best_cut_b_new = cut_b_new

        if best_comm != c_old and best_delta < -1e-12:
            qtot += (cut_a_new - cut_a) + (best_cut_b_new - comm_cut[best_comm])
            comm_cut[c_old] = cut_a_new
            comm_p[c_old] = p_a_new
            comm_cut[best_comm] = best_cut_b_new
            comm_p[best_comm] += p_n
            node_comm[node] = best_comm
            moves += 1

        for t in range(n_touched):
            acc[touched[t]] = 0.0

    return moves
