"""Pure-Python local-move kernels (fallback for the compiled extension).

Both backends must perform bit-identical floating-point operations in the
same order, so that a run is reproducible regardless of which kernel was
selected.  Any reduction whose summation order could differ between
backends lives in the drivers, not here.
"""

from __future__ import annotations

from math import log2

BACKEND = "pure"


def _plogp(x: float) -> float:
    return x * log2(x) if x > 0.0 else 0.0


def louvain_sweep(indptr, indices, weights, strength, order,
                  node_comm, comm_strength, gamma, two_w):
    """One full greedy sweep of modularity local moves.

    Visits nodes in ``order``; each node moves to the neighboring community
    with the largest strictly positive modularity gain (ties broken by the
    smaller community id).  ``node_comm`` and ``comm_strength`` are updated
    in place.  Returns the number of moves performed.
    """
    iptr = indptr.tolist()
    idx = indices.tolist()
    wts = weights.tolist()
    stren = strength.tolist()
    ordr = order.tolist()
    comm = node_comm.tolist()
    cstr = comm_strength.tolist()

    n = len(stren)
    acc = [0.0] * n          # per-community neighbor weight accumulator
    touched = []
    moves = 0

    for node in ordr:
        lo, hi = iptr[node], iptr[node + 1]
        for e in range(lo, hi):
            other = idx[e]
            if other == node:
                continue
            c = comm[other]
            if acc[c] == 0.0:
                touched.append(c)
            acc[c] += wts[e]

        c_old = comm[node]
        s = stren[node]
        cstr[c_old] -= s
        base = acc[c_old] - gamma * s * cstr[c_old] / two_w
        best_comm = c_old
        best_gain = base
        for c in touched:
            if c == c_old:
                continue
            gain = acc[c] - gamma * s * cstr[c] / two_w
            if gain > best_gain:
                best_comm = c
                best_gain = gain
            elif gain == best_gain and best_comm != c_old and c < best_comm:
                best_comm = c

        if best_comm != c_old:
            comm[node] = best_comm
            cstr[best_comm] += s
            moves += 1
        else:
            cstr[c_old] += s

        for c in touched:
            acc[c] = 0.0
        touched.clear()

    node_comm[:] = comm
    comm_strength[:] = cstr
    return moves


def infomap_sweep(indptr, indices, weights, ext_strength, p_node, order,
                  node_comm, comm_cut, comm_p, inv_two_w, qtot_raw):
    """One full greedy sweep of map-equation local moves.

    ``comm_cut`` holds raw module cut weights, ``comm_p`` the module visit
    rates.  A node moves to the candidate module with the most negative
    description-length change; moves are accepted below -1e-12 so the sweep
    terminates.  Returns the number of moves performed.
    """
    iptr = indptr.tolist()
    idx = indices.tolist()
    wts = weights.tolist()
    ext = ext_strength.tolist()
    pn = p_node.tolist()
    ordr = order.tolist()
    comm = node_comm.tolist()
    cut = comm_cut.tolist()
    cp = comm_p.tolist()

    n = len(pn)
    acc = [0.0] * n
    touched = []
    moves = 0
    qtot = qtot_raw

    for node in ordr:
        lo, hi = iptr[node], iptr[node + 1]
        for e in range(lo, hi):
            other = idx[e]
            if other == node:
                continue
            c = comm[other]
            if acc[c] == 0.0:
                touched.append(c)
            acc[c] += wts[e]

        c_old = comm[node]
        e_n = ext[node]
        p_n = pn[node]

        cut_a = cut[c_old]
        p_a = cp[c_old]
        cut_a_new = cut_a - e_n + 2.0 * acc[c_old]
        p_a_new = p_a - p_n

        q_old = qtot * inv_two_w
        qa = cut_a * inv_two_w
        qa_new = cut_a_new * inv_two_w
        # Module A terms before/after removal (shared across candidates).
        before_a = -2.0 * _plogp(qa) + _plogp(qa + p_a)
        after_a = -2.0 * _plogp(qa_new) + _plogp(qa_new + p_a_new)

        best_comm = c_old
        best_delta = 0.0
        best_cut_b_new = 0.0
        for c in touched:
            if c == c_old:
                continue
            cut_b = cut[c]
            p_b = cp[c]
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
            qtot += (cut_a_new - cut_a) + (best_cut_b_new - cut[best_comm])
            cut[c_old] = cut_a_new
            cp[c_old] = p_a_new
            cut[best_comm] = best_cut_b_new
            cp[best_comm] += p_n
            comm[node] = best_comm
            moves += 1

        for c in touched:
            acc[c] = 0.0
        touched.clear()

    node_comm[:] = comm
    comm_cut[:] = cut
    comm_p[:] = cp
    return moves
