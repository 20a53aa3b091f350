# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled frontier-sweep builders for the two quadratic-width machines.

States are packed into machine integers and looked up through per-level
direct-address tables (a stamp array versions entries by level, so nothing
is cleared between levels).  The node numbering matches the pure-Python
builder exactly: frontier nodes are visited in slot order and successors get
slots in first-seen order, L branch before R branch.
"""

import numpy as np

cdef int ZERO = -1
cdef int ONE = -2


def build_pi(int n, int cap):
    """Arc arrays for the proper-interval machine; cap 0 means unbounded."""
    cdef int total = 2 * n
    cdef int hspan = n + 1
    cdef int space = hspan * hspan * 2
    cdef int[:] slot = np.empty(space, dtype=np.int32)
    cdef int[:] stamp = np.zeros(space, dtype=np.int32)
    cdef int[:] cur = np.empty(space, dtype=np.int32)
    cdef int[:] nxt = np.empty(space, dtype=np.int32)
    cdef int[:] swap_tmp
    cdef int[:] la_v, ra_v
    cdef int width = 1
    cdef int level, j, st, h_f, h_b, flag, sym, arc, nw, idx
    cdef int nh_f, nh_b, nflag, dead, diff, q

    l_arcs = []
    r_arcs = []
    cur[0] = 0  # h_front 0, h_back 0, flag 0
    for level in range(1, total + 1):
        la = np.empty(width, dtype=np.int32)
        ra = np.empty(width, dtype=np.int32)
        la_v = la
        ra_v = ra
        nw = 0
        for j in range(width):
            st = cur[j]
            flag = st & 1
            q = st >> 1
            h_b = q % hspan
            h_f = q // hspan
            for sym in range(2):  # 0 reads L, 1 reads R
                nh_f = h_f
                nh_b = h_b
                nflag = flag
                dead = 0
                if level & 1:  # front character
                    if sym == 0:
                        nh_f += 1
                        if cap > 0 and nh_f > cap:
                            dead = 1
                    else:
                        nh_f -= 1
                        if nh_f <= 0:
                            dead = 1
                else:  # back character
                    if nflag == 0:
                        # pre-update heights reveal this pair's front character
                        if nh_f - 1 == nh_b:
                            if sym == 0:
                                nflag = 1
                        elif sym == 1:
                            dead = 1
                    if dead == 0:
                        if sym == 0:
                            nh_b -= 1
                            if nh_b <= 0:
                                dead = 1
                        else:
                            nh_b += 1
                            if cap > 0 and nh_b > cap:
                                dead = 1
                if dead == 0:
                    diff = nh_f - nh_b
                    if diff < 0:
                        diff = -diff
                    if diff > total - level:  # heights can never rejoin
                        dead = 1

                if dead:
                    arc = ZERO
                elif level == total:
                    arc = ONE if nh_f == nh_b else ZERO
                else:
                    idx = (nh_f * hspan + nh_b) * 2 + nflag
                    if stamp[idx] != level:
                        stamp[idx] = level
                        slot[idx] = nw
                        nxt[nw] = idx
                        nw += 1
                    arc = slot[idx]
                if sym == 0:
                    la_v[j] = arc
                else:
                    ra_v[j] = arc
        l_arcs.append(la)
        r_arcs.append(ra)
        if nw == 0 and level < total:
            empty = np.empty(0, dtype=np.int32)
            for _ in range(level + 1, total + 1):
                l_arcs.append(empty)
                r_arcs.append(empty)
            return l_arcs, r_arcs
        swap_tmp = cur
        cur = nxt
        nxt = swap_tmp
        width = nw
    return l_arcs, r_arcs


def build_bp(int n):
    """Arc arrays for the bipartite-permutation machine."""
    cdef int total = 2 * n
    cdef int hspan = n + 1
    cdef int space = hspan * hspan * 128
    cdef int mid_front = total - 1 if n & 1 else -1
    cdef int mid_back = total if n & 1 else -1
    cdef int[:] slot = np.empty(space, dtype=np.int32)
    cdef int[:] stamp = np.zeros(space, dtype=np.int32)
    cdef int[:] cur = np.empty(space, dtype=np.int32)
    cdef int[:] nxt = np.empty(space, dtype=np.int32)
    cdef int[:] swap_tmp
    cdef int[:] la_v, ra_v
    cdef int width = 1
    cdef int level, phase, j, st, sym, arc, nw, idx, q
    cdef int h_l, h_r, c_l, c_r, f_v, f_h, f_r
    cdef int nh_l, nh_r, nc_l, nc_r, nf_v, nf_h, nf_r, dead, diff

    # flag encodings: c_* 0=L 1=R; f_v 0=tie 1=ahead 2=behind 3=good;
    # f_h 0=none 1=pend-a 2=pend-b 3=good; f_r 0=tie 1=greater
    l_arcs = []
    r_arcs = []
    cur[0] = 0  # all-zero initial state
    for level in range(1, total + 1):
        phase = level & 3
        la = np.empty(width, dtype=np.int32)
        ra = np.empty(width, dtype=np.int32)
        la_v = la
        ra_v = ra
        nw = 0
        for j in range(width):
            st = cur[j]
            f_r = st & 1
            q = st >> 1
            f_h = q & 3
            q >>= 2
            f_v = q & 3
            q >>= 2
            c_r = q & 1
            q >>= 1
            c_l = q & 1
            q >>= 1
            h_r = q % hspan
            h_l = q // hspan
            for sym in range(2):  # 0 reads L, 1 reads R
                nh_l = h_l
                nh_r = h_r
                nc_l = c_l
                nc_r = c_r
                nf_v = f_v
                nf_h = f_h
                nf_r = f_r
                dead = 0
                if phase & 1:  # front read
                    nh_l += 1 if sym == 0 else -1
                    if nh_l <= 0:
                        dead = 1
                    elif phase == 1:  # top-position character
                        nc_l = sym
                        if level == mid_front and nf_h == 0:
                            if sym == 1:
                                dead = 1
                            else:
                                nf_h = 3
                    else:  # bottom-position character, front side
                        if nf_v != 3 and sym != nc_l:
                            if nc_l != 0:
                                dead = 1
                            else:
                                nf_v = 3
                        if dead == 0 and nf_h == 0 and sym == nc_r:
                            nf_h = 1 if sym == 0 else 2
                else:  # back read
                    if nf_r == 0:
                        # pre-update heights reveal the partner front character
                        if nh_l - 1 == nh_r:
                            if sym == 0:
                                nf_r = 1
                        elif sym == 1:
                            dead = 1
                    if dead == 0:
                        nh_r += 1 if sym == 1 else -1
                        if nh_r <= 0:
                            dead = 1
                    if dead == 0:
                        if phase == 2:  # bottom-position character, back side
                            nc_r = sym
                            if level == mid_back and nf_v != 3 and sym != nc_l:
                                if nc_l != 0:
                                    dead = 1
                                else:
                                    nf_v = 3
                        else:  # top-position character, back side
                            if nf_v != 3 and sym != nc_r:
                                nf_v = 1 if sym == 0 else 2
                            if nf_h != 3:
                                if sym == nc_l:
                                    if nc_l != 0:
                                        dead = 1
                                    else:
                                        nf_h = 3
                                elif nf_h == 1:
                                    nf_h = 3
                                elif nf_h == 2:
                                    dead = 1
                if dead == 0:
                    diff = nh_l - nh_r
                    if diff < 0:
                        diff = -diff
                    if diff > total - level:
                        dead = 1

                if dead:
                    arc = ZERO
                elif level == total:
                    if nh_l == nh_r and nf_v != 2 and nf_h != 1 and nf_h != 2:
                        arc = ONE
                    else:
                        arc = ZERO
                else:
                    idx = (((((nh_l * hspan + nh_r) * 2 + nc_l) * 2 + nc_r) * 4
                            + nf_v) * 4 + nf_h) * 2 + nf_r
                    if stamp[idx] != level:
                        stamp[idx] = level
                        slot[idx] = nw
                        nxt[nw] = idx
                        nw += 1
                    arc = slot[idx]
                if sym == 0:
                    la_v[j] = arc
                else:
                    ra_v[j] = arc
        l_arcs.append(la)
        r_arcs.append(ra)
        if nw == 0 and level < total:
            empty = np.empty(0, dtype=np.int32)
            for _ in range(level + 1, total + 1):
                l_arcs.append(empty)
                r_arcs.append(empty)
            return l_arcs, r_arcs
        swap_tmp = cur
        cur = nxt
        nxt = swap_tmp
        width = nw
    return l_arcs, r_arcs
