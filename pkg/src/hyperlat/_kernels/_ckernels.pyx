# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels. Same contracts as ``_pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def simple_cycles(indptr_in, indices_in, int min_len, int max_len, bint even_only):
    cdef const int[::1] indptr = np.ascontiguousarray(indptr_in, dtype=np.int32)
    cdef const int[::1] indices = np.ascontiguousarray(indices_in, dtype=np.int32)
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef int[::1] dist = np.empty(n, dtype=np.int32)
    cdef int[::1] queue = np.empty(max(n, 1), dtype=np.int32)
    cdef char[::1] on_path = np.zeros(n, dtype=np.int8)
    cdef int[::1] path = np.empty(max_len + 1, dtype=np.int32)
    cdef int[::1] cursor = np.empty(max_len + 1, dtype=np.int32)
    cdef int root, v, w, k, end, depth, head, tail, i
    cdef bint pushed
    out = []

    for root in range(n):
        for i in range(n):
            dist[i] = -1
        dist[root] = 0
        head = 0
        tail = 1
        queue[0] = root
        while head < tail:
            v = queue[head]
            head += 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if w > root and dist[w] == -1:
                    dist[w] = dist[v] + 1
                    queue[tail] = w
                    tail += 1

        depth = 1
        path[0] = root
        cursor[0] = indptr[root]
        on_path[root] = 1
        while depth > 0:
            v = path[depth - 1]
            k = cursor[depth - 1]
            end = indptr[v + 1]
            pushed = False
            while k < end:
                w = indices[k]
                k += 1
                if w == root:
                    if depth >= 3 and depth >= min_len and path[1] < v:
                        if not even_only or depth % 2 == 0:
                            out.append(tuple([path[i] for i in range(depth)]))
                elif w > root and not on_path[w] and dist[w] != -1 and depth + dist[w] <= max_len:
                    cursor[depth - 1] = k
                    path[depth] = w
                    cursor[depth] = indptr[w]
                    on_path[w] = 1
                    depth += 1
                    pushed = True
                    break
            if not pushed:
                depth -= 1
                on_path[path[depth]] = 0
    return out


def line_graph_pairs(Py_ssize_t n, heads_in, tails_in):
    cdef const long long[::1] heads = np.ascontiguousarray(heads_in, dtype=np.int64)
    cdef const long long[::1] tails = np.ascontiguousarray(tails_in, dtype=np.int64)
    cdef Py_ssize_t m = heads.shape[0]
    cdef long long[::1] deg = np.zeros(n + 1, dtype=np.int64)
    cdef Py_ssize_t k, v, a, b, pos, total = 0
    cdef long long ea, eb
    cdef bint a_head, b_head

    for k in range(m):
        deg[heads[k] + 1] += 1
        deg[tails[k] + 1] += 1
    for v in range(n):
        total += deg[v + 1] * (deg[v + 1] - 1) // 2
        deg[v + 1] += deg[v]
    cdef long long[::1] fill = np.array(deg[:n], dtype=np.int64)
    cdef long long[::1] inc = np.empty(2 * m, dtype=np.int64)
    for k in range(m):
        inc[fill[heads[k]]] = k
        fill[heads[k]] += 1
        inc[fill[tails[k]]] = k
        fill[tails[k]] += 1

    lo_arr = np.empty(total, dtype=np.int64)
    hi_arr = np.empty(total, dtype=np.int64)
    sg_arr = np.empty(total, dtype=np.int64)
    cdef long long[::1] lo = lo_arr
    cdef long long[::1] hi = hi_arr
    cdef long long[::1] sg = sg_arr
    pos = 0
    for v in range(n):
        for a in range(deg[v], deg[v + 1]):
            ea = inc[a]
            a_head = heads[ea] == v
            for b in range(a + 1, deg[v + 1]):
                eb = inc[b]
                b_head = heads[eb] == v
                if ea < eb:
                    lo[pos] = ea
                    hi[pos] = eb
                else:
                    lo[pos] = eb
                    hi[pos] = ea
                sg[pos] = 1 if a_head == b_head else -1
                pos += 1
    order = np.lexsort((hi_arr, lo_arr))
    return lo_arr[order], hi_arr[order], sg_arr[order]
