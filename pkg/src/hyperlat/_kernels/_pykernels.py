"""Pure-Python kernels. Same contracts as ``_ckernels``."""

from collections import deque

import numpy as np


def _bounded_distances(indptr, indices, root, n):
    # BFS distances to ``root`` through vertices >= root only
    dist = [-1] * n
    dist[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if w > root and dist[w] == -1:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def simple_cycles(indptr, indices, min_len, max_len, even_only):
    """All simple cycles with ``min_len <= length <= max_len``, each once.

    A cycle is reported as a vertex tuple starting at its smallest vertex and
    oriented so that the second vertex is smaller than the last.
    """
    indptr = [int(x) for x in indptr]
    indices = [int(x) for x in indices]
    n = len(indptr) - 1
    out = []
    on_path = [False] * n
    for root in range(n):
        dist = _bounded_distances(indptr, indices, root, n)
        path = [root]
        cursor = [indptr[root]]
        on_path[root] = True
        while path:
            v = path[-1]
            k = cursor[-1]
            end = indptr[v + 1]
            depth = len(path)
            pushed = False
            while k < end:
                w = indices[k]
                k += 1
                if w == root:
                    if depth >= 3 and depth >= min_len and path[1] < v:
                        if not even_only or depth % 2 == 0:
                            out.append(tuple(path))
                elif w > root and not on_path[w] and dist[w] != -1 and depth + dist[w] <= max_len:
                    cursor[-1] = k
                    path.append(w)
                    cursor.append(indptr[w])
                    on_path[w] = True
                    pushed = True
                    break
            if not pushed:
                on_path[path.pop()] = False
                cursor.pop()
    return out


def line_graph_pairs(n, heads, tails):
    """Adjacent line-graph vertex pairs with the sign induced by edge orientation.

    ``heads[k]`` / ``tails[k]`` are the head and foot of layout edge ``k``.
    Returns int arrays ``(i, j, sign)`` with ``i < j``, sorted lexicographically.
    Sign is +1 when the shared vertex is the head of both edges or the foot of
    both, -1 otherwise.
    """
    incident = [[] for _ in range(n)]
    for k, (h, t) in enumerate(zip(heads, tails)):
        incident[int(h)].append(k)
        incident[int(t)].append(k)
    ii, jj, ss = [], [], []
    for v in range(n):
        inc = incident[v]
        for a in range(len(inc)):
            ea = inc[a]
            a_head = heads[ea] == v
            for b in range(a + 1, len(inc)):
                eb = inc[b]
                ii.append(ea)
                jj.append(eb)
                ss.append(1 if a_head == (heads[eb] == v) else -1)
    i = np.asarray(ii, dtype=np.int64)
    j = np.asarray(jj, dtype=np.int64)
    s = np.asarray(ss, dtype=np.int64)
    lo, hi = np.minimum(i, j), np.maximum(i, j)
    order = np.lexsort((hi, lo))
    return lo[order], hi[order], s[order]
