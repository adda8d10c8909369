"""Reference computations built from scratch, independent of the package internals."""

import numpy as np


def recurrence(p, q, rings):
    """(b_j, B_j) for j = 1..rings+1 straight from the two-term recurrence."""
    b, B = [p], [0]
    for _ in range(rings):
        b.append(((q - 2) * (p - 3) - 1) * b[-1] + ((q - 3) * (p - 3) - 1) * B[-1])
        B.append((q - 2) * b[-2] + (q - 3) * B[-1])
    return b, B


def tnm(p, q, rings):
    b, B = recurrence(p, q, rings)
    t = 1 + sum(B[:rings])
    n = sum(b[:rings]) + sum(B[:rings])
    return t, n, n + t - 1


def incidence(n, edges):
    """Unsigned R and oriented N (foot -1, head +1) incidence matrices, n x m."""
    m = len(edges)
    R = np.zeros((n, m), dtype=np.int64)
    N = np.zeros((n, m), dtype=np.int64)
    for k, (u, v) in enumerate(edges):
        R[u, k] = R[v, k] = 1
        N[u, k], N[v, k] = -1, 1
    return R, N


def laplacians(n, edges):
    A = np.zeros((n, n), dtype=np.int64)
    for u, v in edges:
        A[u, v] = A[v, u] = 1
    D = np.diag(A.sum(axis=1))
    return D + A, D - A


def line_graph_spectra(n, edges):
    """Eigenvalues of R^T R - 2I and N^T N - 2I."""
    R, N = incidence(n, edges)
    eye = 2 * np.eye(len(edges))
    return np.linalg.eigvalsh(R.T @ R - eye), np.linalg.eigvalsh(N.T @ N - eye)
