"""Signless-Laplacian linear algebra, floating and exact.

Floating eigenvalues come from a cyclic Jacobi sweep (simple, robust and
reproducible for the dense symmetric matrices that occur here, n <= 64).
Exact work - characteristic polynomials, determinants, power traces - is
done in Python's arbitrary-precision integers: char-poly coefficients leave
the 64-bit range well below n = 30, and exact coefficients make
cospectrality a decidable predicate with no tolerance questions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InvalidParameterError, NotFoundError, NumericError, PreconditionError
from .graphs import Graph, delete_edge, triangle_count

DEFAULT_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted non-increasing, plus the tolerance that produced them."""

    values: tuple
    tol: float

    def __post_init__(self):
        vals = self.values
        if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
            raise InvalidParameterError("spectrum values must be non-increasing")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def kappa(self, i: int) -> float:
        """i-th largest eigenvalue, 1-indexed as in kappa_1 >= ... >= kappa_n."""
        if not 1 <= i <= len(self.values):
            raise PreconditionError(f"eigenvalue index {i} out of range 1..{len(self.values)}")
        return self.values[i - 1]

    def to_json(self) -> dict:
        return {
            "values": [float(f"{v:.12g}") for v in self.values],
            "tolerance": self.tol,
        }


@dataclass(frozen=True)
class CharPoly:
    """Monic integer characteristic polynomial det(xI - Q), ascending coefficients."""

    coefficients: tuple  # (c_0, c_1, ..., c_n) with c_n = 1

    def __post_init__(self):
        if not self.coefficients or self.coefficients[-1] != 1:
            raise InvalidParameterError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def to_json(self) -> dict:
        # leading coefficient first; decimal strings keep full integer width
        return {
            "degree": self.degree,
            "coefficients": [str(c) for c in reversed(self.coefficients)],
        }


def q_matrix(G: Graph) -> np.ndarray:
    """Signless Laplacian D + A as a dense integer array."""
    Q = np.zeros((G.n, G.n), dtype=np.int64)
    for u, v in G.edges:
        Q[u, v] = Q[v, u] = 1
        Q[u, u] += 1
        Q[v, v] += 1
    return Q


def _q_rows(G: Graph) -> list[list[int]]:
    """Q as nested Python-int rows for exact arithmetic."""
    rows = [[0] * G.n for _ in range(G.n)]
    for u, v in G.edges:
        rows[u][v] = rows[v][u] = 1
        rows[u][u] += 1
        rows[v][v] += 1
    return rows


# ---------------------------------------------------------------------------
# floating eigenvalues


def jacobi_eigenvalues(matrix, tol: float = DEFAULT_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> list[float]:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps run until every off-diagonal magnitude drops below tol * ||A||_F;
    exceeding max_sweeps raises NumericError.  Returned non-increasing.
    """
    A = np.array(matrix, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise InvalidParameterError("matrix must be square")
    if n == 0:
        return []
    if n == 1:
        return [float(A[0, 0])]
    scale = float(np.linalg.norm(A))
    if scale == 0.0:
        return [0.0] * n
    thresh = tol * scale
    iu = np.triu_indices(n, k=1)
    for _ in range(max_sweeps):
        if float(np.max(np.abs(A[iu]))) < thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) < 0.1 * thresh:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.hypot(1.0, theta))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
    else:
        raise NumericError(f"Jacobi sweep cap {max_sweeps} reached without convergence (n={n})")
    return sorted((float(x) for x in np.diag(A)), reverse=True)


def spectrum(G: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    """Q-eigenvalues of G, sorted non-increasing."""
    if G.n < 1:
        raise PreconditionError("spectrum needs at least one vertex")
    return Spectrum(tuple(jacobi_eigenvalues(q_matrix(G), tol=tol)), tol)


def multiplicity(spec: Spectrum, value: float, tol: float = 1e-7) -> int:
    """Number of eigenvalues within tol of value."""
    if tol <= 0:
        raise PreconditionError("multiplicity tolerance must be positive")
    return sum(1 for v in spec.values if abs(v - value) <= tol)


# ---------------------------------------------------------------------------
# exact arithmetic


def _q_times(deg, nbrs, M):
    """Q @ M for integer row-lists, using Q's structure: deg_i * M[i] + sum of neighbour rows."""
    out = []
    for i, (d, ns) in enumerate(zip(deg, nbrs)):
        row = [d * x for x in M[i]]
        for j in ns:
            mj = M[j]
            for k, x in enumerate(mj):
                row[k] += x
        out.append(row)
    return out


def char_poly_exact(G: Graph) -> CharPoly:
    """det(xI - Q) with exact integer coefficients (Faddeev-LeVerrier recurrence)."""
    n = G.n
    if n == 0:
        return CharPoly((1,))
    deg = G.degrees()
    masks = G.adjacency_masks()
    nbrs = [[j for j in range(n) if (masks[i] >> j) & 1] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        AM = _q_times(deg, nbrs, M)
        tr = sum(AM[i][i] for i in range(n))
        c, rem = divmod(-tr, k)
        if rem:  # the recurrence divides exactly for integer matrices
            raise NumericError("inexact division in characteristic polynomial recurrence")
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                AM[i][i] += c
            M = AM
    return CharPoly(tuple(coeffs))


def exact_determinant(rows) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def cospectral(G: Graph, H: Graph) -> bool:
    """Exact Q-cospectrality: identical integer characteristic polynomials."""
    if G.n != H.n:
        return False
    return char_poly_exact(G) == char_poly_exact(H)


class MomentTriple(NamedTuple):
    """Exact traces (tr Q, tr Q^2, tr Q^3)."""

    m1: int
    m2: int
    m3: int


def moments(G: Graph) -> MomentTriple:
    """Power traces of Q by exact integer matrix products."""
    n = G.n
    deg = G.degrees()
    masks = G.adjacency_masks()
    nbrs = [[j for j in range(n) if (masks[i] >> j) & 1] for i in range(n)]
    Q = _q_rows(G)
    m1 = sum(Q[i][i] for i in range(n))
    Q2 = _q_times(deg, nbrs, Q)
    m2 = sum(Q2[i][i] for i in range(n))
    Q3 = _q_times(deg, nbrs, Q2)
    m3 = sum(Q3[i][i] for i in range(n))
    return MomentTriple(m1, m2, m3)


def verify_trace_identities(G: Graph) -> bool:
    """Check tr Q = 2m, tr Q^2 = 2m + sum d^2, tr Q^3 = 3 sum d^2 + sum d^3 + 6 * triangles.

    The left sides come from exact matrix products, the right sides from
    degree sums and independent triangle counting, so the two routes are
    independent.
    """
    deg = G.degrees()
    two_m = sum(deg)
    d2 = sum(d * d for d in deg)
    d3 = sum(d ** 3 for d in deg)
    tri = triangle_count(G)
    mom = moments(G)
    return mom.m1 == two_m and mom.m2 == two_m + d2 and mom.m3 == 3 * d2 + d3 + 6 * tri


# ---------------------------------------------------------------------------
# eigenvalue inequalities


def interlacing_check(G: Graph, u: int, v: int, tol: float = 1e-8) -> bool:
    """Edge-deletion interlacing: k1(G) >= k1(G-e) >= k2(G) >= ... >= kn(G-e) >= 0."""
    if G.n < 3:
        raise PreconditionError("interlacing check needs at least 3 vertices")
    if not G.has_edge(u, v):
        raise NotFoundError(f"edge ({u}, {v}) not in graph")
    big = spectrum(G).values
    small = spectrum(delete_edge(G, u, v)).values
    n = G.n
    for i in range(n):
        if big[i] < small[i] - tol:
            return False
        if i + 1 < n and small[i] < big[i + 1] - tol:
            return False
    return small[n - 1] >= -tol


def weighted_submatrix(G: Graph, vertices, weights) -> np.ndarray:
    """diag(c) + A(G[U]) for U a vertex subset and 0 <= c_j <= deg_G(u_j).

    weights[j] belongs to vertices[j]; rows of the result follow the sorted
    vertex order.
    """
    vs = list(vertices)
    ws = list(weights)
    if len(ws) != len(vs):
        raise PreconditionError("one weight per vertex is required")
    if len(set(vs)) != len(vs):
        raise PreconditionError("vertex subset contains duplicates")
    deg = G.degrees()
    for v, c in zip(vs, ws):
        if not 0 <= v < G.n:
            raise NotFoundError(f"vertex {v} not in graph of order {G.n}")
        if not 0 <= c <= deg[v]:
            raise PreconditionError(f"weight {c} for vertex {v} outside [0, deg={deg[v]}]")
    order = sorted(range(len(vs)), key=lambda i: vs[i])
    vs = [vs[i] for i in order]
    ws = [ws[i] for i in order]
    k = len(vs)
    M = np.zeros((k, k), dtype=float)
    for i, c in enumerate(ws):
        M[i, i] = c
    for i in range(k):
        for j in range(i + 1, k):
            if G.has_edge(vs[i], vs[j]):
                M[i, j] = M[j, i] = 1.0
    return M


def theta(matrix, i: int, tol: float = DEFAULT_TOL) -> float:
    """i-th largest eigenvalue (1-indexed) of a weighted adjacency-pattern matrix.

    The matrix must be symmetric with every off-diagonal entry 0 or 1.
    """
    M = np.array(matrix, dtype=float)
    n = M.shape[0]
    if M.shape != (n, n) or not np.array_equal(M, M.T):
        raise InvalidParameterError("matrix must be square and symmetric")
    off = M - np.diag(np.diag(M))
    if not np.all((off == 0.0) | (off == 1.0)):
        raise InvalidParameterError("off-diagonal entries must be 0 or 1")
    if not 1 <= i <= n:
        raise PreconditionError(f"eigenvalue index {i} out of range 1..{n}")
    return jacobi_eigenvalues(M, tol=tol)[i - 1]


def submatrix_lower_bound_check(G: Graph, vertices, weights, tol: float = 1e-8) -> bool:
    """Check kappa_i(G) >= theta_i(diag(c) + A(G[U])) - tol for all i <= |U|."""
    M = weighted_submatrix(G, vertices, weights)
    kappas = spectrum(G).values
    thetas = jacobi_eigenvalues(M)
    return all(kappas[i] >= thetas[i] - tol for i in range(len(thetas)))
