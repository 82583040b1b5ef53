"""Closed-form Q-spectra and eigenvectors of the cone-over-cycles families.

For G = K1 v (C_l1 u ... u C_lt u s*K1) of order n with s, t >= 1 the
Q-spectrum is

    { 5^(t-1), 1^(s-1), r1, r2, r3 }  u  { 3 + 2cos(2k*pi/l_i) : 1 <= k <= l_i - 1 }

where r1 > n >= 5 > r2 > 2 > 1 > r3 > 0 are the roots of

    f(x) = x^3 - (n+5) x^2 + 5n x - 4(n - s - 1).

The mate family K1 v (K_{1,3} u C_l1 u ... u C_l(t-1) u (s-1)*K1) swaps the
cosine block of one triangle for the pair {2, 2}, which is why the two
families are exactly Q-cospectral whenever a triangle is available.  Every
eigenvalue comes with an explicit eigenvector, laid out positionally against
the vertex order fixed in graphs.cone_cycles / cone_cycles_mate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidParameterError, NumericError
from .graphs import CycleJoinParams, Graph, cone_cycles_mate
from .linalg import q_matrix

_ROOT_WIDTH = 1e-13


def cubic_value(n: int, s: int, x: float) -> float:
    """x^3 - (n+5)x^2 + 5nx - 4(n-s-1), the polynomial whose roots carry the
    apex/pendant/cycle interaction of the join families."""
    return ((x - (n + 5)) * x + 5 * n) * x - 4 * (n - s - 1)


def _cubic(n: int, s: int):
    return lambda x: cubic_value(n, s, x)


def _bisect(f, lo: float, hi: float) -> float:
    flo = f(lo)
    while hi - lo > _ROOT_WIDTH:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def cubic_roots(n: int, s: int) -> tuple[float, float, float]:
    """The three real roots of x^3 - (n+5)x^2 + 5nx - 4(n-s-1), largest first.

    Roots are isolated by the guaranteed brackets (n, n+5), (2, 5), (0, 1)
    and refined by bisection; a failed sign test at a bracket endpoint means
    the parameters violate the closed-form hypotheses (e.g. s = 0 puts an
    exact root at 1).
    """
    if not isinstance(n, int) or not isinstance(s, int) or n < 5 or not 0 <= s <= n - 4:
        raise InvalidParameterError(f"cubic_roots needs n >= 5 and 0 <= s <= n - 4, got (n={n}, s={s})")
    f = _cubic(n, s)
    brackets = ((float(n), float(n + 5)), (2.0, 5.0), (0.0, 1.0))
    roots = []
    for lo, hi in brackets:
        flo, fhi = f(lo), f(hi)
        if not (flo < 0.0 < fhi or fhi < 0.0 < flo):
            raise NumericError(
                f"bracket ({lo}, {hi}) lost its sign change for (n={n}, s={s}): f={flo}, {fhi}"
            )
        x = _bisect(f, lo, hi)
        # one Newton polish: the bracket leaves |f| ~ f' * width
        fp = (3.0 * x - 2.0 * (n + 5)) * x + 5.0 * n
        if fp != 0.0:
            y = x - f(x) / fp
            if lo < y < hi:
                x = y
        roots.append(x)
    r1, r2, r3 = roots
    assert r1 > n and 5.0 > r2 > 2.0 and 1.0 > r3 > 0.0
    return r1, r2, r3


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Structured eigenvalue multiset: multiplicity blocks, cubic roots, cosines.

    cosines holds one (length, k, value) triple per cycle eigenvalue
    3 + 2cos(2*pi*k/length), 1 <= k <= length - 1.  When a cosine value
    collides with 1, 5 or a cubic root the duplicate is simply kept; the
    eigenvectors remain independent, so no merging is done here.
    """

    fives: int
    ones: int
    twos: int
    cubic: tuple
    cosines: tuple

    def values(self) -> list[float]:
        """The full multiset, sorted non-increasing."""
        vals = [5.0] * self.fives + [1.0] * self.ones + [2.0] * self.twos
        vals.extend(self.cubic)
        vals.extend(c[2] for c in self.cosines)
        return sorted(vals, reverse=True)

    def tagged_values(self) -> list[tuple[float, str]]:
        out = [(5.0, "five")] * self.fives + [(1.0, "one")] * self.ones + [(2.0, "two")] * self.twos
        out.extend(zip(self.cubic, ("cubic_r1", "cubic_r2", "cubic_r3")))
        out.extend((v, f"cosine({l},{k})") for l, k, v in self.cosines)
        return out

    def to_json(self) -> dict:
        return {
            "values": [
                {"value": float(f"{v:.12g}"), "tag": tag}
                for v, tag in sorted(self.tagged_values(), key=lambda p: -p[0])
            ]
        }


def _cosine_block(lengths) -> tuple:
    out = []
    for l in lengths:
        out.extend((l, k, 3.0 + 2.0 * math.cos(2.0 * math.pi * k / l)) for k in range(1, l))
    return tuple(out)


def _require_pendant(p: CycleJoinParams, what: str):
    if p.s < 1:
        raise InvalidParameterError(f"{what} assumes at least one pendant (s >= 1); got s = {p.s}")


def closed_form_spectrum(p: CycleJoinParams) -> ClosedFormSpectrum:
    """Closed-form Q-spectrum of cone_cycles(p); needs s >= 1."""
    _require_pendant(p, "the closed form")
    cf = ClosedFormSpectrum(
        fives=p.t - 1,
        ones=p.s - 1,
        twos=0,
        cubic=cubic_roots(p.n, p.s),
        cosines=_cosine_block(p.lengths),
    )
    assert len(cf.values()) == p.n
    return cf


def closed_form_mate_spectrum(p: CycleJoinParams) -> ClosedFormSpectrum:
    """Closed-form Q-spectrum of cone_cycles_mate(p): the consumed triangle's
    cosine pair {2, 2} is emitted as the explicit two-block."""
    _require_pendant(p, "the mate closed form")
    if p.lengths[-1] != 3:
        raise InvalidParameterError("the mate closed form needs a cycle of length 3 in the parameters")
    cf = ClosedFormSpectrum(
        fives=p.t - 1,
        ones=p.s - 1,
        twos=2,
        cubic=cubic_roots(p.n, p.s),
        cosines=_cosine_block(p.lengths[:-1]),
    )
    assert len(cf.values()) == p.n
    return cf


def multiplicity_of_one(p: CycleJoinParams) -> int:
    """Multiplicity of the Q-eigenvalue 1 of cone_cycles(p): s - 1 plus the
    number of even cycle lengths (3 + 2cos(2k*pi/l) = 1 iff l even, k = l/2)."""
    _require_pendant(p, "the eigenvalue-1 multiplicity formula")
    return p.s - 1 + sum(1 for l in p.lengths if l % 2 == 0)


def cospectral_mate(p: CycleJoinParams) -> Optional[Graph]:
    """The non-isomorphic Q-cospectral partner of cone_cycles(p), if one is
    provided by the triangle-to-star swap: requires s >= 1 and some l_i = 3."""
    if p.s >= 1 and p.lengths[-1] == 3:
        return cone_cycles_mate(p)
    return None


# ---------------------------------------------------------------------------
# explicit eigenvectors


@dataclass(frozen=True, eq=False)
class EigenPair:
    value: float
    vector: np.ndarray


def eigenpair_residual(Q: np.ndarray, pair: EigenPair) -> float:
    """||Q v - value * v||_inf, the defect of an asserted eigenpair."""
    v = pair.vector
    return float(np.max(np.abs(Q.astype(float) @ v - pair.value * v)))


def _cycle_eigenvector(l: int, k: int) -> np.ndarray:
    """Real adjacency eigenvector of C_l for the eigenvalue 2cos(2*pi*k/l).

    Cosine rows for k <= l/2 and sine rows for k > l/2 (same eigenvalue as
    l - k) give l - 1 independent vectors, each summing to zero.
    """
    j = np.arange(l)
    if 2 * k <= l:
        return np.cos(2.0 * np.pi * k * j / l)
    return np.sin(2.0 * np.pi * (l - k) * j / l)


def closed_form_eigenpairs(p: CycleJoinParams) -> list[EigenPair]:
    """All n eigenpairs of cone_cycles(p), one per closed-form eigenvalue.

    Vertex layout: pendants 0..s-1, cycle blocks, apex last.  Vectors are
    emitted unnormalised, exactly as constructed:

      * eigenvalue 1: pendant differences e_j - e_(j+1), j = 0..s-2;
      * eigenvalue 5: constant -l_(j+1)/l_1 on the first cycle block and 1 on
        block j+1, j = 1..t-1;
      * cycle cosines: adjacency eigenvectors of each C_l zero-padded;
      * cubic roots r: 1/(r-1) on pendants, 1/(r-5) on cycle vertices, 1 at
        the apex.
    """
    _require_pendant(p, "the eigenvector construction")
    n, s = p.n, p.s
    out = []
    for j in range(s - 1):
        v = np.zeros(n)
        v[j], v[j + 1] = 1.0, -1.0
        out.append(EigenPair(1.0, v))
    offsets = []
    pos = s
    for l in p.lengths:
        offsets.append(pos)
        pos += l
    l1 = p.lengths[0]
    for j in range(1, p.t):
        v = np.zeros(n)
        v[offsets[0]:offsets[0] + l1] = -p.lengths[j] / l1
        v[offsets[j]:offsets[j] + p.lengths[j]] = 1.0
        out.append(EigenPair(5.0, v))
    for i, l in enumerate(p.lengths):
        for k in range(1, l):
            v = np.zeros(n)
            v[offsets[i]:offsets[i] + l] = _cycle_eigenvector(l, k)
            out.append(EigenPair(3.0 + 2.0 * math.cos(2.0 * math.pi * k / l), v))
    for r in cubic_roots(n, s):
        v = np.empty(n)
        v[:s] = 1.0 / (r - 1.0)
        v[s:n - 1] = 1.0 / (r - 5.0)
        v[n - 1] = 1.0
        out.append(EigenPair(r, v))
    assert len(out) == n
    return out


def closed_form_mate_eigenpairs(p: CycleJoinParams) -> list[EigenPair]:
    """All n eigenpairs of cone_cycles_mate(p).

    Vertex layout: pendants 0..s-2, cycle blocks for l_1..l_(t-1), star
    centre at n-5, leaves n-4..n-2, apex n-1.  The inherited pendant/cycle
    constructions are completed by one extra vector each for 1 and 5 that
    lean on the star, two leaf differences for the eigenvalue 2, and the
    star-adjusted cubic-root vectors.
    """
    _require_pendant(p, "the mate eigenvector construction")
    if p.lengths[-1] != 3:
        raise InvalidParameterError("the mate eigenvectors need a cycle of length 3 in the parameters")
    n, s, t = p.n, p.s, p.t
    centre, apex = n - 5, n - 1
    leaves = (n - 4, n - 3, n - 2)
    out = []
    for j in range(s - 2):
        v = np.zeros(n)
        v[j], v[j + 1] = 1.0, -1.0
        out.append(EigenPair(1.0, v))
    if s >= 2:
        v = np.zeros(n)
        v[0] = 2.0
        v[centre] = 1.0
        v[list(leaves)] = -1.0
        out.append(EigenPair(1.0, v))
    cycle_lengths = p.lengths[:-1]
    offsets = []
    pos = s - 1
    for l in cycle_lengths:
        offsets.append(pos)
        pos += l
    if t >= 2:
        l1 = cycle_lengths[0]
        for j in range(1, t - 1):
            v = np.zeros(n)
            v[offsets[0]:offsets[0] + l1] = -cycle_lengths[j] / l1
            v[offsets[j]:offsets[j] + cycle_lengths[j]] = 1.0
            out.append(EigenPair(5.0, v))
        v = np.zeros(n)
        v[offsets[0]:offsets[0] + l1] = -6.0 / l1
        v[centre] = 3.0
        v[list(leaves)] = 1.0
        out.append(EigenPair(5.0, v))
    for i, l in enumerate(cycle_lengths):
        for k in range(1, l):
            v = np.zeros(n)
            v[offsets[i]:offsets[i] + l] = _cycle_eigenvector(l, k)
            out.append(EigenPair(3.0 + 2.0 * math.cos(2.0 * math.pi * k / l), v))
    for a, b in ((leaves[0], leaves[1]), (leaves[1], leaves[2])):
        v = np.zeros(n)
        v[a], v[b] = 1.0, -1.0
        out.append(EigenPair(2.0, v))
    for r in cubic_roots(n, s):
        v = np.empty(n)
        d = (r - 1.0) * (r - 5.0)
        v[:s - 1] = 1.0 / (r - 1.0)
        v[s - 1:centre] = 1.0 / (r - 5.0)
        v[centre] = (r + 1.0) / d
        v[list(leaves)] = (r - 3.0) / d
        v[apex] = 1.0
        out.append(EigenPair(r, v))
    assert len(out) == n
    return out


def eigenpair_matrix_rank(pairs, pivot_tol: float = 1e-8) -> int:
    """Numeric rank of the stacked eigenvectors, by row reduction with a
    pivot magnitude threshold (rows are scaled to unit max first)."""
    A = np.array([pair.vector for pair in pairs], dtype=float)
    rows, cols = A.shape
    for i in range(rows):
        top = np.max(np.abs(A[i]))
        if top > 0:
            A[i] /= top
    rank = 0
    col = 0
    while rank < rows and col < cols:
        pivot_row = rank + int(np.argmax(np.abs(A[rank:, col])))
        if abs(A[pivot_row, col]) <= pivot_tol:
            col += 1
            continue
        A[[rank, pivot_row]] = A[[pivot_row, rank]]
        A[rank] /= A[rank, col]
        for r in range(rows):
            if r != rank and A[r, col] != 0.0:
                A[r] -= A[r, col] * A[rank]
        rank += 1
        col += 1
    return rank


def verify_eigenpairs(G: Graph, pairs, tol: float = 1e-8) -> bool:
    """Residual bound for every pair plus full rank of the assembled set."""
    Q = q_matrix(G)
    for pair in pairs:
        bound = tol * max(1.0, float(np.max(np.abs(pair.vector))))
        if eigenpair_residual(Q, pair) > bound:
            return False
    return eigenpair_matrix_rank(pairs) == G.n
