"""Degree-census equation systems and spectral structure predicates.

The moment system below is what exact Q-cospectrality forces on the degree
counts of two graphs whose non-excluded degrees all lie in {1, 2, 3, 4}:
each equation is a fixed linear combination of tr Q, tr Q^2 and the order,
so equal spectra make every residual vanish.

The predicates return "not_applicable" / "holds" / "violated" rather than a
boolean so that vacuous truth stays distinguishable from verified truth.
Numeric hypothesis gates use a tolerance (default 1e-7): non-strict
comparisons grant the tolerance as slack (kappa_2 <= 5 accepts 5 + tol,
since the join families attain 5 exactly), while strict ones demand a clear
margin.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidParameterError, OutOfScopeError
from .graphs import DegreeCensus, Graph, is_connected
from .linalg import spectrum

NOT_APPLICABLE = "not_applicable"
HOLDS = "holds"
VIOLATED = "violated"


class MomentSystemResidual(NamedTuple):
    eq1: int
    eq2: int
    eq3: int


def _counts_in_scope(c: DegreeCensus) -> dict:
    for k in c.counts:
        if k not in (1, 2, 3, 4) and c.counts[k]:
            raise OutOfScopeError(
                f"census has degree {k} outside the designated vertex; the system covers degrees 1..4 only"
            )
    return {k: c.counts.get(k, 0) for k in (1, 2, 3, 4)}


def moment_system_residual(census_a: DegreeCensus, census_b: DegreeCensus) -> MomentSystemResidual:
    """Left-minus-right residuals of the three census equations

        2 n3 + 6 n4 + d1 (d1 - 3)
        n2 - 3 n4 - d1 (d1 - 4)
        2 n1 + 2 n4 + d1 (d1 - 5)

    evaluated on the two censuses.  All three vanish on any Q-cospectral pair
    whose counted degrees stay in {1, 2, 3, 4}.
    """

    def sides(c: DegreeCensus):
        nk = _counts_in_scope(c)
        d1 = c.d1
        return (
            2 * nk[3] + 6 * nk[4] + d1 * (d1 - 3),
            nk[2] - 3 * nk[4] - d1 * (d1 - 4),
            2 * nk[1] + 2 * nk[4] + d1 * (d1 - 5),
        )

    a = sides(census_a)
    b = sides(census_b)
    return MomentSystemResidual(a[0] - b[0], a[1] - b[1], a[2] - b[2])


@dataclass(frozen=True)
class ReducedCensus:
    """Solution of the reduced census system for a hypothetical cospectral
    partner of a cone-over-cycles graph, given its count n4 of 4-vertices."""

    n1: int
    n2: int
    n3: int
    feasible: bool


def solve_reduced_census(n: int, s: int, n4: int) -> ReducedCensus:
    """n3 = n - s - 1 - 3 n4,  n2 = 3 n4,  n1 = s - n4.

    A negative component marks the parameters as infeasible; that is data,
    not an error (it is how contradiction arguments conclude).
    """
    if n < 1 or s < 0 or n4 < 0:
        raise InvalidParameterError(f"need n >= 1, s >= 0, n4 >= 0; got ({n}, {s}, {n4})")
    n3 = n - s - 1 - 3 * n4
    n2 = 3 * n4
    n1 = s - n4
    return ReducedCensus(n1, n2, n3, feasible=n1 >= 0 and n2 >= 0 and n3 >= 0)


# ---------------------------------------------------------------------------
# structure predicates


def spectral_domination_check(G: Graph, tol: float = 1e-7) -> str:
    """If n >= 12 and 0 < kappa_n <= kappa_2 <= 5 < n < kappa_1, the graph
    must be connected with d2 <= 4 and d1 >= n - 3."""
    n = G.n
    if n < 12:
        return NOT_APPLICABLE
    kappa = spectrum(G).values
    k1, k2, kn = kappa[0], kappa[1], kappa[-1]
    applicable = (
        kn > tol
        and kn <= k2 + tol
        and k2 <= 5.0 + tol
        and 5 < n
        and k1 > n + tol
    )
    if not applicable:
        return NOT_APPLICABLE
    deg = sorted(G.degrees(), reverse=True)
    ok = is_connected(G) and deg[1] <= 4 and deg[0] >= n - 3
    return HOLDS if ok else VIOLATED


def kappa1_degree_gap_check(G: Graph, tol: float = 1e-7) -> str:
    """For a connected graph with d2 <= 4 and either dn = 1 < 11 <= d1 or
    2 <= dn < 8 <= d1, the largest eigenvalue satisfies d1 >= kappa_1 - 3."""
    if G.n < 2:
        return NOT_APPLICABLE
    deg = sorted(G.degrees(), reverse=True)
    d1, d2, dn = deg[0], deg[1], deg[-1]
    if not (is_connected(G) and d2 <= 4):
        return NOT_APPLICABLE
    if not ((dn == 1 and d1 >= 11) or (2 <= dn < 8 <= d1)):
        return NOT_APPLICABLE
    k1 = spectrum(G).kappa(1)
    return HOLDS if d1 >= k1 - 3.0 - tol else VIOLATED


@dataclass
class FourVertexStats:
    """Per-vertex structure of a degree-4 vertex outside the designated v1.

    Degree classes are counted over V - {v1}; common neighbourhoods are the
    actual sets in G (so they may and should contain v1)."""

    vertex: int
    adjacent_four: int
    adjacent_three: int
    common_neighbourhoods: dict  # other 4-vertex -> size of N(u) & N(v)


@dataclass
class FourVertexReport:
    v1: int
    four_vertices: list
    clauses: dict  # clause name -> not_applicable / holds / violated

    def to_json(self) -> dict:
        return {
            "v1": self.v1,
            "four_vertices": [
                {
                    "vertex": st.vertex,
                    "adjacent_four": st.adjacent_four,
                    "adjacent_three": st.adjacent_three,
                    "common_neighbourhoods": {str(k): v for k, v in sorted(st.common_neighbourhoods.items())},
                }
                for st in self.four_vertices
            ],
            "clauses": dict(sorted(self.clauses.items())),
        }


def four_vertex_report(G: Graph, tol: float = 1e-7) -> FourVertexReport:
    """Structure report on the 4-vertices outside v1, with clause checks.

    Two clause groups are evaluated, each only when its hypotheses hold:

    near-domination group (n >= 14, connected, kappa_2 <= 5, d1 >= n - 2,
    d2 <= 4):
      * outside_apex_degree_le_3: every w outside N[v1] has degree <= 3 and
        at most two 4-neighbours;
      * four_vertices_pairwise_nonadjacent.

    full-domination group (kappa_2 <= 5, d1 = n - 1, d2 <= 4):
      * four_vertex_at_most_one_three_neighbor (n >= 22);
      * four_vertex_pairs_meet_only_at_apex (n >= 22): common neighbourhood
        of any two 4-vertices is exactly {v1};
      * four_vertex_no_three_neighbor (n >= 34).
    """
    n = G.n
    deg = G.degrees()
    d1 = max(deg) if n else 0
    v1 = deg.index(d1) if n else 0
    deg_sorted = sorted(deg, reverse=True)
    d2 = deg_sorted[1] if n >= 2 else 0
    nbr = [G.neighbors(v) for v in range(n)]

    fours = [v for v in range(n) if v != v1 and deg[v] == 4]
    threes = {v for v in range(n) if v != v1 and deg[v] == 3}
    stats = []
    for v in fours:
        common = {
            u: len(nbr[v] & nbr[u])
            for u in fours
            if u != v
        }
        stats.append(
            FourVertexStats(
                vertex=v,
                adjacent_four=sum(1 for u in fours if u != v and u in nbr[v]),
                adjacent_three=sum(1 for w in nbr[v] if w in threes),
                common_neighbourhoods=common,
            )
        )

    k2 = spectrum(G).kappa(2) if n >= 2 else 0.0
    k2_small = k2 <= 5.0 + tol
    clauses = {}

    near_gate = n >= 14 and is_connected(G) and k2_small and d1 >= n - 2 and d2 <= 4
    if near_gate:
        outside = [w for w in range(n) if w != v1 and w not in nbr[v1]]
        ok_i = all(
            deg[w] <= 3 and sum(1 for u in fours if u in nbr[w]) <= 2
            for w in outside
        )
        clauses["outside_apex_degree_le_3"] = HOLDS if ok_i else VIOLATED
        ok_ii = all(st.adjacent_four == 0 for st in stats)
        clauses["four_vertices_pairwise_nonadjacent"] = HOLDS if ok_ii else VIOLATED
    else:
        clauses["outside_apex_degree_le_3"] = NOT_APPLICABLE
        clauses["four_vertices_pairwise_nonadjacent"] = NOT_APPLICABLE

    full_gate = k2_small and d1 == n - 1 and d2 <= 4
    if full_gate and n >= 22:
        ok_one = all(st.adjacent_three <= 1 for st in stats)
        clauses["four_vertex_at_most_one_three_neighbor"] = HOLDS if ok_one else VIOLATED
        ok_apex = all(
            nbr[v] & nbr[u] == {v1}
            for i, v in enumerate(fours)
            for u in fours[i + 1:]
        )
        clauses["four_vertex_pairs_meet_only_at_apex"] = HOLDS if ok_apex else VIOLATED
    else:
        clauses["four_vertex_at_most_one_three_neighbor"] = NOT_APPLICABLE
        clauses["four_vertex_pairs_meet_only_at_apex"] = NOT_APPLICABLE
    if full_gate and n >= 34:
        ok_none = all(st.adjacent_three == 0 for st in stats)
        clauses["four_vertex_no_three_neighbor"] = HOLDS if ok_none else VIOLATED
    else:
        clauses["four_vertex_no_three_neighbor"] = NOT_APPLICABLE

    return FourVertexReport(v1=v1, four_vertices=stats, clauses=clauses)
