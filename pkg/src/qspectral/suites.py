"""Property suites behind the `verify` CLI command.

Each suite walks a finite universe (all isomorphism classes up to an order
cap, or a family parameter sweep), re-checks the invariants this package is
built around, and reports every violating instance by graph6 string.  A
clean run is the desk-scale evidence that the implemented identities hold
exactly where they claim to.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement

from . import graph6
from .census import moment_system_residual, solve_reduced_census
from .closedform import (
    closed_form_eigenpairs,
    closed_form_mate_eigenpairs,
    closed_form_mate_spectrum,
    closed_form_spectrum,
    cubic_roots,
    cubic_value,
    multiplicity_of_one,
    verify_eigenpairs,
)
from .graphs import (
    CycleJoinParams,
    Graph,
    cone_cycles,
    cone_cycles_mate,
    degree_census,
    has_bipartite_component,
)
from .linalg import (
    cospectral,
    interlacing_check,
    multiplicity,
    spectrum,
    submatrix_lower_bound_check,
    verify_trace_identities,
)
from .enumeration import MAX_ENUM_ORDER, generate_all, _registry

BIPARTITE_TOL = 1e-7
MATCH_TOL = 1e-6
RESIDUAL_TOL = 1e-8

SWEEP_S = (1, 2, 3)
SWEEP_T = (1, 2)
SWEEP_LENGTHS = (3, 4, 5, 6)

COSPECTRAL_PAIR_PARAMS = (
    (1, (3,)),
    (2, (3,)),
    (3, (3,)),
    (1, (4, 3)),
    (2, (5, 3)),
)


def sweep_params(require_triangle: bool = False) -> list[CycleJoinParams]:
    """The family parameter sweep: s in {1,2,3}, t in {1,2}, lengths in 3..6.

    With require_triangle only parameter sets whose smallest cycle is a
    triangle are kept - exactly those where the mate family exists.
    """
    out = []
    for s in SWEEP_S:
        for t in SWEEP_T:
            for lens in combinations_with_replacement(sorted(SWEEP_LENGTHS, reverse=True), t):
                p = CycleJoinParams(s, lens)
                if p.n > 20:
                    continue
                if require_triangle and p.lengths[-1] != 3:
                    continue
                out.append(p)
    return out


def _chunks(items, k):
    k = max(1, k)
    size = (len(items) + k - 1) // k
    return [items[i:i + size] for i in range(0, len(items), size)] or [[]]


def _map_chunks(worker, graphs: list[Graph], jobs: int) -> list:
    if jobs <= 1 or len(graphs) < 2 * jobs:
        return worker(graphs)
    out = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(worker, _chunks(graphs, jobs)):
            out.extend(part)
    return out


def _trace_worker(graphs: list[Graph]) -> list[dict]:
    bad = []
    for g in graphs:
        if not verify_trace_identities(g):
            bad.append({"graph6": graph6.encode(g), "check": "trace_identities"})
        kn = spectrum(g).values[-1]
        if (kn < BIPARTITE_TOL) != has_bipartite_component(g):
            bad.append({"graph6": graph6.encode(g), "check": "bipartite_zero_eigenvalue"})
    return bad


def trace_suite(max_n: int = 7, jobs: int = 1) -> dict:
    """Exact power-trace identities plus the zero-eigenvalue / bipartite
    equivalence, over every isomorphism class of order <= max_n."""
    max_n = min(max_n, MAX_ENUM_ORDER)
    graphs = [g for n in range(1, max_n + 1) for g in generate_all(n)]
    violations = sorted(_map_chunks(_trace_worker, graphs, jobs), key=str)
    return {
        "suite": "trace",
        "max_n": max_n,
        "graphs": len(graphs),
        "violations": violations,
    }


def _interlacing_worker(graphs: list[Graph]) -> list[dict]:
    bad = []
    for g in graphs:
        for u, v in sorted(g.edges):
            if not interlacing_check(g, u, v):
                bad.append({"graph6": graph6.encode(g), "edge": [u, v], "check": "interlacing"})
    return bad


def interlacing_suite(max_n: int = 6, jobs: int = 1, seed: int = 0, random_instances: int = 1000) -> dict:
    """Edge-deletion interlacing over every (class, edge) pair of order
    3..max_n, plus seeded random weighted-submatrix lower-bound instances."""
    max_n = min(max_n, MAX_ENUM_ORDER)
    graphs = [g for n in range(3, max_n + 1) for g in generate_all(n)]
    violations = sorted(_map_chunks(_interlacing_worker, graphs, jobs), key=str)
    pairs = sum(g.m for g in graphs)

    rng = random.Random(seed)
    for i in range(random_instances):
        n = rng.randint(2, 10)
        g = Graph.build(n, ((a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.5))
        k = rng.randint(1, n)
        vertices = sorted(rng.sample(range(n), k))
        deg = g.degrees()
        mode = rng.random()
        if mode < 0.2:
            weights = [deg[v] for v in vertices]
        elif mode < 0.4:
            weights = [0.0] * k
        else:
            weights = [rng.uniform(0.0, deg[v]) for v in vertices]
        if not submatrix_lower_bound_check(g, vertices, weights):
            violations.append(
                {"graph6": graph6.encode(g), "instance": i, "check": "submatrix_lower_bound"}
            )
    return {
        "suite": "interlacing",
        "max_n": max_n,
        "edge_pairs": pairs,
        "random_instances": random_instances,
        "seed": seed,
        "violations": violations,
    }


def closedform_suite() -> dict:
    """Closed forms against the eigensolver over the parameter sweep, cubic
    root brackets up to n = 60, eigenvector residual/rank contracts, the
    eigenvalue-1 multiplicity formula, and the (n, s)-only dependence of the
    spectral extremes."""
    violations = []
    checks = 0

    for p in sweep_params():
        g = cone_cycles(p)
        numeric = spectrum(g).values
        closed = closed_form_spectrum(p).values()
        checks += 1
        if max(abs(a - b) for a, b in zip(closed, numeric)) > MATCH_TOL:
            violations.append({"graph6": graph6.encode(g), "params": [p.s, list(p.lengths)], "check": "closed_form_match"})
        if not verify_eigenpairs(g, closed_form_eigenpairs(p), tol=RESIDUAL_TOL):
            violations.append({"graph6": graph6.encode(g), "params": [p.s, list(p.lengths)], "check": "eigenpairs"})
        if multiplicity(spectrum(g), 1.0, MATCH_TOL) != multiplicity_of_one(p):
            violations.append({"graph6": graph6.encode(g), "params": [p.s, list(p.lengths)], "check": "multiplicity_of_one"})

    for p in sweep_params(require_triangle=True):
        h = cone_cycles_mate(p)
        numeric = spectrum(h).values
        closed = closed_form_mate_spectrum(p).values()
        checks += 1
        if max(abs(a - b) for a, b in zip(closed, numeric)) > MATCH_TOL:
            violations.append({"graph6": graph6.encode(h), "params": [p.s, list(p.lengths)], "check": "closed_form_mate_match"})
        if not verify_eigenpairs(h, closed_form_mate_eigenpairs(p), tol=RESIDUAL_TOL):
            violations.append({"graph6": graph6.encode(h), "params": [p.s, list(p.lengths)], "check": "mate_eigenpairs"})

    for n in range(7, 61):
        for s in range(1, n - 3):
            r1, r2, r3 = cubic_roots(n, s)
            checks += 1
            ok = n < r1 < n + 1 and 2 < r2 < 5 and 0 < r3 < 1
            ok = ok and all(abs(cubic_value(n, s, r)) <= 1e-9 for r in (r1, r2, r3))
            if not ok:
                violations.append({"params": [n, s], "check": "cubic_root_brackets"})

    decomps = [CycleJoinParams(2, (10,)), CycleJoinParams(2, (7, 3)), CycleJoinParams(2, (6, 4))]
    tops = [spectrum(cone_cycles(p)).values[0] for p in decomps]
    bottoms = [spectrum(cone_cycles(p)).values[-1] for p in decomps]
    checks += 1
    if max(tops) - min(tops) > 1e-9 or max(bottoms) - min(bottoms) > 1e-9:
        violations.append({"params": [13, 2], "check": "extremes_depend_on_order_and_pendants"})

    return {"suite": "closedform", "checks": checks, "violations": violations}


def census_suite(max_n: int = 7) -> dict:
    """Exact cospectrality of the triangle-to-star pairs with vanishing
    census residuals, the same residual on every enumerated cospectral pair
    in degree scope, and the reduced-census identity."""
    max_n = min(max_n, MAX_ENUM_ORDER)
    violations = []
    checks = 0

    for s, lens in COSPECTRAL_PAIR_PARAMS:
        p = CycleJoinParams(s, lens)
        g, h = cone_cycles(p), cone_cycles_mate(p)
        checks += 1
        if not cospectral(g, h):
            violations.append({"graph6": graph6.encode(g), "check": "pair_cospectral"})
        if moment_system_residual(degree_census(g), degree_census(h)) != (0, 0, 0):
            violations.append({"graph6": graph6.encode(g), "check": "pair_census_residual"})

    def in_scope(g: Graph) -> bool:
        c = degree_census(g)
        return all(k in (1, 2, 3, 4) for k in c.counts)

    for n in range(2, max_n + 1):
        groups = {}
        for key, coeffs, g in _registry(n):
            groups.setdefault(coeffs, []).append(g)
        for members in groups.values():
            for i, a in enumerate(members):
                for b in members[i + 1:]:
                    if not (in_scope(a) and in_scope(b)):
                        continue
                    checks += 1
                    if moment_system_residual(degree_census(a), degree_census(b)) != (0, 0, 0):
                        violations.append(
                            {"graph6": [graph6.encode(a), graph6.encode(b)], "check": "census_residual"}
                        )

    for n in range(5, 40, 7):
        for s in range(0, n - 4):
            checks += 1
            r = solve_reduced_census(n, s, 0)
            if (r.n1, r.n2, r.n3, r.feasible) != (s, 0, n - s - 1, True):
                violations.append({"params": [n, s], "check": "reduced_census_base"})

    return {"suite": "census", "max_n": max_n, "checks": checks, "violations": violations}


def run_suite(name: str, max_n: "int | None" = None, jobs: int = 1, seed: int = 0) -> dict:
    if name == "trace":
        return trace_suite(max_n=7 if max_n is None else max_n, jobs=jobs)
    if name == "interlacing":
        return interlacing_suite(max_n=6 if max_n is None else max_n, jobs=jobs, seed=seed)
    if name == "closedform":
        return closedform_suite()
    if name == "census":
        return census_suite(max_n=7 if max_n is None else max_n)
    raise KeyError(name)
