"""Acceptance checks: every contract the package is built around, end to end.

Each test prints one PASS/FAIL line (run with -s to see them all).  The
weighted-submatrix threshold check asserts theta_2 > 5 for every apex weight
in 12..30; exact arithmetic shows det(5I - M(d)) = 4(d - 20), so theta_2
reaches 5 only at weight 20 and exceeds it from 21 on.  That check therefore
fails for weights 12..20 and documents the true threshold.
"""

import time
from itertools import combinations

import numpy as np
import pytest

from qspectral import (
    CycleJoinParams,
    canonical_form,
    char_poly_exact,
    closed_form_eigenpairs,
    closed_form_mate_eigenpairs,
    closed_form_mate_spectrum,
    closed_form_spectrum,
    complete,
    cone_cycles,
    cone_cycles_mate,
    cubic_roots,
    degree_census,
    disjoint_union,
    empty_graph,
    generate_all,
    has_bipartite_component,
    interlacing_check,
    join,
    moment_system_residual,
    multiplicity,
    multiplicity_of_one,
    spectrum,
    theta,
    verify_eigenpairs,
    verify_trace_identities,
    z_tree,
)
from qspectral.enumeration import _registry
from qspectral.suites import sweep_params

PAIR_PARAMS = [(1, (3,)), (2, (3,)), (3, (3,)), (1, (4, 3)), (2, (5, 3))]


def report(name: str, ok: bool, started: float, budget: float):
    elapsed = time.time() - started
    print(f"{'PASS' if ok else 'FAIL'}  {name}  ({elapsed:.2f}s, budget {budget:.0f}s)")
    assert ok, name
    assert elapsed < budget, f"{name}: {elapsed:.2f}s exceeded {budget:.0f}s"


def test_cospectral_pairs_exact():
    t0 = time.time()
    ok = True
    for s, lens in PAIR_PARAMS:
        p = CycleJoinParams(s, lens)
        ok = ok and char_poly_exact(cone_cycles(p)) == char_poly_exact(cone_cycles_mate(p))
    report("triangle-to-star pairs are exactly Q-cospectral (orders 5,6,7,9,11)", ok, t0, 1.0)


def test_closed_form_matches_eigensolver():
    t0 = time.time()
    ok = True
    for p in sweep_params():
        closed = closed_form_spectrum(p).values()
        numeric = spectrum(cone_cycles(p)).values
        ok = ok and max(abs(a - b) for a, b in zip(closed, numeric)) <= 1e-6
    for p in sweep_params(require_triangle=True):
        closed = closed_form_mate_spectrum(p).values()
        numeric = spectrum(cone_cycles_mate(p)).values
        ok = ok and max(abs(a - b) for a, b in zip(closed, numeric)) <= 1e-6
    report("closed-form spectra match the eigensolver entrywise (1e-6)", ok, t0, 10.0)


def test_cubic_root_brackets():
    t0 = time.time()
    ok = True
    for n in range(7, 61):
        for s in range(1, n - 3):
            r1, r2, r3 = cubic_roots(n, s)
            ok = ok and n < r1 < n + 1 and 2 < r2 < 5 and 0 < r3 < 1
            for r in (r1, r2, r3):
                value = r ** 3 - (n + 5) * r ** 2 + 5 * n * r - 4 * (n - s - 1)
                ok = ok and abs(value) <= 1e-9
    report("cubic roots stay in their brackets with residual <= 1e-9 (n up to 60)", ok, t0, 1.0)


def test_eigenvector_residuals_and_rank():
    t0 = time.time()
    ok = True
    for p in sweep_params():
        ok = ok and verify_eigenpairs(cone_cycles(p), closed_form_eigenpairs(p), tol=1e-8)
    for p in sweep_params(require_triangle=True):
        ok = ok and verify_eigenpairs(cone_cycles_mate(p), closed_form_mate_eigenpairs(p), tol=1e-8)
    report("explicit eigenvectors: residual <= 1e-8 and full rank", ok, t0, 10.0)


def test_trace_identities_exhaustive():
    t0 = time.time()
    count = 0
    ok = True
    for n in range(1, 8):
        for g in generate_all(n):
            count += 1
            ok = ok and verify_trace_identities(g)
    ok = ok and count == 1252
    report(f"power-trace identities hold exactly on all {count} classes (n <= 7)", ok, t0, 30.0)


def test_edge_interlacing_exhaustive():
    t0 = time.time()
    ok = True
    pairs = 0
    for n in range(3, 7):
        for g in generate_all(n):
            for u, v in sorted(g.edges):
                pairs += 1
                ok = ok and interlacing_check(g, u, v, tol=1e-8)
    report(f"edge-deletion interlacing holds on all {pairs} (graph, edge) pairs (n <= 6)", ok, t0, 60.0)


def test_bipartite_zero_eigenvalue_equivalence():
    t0 = time.time()
    ok = True
    for n in range(1, 8):
        for g in generate_all(n):
            ok = ok and (spectrum(g).values[-1] < 1e-7) == has_bipartite_component(g)
    report("smallest eigenvalue < 1e-7 iff a bipartite component exists (n <= 7)", ok, t0, 30.0)


def test_eigenvalue_one_multiplicity_formula():
    t0 = time.time()
    ok = True
    for p in sweep_params():
        ok = ok and multiplicity(spectrum(cone_cycles(p)), 1.0, 1e-6) == multiplicity_of_one(p)
    report("multiplicity of eigenvalue 1 equals pendants-1 plus even cycles", ok, t0, 10.0)


def test_exhaustive_mate_search_small_orders():
    t0 = time.time()
    from qspectral import find_q_cospectral_mates

    p5 = CycleJoinParams(1, (3,))
    mates5 = find_q_cospectral_mates(cone_cycles(p5))
    ok = len(mates5) == 1
    ok = ok and canonical_form(mates5[0]).graph6 == canonical_form(cone_cycles_mate(p5)).graph6

    p7 = CycleJoinParams(3, (3,))
    mates7 = {canonical_form(m).graph6 for m in find_q_cospectral_mates(cone_cycles(p7))}
    ok = ok and canonical_form(cone_cycles_mate(p7)).graph6 in mates7
    report("exhaustive mate search: unique mate at order 5, predicted mate found at order 7", ok, t0, 120.0)


def test_cone_over_chair_second_eigenvalue():
    t0 = time.time()
    g = join(complete(1), disjoint_union(z_tree(6), empty_graph(15)))
    ok = g.n == 22 and spectrum(g).kappa(2) > 5.0
    report("kappa_2 of the order-22 cone over (Z6 + 15 isolated) exceeds 5", ok, t0, 1.0)


def test_weighted_submatrix_threshold():
    t0 = time.time()
    ok = True
    for d in range(12, 31):
        M = [[d, 1, 1, 1, 1], [1, 4, 1, 1, 1], [1, 1, 3, 0, 0], [1, 1, 0, 3, 0], [1, 1, 0, 0, 2]]
        ok = ok and theta(M, 2) > 5.0
    report("theta_2 of the weighted 5x5 submatrix exceeds 5 for apex weights 12..30", ok, t0, 1.0)


def test_moment_system_on_cospectral_pairs():
    t0 = time.time()
    ok = True
    for s, lens in PAIR_PARAMS:
        p = CycleJoinParams(s, lens)
        res = moment_system_residual(degree_census(cone_cycles(p)), degree_census(cone_cycles_mate(p)))
        ok = ok and res == (0, 0, 0)
    checked = 0
    for n in range(2, 8):
        groups = {}
        for key, coeffs, g in _registry(n):
            groups.setdefault(coeffs, []).append(g)
        for members in groups.values():
            for a, b in combinations(members, 2):
                ca, cb = degree_census(a), degree_census(b)
                if all(k in (1, 2, 3, 4) for k in ca.counts) and all(k in (1, 2, 3, 4) for k in cb.counts):
                    checked += 1
                    ok = ok and moment_system_residual(ca, cb) == (0, 0, 0)
    ok = ok and checked > 0
    report(f"census residuals vanish on the family pairs and {checked} enumerated pairs (n <= 7)", ok, t0, 60.0)


def test_spectral_extremes_depend_only_on_order_and_pendants():
    t0 = time.time()
    decomps = (CycleJoinParams(2, (10,)), CycleJoinParams(2, (7, 3)), CycleJoinParams(2, (6, 4)))
    tops, bottoms = [], []
    for p in decomps:
        assert p.n == 13
        vals = spectrum(cone_cycles(p)).values
        tops.append(vals[0])
        bottoms.append(vals[-1])
    ok = max(tops) - min(tops) <= 1e-9 and max(bottoms) - min(bottoms) <= 1e-9
    report("extreme eigenvalues agree across cycle decompositions (n=13, s=2, 1e-9)", ok, t0, 10.0)
