import random
from itertools import permutations

import networkx as nx
import pytest

from qspectral import (
    CycleJoinParams,
    Graph,
    InvalidParameterError,
    UnsupportedOrderError,
    canonical_form,
    char_poly_exact,
    complete,
    cone_cycles,
    cone_cycles_mate,
    cycle,
    dqs_report,
    find_q_cospectral_mates,
    generate_all,
    path,
)
from qspectral.enumeration import _min_bits, _registry

# number of isomorphism classes of simple graphs on n vertices
CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def random_graph(rng, n, p=0.5):
    return Graph.build(n, ((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p))


def permuted(g: Graph, perm) -> Graph:
    return Graph.build(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def brute_force_class_count(n: int) -> int:
    """Independent oracle: enumerate all labelled graphs, dedup by canonical form."""
    seen = set()
    nb = n * (n - 1) // 2
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for bits in range(1 << nb):
        adj = [0] * n
        for idx, (i, j) in enumerate(pairs):
            if (bits >> (nb - 1 - idx)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        seen.add(_min_bits(tuple(adj), n))
    return len(seen)


class TestCanonicalForm:
    def test_invariant_under_permutations(self):
        rng = random.Random(21)
        g = cone_cycles(CycleJoinParams(1, (3,)))
        base = canonical_form(g).graph6
        for _ in range(50):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(permuted(g, perm)).graph6 == base

    def test_path_relabellings_collapse(self):
        forms = {
            canonical_form(permuted(path(3), perm)).graph6
            for perm in permutations(range(3))
        }
        assert len(forms) == 1

    def test_distinguishes_path_from_triangle(self):
        assert canonical_form(path(3)).graph6 != canonical_form(complete(3)).graph6

    def test_agrees_with_networkx_isomorphism(self):
        rng = random.Random(22)
        for _ in range(200):
            n = rng.randint(1, 7)
            a, b = random_graph(rng, n), random_graph(rng, n)
            same = canonical_form(a).graph6 == canonical_form(b).graph6
            na, nb_ = nx.empty_graph(n), nx.empty_graph(n)
            na.add_edges_from(a.edges)
            nb_.add_edges_from(b.edges)
            assert same == nx.is_isomorphic(na, nb_)

    def test_order_cap(self):
        with pytest.raises(UnsupportedOrderError):
            canonical_form(Graph.build(11))


class TestGenerateAll:
    def test_counts_match_known_sequence(self):
        for n in range(1, 8):
            assert sum(1 for _ in generate_all(n)) == CLASS_COUNTS[n]

    def test_counts_match_brute_force_oracle(self):
        for n in range(1, 6):
            assert brute_force_class_count(n) == CLASS_COUNTS[n]

    def test_counts_match_brute_force_oracle_n6(self):
        assert brute_force_class_count(6) == CLASS_COUNTS[6]

    def test_no_duplicate_classes(self):
        for n in range(1, 7):
            forms = [canonical_form(g).graph6 for g in generate_all(n)]
            assert len(forms) == len(set(forms))

    def test_yields_are_canonically_labelled(self):
        from qspectral import encode

        for g in generate_all(5):
            assert encode(g) == canonical_form(g).graph6

    def test_order_validation(self):
        with pytest.raises(UnsupportedOrderError):
            list(generate_all(0))
        with pytest.raises(UnsupportedOrderError):
            list(generate_all(9))


class TestMateSearch:
    def test_single_vertex_has_no_mates(self):
        assert find_q_cospectral_mates(complete(1)) == []

    def test_smallest_pair_is_exclusive(self):
        p = CycleJoinParams(1, (3,))
        mates = find_q_cospectral_mates(cone_cycles(p))
        assert len(mates) == 1
        assert canonical_form(mates[0]).graph6 == canonical_form(cone_cycles_mate(p)).graph6

    def test_cone_over_square_is_determined_at_order_5(self):
        # scan result: without pendants there is no triangle-to-star swap, and
        # no other class of order 5 shares the spectrum either
        assert find_q_cospectral_mates(cone_cycles(CycleJoinParams(0, (4,)))) == []

    def test_search_accepts_any_labelling(self):
        rng = random.Random(23)
        p = CycleJoinParams(1, (3,))
        g = cone_cycles(p)
        perm = list(range(g.n))
        rng.shuffle(perm)
        mates = find_q_cospectral_mates(permuted(g, perm))
        assert len(mates) == 1

    def test_mate_relation_is_symmetric(self):
        for n in range(2, 7):
            groups = {}
            for key, coeffs, g in _registry(n):
                groups.setdefault(coeffs, []).append(key)
            for members in groups.values():
                if len(members) < 2:
                    continue
                for key in members:
                    g = next(gg for k, _, gg in _registry(n) if k == key)
                    found = {canonical_form(m).graph6 for m in find_q_cospectral_mates(g)}
                    assert found == set(members) - {key}

    def test_order_cap(self):
        with pytest.raises(UnsupportedOrderError):
            find_q_cospectral_mates(cycle(9))


class TestDqsReport:
    def test_smallest_pair_report(self):
        rep = dqs_report("g", CycleJoinParams(1, (3,)))
        assert rep.matches_prediction
        assert rep.mates == [rep.predicted_mate]
        out = rep.to_json()
        assert out["order"] == 5 and out["fingerprint"][0] == "1"

    def test_h_side_points_back(self):
        rep = dqs_report("h", CycleJoinParams(1, (3,)))
        assert rep.predicted_mate == canonical_form(cone_cycles(CycleJoinParams(1, (3,)))).graph6
        assert rep.matches_prediction

    def test_k4_is_determined_at_order_4(self):
        rep = dqs_report("g", CycleJoinParams(0, (3,)))
        assert rep.mates == [] and rep.predicted_mate is None and rep.matches_prediction

    def test_kind_validation(self):
        with pytest.raises(InvalidParameterError):
            dqs_report("x", CycleJoinParams(1, (3,)))
        with pytest.raises(UnsupportedOrderError):
            dqs_report("g", CycleJoinParams(1, (5, 3)))


class TestFingerprints:
    def test_mate_counts_per_order(self):
        # graphs sharing their exact Q-characteristic polynomial with another class
        from collections import Counter

        expected = {4: 2, 5: 4, 6: 16, 7: 102}
        for n, want in expected.items():
            groups = Counter()
            for _, coeffs, _ in _registry(n):
                groups[coeffs] += 1
            assert sum(c for c in groups.values() if c >= 2) == want

    def test_cospectral_groups_are_distinct_classes(self):
        import networkx as nx

        for n in range(4, 7):
            groups = {}
            for key, coeffs, g in _registry(n):
                groups.setdefault(coeffs, []).append(g)
            for members in groups.values():
                for i, a in enumerate(members):
                    for b in members[i + 1:]:
                        na, nb_ = nx.empty_graph(n), nx.empty_graph(n)
                        na.add_edges_from(a.edges)
                        nb_.add_edges_from(b.edges)
                        assert not nx.is_isomorphic(na, nb_)

    def test_cospectral_mates_share_moments(self):
        from qspectral import moments, verify_trace_identities

        for n in range(2, 7):
            groups = {}
            for key, coeffs, g in _registry(n):
                groups.setdefault(coeffs, []).append(g)
            for members in groups.values():
                if len(members) < 2:
                    continue
                base = moments(members[0])
                for g in members:
                    assert verify_trace_identities(g)
                    assert moments(g) == base
