import random

import networkx as nx
import pytest

from qspectral import Graph, Graph6ParseError, UnsupportedOrderError, complete, cycle, decode, encode
from qspectral.graph6 import read_file, write_file


def random_graph(rng, n, p=0.5):
    return Graph.build(n, ((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p))


def test_hand_encoded_values():
    # C4 labelled 0-1-2-3-0: bits x01 x02 x12 x03 x13 x23 = 101101 -> 45 + 63 = 'l'
    assert encode(cycle(4)) == "Cl"
    assert encode(complete(1)) == "@"
    assert encode(Graph.build(0)) == "?"


def test_round_trip_random(tmp_path):
    rng = random.Random(3)
    graphs = [random_graph(rng, rng.randint(0, 12)) for _ in range(100)]
    for g in graphs:
        assert decode(encode(g)) == g
    p = tmp_path / "batch.g6"
    assert write_file(p, graphs) == len(graphs)
    assert read_file(p) == graphs


def test_matches_networkx():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 20))
        ours = encode(g)
        theirs = nx.to_graph6_bytes(
            nx.from_edgelist(g.edges, nx.Graph()) if g.m else nx.empty_graph(g.n),
            header=False,
        ).decode().strip()
        if g.m:  # from_edgelist drops isolated vertices; rebuild with all of them
            H = nx.Graph()
            H.add_nodes_from(range(g.n))
            H.add_edges_from(g.edges)
            theirs = nx.to_graph6_bytes(H, header=False).decode().strip()
        assert ours == theirs
        back = nx.from_graph6_bytes(ours.encode())
        assert set(map(tuple, map(sorted, back.edges()))) == set(g.edges)


def test_parse_errors_carry_offsets():
    with pytest.raises(Graph6ParseError) as err:
        decode("")
    assert err.value.offset == 0
    with pytest.raises(Graph6ParseError) as err:
        decode("~??")
    assert err.value.offset == 0
    with pytest.raises(Graph6ParseError) as err:
        decode("C")  # order 4 needs one data byte
    assert err.value.offset == 1
    with pytest.raises(Graph6ParseError) as err:
        decode("Cl ")
    with pytest.raises(Graph6ParseError) as err:
        decode("C" + chr(20))
    assert err.value.offset == 1
    with pytest.raises(Graph6ParseError) as err:
        decode("B~")  # order 3: last four bits are padding and must be zero
    assert err.value.offset == 1


def test_encode_order_cap():
    with pytest.raises(UnsupportedOrderError):
        encode(Graph.build(63))
