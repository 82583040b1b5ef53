"""Simple undirected graphs and the cone-over-cycles join constructions.

Vertices are labelled 0..n-1 and a graph is an immutable value: a vertex
count together with a frozenset of edges (i, j) with i < j.  Every operation
is a pure function returning a new graph, so values can be shared freely and
used as dict keys.

The two join families built here are

    cone_cycles(p)       =  K1 v (C_l1 u ... u C_lt u s*K1)
    cone_cycles_mate(p)  =  K1 v (K_{1,3} u C_l1 u ... u C_l(t-1) u (s-1)*K1)

with a fixed vertex layout (pendants, cycle blocks, apex last) so that the
closed-form eigenvectors can be written down positionally.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InvalidParameterError, NotFoundError, PreconditionError


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidParameterError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise InvalidParameterError(f"bad edge {e} for order {self.n}")

    @classmethod
    def build(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        """Normalise endpoint order and drop duplicate pairs."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def adjacency_masks(self) -> list[int]:
        """Neighbourhood of each vertex as a bitmask (bit v set iff adjacent)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def neighbors(self, v: int) -> set[int]:
        if not 0 <= v < self.n:
            raise NotFoundError(f"vertex {v} not in graph of order {self.n}")
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out


@dataclass(frozen=True)
class CycleJoinParams:
    """Parameters (s, l_1 >= ... >= l_t) of the cone-over-cycles families.

    s counts the isolated vertices joined to the apex (they become pendants),
    lengths are the cycle sizes.  Lengths are normalised to non-increasing
    order on construction; the resulting graph order is n = 1 + s + sum(l_i).
    """

    s: int
    lengths: tuple

    def __post_init__(self):
        if not isinstance(self.s, int) or self.s < 0:
            raise InvalidParameterError(f"pendant count must be a nonnegative integer, got {self.s!r}")
        lens = tuple(sorted(self.lengths, reverse=True))
        if len(lens) < 1:
            raise InvalidParameterError("at least one cycle length is required")
        for l in lens:
            if not isinstance(l, int) or l < 3:
                raise InvalidParameterError(f"cycle length must be an integer >= 3, got {l!r}")
        object.__setattr__(self, "lengths", lens)

    @property
    def t(self) -> int:
        return len(self.lengths)

    @property
    def n(self) -> int:
        return 1 + self.s + sum(self.lengths)


@dataclass
class DegreeCensus:
    """Maximum degree d1 plus degree counts over all vertices except v1.

    v1 is the lowest-index vertex attaining the maximum degree; the choice is
    recorded so callers can see which vertex was excluded when the maximum is
    not unique.
    """

    d1: int
    counts: dict
    v1: int


# ---------------------------------------------------------------------------
# standard graphs


def empty_graph(n: int) -> Graph:
    return Graph.build(n)


def complete(n: int) -> Graph:
    if n < 0:
        raise InvalidParameterError("complete graph needs n >= 0")
    return Graph.build(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"path needs at least 1 vertex, got {n}")
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise InvalidParameterError("complete bipartite parts must be nonnegative")
    return Graph.build(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def z_tree(n: int) -> Graph:
    """Path 1-2-...-(n-1) with vertex 0 duplicating the pendant 1 (both hang on 2).

    z_tree(4) is the star K_{1,3}; z_tree(5) is the chair.
    """
    if n < 4:
        raise InvalidParameterError(f"z_tree needs at least 4 vertices, got {n}")
    edges = [(i, i + 1) for i in range(1, n - 1)]
    edges.append((0, 2))
    return Graph.build(n, edges)


# ---------------------------------------------------------------------------
# combining and editing


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; b's vertices are shifted up by a.n."""
    off = a.n
    edges = set(a.edges)
    edges.update((u + off, v + off) for u, v in b.edges)
    return Graph.build(a.n + b.n, edges)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    g = disjoint_union(a, b)
    edges = set(g.edges)
    edges.update((u, a.n + v) for u in range(a.n) for v in range(b.n))
    return Graph.build(g.n, edges)


def delete_vertex(G: Graph, v: int) -> Graph:
    """Remove v and compact the remaining labels, preserving their order."""
    if not 0 <= v < G.n:
        raise NotFoundError(f"vertex {v} not in graph of order {G.n}")
    relabel = {u: (u if u < v else u - 1) for u in range(G.n) if u != v}
    edges = ((relabel[a], relabel[b]) for a, b in G.edges if v not in (a, b))
    return Graph.build(G.n - 1, edges)


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    if not G.has_edge(u, v):
        raise NotFoundError(f"edge ({u}, {v}) not in graph")
    e = (min(u, v), max(u, v))
    return Graph(G.n, G.edges - {e})


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by the given vertices, relabelled in sorted order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < G.n:
            raise NotFoundError(f"vertex {v} not in graph of order {G.n}")
    relabel = {v: i for i, v in enumerate(vs)}
    keep = set(vs)
    edges = ((relabel[a], relabel[b]) for a, b in G.edges if a in keep and b in keep)
    return Graph.build(len(vs), edges)


# ---------------------------------------------------------------------------
# the join families

def cone_cycles(p: CycleJoinParams) -> Graph:
    """K1 v (C_l1 u ... u C_lt u s*K1).

    Layout: pendants 0..s-1, then each cycle as a consecutive block (in the
    normalised non-increasing length order), apex last at n-1.
    """
    n = p.n
    apex = n - 1
    edges = [(i, apex) for i in range(p.s)]
    pos = p.s
    for l in p.lengths:
        block = range(pos, pos + l)
        edges.extend((pos + i, pos + (i + 1) % l) for i in range(l))
        edges.extend((w, apex) for w in block)
        pos += l
    return Graph.build(n, edges)


def cone_cycles_mate(p: CycleJoinParams) -> Graph:
    """K1 v (K_{1,3} u C_l1 u ... u C_l(t-1) u (s-1)*K1), same order as cone_cycles(p).

    The parameters are read on the cone_cycles side: the (smallest) cycle of
    length 3 is replaced by the star K_{1,3} and one pendant is absorbed as
    the star's fourth vertex, which keeps the two graphs index-aligned.

    Layout: pendants 0..s-2, cycle blocks for l_1..l_(t-1), star centre at
    n-5, the three leaves at n-4..n-2, apex at n-1.
    """
    if p.s < 1:
        raise InvalidParameterError("the mate family needs at least one pendant (s >= 1)")
    if p.lengths[-1] != 3:
        raise InvalidParameterError("the mate family needs a cycle of length 3 to convert into K_{1,3}")
    n = p.n
    apex = n - 1
    centre = n - 5
    leaves = (n - 4, n - 3, n - 2)
    edges = [(i, apex) for i in range(p.s - 1)]
    pos = p.s - 1
    for l in p.lengths[:-1]:
        block = range(pos, pos + l)
        edges.extend((pos + i, pos + (i + 1) % l) for i in range(l))
        edges.extend((w, apex) for w in block)
        pos += l
    edges.extend((centre, w) for w in leaves)
    edges.append((centre, apex))
    edges.extend((w, apex) for w in leaves)
    return Graph.build(n, edges)


# ---------------------------------------------------------------------------
# invariants and structure


def triangle_count(G: Graph) -> int:
    """Exact number of 3-cliques, via bitmask intersection over edges."""
    masks = G.adjacency_masks()
    total = 0
    for u, v in G.edges:
        common = masks[u] & masks[v]
        # count common neighbours above v so each triangle is seen once
        total += bin(common >> (v + 1)).count("1")
    return total


def degree_census(G: Graph) -> DegreeCensus:
    """Degree counts of all vertices except one designated max-degree vertex.

    Ties for the maximum degree are broken by lowest index.
    """
    if G.n < 1:
        raise PreconditionError("degree census needs at least one vertex")
    deg = G.degrees()
    d1 = max(deg)
    v1 = deg.index(d1)
    counts = Counter(d for v, d in enumerate(deg) if v != v1)
    return DegreeCensus(d1=d1, counts=dict(counts), v1=v1)


def apex_vertex(G: Graph) -> Optional[int]:
    """Lowest-index vertex adjacent to all others, or None."""
    for v, d in enumerate(G.degrees()):
        if d == G.n - 1:
            return v
    return None


def connected_components(G: Graph) -> list[list[int]]:
    masks = G.adjacency_masks()
    seen = [False] * G.n
    comps = []
    for start in range(G.n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            rest = masks[v]
            while rest:
                w = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(connected_components(G)) == 1


def _classify_component(sub: Graph) -> tuple[str, int]:
    """Classify a connected graph as ("P", k), ("C", l), ("Z", q) or ("OTHER", k).

    Z_q is the spider with leg lengths (1, 1, q-3): a path of q-1 vertices
    with one pendant duplicated.  Z_4 = K_{1,3}.
    """
    k = sub.n
    deg = sub.degrees()
    ds = sorted(deg, reverse=True)
    if sub.m == k - 1:  # tree
        if k == 1:
            return ("P", 1)
        if ds[0] <= 2:
            return ("P", k)
        if k >= 4 and ds[0] == 3 and ds[1] <= 2 and ds.count(1) == 3:
            centre = deg.index(3)
            leaf_nbrs = sum(1 for w in sub.neighbors(centre) if deg[w] == 1)
            if leaf_nbrs >= 2:
                return ("Z", k)
        return ("OTHER", k)
    if sub.m == k and k >= 3 and all(d == 2 for d in deg):
        return ("C", k)
    return ("OTHER", k)


def cone_components(G: Graph) -> list[tuple[str, int]]:
    """Classify the components left after deleting the apex.

    Requires a vertex adjacent to all others.  Each component is reported as
    ("Z", q), ("C", l), ("P", k) or ("OTHER", size); the list is sorted for
    deterministic output.
    """
    apex = apex_vertex(G)
    if apex is None:
        raise PreconditionError("graph has no vertex adjacent to all others")
    H = delete_vertex(G, apex)
    out = [_classify_component(induced_subgraph(H, comp)) for comp in connected_components(H)]
    return sorted(out)


def has_bipartite_component(G: Graph) -> bool:
    """True iff some connected component admits a proper 2-colouring."""
    masks = G.adjacency_masks()
    colour = [-1] * G.n
    for start in range(G.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        queue = [start]
        ok = True
        while queue:
            v = queue.pop()
            rest = masks[v]
            while rest:
                w = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if colour[w] == -1:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    ok = False
        if ok:
            return True
    return False
