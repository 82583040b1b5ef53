"""Isomorph-free small-graph generation and Q-cospectral mate search.

Canonical form: the lexicographically minimal upper-triangle adjacency bit
vector (column order, the same order graph6 uses) over all vertex
permutations.  The minimiser is a level-by-level search that keeps every
prefix attaining the minimal bits so far; interchangeable (twin) candidates
are collapsed, which tames the symmetric worst cases without losing
exactness.

Generation uses canonical augmentation.  The minimal bit vector is
prefix-hereditary: dropping the last canonical vertex leaves a canonically
labelled graph.  So each canonically labelled parent is extended by one new
last vertex over all neighbour subsets, and a child survives iff it is
itself canonically labelled - every isomorphism class is produced exactly
once, with no global dedup memory.

The spectral fingerprint is the exact integer characteristic polynomial, so
mate search involves no tolerances at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from . import graph6
from .closedform import cospectral_mate
from .errors import InvalidParameterError, UnsupportedOrderError
from .graphs import CycleJoinParams, Graph, cone_cycles, cone_cycles_mate
from .linalg import char_poly_exact

MAX_ENUM_ORDER = 8  # 12346 classes at n = 8 keeps a full run in minutes
MAX_CANON_ORDER = 10


def _twin_classes(adj: tuple, n: int) -> list[int]:
    """Class labels under interchangeability: u, v are twins when swapping
    them is an automorphism, i.e. N(u) - {v} equals N(v) - {u}."""
    cls = list(range(n))
    for v in range(1, n):
        for u in range(v):
            if (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)):
                cls[v] = cls[u]
                break
    return cls


def _min_bits(adj: tuple, n: int, built_cols: Optional[list[int]] = None) -> Optional[int]:
    """Minimal adjacency bit vector over all vertex orderings.

    With built_cols (the per-position column bits of the labelling as given)
    the search aborts with None as soon as the minimum drops below the given
    labelling - the canonical-child test needs only that comparison.
    """
    if n <= 1:
        return 0
    twin = _twin_classes(adj, n)
    survivors = [((), 0)]
    bits = 0
    for k in range(n):
        best = -1
        chosen = []
        for placed, mask in survivors:
            seen = set()
            for v in range(n):
                bit = 1 << v
                if mask & bit:
                    continue
                t = twin[v]
                if t in seen:
                    continue
                seen.add(t)
                av = adj[v]
                col = 0
                for u in placed:
                    col = (col << 1) | ((av >> u) & 1)
                if best < 0 or col < best:
                    best = col
                    chosen = [(placed + (v,), mask | bit)]
                elif col == best:
                    chosen.append((placed + (v,), mask | bit))
        if built_cols is not None and best < built_cols[k]:
            return None
        bits = (bits << k) | best
        survivors = chosen
    return bits


def _built_cols(adj: tuple, n: int) -> list[int]:
    cols = []
    for k in range(n):
        av = adj[k]
        col = 0
        for u in range(k):
            col = (col << 1) | ((av >> u) & 1)
        cols.append(col)
    return cols


def _graph_to_adj(G: Graph) -> tuple:
    return tuple(G.adjacency_masks())


def _adj_to_graph(adj: tuple) -> Graph:
    n = len(adj)
    return Graph.build(n, ((i, j) for i in range(n) for j in range(i + 1, n) if (adj[i] >> j) & 1))


@dataclass(frozen=True)
class CanonicalForm:
    """Permutation-invariant graph6 string of the minimal-bit-vector labelling."""

    graph6: str


def canonical_form(G: Graph) -> CanonicalForm:
    """Canonical form of G; equal strings exactly characterise isomorphism."""
    if G.n > MAX_CANON_ORDER:
        raise UnsupportedOrderError(f"canonical form supports n <= {MAX_CANON_ORDER}, got {G.n}")
    bits = _min_bits(_graph_to_adj(G), G.n)
    return CanonicalForm(graph6.encode_bits(G.n, bits))


@lru_cache(maxsize=None)
def _canonical_reps(n: int) -> tuple:
    """All canonically labelled representatives of order n, as adjacency tuples."""
    if n == 1:
        return ((0,),)
    reps = []
    for parent in _canonical_reps(n - 1):
        for subset in range(1 << (n - 1)):
            child = tuple(
                (row | (1 << (n - 1))) if (subset >> i) & 1 else row
                for i, row in enumerate(parent)
            ) + (subset,)
            cols = _built_cols(child, n)
            if _min_bits(child, n, cols) is not None:
                reps.append(child)
    return tuple(reps)


def generate_all(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of order n, 1 <= n <= 8."""
    if not isinstance(n, int) or not 1 <= n <= MAX_ENUM_ORDER:
        raise UnsupportedOrderError(f"generation supports 1 <= n <= {MAX_ENUM_ORDER}, got {n}")
    for adj in _canonical_reps(n):
        yield _adj_to_graph(adj)


@lru_cache(maxsize=None)
def _registry(n: int) -> tuple:
    """(graph6, char-poly coefficients, Graph) per class of order n."""
    out = []
    for adj in _canonical_reps(n):
        g = _adj_to_graph(adj)
        out.append((graph6.encode(g), char_poly_exact(g).coefficients, g))
    return tuple(out)


def find_q_cospectral_mates(G: Graph) -> list[Graph]:
    """All classes of the same order sharing G's exact Q-characteristic
    polynomial, except G's own class.  Empty means G is determined by its
    Q-spectrum at this order."""
    if G.n > MAX_ENUM_ORDER or G.n < 1:
        raise UnsupportedOrderError(f"mate search supports 1 <= n <= {MAX_ENUM_ORDER}, got {G.n}")
    own = canonical_form(G).graph6
    poly = char_poly_exact(G).coefficients
    return [g for key, coeffs, g in _registry(G.n) if coeffs == poly and key != own]


@dataclass
class DqsReport:
    kind: str
    s: int
    lengths: tuple
    order: int
    graph6: str
    fingerprint: list
    mates: list
    predicted_mate: Optional[str]
    matches_prediction: bool

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "s": self.s,
            "lengths": list(self.lengths),
            "order": self.order,
            "graph6": self.graph6,
            "fingerprint": self.fingerprint,
            "mates": self.mates,
            "predicted_mate": self.predicted_mate,
            "matches_prediction": self.matches_prediction,
        }


def dqs_report(kind: str, p: CycleJoinParams) -> DqsReport:
    """Exhaustive mate search for one family graph, compared against the
    triangle-to-star prediction.

    The prediction covers s >= 1 with a length-3 cycle (where the swap
    produces a mate); at these desk-scale orders extra mates may exist, in
    which case matches_prediction is False and the full list is reported.
    """
    if kind not in ("g", "h"):
        raise InvalidParameterError(f"kind must be 'g' or 'h', got {kind!r}")
    if p.n > MAX_ENUM_ORDER:
        raise UnsupportedOrderError(f"order {p.n} exceeds the enumeration cap {MAX_ENUM_ORDER}")
    if kind == "g":
        g = cone_cycles(p)
        predicted = cospectral_mate(p)
    else:
        g = cone_cycles_mate(p)
        predicted = cone_cycles(p)
    mates = find_q_cospectral_mates(g)
    mate_keys = sorted(canonical_form(m).graph6 for m in mates)
    predicted_key = canonical_form(predicted).graph6 if predicted is not None else None
    expected = sorted([predicted_key]) if predicted_key is not None else []
    return DqsReport(
        kind=kind,
        s=p.s,
        lengths=p.lengths,
        order=p.n,
        graph6=graph6.encode(g),
        fingerprint=char_poly_exact(g).to_json()["coefficients"],
        mates=mate_keys,
        predicted_mate=predicted_key,
        matches_prediction=mate_keys == expected,
    )
