"""graph6 encoding and decoding.

Standard ASCII format, no header line, single-byte order (n <= 62).  The
upper-triangle adjacency bits are taken column by column, x(0,1), x(0,2),
x(1,2), x(0,3), ..., packed into 6-bit groups (zero-padded at the end), and
each group is stored as byte value + 63.
"""

from __future__ import annotations

from typing import Iterable

from .errors import Graph6ParseError, UnsupportedOrderError
from .graphs import Graph


def _edge_bits(G: Graph) -> int:
    bits = 0
    for j in range(1, G.n):
        for i in range(j):
            bits = (bits << 1) | ((i, j) in G.edges)
    return bits


def encode_bits(n: int, bits: int) -> str:
    """Encode an order plus a packed upper-triangle bit integer (MSB first)."""
    if not 0 <= n <= 62:
        raise UnsupportedOrderError(f"graph6 single-byte encoding needs 0 <= n <= 62, got {n}")
    nbits = n * (n - 1) // 2
    out = [chr(n + 63)]
    groups = (nbits + 5) // 6
    padded = bits << (groups * 6 - nbits)
    for i in range(groups):
        out.append(chr(((padded >> (6 * (groups - 1 - i))) & 63) + 63))
    return "".join(out)


def encode(G: Graph) -> str:
    return encode_bits(G.n, _edge_bits(G))


def decode(text: str) -> Graph:
    """Decode one graph6 string; raises Graph6ParseError with a byte offset."""
    if not text:
        raise Graph6ParseError("empty input", 0)
    first = ord(text[0])
    if first == 126:
        raise Graph6ParseError("multi-byte order prefix '~' is not supported (n > 62)", 0)
    if not 63 <= first <= 125:
        raise Graph6ParseError(f"order byte {text[0]!r} outside graph6 range", 0)
    n = first - 63
    nbits = n * (n - 1) // 2
    groups = (nbits + 5) // 6
    if len(text) != 1 + groups:
        raise Graph6ParseError(
            f"expected {1 + groups} bytes for order {n}, got {len(text)}",
            min(len(text), 1 + groups),
        )
    bits = 0
    for i, ch in enumerate(text[1:], start=1):
        b = ord(ch)
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"data byte {ch!r} outside graph6 range", i)
        bits = (bits << 6) | (b - 63)
    pad = groups * 6 - nbits
    if pad and (bits & ((1 << pad) - 1)):
        raise Graph6ParseError("nonzero padding bits", len(text) - 1)
    bits >>= pad
    edges = []
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                edges.append((i, j))
            pos -= 1
    return Graph.build(n, edges)


def write_file(path, graphs: Iterable[Graph]) -> int:
    """Write graphs one per line; returns the number written."""
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode(g) + "\n")
            count += 1
    return count


def read_file(path) -> list[Graph]:
    """Read a graph6 file, one graph per line; blank lines are skipped."""
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(decode(line))
    return out
