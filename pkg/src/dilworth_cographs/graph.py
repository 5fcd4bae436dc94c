"""Simple undirected graphs on the vertex set ``{0, ..., n-1}``.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
inclusion tests (the inner loop of the vicinal preorder) are a couple of
integer operations.  Graphs are immutable; every combinator returns a new
value.

Two serialisations are provided: graph6 (header-free, ``n <= 62``) and a
JSON edge list ``{"n": ..., "edges": [[u, v], ...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "VertexSet",
    "GraphFormatError",
    "from_edge_list",
    "from_rows",
    "empty_graph",
    "complement",
    "disjoint_union",
    "join",
    "induced_subgraph",
    "neighborhood",
    "connected_components",
    "to_graph6",
    "from_graph6",
    "to_json",
    "from_json",
    "to_json_dict",
    "from_json_dict",
    "bits",
    "mask_of",
]

VertexSet = tuple  # sorted tuple of vertex labels


class GraphFormatError(ValueError):
    """Raised when a serialised graph cannot be decoded."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Labelled simple graph.

    ``rows[v]`` is the bitmask of the open neighbourhood of ``v``.  Equality
    is label-level: two isomorphic graphs with different labellings compare
    unequal.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def adj(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self) -> list[list[int]]:
        return [[(self.rows[u] >> v) & 1 for v in range(self.n)] for u in range(self.n)]

    def closed_row(self, v: int) -> int:
        return self.rows[v] | (1 << v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_rows(rows: Sequence[int]) -> Graph:
    return Graph(len(rows), tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from unordered pairs; repeated pairs are collapsed.

    >>> from_edge_list(4, [(0, 1), (1, 2), (2, 3)]).m
    3
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rows = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, tuple(full & ~(row | 1 << v) for v, row in enumerate(G.rows)))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """Vertices of ``H`` are shifted up by ``G.n``; no edges between the parts."""
    return Graph(G.n + H.n, G.rows + tuple(row << G.n for row in H.rows))


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    gm = G.full_mask
    hm = H.full_mask << G.n
    rows = tuple(row | hm for row in G.rows) + tuple((row << G.n) | gm for row in H.rows)
    return Graph(G.n + H.n, rows)


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """Subgraph induced by ``S``, relabelled ``0..|S|-1`` in ascending original order."""
    verts = sorted(set(S))
    for v in verts:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range for n={G.n}")
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        r = 0
        for u in bits(G.rows[v]):
            i = pos.get(u)
            if i is not None:
                r |= 1 << i
        rows.append(r)
    return Graph(len(verts), tuple(rows))


def neighborhood(G: Graph, v: int, closed: bool = False) -> VertexSet:
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range for n={G.n}")
    row = G.closed_row(v) if closed else G.rows[v]
    return tuple(bits(row))


def _components_mask(rows: Sequence[int], within: int) -> list[int]:
    comps = []
    remaining = within
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= within & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def connected_components(G: Graph) -> list[VertexSet]:
    """Components as sorted tuples, listed by smallest member."""
    return [tuple(bits(c)) for c in _components_mask(G.rows, G.full_mask)]


# graph6 ------------------------------------------------------------------


def to_graph6(G: Graph) -> str:
    """Encode as graph6 without the ``>>graph6<<`` header.

    >>> to_graph6(from_edge_list(3, [(0, 1), (0, 2), (1, 2)]))
    'Bw'
    """
    if G.n > 62:
        raise ValueError("graph6 encoding here supports n <= 62 only")
    out = [chr(G.n + 63)]
    acc = 0
    width = 0
    for j in range(1, G.n):
        row = G.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = 0
                width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise GraphFormatError("empty graph6 string")
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c < 64 for c in codes):
        raise GraphFormatError(f"invalid graph6 character in {text!r}")
    n = codes[0]
    if n > 62:
        raise GraphFormatError("graph6 strings with n > 62 are not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(codes) - 1 != need:
        raise GraphFormatError(f"graph6 body length {len(codes) - 1} != expected {need} for n={n}")
    stream = []
    for c in codes[1:]:
        stream.extend((c >> k) & 1 for k in range(5, -1, -1))
    if any(stream[nbits:]):
        raise GraphFormatError("nonzero padding bits in graph6 string")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# JSON edge list ----------------------------------------------------------


def to_json_dict(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges()]}


def from_json_dict(obj: dict) -> Graph:
    try:
        n = obj["n"]
        edges = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise GraphFormatError("edge-list JSON needs keys 'n' and 'edges'") from exc
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphFormatError("'n' must be an integer")
    pairs = []
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise GraphFormatError(f"edge {e!r} is not a pair")
        pairs.append((int(e[0]), int(e[1])))
    try:
        return from_edge_list(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def to_json(G: Graph) -> str:
    return json.dumps(to_json_dict(G))


def from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(str(exc)) from exc
    return from_json_dict(obj)
