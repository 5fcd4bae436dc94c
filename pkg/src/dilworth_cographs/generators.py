"""Named graph families.

Vertex orderings are fixed per family so results can be compared label by
label:

* ``tightness_family(s, k)``: apex ``0``, then the parts ``B_1..B_k`` of the
  complete multipartite block (``s`` vertices each), then the ``s*s - s``
  pendant vertices.
* ``generalized_line_graph(H, a)``: first the edges of ``H`` in sorted order
  (the line-graph vertices), then the cocktail-party blocks ``CP(a_1)``,
  ``CP(a_2)``, ... in turn.
* ``cocktail_party(n)``: vertices ``2i`` and ``2i + 1`` are the non-adjacent pairs.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .graph import Graph, disjoint_union, empty_graph, from_edge_list, join

__all__ = [
    "ISOLATED",
    "DOMINATING",
    "path",
    "cycle",
    "complete",
    "star",
    "complete_multipartite",
    "cocktail_party",
    "threshold_from_sequence",
    "parse_creation_sequence",
    "random_creation_sequence",
    "tightness_family",
    "tightness_partition",
    "line_graph",
    "generalized_line_graph",
    "glg_counterexample",
    "house_graph",
    "random_cograph",
]

ISOLATED = "isolated"
DOMINATING = "dominating"


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` on ``n`` vertices with centre ``0``."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts:
        raise ValueError("need at least one part")
    if any(p < 1 for p in parts):
        raise ValueError("every part must have at least one vertex")
    G = empty_graph(parts[0])
    for p in parts[1:]:
        G = join(G, empty_graph(p))
    return G


def cocktail_party(n: int) -> Graph:
    if n < 1:
        raise ValueError("cocktail party graph needs n >= 1")
    return complete_multipartite([2] * n)


def parse_creation_sequence(text: str) -> list[str]:
    """Accept ``"iidd"`` or ``"iso,iso,dom"`` style spellings."""
    tokens = [t.strip().lower() for t in text.split(",")] if "," in text else list(text.strip().lower())
    out = []
    for t in tokens:
        if t in ("i", "iso", ISOLATED, "0"):
            out.append(ISOLATED)
        elif t in ("d", "dom", DOMINATING, "1"):
            out.append(DOMINATING)
        else:
            raise ValueError(f"unknown creation step {t!r}")
    return out


def threshold_from_sequence(seq: Iterable[str]) -> Graph:
    """Add vertices left to right, each isolated or dominating all earlier ones."""
    rows: list[int] = []
    for step in seq:
        v = len(rows)
        if step == ISOLATED:
            rows.append(0)
        elif step == DOMINATING:
            rows = [r | 1 << v for r in rows]
            rows.append((1 << v) - 1)
        else:
            raise ValueError(f"unknown creation step {step!r}")
    if not rows:
        raise ValueError("creation sequence must be non-empty")
    return Graph(len(rows), tuple(rows))


def random_creation_sequence(n: int, rng: random.Random) -> list[str]:
    return [ISOLATED] + [rng.choice((ISOLATED, DOMINATING)) for _ in range(n - 1)]


def tightness_family(s: int, k: int) -> Graph:
    """``K_1`` joined with (complete k-partite ``K_{s,...,s}`` plus ``s*s - s`` isolated vertices)."""
    if s < 1 or k < 1:
        raise ValueError("tightness family needs s >= 1 and k >= 1")
    inner = disjoint_union(complete_multipartite([s] * k), empty_graph(s * s - s))
    return join(empty_graph(1), inner)


def tightness_partition(s: int, k: int) -> list[list[int]]:
    """Parts ``B_1..B_k``, ``{apex}``, ``C`` of ``tightness_family(s, k)``."""
    parts = [list(range(1 + i * s, 1 + (i + 1) * s)) for i in range(k)]
    parts.append([0])
    first_c = 1 + s * k
    parts.append(list(range(first_c, first_c + s * s - s)))
    return [p for p in parts if p]


def line_graph(H: Graph) -> Graph:
    edges = H.edges()
    pairs = [
        (i, j)
        for i in range(len(edges))
        for j in range(i + 1, len(edges))
        if set(edges[i]) & set(edges[j])
    ]
    return from_edge_list(len(edges), pairs)


def generalized_line_graph(H: Graph, a: Sequence[int]) -> Graph:
    """``L(H; a_1, ..., a_n)``: line graph of ``H`` with a cocktail-party
    block ``CP(a_i)`` hanging off every edge at ``v_i``."""
    if len(a) != H.n:
        raise ValueError(f"need {H.n} counts, got {len(a)}")
    if any(x < 0 for x in a):
        raise ValueError("counts must be non-negative")
    edges = H.edges()
    m = len(edges)
    base = line_graph(H)
    pairs = list(base.edges())
    offset = m
    for i, ai in enumerate(a):
        block = list(range(offset, offset + 2 * ai))
        for x in block:
            for y in block:
                if x < y and (y - offset) // 2 != (x - offset) // 2:
                    pairs.append((x, y))
        for e_idx, e in enumerate(edges):
            if i in e:
                pairs.extend((e_idx, x) for x in block)
        offset += 2 * ai
    return from_edge_list(offset, pairs)


def glg_counterexample(k: int) -> Graph:
    """``L(K_{1,k}; k, 1, ..., 1)``: ``K_k`` joined with ``CP(k)``, two pendants per clique vertex."""
    if k < 1:
        raise ValueError("k must be positive")
    return generalized_line_graph(star(k + 1), [k] + [1] * k)


def house_graph() -> Graph:
    """Triangle ``a b c`` on top of the 4-cycle ``b d e c``; labels a..e = 0..4."""
    return from_edge_list(5, [(0, 1), (0, 2), (1, 2), (1, 3), (3, 4), (2, 4)])


def random_cograph(n: int, seed: int) -> Graph:
    """Cograph from a random cotree.

    The shuffled vertex list is split into between 2 and ``len`` nonempty
    blocks, each block is built recursively, and levels alternate between
    union and join (the root kind is random).  Deterministic in
    ``(n, seed)``; not uniform over cographs.
    """
    if n < 1:
        raise ValueError("random_cograph needs n >= 1")
    rng = random.Random(seed)
    verts = list(range(n))
    rng.shuffle(verts)
    rows = [0] * n

    def build(block: list[int], joining: bool) -> None:
        if len(block) == 1:
            return
        k = rng.randint(2, len(block))
        cuts = sorted(rng.sample(range(1, len(block)), k - 1))
        pieces = [block[i:j] for i, j in zip([0] + cuts, cuts + [len(block)])]
        if joining:
            for x, p in enumerate(pieces):
                for q in pieces[x + 1:]:
                    for u in p:
                        for v in q:
                            rows[u] |= 1 << v
                            rows[v] |= 1 << u
        for p in pieces:
            build(p, not joining)

    build(verts, rng.random() < 0.5)
    return Graph(n, tuple(rows))
