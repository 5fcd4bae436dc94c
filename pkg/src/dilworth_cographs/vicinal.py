"""Vicinal preorder, Dilworth number and threshold structure.

``u`` precedes ``v`` in the vicinal preorder when ``N(u)`` is contained in
``N[v]``.  Mutually preceding vertices are duplicates or coduplicates; after
collapsing those classes the relation is a partial order, and the Dilworth
number is the width of that order.  The minimum chain cover comes from a
maximum matching in the comparability bipartite graph (Fulkerson's
reduction) and the maximum antichain from the matching's minimum vertex
cover (Koenig).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, VertexSet, bits, induced_subgraph

__all__ = [
    "DilworthReport",
    "ThresholdStructure",
    "NotThreshold",
    "StructureViolation",
    "vicinal_leq",
    "preorder_matrix",
    "duplication_classes",
    "coduplication_classes",
    "has_duplicates",
    "has_coduplicates",
    "dilworth_number",
    "is_threshold",
    "threshold_shape",
    "threshold_structure",
    "threshold_partition",
]


class NotThreshold(ValueError):
    pass


class StructureViolation(ValueError):
    pass


def _leq(G: Graph, u: int, v: int) -> bool:
    return G.rows[u] & ~(G.rows[v] | 1 << v) == 0


def vicinal_leq(G: Graph, u: int, v: int) -> bool:
    """True iff ``N(u)`` is a subset of ``N[v]``."""
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise ValueError(f"vertices ({u}, {v}) out of range for n={G.n}")
    return _leq(G, u, v)


def preorder_matrix(G: Graph) -> list[list[bool]]:
    return [[_leq(G, u, v) for v in range(G.n)] for u in range(G.n)]


def _classes(keys: Sequence[int]) -> list[VertexSet]:
    groups: dict[int, list[int]] = {}
    for v, k in enumerate(keys):
        groups.setdefault(k, []).append(v)
    return sorted((tuple(g) for g in groups.values()), key=lambda c: c[0])


def duplication_classes(G: Graph) -> list[VertexSet]:
    """Maximal sets of vertices sharing an open neighbourhood (singletons included)."""
    return _classes(G.rows)


def coduplication_classes(G: Graph) -> list[VertexSet]:
    """Maximal sets of vertices sharing a closed neighbourhood."""
    return _classes([G.closed_row(v) for v in range(G.n)])


def has_duplicates(G: Graph) -> bool:
    return len(set(G.rows)) < G.n


def has_coduplicates(G: Graph) -> bool:
    return len({G.closed_row(v) for v in range(G.n)}) < G.n


# Dilworth number -----------------------------------------------------------


@dataclass(frozen=True)
class DilworthReport:
    """Dilworth number with a chain cover and an antichain of equal size.

    Each chain lists its vertices in increasing vicinal order; within one
    equivalence class vertices appear in ascending label order.
    """

    dilworth: int
    chains: tuple[VertexSet, ...]
    antichain: VertexSet
    duplication_classes: tuple[VertexSet, ...]
    coduplication_classes: tuple[VertexSet, ...]
    equivalence_classes: tuple[VertexSet, ...] = field(default=())

    def to_json_dict(self) -> dict:
        return {
            "dilworth": self.dilworth,
            "chains": [list(c) for c in self.chains],
            "antichain": list(self.antichain),
            "classes": {
                "duplication": [list(c) for c in self.duplication_classes],
                "coduplication": [list(c) for c in self.coduplication_classes],
                "equivalence": [list(c) for c in self.equivalence_classes],
            },
        }


def _max_matching(adj: list[list[int]], size: int) -> list[int]:
    """Kuhn's augmenting paths; returns ``match_right[r] = l`` or -1."""
    match_r = [-1] * size

    def augment(l: int, seen: list[bool]) -> bool:
        for r in adj[l]:
            if not seen[r]:
                seen[r] = True
                if match_r[r] == -1 or augment(match_r[r], seen):
                    match_r[r] = l
                    return True
        return False

    for l in range(size):
        augment(l, [False] * size)
    return match_r


def dilworth_number(G: Graph) -> DilworthReport:
    n = G.n
    dup = tuple(duplication_classes(G))
    codup = tuple(coduplication_classes(G))
    if n == 0:
        return DilworthReport(0, (), (), dup, codup, ())

    # equivalence classes of the preorder, each headed by its smallest vertex
    cls_of = [-1] * n
    classes: list[list[int]] = []
    for v in range(n):
        if cls_of[v] >= 0:
            continue
        cls_of[v] = len(classes)
        members = [v]
        for u in range(v + 1, n):
            if cls_of[u] < 0 and _leq(G, u, v) and _leq(G, v, u):
                cls_of[u] = len(classes)
                members.append(u)
        classes.append(members)
    q = len(classes)
    reps = [c[0] for c in classes]
    below = [[j for j in range(q) if j != i and _leq(G, reps[i], reps[j])] for i in range(q)]

    match_r = _max_matching(below, q)
    match_l = [-1] * q
    for r, l in enumerate(match_r):
        if l >= 0:
            match_l[l] = r
    matched = sum(1 for l in match_l if l >= 0)

    chains = []
    for start in range(q):
        if match_r[start] != -1:
            continue
        chain = []
        i = start
        while i != -1:
            chain.extend(classes[i])
            i = match_l[i]
        chains.append(tuple(chain))
    chains.sort(key=lambda c: min(c))

    # Koenig: alternating reachability from unmatched left vertices
    zl = [False] * q
    zr = [False] * q
    stack = [l for l in range(q) if match_l[l] == -1]
    for l in stack:
        zl[l] = True
    while stack:
        l = stack.pop()
        for r in below[l]:
            if not zr[r] and match_l[l] != r:
                zr[r] = True
                l2 = match_r[r]
                if l2 >= 0 and not zl[l2]:
                    zl[l2] = True
                    stack.append(l2)
    anti = tuple(sorted(reps[i] for i in range(q) if zl[i] and not zr[i]))

    width = q - matched
    if len(chains) != width or len(anti) != width:
        raise AssertionError("chain cover and antichain sizes disagree")
    return DilworthReport(width, tuple(chains), anti, dup, codup, tuple(tuple(c) for c in classes))


# Threshold graphs ----------------------------------------------------------


def is_threshold(G: Graph) -> bool:
    """Peel isolated or dominating vertices until nothing is left."""
    alive = G.full_mask
    while alive:
        size = alive.bit_count()
        for v in bits(alive):
            d = (G.rows[v] & alive).bit_count()
            if d == 0 or d == size - 1:
                alive &= ~(1 << v)
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class ThresholdStructure:
    """Clique classes ``V_1..V_t`` and coclique classes ``U_1..U_t`` with
    ``N(u) = V_1 | ... | V_i`` for every ``u`` in ``U_i``."""

    clique_classes: tuple[VertexSet, ...]
    coclique_classes: tuple[VertexSet, ...]

    @property
    def t(self) -> int:
        return len(self.clique_classes)

    def to_graph(self, n: int) -> Graph:
        rows = [0] * n
        clique = 0
        for c in self.clique_classes:
            for v in c:
                clique |= 1 << v
        for v in bits(clique):
            rows[v] |= clique & ~(1 << v)
        upto = 0
        for vi, ui in zip(self.clique_classes, self.coclique_classes):
            for v in vi:
                upto |= 1 << v
            for u in ui:
                rows[u] |= upto
                for v in bits(upto):
                    rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "cliqueClasses": [list(c) for c in self.clique_classes],
            "cocliqueClasses": [list(c) for c in self.coclique_classes],
        }


def threshold_shape(G: Graph) -> str:
    """Classify a graph relative to the clique/coclique level structure.

    ``"not-threshold"``, ``"edgeless"``, ``"isolated-vertices"`` (threshold
    with edges but some isolated vertex, which no level scheme can place) or
    ``"levelled"`` (connected threshold graph with an edge).
    """
    if not is_threshold(G):
        return "not-threshold"
    if G.m == 0:
        return "edgeless"
    if any(r == 0 for r in G.rows):
        return "isolated-vertices"
    return "levelled"


def threshold_structure(G: Graph) -> ThresholdStructure:
    """Level structure of a connected threshold graph with at least one edge.

    Levels are peeled from the bottom: a minimum-degree vertex and the
    vertices sharing its neighbourhood form ``U_i``, that neighbourhood
    (inside the remaining graph) is ``V_i``.  When the last level is a
    clique the smallest label of it is used as the one-vertex ``U_t``.
    """
    shape = threshold_shape(G)
    if shape == "not-threshold":
        raise NotThreshold("graph is not a threshold graph")
    if shape != "levelled":
        raise StructureViolation(f"no clique/coclique level structure for a graph of shape {shape!r}")

    alive = G.full_mask
    vs: list[VertexSet] = []
    us: list[VertexSet] = []
    while alive:
        degs = {v: (G.rows[v] & alive).bit_count() for v in bits(alive)}
        x = min(degs, key=lambda v: (degs[v], v))
        nx = G.rows[x] & alive
        if nx == 0:
            raise StructureViolation(f"vertex {x} is isolated inside a level")
        u_mask = 0
        for v in bits(alive):
            if G.rows[v] & alive == nx:
                u_mask |= 1 << v
        vs.append(tuple(bits(nx)))
        us.append(tuple(bits(u_mask)))
        alive &= ~(nx | u_mask)

    ts = ThresholdStructure(tuple(vs), tuple(us))
    _validate_structure(G, ts)
    return ts


def _validate_structure(G: Graph, ts: ThresholdStructure) -> None:
    seen = 0
    for c in ts.clique_classes + ts.coclique_classes:
        if not c:
            raise StructureViolation("empty class")
        for v in c:
            if seen >> v & 1:
                raise StructureViolation(f"vertex {v} appears twice")
            seen |= 1 << v
    if seen != G.full_mask:
        raise StructureViolation("classes do not cover the vertex set")
    if ts.to_graph(G.n) != G:
        raise StructureViolation("level structure does not reproduce the graph")
    degs = [G.degree(c[0]) for c in ts.clique_classes]
    if degs != sorted(degs, reverse=True):
        raise StructureViolation("clique classes are not in descending degree order")


def threshold_partition(G: Graph) -> list[VertexSet]:
    """Vertex partition into Dilworth-number many threshold subgraphs (the chains)."""
    parts = [tuple(sorted(c)) for c in dilworth_number(G).chains]
    for p in parts:
        if not is_threshold(induced_subgraph(G, p)):
            raise AssertionError(f"chain {p} does not induce a threshold graph")
    return parts
