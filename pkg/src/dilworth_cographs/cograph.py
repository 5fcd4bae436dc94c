"""Cograph recognition and cotrees.

A graph is a cograph when every induced subgraph on two or more vertices is
either disconnected or has a disconnected complement.  Recognition follows
that recursion directly: split into components, otherwise into
co-components, and fail when neither split exists.  This is cubic-ish
rather than linear time, which is fine for the graph sizes used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, _components_mask, bits

__all__ = [
    "Cotree",
    "NotACograph",
    "MalformedCotree",
    "is_cograph",
    "build_cotree",
    "cotree_to_graph",
    "find_induced_p4",
    "cotree_from_json_dict",
]

LEAF, UNION, JOIN = "leaf", "union", "join"


class NotACograph(ValueError):
    """Raised for graphs with an induced P4; ``witness`` is such a path."""

    def __init__(self, witness: tuple[int, int, int, int]):
        super().__init__(f"graph has an induced P4 on {witness}")
        self.witness = witness


class MalformedCotree(ValueError):
    pass


@dataclass(frozen=True)
class Cotree:
    """Node of a cotree: a leaf holding a vertex, or a union/join node."""

    kind: str
    v: int = -1
    children: tuple["Cotree", ...] = ()

    @classmethod
    def leaf(cls, v: int) -> "Cotree":
        return cls(LEAF, v)

    def leaves(self) -> list[int]:
        if self.kind == LEAF:
            return [self.v]
        out = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    def min_leaf(self) -> int:
        return self.v if self.kind == LEAF else min(c.min_leaf() for c in self.children)

    def depth(self) -> int:
        return 0 if self.kind == LEAF else 1 + max(c.depth() for c in self.children)

    def to_json_dict(self) -> dict:
        if self.kind == LEAF:
            return {"kind": LEAF, "v": self.v}
        return {"kind": self.kind, "children": [c.to_json_dict() for c in self.children]}


def cotree_from_json_dict(obj: dict) -> Cotree:
    kind = obj.get("kind")
    if kind == LEAF:
        return Cotree.leaf(int(obj["v"]))
    if kind in (UNION, JOIN):
        return Cotree(kind, children=tuple(cotree_from_json_dict(c) for c in obj["children"]))
    raise MalformedCotree(f"unknown node kind {kind!r}")


def _co_components(G: Graph, within: int) -> list[int]:
    comp_rows = [(~r) & G.full_mask & ~(1 << v) for v, r in enumerate(G.rows)]
    return _components_mask(comp_rows, within)


def _decompose(G: Graph, within: int) -> Optional[Cotree]:
    if within & (within - 1) == 0:
        return Cotree.leaf(within.bit_length() - 1)
    comps = _components_mask(G.rows, within)
    kind = UNION
    if len(comps) == 1:
        comps = _co_components(G, within)
        kind = JOIN
        if len(comps) == 1:
            return None
    children = []
    for c in comps:
        sub = _decompose(G, c)
        if sub is None:
            return None
        children.append(sub)
    children.sort(key=Cotree.min_leaf)
    return Cotree(kind, children=tuple(children))


def is_cograph(G: Graph) -> bool:
    if G.n <= 3:
        return True
    return _decompose(G, G.full_mask) is not None


def build_cotree(G: Graph) -> Cotree:
    """Canonical cotree: children ordered by their smallest leaf label."""
    if G.n == 0:
        raise ValueError("the empty graph has no cotree")
    tree = _decompose(G, G.full_mask)
    if tree is None:
        raise NotACograph(find_induced_p4(G))
    return tree


def cotree_to_graph(T: Cotree) -> Graph:
    """Rebuild the graph: two leaves are adjacent iff their lowest common
    ancestor is a join node."""
    labels = T.leaves()
    n = len(labels)
    if sorted(labels) != list(range(n)):
        raise MalformedCotree("cotree leaves must be exactly 0..n-1, each once")
    rows = [0] * n

    def walk(node: Cotree) -> int:
        if node.kind == LEAF:
            return 1 << node.v
        if node.kind not in (UNION, JOIN):
            raise MalformedCotree(f"unknown node kind {node.kind!r}")
        if len(node.children) < 2:
            raise MalformedCotree("internal cotree nodes need at least two children")
        masks = [walk(c) for c in node.children]
        if node.kind == JOIN:
            total = 0
            for m in masks:
                total |= m
            for m in masks:
                others = total & ~m
                for v in bits(m):
                    rows[v] |= others
        return sum(masks)

    walk(T)
    return Graph(n, tuple(rows))


def find_induced_p4(G: Graph) -> Optional[tuple[int, int, int, int]]:
    """Lexicographically least ``(a, b, c, d)`` whose only edges are
    ``ab``, ``bc``, ``cd``; ``None`` for cographs."""
    rows = G.rows
    for a in range(G.n):
        na = rows[a]
        for b in bits(na):
            cand_c = rows[b] & ~na & ~(1 << a)
            for c in bits(cand_c):
                cand_d = rows[c] & ~na & ~rows[b] & ~(1 << a) & ~(1 << b)
                if cand_d:
                    d = (cand_d & -cand_d).bit_length() - 1
                    return (a, b, c, d)
    return None
