"""Induced-subgraph tests, small-graph enumeration and counterexample search.

Exhaustive enumeration works in two modes.  The labelled stream walks all
``2**(n choose 2)`` edge bitmasks in increasing order, bit ``k`` standing
for the ``k``-th pair in graph6 order ``(0,1), (0,2), (1,2), (0,3), ...``.
The isomorphism-reduced stream yields one canonical labelled
representative per isomorphism class, sorted by bitmask.  Classes on ``n``
vertices are produced by adding a vertex to every class on ``n - 1``
vertices in all possible ways and deduplicating by canonical form.  An
optional hereditary ``prune`` predicate restricts every level of that
recursion, which is how the cograph, threshold and ``H``-free corpora stay
small.

Canonical form: colour refinement, then individualisation of vertices in
the first non-singleton cell, recursively, until the colouring is
discrete.  Every discrete colouring gives a relabelling; the canonical
representative is the one with the least edge bitmask.  Choices that
differ only by swapping two twins are skipped because the swap is an
automorphism fixing the current colouring.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence

from .graph import Graph, bits, complement, from_edge_list, to_graph6, to_json_dict
from .harness import VerificationReport, check_cdrp, check_drp

__all__ = [
    "SearchSpec",
    "contains_induced",
    "is_free_of",
    "pair_index",
    "graph_from_bitmask",
    "graph_to_bitmask",
    "canonical_form",
    "enumerate_graphs",
    "enumerate_classes",
    "find_counterexample",
    "verify_theorem_4_3",
    "small_graph_catalog",
]

EXHAUSTIVE, SAMPLED = "exhaustive", "sampled"
MAX_LABELLED_N = 10
MAX_ISO_N = 8


def _fast_graph(n: int, rows: Sequence[int]) -> Graph:
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "rows", tuple(rows))
    return g


# Induced subgraphs ----------------------------------------------------------


def contains_induced(G: Graph, H: Graph) -> Optional[tuple[int, ...]]:
    """Lexicographically least injective map ``V(H) -> V(G)`` preserving
    adjacency and non-adjacency, as a tuple indexed by ``H``'s vertices."""
    h, g = H.n, G.n
    if h > g:
        return None
    if h == 0:
        return ()
    gdeg = G.degrees()
    hdeg = H.degrees()
    image = [0] * h

    def extend(i: int, used: int) -> bool:
        need_adj = H.rows[i] & ((1 << i) - 1)
        hd, hcd = hdeg[i], h - 1 - hdeg[i]
        for v in range(g):
            if used >> v & 1:
                continue
            if gdeg[v] < hd or g - 1 - gdeg[v] < hcd:
                continue
            row = G.rows[v]
            ok = True
            for j in range(i):
                if (row >> image[j] & 1) != (need_adj >> j & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[i] = v
            if i + 1 == h or extend(i + 1, used | 1 << v):
                return True
        return False

    return tuple(image) if extend(0, 0) else None


def is_free_of(G: Graph, H: Graph) -> bool:
    return contains_induced(G, H) is None


# Bitmask encoding ------------------------------------------------------------


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def graph_from_bitmask(n: int, mask: int) -> Graph:
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return _fast_graph(n, rows)


def graph_to_bitmask(G: Graph) -> int:
    mask = 0
    for j in range(1, G.n):
        low = G.rows[j] & ((1 << j) - 1)
        mask |= low << (j * (j - 1) // 2)
    return mask


# Canonical form --------------------------------------------------------------


def _refine(rows: Sequence[int], colours: list[int]) -> list[int]:
    n = len(rows)
    ncol = len(set(colours))
    while True:
        sigs = []
        for v in range(n):
            row = rows[v]
            nb = sorted(colours[u] for u in bits(row))
            sigs.append((colours[v], tuple(nb)))
        order = sorted(set(sigs))
        index = {s: i for i, s in enumerate(order)}
        new = [index[s] for s in sigs]
        if len(order) == ncol:
            return new
        colours, ncol = new, len(order)


def _relabelled_mask(rows: Sequence[int], perm: Sequence[int]) -> int:
    # perm[v] = new position of v
    mask = 0
    for v, row in enumerate(rows):
        pv = perm[v]
        for u in bits(row):
            pu = perm[u]
            if pu < pv:
                mask |= 1 << (pv * (pv - 1) // 2 + pu)
    return mask


def canonical_form(G: Graph) -> int:
    """Edge bitmask of the canonical representative of ``G``'s isomorphism class."""
    rows = G.rows
    n = G.n
    if n <= 1:
        return 0
    best = [None]

    def search(colours: list[int]) -> None:
        colours = _refine(rows, colours)
        if len(set(colours)) == n:
            m = _relabelled_mask(rows, colours)
            if best[0] is None or m < best[0]:
                best[0] = m
            return
        counts: dict[int, list[int]] = {}
        for v, c in enumerate(colours):
            counts.setdefault(c, []).append(v)
        target = min(c for c, vs in counts.items() if len(vs) > 1)
        cell = counts[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(rows, v, w) for w in tried):
                continue
            tried.append(v)
            # individualise v: it keeps the cell's colour, the rest of the cell moves up
            new = [2 * c + (1 if (c == target and u != v) else 0) for u, c in enumerate(colours)]
            search(new)

    search([0] * n)
    return best[0]


def _twins(rows: Sequence[int], u: int, v: int) -> bool:
    return rows[u] & ~(1 << v) == rows[v] & ~(1 << u)


def canonical_graph(G: Graph) -> Graph:
    return graph_from_bitmask(G.n, canonical_form(G))


# Enumeration -------------------------------------------------------------------


def enumerate_graphs(
    n: int,
    iso_reduce: bool = False,
    start: int = 0,
    prune: Optional[Callable[[Graph], bool]] = None,
) -> Iterator[Graph]:
    """Graphs on ``n`` vertices in increasing edge-bitmask order.

    With ``iso_reduce`` only canonical representatives are produced.
    ``start`` skips that many items of the stream, so a consumer can
    resume.  ``prune`` must be hereditary (closed under induced subgraphs);
    only graphs satisfying it are yielded.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if iso_reduce:
        if n > MAX_ISO_N:
            raise ValueError(f"isomorphism-reduced enumeration supports n <= {MAX_ISO_N}")
        reps = enumerate_classes(n, prune)
        yield from (graph_from_bitmask(n, m) for m in reps[start:])
        return
    if n > MAX_LABELLED_N:
        raise ValueError(f"labelled enumeration supports n <= {MAX_LABELLED_N}")
    if prune is None:
        for mask in range(start, 1 << (n * (n - 1) // 2)):
            yield graph_from_bitmask(n, mask)
        return
    masks = (m for m in _pruned_labelled(n, prune))
    yield from (graph_from_bitmask(n, m) for m in itertools.islice(masks, start, None))


def _pruned_labelled(n: int, prune: Callable[[Graph], bool]) -> Iterator[int]:
    # Vertex n-1 owns the top C(n-1, 2).. bits, so extending each surviving
    # graph on the first n-1 vertices keeps increasing bitmask order when the
    # new neighbourhood is the outer loop.  Valid because prune is hereditary.
    if n <= 1:
        if prune(_fast_graph(n, [0] * n)):
            yield 0
        return
    bases = list(_pruned_labelled(n - 1, prune))
    if not bases:
        return
    shift = (n - 1) * (n - 2) // 2
    for nbrs in range(1 << (n - 1)):
        for base in bases:
            mask = base | nbrs << shift
            if prune(graph_from_bitmask(n, mask)):
                yield mask


@lru_cache(maxsize=None)
def enumerate_classes(n: int, prune: Optional[Callable[[Graph], bool]] = None) -> tuple[int, ...]:
    """Sorted canonical bitmasks of the isomorphism classes on ``n`` vertices."""
    if n > MAX_ISO_N:
        raise ValueError(f"isomorphism-reduced enumeration supports n <= {MAX_ISO_N}")
    if n <= 1:
        G = _fast_graph(n, [0] * n)
        return (0,) if prune is None or prune(G) else ()
    found = set()
    for base in enumerate_classes(n - 1, prune):
        small = graph_from_bitmask(n - 1, base)
        for nbrs in range(1 << (n - 1)):
            rows = [r | ((nbrs >> v & 1) << (n - 1)) for v, r in enumerate(small.rows)]
            rows.append(nbrs)
            G = _fast_graph(n, rows)
            if prune is not None and not prune(G):
                continue
            found.add(canonical_form(G))
    return tuple(sorted(found))


# Counterexample search -----------------------------------------------------------


DRP, CDRP = "drp", "cdrp"
_CHECKS = {DRP: check_drp, CDRP: check_cdrp}


@dataclass(frozen=True)
class SearchSpec:
    """What to search for: an ``H``-free graph violating DRP or CDRP."""

    forbidden: Graph
    property: str = DRP
    max_n: int = 6
    mode: str = EXHAUSTIVE
    count: int = 0
    seed: Optional[int] = None

    def __post_init__(self):
        if self.property not in _CHECKS:
            raise ValueError(f"property must be one of {sorted(_CHECKS)}")
        if self.mode == EXHAUSTIVE:
            if self.max_n > MAX_LABELLED_N:
                raise ValueError(f"exhaustive search supports max_n <= {MAX_LABELLED_N}")
        elif self.mode == SAMPLED:
            if self.seed is None:
                raise ValueError("sampled search needs an explicit seed")
            if self.count < 1:
                raise ValueError("sampled search needs a positive count")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.max_n < 1:
            raise ValueError("max_n must be positive")


class _HFree:
    """Picklable hereditary predicate (kept hashable for the class cache)."""

    def __init__(self, H: Graph):
        self.H = H

    def __call__(self, G: Graph) -> bool:
        return contains_induced(G, self.H) is None

    def __eq__(self, other):
        return isinstance(other, _HFree) and other.H == self.H

    def __hash__(self):
        return hash(("hfree", self.H))


def _violates(args: tuple[str, int, int]) -> bool:
    prop, n, mask = args
    return not _CHECKS[prop](graph_from_bitmask(n, mask)).holds


def _first_violation(prop: str, n: int, masks: Sequence[int], jobs: int) -> Optional[int]:
    if jobs <= 1 or len(masks) < 64:
        for m in masks:
            if _violates((prop, n, m)):
                return m
        return None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        flags = list(pool.map(_violates, [(prop, n, m) for m in masks], chunksize=32))
    for m, bad in zip(masks, flags):
        if bad:
            return m
    return None


def find_counterexample(spec: SearchSpec, jobs: int = 1) -> Optional[tuple[Graph, VerificationReport]]:
    """First ``H``-free graph violating the property.

    Exhaustive mode scans vertex counts upwards and, within one count,
    canonical representatives by increasing bitmask; the first hit is the
    reported witness regardless of ``jobs``.  Sampled mode draws
    ``spec.count`` graphs from ``G(n, 1/2)`` with ``n`` uniform in
    ``1..max_n`` and reports the first hit in draw order.
    """
    check = _CHECKS[spec.property]
    H = spec.forbidden
    if spec.mode == SAMPLED:
        rng = random.Random(spec.seed)
        for _ in range(spec.count):
            n = rng.randint(1, spec.max_n)
            edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
            G = from_edge_list(n, edges)
            if contains_induced(G, H) is not None:
                continue
            rep = check(G)
            if not rep.holds:
                return G, rep
        return None

    free = _HFree(H)
    for n in range(1, spec.max_n + 1):
        if n <= MAX_ISO_N:
            masks = enumerate_classes(n, free)
        else:
            masks = (graph_to_bitmask(G) for G in enumerate_graphs(n, prune=free))
            masks = list(masks)
        hit = _first_violation(spec.property, n, masks, jobs)
        if hit is not None:
            G = graph_from_bitmask(n, hit)
            G = Graph(G.n, G.rows)
            rep = check(G)
            assert not rep.holds
            return G, rep
    return None


# H-free characterisation, finite check ----------------------------------------


def small_graph_catalog() -> dict[str, Graph]:
    """Named graphs used as forbidden subgraphs."""
    from . import generators as gen

    return {
        "K1": gen.complete(1),
        "K2": gen.complete(2),
        "2K1": complement(gen.complete(2)),
        "P3": gen.path(3),
        "K2+K1": from_edge_list(3, [(0, 1)]),
        "K3": gen.complete(3),
        "co-K3": complement(gen.complete(3)),
        "P4": gen.path(4),
        "2K2": from_edge_list(4, [(0, 1), (2, 3)]),
        "K2,2": gen.cycle(4),
        "C5": gen.cycle(5),
    }


def verify_theorem_4_3(max_n: int = 7, jobs: int = 1) -> VerificationReport:
    """Finite reproduction of the characterisation of DRP/CDRP ``H``-free families.

    Every ``H`` on at most four vertices that is not an induced subgraph of
    ``P4``, and ``C5``, must have DRP and CDRP counterexamples within
    ``max_n`` vertices; every ``H`` inside ``P4`` must have none.
    """
    if max_n > MAX_ISO_N:
        raise ValueError(f"max_n must be at most {MAX_ISO_N}")
    P4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    names = {(G.n, canonical_form(G)): name for name, G in small_graph_catalog().items()}
    inside, outside = [], []
    for n in range(1, 5):
        for mask in enumerate_classes(n):
            H = graph_from_bitmask(n, mask)
            H = Graph(H.n, H.rows)
            label = names.get((n, mask), to_graph6(H))
            (inside if contains_induced(P4, H) is not None else outside).append((label, H))
    outside.append(("C5", small_graph_catalog()["C5"]))

    entries = []
    ok = True
    cases = [(label, H, True) for label, H in outside] + [(label, H, False) for label, H in inside]
    for label, H, expect in cases:
        for prop in (DRP, CDRP):
            found = find_counterexample(SearchSpec(H, prop, max_n), jobs=jobs)
            entry = {
                "forbidden": label,
                "forbiddenGraph6": to_graph6(H),
                "property": prop,
                "expectCounterexample": expect,
            }
            if found is None:
                entry["witness"] = None
            else:
                W, rep = found
                entry["witness"] = {"graph6": to_graph6(W), "graph": to_json_dict(W), "details": rep.details}
            if (found is not None) != expect:
                ok = False
            entries.append(entry)
    details = {"maxN": max_n, "cases": entries, "insideP4": [l for l, _ in inside]}
    witness = None if ok else {"mismatches": [e for e in entries if (e["witness"] is not None) != e["expectCounterexample"]]}
    return VerificationReport("theorem-4-3", ok, details, witness)
