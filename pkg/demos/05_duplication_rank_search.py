"""Duplicates, rank, and the search for H-free counterexamples.

In a cograph every null vector of ``A`` (and of ``A + I``) comes from
pairs of twin vertices.  For a forbidden induced subgraph ``H`` this
persists across all ``H``-free graphs only when ``H`` sits inside ``P4``;
the search below finds small witnesses for every other small ``H``.

Run: python3 demos/05_duplication_rank_search.py
"""

from dilworth_cographs import generators as gen
from dilworth_cographs.graph import to_graph6
from dilworth_cographs.harness import check_drp, weight_two_null_basis
from dilworth_cographs.linalg import verify_eigenvector
from dilworth_cographs.search import SearchSpec, canonical_form, find_counterexample, small_graph_catalog

K23 = gen.complete_multipartite([2, 3])
print("K_{2,3} null basis:", weight_two_null_basis(K23, 0))
print("K_4 (A+I) null basis:", weight_two_null_basis(gen.complete(4), -1))

P5 = gen.path(5)
print("P5 has DRP:", check_drp(P5).holds, "; null vector (1,0,-1,0,1):", verify_eigenvector(P5, 0, [1, 0, -1, 0, 1]))

catalog = small_graph_catalog()
for name in ("K3", "co-K3", "2K2", "K2,2", "C5", "P4"):
    for prop, max_n in (("drp", 5), ("cdrp", 6)):
        found = find_counterexample(SearchSpec(catalog[name], prop, max_n))
        if found is None:
            print(f"{name:6s} {prop:4s} none up to n={max_n}")
            continue
        W, _ = found
        tag = ""
        if canonical_form(W) == canonical_form(P5):
            tag = " (P5)"
        elif canonical_form(W) == canonical_form(gen.house_graph()):
            tag = " (house)"
        print(f"{name:6s} {prop:4s} witness {to_graph6(W)} n={W.n} m={W.m}{tag}")
