"""Cographs, their cotrees, and what breaks them.

Run: python3 demos/01_cographs_and_cotrees.py
"""

import json

from dilworth_cographs import generators as gen
from dilworth_cographs.cograph import build_cotree, cotree_to_graph, find_induced_p4, is_cograph
from dilworth_cographs.graph import complement, to_graph6

# A complete bipartite graph is a join of two edgeless graphs.
K23 = gen.complete_multipartite([2, 3])
tree = build_cotree(K23)
print("K_{2,3} is a cograph:", is_cograph(K23))
print(json.dumps(tree.to_json_dict()))

# The cotree is a complete description: rebuilding gives the same labelled graph.
assert cotree_to_graph(tree) == K23

# Complementing swaps union and join nodes.
print("complement root:", build_cotree(complement(K23)).kind)

# Paths on five vertices and the 5-cycle both contain an induced P4.
for name, G in [("P5", gen.path(5)), ("C5", gen.cycle(5)), ("house", gen.house_graph())]:
    print(f"{name:6s} graph6={to_graph6(G):5s} P4 at {find_induced_p4(G)}")

# Random cotrees give random cographs; the seed fixes the result.
G = gen.random_cograph(10, seed=7)
print("random cograph:", to_graph6(G), "depth", build_cotree(G).depth())
