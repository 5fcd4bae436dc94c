"""The vicinal preorder and the Dilworth number.

``u`` precedes ``v`` when ``N(u)`` is inside ``N[v]``.  The Dilworth number
is the fewest chains covering the vertices, equivalently the largest set
of pairwise incomparable vertices.  Threshold graphs are exactly the
graphs where it equals one.

Run: python3 demos/02_dilworth_number.py
"""

from dilworth_cographs import generators as gen
from dilworth_cographs.graph import complement
from dilworth_cographs.vicinal import dilworth_number, threshold_partition, threshold_structure

for name, G in [
    ("P4", gen.path(4)),
    ("C5", gen.cycle(5)),
    ("K_{2,3}", gen.complete_multipartite([2, 3])),
    ("star on 6", gen.star(6)),
]:
    rep = dilworth_number(G)
    print(f"{name:10s} dilworth={rep.dilworth} chains={rep.chains} antichain={rep.antichain}")
    assert rep.dilworth == dilworth_number(complement(G)).dilworth

# A threshold graph built by adding isolated (i) or dominating (d) vertices.
T = gen.threshold_from_sequence(gen.parse_creation_sequence("iididd"))
ts = threshold_structure(T)
print("threshold levels: clique", ts.clique_classes, "coclique", ts.coclique_classes)

# Chains of the preorder split any graph into threshold pieces.
print("P5 threshold partition:", threshold_partition(gen.path(5)))
