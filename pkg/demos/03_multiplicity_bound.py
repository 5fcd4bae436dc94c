"""Eigenvalue multiplicities of cographs never exceed the Dilworth number
(0 and -1 excepted), and the bound is attained.

Multiplicities come from the exact characteristic polynomial and its
square-free decomposition; no floating point is involved.

Run: python3 demos/03_multiplicity_bound.py
"""

from dilworth_cographs import generators as gen
from dilworth_cographs.harness import check_dilworth_bound, check_distinct_multipartite, check_tightness
from dilworth_cographs.linalg import multiplicity_profile

G = gen.tightness_family(2, 3)
prof = multiplicity_profile(G)
print("G(2,3): n =", G.n)
print("  char poly:", prof.char_poly)
for mult, part in prof.square_free_parts:
    print(f"  multiplicity {mult}: {part}")
rep = check_dilworth_bound(G)
print("  dilworth", rep.details["dilworth"], "max other multiplicity", rep.details["maxOtherMult"])

# The equality family for several sizes.
for s, k in [(2, 1), (2, 4), (3, 3)]:
    d = check_tightness(s, k).details
    print(f"G({s},{k}): mult(-{s}) = {d['multMinusS']}, dilworth = {d['dilworth']}, rank(Q+sI) = {d['rankQPlusSI']}")

# Complete multipartite graphs with distinct part sizes leave growing slack.
for parts in ([2, 3], [2, 3, 4], [2, 3, 4, 5]):
    d = check_distinct_multipartite(parts).details
    print(f"K{parts}: dilworth {d['dilworth']}, max other multiplicity {d['maxOtherMult']}, slack {d['slack']}")

# Random cographs: the bound always holds.
bad = [s for s in range(300) if not check_dilworth_bound(gen.random_cograph(12, s)).holds]
print("violations among 300 random cographs:", bad)
