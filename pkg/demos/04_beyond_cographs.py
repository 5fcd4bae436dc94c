"""Outside cographs the multiplicity bound fails.

``L(K_{1,k}; k, 1, ..., 1)`` is a generalized line graph with Dilworth
number ``k`` in which -2 has multiplicity ``2k - 1``.

Run: python3 demos/04_beyond_cographs.py
"""

import json

from dilworth_cographs import generators as gen
from dilworth_cographs.harness import check_dilworth_bound, check_glg_multiplicity, recheck_witness

for k in (2, 3, 4, 5):
    G = gen.glg_counterexample(k)
    rep = check_dilworth_bound(G)
    glg = check_glg_multiplicity(gen.star(k + 1), [k] + [1] * k)
    print(
        f"k={k}: n={G.n} dilworth={rep.details['dilworth']} mult(-2)={glg.details['mult']} "
        f"(predicted {glg.details['predicted']}) bound holds: {rep.holds}"
    )

rep = check_dilworth_bound(gen.glg_counterexample(3))
print(json.dumps({k: v for k, v in rep.witness.items() if k != "graph"}))
print("witness re-derived independently:", recheck_witness(rep))
