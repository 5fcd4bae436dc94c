"""Slow, independent reference computations used only by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from dilworth_cographs.graph import Graph


def rational_rank(M) -> int:
    A = [[Fraction(x) for x in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
    return r


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def cofactor_char_poly(M) -> list[int]:
    """det(xI - M) by Laplace expansion along rows; ascending coefficients, trimmed."""
    n = len(M)
    entry = [[([-M[i][j], 1] if i == j else [-M[i][j]]) for j in range(n)] for i in range(n)]

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset):
        if row == n:
            return (1,)
        total = [0]
        sign = 1
        for j in sorted(cols):
            e = entry[row][j]
            if any(e):
                sub = minor(row + 1, cols - {j})
                term = _pmul(e, list(sub))
                total = _padd(total, [sign * t for t in term])
            sign = -sign
        return tuple(total)

    out = list(minor(0, frozenset(range(n))))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def brute_has_induced(G: Graph, H: Graph) -> bool:
    for image in itertools.permutations(range(G.n), H.n):
        if all(G.adj(image[i], image[j]) == H.adj(i, j) for i in range(H.n) for j in range(i + 1, H.n)):
            return True
    return False


def brute_is_cograph(G: Graph) -> bool:
    for quad in itertools.combinations(range(G.n), 4):
        degs = sorted(sum(G.adj(u, v) for v in quad if v != u) for u in quad)
        if degs == [1, 1, 2, 2]:
            return False  # the only 4-vertex graph with this degree sequence is P4
    return True


def brute_is_split(G: Graph) -> bool:
    for r in range(G.n + 1):
        for clique in itertools.combinations(range(G.n), r):
            rest = [v for v in range(G.n) if v not in clique]
            if all(G.adj(u, v) for u, v in itertools.combinations(clique, 2)) and not any(
                G.adj(u, v) for u, v in itertools.combinations(rest, 2)
            ):
                return True
    return False


def brute_max_antichain(G: Graph) -> int:
    def leq(u, v):
        nu = {w for w in range(G.n) if G.adj(u, w)}
        nv = {w for w in range(G.n) if G.adj(v, w)} | {v}
        return nu <= nv

    best = 0
    for r in range(1, G.n + 1):
        found = False
        for S in itertools.combinations(range(G.n), r):
            if all(not leq(u, v) and not leq(v, u) for u, v in itertools.combinations(S, 2)):
                found = True
                break
        if found:
            best = r
        else:
            break
    return best


def numeric_multiplicities(G: Graph, tol: float = 1e-6) -> list[int]:
    """Sorted cluster sizes of the floating-point spectrum."""
    import numpy as np

    if G.n == 0:
        return []
    ev = np.sort(np.linalg.eigvalsh(np.array(G.adjacency_matrix(), dtype=float)))
    sizes = [1]
    for a, b in zip(ev, ev[1:]):
        if b - a < tol:
            sizes[-1] += 1
        else:
            sizes.append(1)
    return sorted(sizes)


def numeric_multiplicity_of(G: Graph, lam: float, tol: float = 1e-6) -> int:
    import numpy as np

    if G.n == 0:
        return 0
    ev = np.linalg.eigvalsh(np.array(G.adjacency_matrix(), dtype=float))
    return int(sum(abs(e - lam) < tol for e in ev))
