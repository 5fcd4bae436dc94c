"""Exact integer linear algebra for adjacency spectra.

Nothing here touches floating point.  Ranks come from fraction-free
(Bareiss) elimination, characteristic polynomials from the division-free
Berkowitz recurrence, and eigenvalue multiplicities from a square-free
decomposition of the characteristic polynomial (Yun's algorithm over the
integers with primitive-PRS gcds).  Because adjacency matrices are
symmetric, algebraic and geometric multiplicities agree, which is what lets
``multiplicity_profile`` read multiplicities off the polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .graph import Graph

__all__ = [
    "IntMatrix",
    "IntPolynomial",
    "SpectralProfile",
    "NotEquitable",
    "SpectralCrossCheckError",
    "rank",
    "char_poly",
    "poly_gcd",
    "square_free_decomposition",
    "multiplicity_profile",
    "integer_eigenvalue_multiplicity",
    "verify_eigenvector",
    "quotient_matrix",
    "shifted_adjacency",
]

IntMatrix = list  # list of equal-length lists of int


class NotEquitable(ValueError):
    """The supplied partition is not equitable; carries the offending pair."""

    def __init__(self, message: str, pair: tuple[int, int], parts: tuple[int, int]):
        super().__init__(message)
        self.pair = pair
        self.parts = parts


class SpectralCrossCheckError(AssertionError):
    """Polynomial and rank computations disagree; indicates a bug."""


# Polynomials -------------------------------------------------------------


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients stored in ascending degree.

    The zero polynomial has an empty coefficient tuple and degree ``-1``.
    """

    coeffs: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def pseudo_rem(self, other: "IntPolynomial") -> "IntPolynomial":
        if other.is_zero():
            raise ZeroDivisionError("pseudo-remainder by the zero polynomial")
        r = list(self.coeffs)
        d = other.degree
        b = other.coeffs
        lb = b[-1]
        while len(r) - 1 >= d and r:
            shift = len(r) - 1 - d
            lr = r[-1]
            r = [c * lb for c in r]
            for i, c in enumerate(b):
                r[i + shift] -= lr * c
            r = list(_trim(r))
        return IntPolynomial(tuple(r))

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Quotient when ``other`` divides ``self`` in Z[x]; raises otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        b = other.coeffs
        d = other.degree
        q = [0] * max(len(r) - d, 0)
        while r and len(r) - 1 >= d:
            shift = len(r) - 1 - d
            lead, rem = divmod(r[-1], b[-1])
            if rem:
                raise ArithmeticError("division is not exact over the integers")
            q[shift] = lead
            for i, c in enumerate(b):
                r[i + shift] -= lead * c
            r = list(_trim(r))
        if r:
            raise ArithmeticError("nonzero remainder in exact division")
        return IntPolynomial(tuple(q))

    def multiplicity_of_root(self, root: int) -> int:
        """Largest ``e`` with ``(x - root)**e`` dividing ``self``."""
        if self.is_zero():
            raise ValueError("every root has infinite multiplicity in the zero polynomial")
        lin = IntPolynomial((-root, 1))
        p, e = self, 0
        while p(root) == 0:
            p = p.exact_div(lin)
            e += 1
        return e

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


X = IntPolynomial((0, 1))


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd (positive leading coefficient) via the primitive PRS."""
    a, b = a.primitive(), b.primitive()
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, r.primitive()
    return a.primitive()


def square_free_decomposition(p: IntPolynomial) -> list[tuple[int, IntPolynomial]]:
    """Yun's square-free decomposition over Z.

    Returns ``[(i, s_i), ...]`` for the factors of positive degree, with
    ``p = c * prod(s_i ** i)``, each ``s_i`` primitive and square-free with
    positive leading coefficient, pairwise coprime.

    >>> square_free_decomposition(IntPolynomial((0, 0, 1, 1)))
    [(1, IntPolynomial(coeffs=(1, 1))), (2, IntPolynomial(coeffs=(0, 1)))]
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no square-free decomposition")
    f = p.primitive()
    if f.degree < 1:
        return []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f.exact_div(a)
    c = fp.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        s = poly_gcd(b, d)
        b = b.exact_div(s)
        c = d.exact_div(s)
        d = c - b.derivative()
        if s.degree > 0:
            out.append((i, s))
        i += 1
    return out


# Matrices ----------------------------------------------------------------


def rank(M: Sequence[Sequence[int]]) -> int:
    """Rank over Q by Bareiss fraction-free elimination.

    Every intermediate entry is a minor of ``M``, so the division by the
    previous pivot is exact.
    """
    A = [list(r) for r in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        pr = A[r]
        for i in range(r + 1, rows):
            ai = A[i]
            f = ai[c]
            for j in range(c + 1, cols):
                ai[j] = (p * ai[j] - f * pr[j]) // prev
            ai[c] = 0
        prev = p
        r += 1
    return r


def char_poly(M: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(xI - M)`` by the Berkowitz recurrence (no divisions)."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("characteristic polynomial needs a square matrix")
    if n == 0:
        return IntPolynomial((1,))
    # descending coefficients throughout
    poly = [1, -M[0][0]]
    for N in range(2, n + 1):
        k = N - 1
        R = [-M[k][j] for j in range(k)]
        C = [M[i][k] for i in range(k)]
        items = [1, -M[k][k]]
        vec = C
        for step in range(N - 1):
            items.append(sum(R[i] * vec[i] for i in range(k)))
            if step < N - 2:
                vec = [sum(M[i][j] * vec[j] for j in range(k)) for i in range(k)]
        # lower-triangular Toeplitz (N+1) x N times poly (length N)
        new = [0] * (N + 1)
        for i in range(N + 1):
            acc = 0
            for j in range(min(i + 1, N)):
                acc += items[i - j] * poly[j]
            new[i] = acc
        poly = new
    return IntPolynomial(tuple(reversed(poly)))


def shifted_adjacency(G: Graph, lam: int) -> list[list[int]]:
    """``A(G) - lam * I``."""
    A = G.adjacency_matrix()
    for i in range(G.n):
        A[i][i] -= lam
    return A


def integer_eigenvalue_multiplicity(G: Graph, lam: int) -> int:
    """``n - rank(A - lam I)``; zero when ``lam`` is not an eigenvalue."""
    return G.n - rank(shifted_adjacency(G, lam))


def verify_eigenvector(G: Graph, lam: int, x: Sequence[int]) -> bool:
    """Check ``lam * x(v) == sum of x(u) over neighbours u`` at every vertex.

    The zero vector is not an eigenvector and yields ``False``.
    """
    if len(x) != G.n:
        raise ValueError(f"vector has length {len(x)}, graph has {G.n} vertices")
    if not any(x):
        return False
    for v in range(G.n):
        row = G.rows[v]
        s = 0
        u = 0
        while row:
            if row & 1:
                s += x[u]
            row >>= 1
            u += 1
        if s != lam * x[v]:
            return False
    return True


def quotient_matrix(G: Graph, parts: Sequence[Iterable[int]]) -> list[list[int]]:
    """Quotient matrix ``(b_ij)`` of an equitable partition.

    Raises :class:`NotEquitable` naming two vertices of one part whose
    neighbour counts into some part differ.
    """
    masks = []
    seen = 0
    for p in parts:
        m = 0
        for v in p:
            if not 0 <= v < G.n:
                raise ValueError(f"vertex {v} out of range")
            m |= 1 << v
        if not m:
            raise ValueError("partition contains an empty part")
        if m & seen:
            raise ValueError("parts overlap")
        seen |= m
        masks.append(m)
    if seen != G.full_mask:
        raise ValueError("parts do not cover the vertex set")
    Q = []
    for i, mi in enumerate(masks):
        members = [v for v in range(G.n) if mi >> v & 1]
        first = members[0]
        row = [(G.rows[first] & mj).bit_count() for mj in masks]
        for v in members[1:]:
            for j, mj in enumerate(masks):
                if (G.rows[v] & mj).bit_count() != row[j]:
                    raise NotEquitable(
                        f"vertices {first} and {v} of part {i} have different neighbour counts in part {j}",
                        (first, v),
                        (i, j),
                    )
        Q.append(row)
    return Q


# Spectral profile --------------------------------------------------------


@dataclass(frozen=True)
class SpectralProfile:
    """Exact multiplicity structure of the adjacency spectrum.

    ``square_free_parts`` lists ``(i, s_i)`` for the part of the
    characteristic polynomial left after removing every factor ``x`` and
    ``x + 1``: each root of ``s_i`` is an eigenvalue of multiplicity ``i``.
    """

    n: int
    char_poly: IntPolynomial
    mult0: int
    mult_minus1: int
    square_free_parts: tuple[tuple[int, IntPolynomial], ...]
    max_other_mult: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "charPoly": self.char_poly.to_strings(),
            "mult0": self.mult0,
            "multMinus1": self.mult_minus1,
            "squareFreeParts": [
                {"multiplicity": i, "poly": s.to_strings()} for i, s in self.square_free_parts
            ],
            "maxOtherMult": self.max_other_mult,
        }


def multiplicity_profile(G: Graph) -> SpectralProfile:
    A = G.adjacency_matrix()
    p = char_poly(A)
    a = p.multiplicity_of_root(0)
    b = p.multiplicity_of_root(-1)
    null0 = G.n - rank(A)
    null1 = integer_eigenvalue_multiplicity(G, -1)
    if a != null0 or b != null1:
        raise SpectralCrossCheckError(
            f"polynomial multiplicities (0: {a}, -1: {b}) disagree with ranks (0: {null0}, -1: {null1})"
        )
    q = p.exact_div(X**a * IntPolynomial((1, 1)) ** b)
    parts = tuple(square_free_decomposition(q))
    total = a + b + sum(i * s.degree for i, s in parts)
    if total != G.n:
        raise SpectralCrossCheckError(f"multiplicities sum to {total}, expected {G.n}")
    max_other = max((i for i, s in parts if s.degree >= 1), default=0)
    return SpectralProfile(G.n, p, a, b, parts, max_other)
