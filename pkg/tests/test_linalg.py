import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dilworth_cographs import generators as gen
from dilworth_cographs.graph import empty_graph, from_edge_list
from dilworth_cographs.linalg import (
    IntPolynomial,
    NotEquitable,
    char_poly,
    integer_eigenvalue_multiplicity,
    multiplicity_profile,
    poly_gcd,
    quotient_matrix,
    rank,
    square_free_decomposition,
    verify_eigenvector,
)
from conftest import random_graph
from oracles import cofactor_char_poly, numeric_multiplicities, numeric_multiplicity_of, rational_rank


def P(*coeffs):
    return IntPolynomial(coeffs)


# rank -----------------------------------------------------------------------


def test_rank_examples(K23, P5):
    assert rank(K23.adjacency_matrix()) == 2
    assert rank(P5.adjacency_matrix()) == 4
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([]) == 0


def test_rank_against_rational_elimination(rng):
    for _ in range(300):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        M = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        if rng.random() < 0.3 and r > 1:
            M[-1] = [a + b for a, b in zip(M[0], M[1 % r])]
        assert rank(M) == rational_rank(M)


# characteristic polynomial --------------------------------------------------


def test_char_poly_examples(P5):
    assert char_poly(gen.complete(2).adjacency_matrix()) == P(-1, 0, 1)
    assert char_poly(P5.adjacency_matrix()) == P(0, 3, 0, -4, 0, 1)
    assert char_poly([]) == P(1)
    with pytest.raises(ValueError):
        char_poly([[1, 2]])


def test_char_poly_general_integer_matrices(rng):
    for _ in range(100):
        n = rng.randint(1, 5)
        M = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert list(char_poly(M).coeffs) == cofactor_char_poly(M)


def test_char_poly_coefficient_identities(rng):
    from oracles import brute_has_induced  # noqa: F401  (oracle module import check)

    for _ in range(200):
        n = rng.randint(3, 10)
        G = random_graph(rng, n, rng.random())
        c = char_poly(G.adjacency_matrix()).coeffs
        triangles = sum(
            1 for a, b, d in itertools.combinations(range(n), 3) if G.adj(a, b) and G.adj(b, d) and G.adj(a, d)
        )
        assert c[n] == 1
        assert c[n - 1] == 0
        assert c[n - 2] == -G.m
        assert c[n - 3] == -2 * triangles


# polynomials ----------------------------------------------------------------


def test_polynomial_arithmetic():
    a = P(1, 1)
    assert a * a == P(1, 2, 1)
    assert (a * a).exact_div(a) == a
    with pytest.raises(ArithmeticError):
        P(1, 0, 1).exact_div(P(1, 1))
    assert P(0, 0, 3).derivative() == P(0, 6)
    assert IntPolynomial.from_roots([1, -1]) == P(-1, 0, 1)
    assert str(P(0, 3, 0, -4, 0, 1)) == "x^5 - 4*x^3 + 3*x"
    assert P(2, 4).primitive() == P(1, 2)
    assert P(-2, -4).primitive() == P(1, 2)


def test_poly_gcd():
    f = IntPolynomial.from_roots([1, 2, 2, -3])
    g = IntPolynomial.from_roots([2, -3, 5])
    assert poly_gcd(f, g) == IntPolynomial.from_roots([2, -3])
    assert poly_gcd(P(1, 1), P(1, 2)) == P(1)
    assert poly_gcd(P(6, 6), P()) == P(1, 1)


def test_square_free_examples():
    assert square_free_decomposition(P(0, 0, 1, 1)) == [(1, P(1, 1)), (2, P(0, 1))]
    assert square_free_decomposition(P(0, 3, 0, -4, 0, 1)) == [(1, P(0, 3, 0, -4, 0, 1))]
    assert square_free_decomposition(IntPolynomial.from_roots([-2] * 3)) == [(3, P(2, 1))]
    assert square_free_decomposition(P(7)) == []
    with pytest.raises(ValueError):
        square_free_decomposition(P())


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 4)), min_size=1, max_size=4, unique_by=lambda t: t[0]),
       st.integers(1, 5))
@settings(max_examples=100)
def test_square_free_reassembles(roots, scale):
    p = IntPolynomial((scale,))
    for r, e in roots:
        p = p * IntPolynomial.from_roots([r] * e)
    parts = square_free_decomposition(p)
    rebuilt = IntPolynomial((1,))
    for i, s in parts:
        rebuilt = rebuilt * s**i
    assert rebuilt * scale == p
    expected = {}
    for r, e in roots:
        expected.setdefault(e, []).append(r)
    assert {i: sorted(-s.coeffs[0] for _ in [0]) for i, s in parts if s.degree == 1} == {
        i: [rs[0]] for i, rs in expected.items() if len(rs) == 1
    }
    assert {i: s.degree for i, s in parts} == {i: len(rs) for i, rs in expected.items()}


def test_square_free_irreducible_repeated():
    q = P(-3, 0, 1)  # x^2 - 3
    p = q * q * P(-2, 0, 1)
    assert square_free_decomposition(p) == [(1, P(-2, 0, 1)), (2, q)]


# spectral profile -------------------------------------------------------------


def test_profile_examples(K23, P5):
    prof = multiplicity_profile(K23)
    assert (prof.mult0, prof.mult_minus1, prof.max_other_mult) == (3, 0, 1)
    assert prof.char_poly == P(0, 0, 0, -6, 0, 1)

    cp3 = multiplicity_profile(gen.cocktail_party(3))
    assert (cp3.mult0, cp3.mult_minus1, cp3.max_other_mult) == (3, 0, 2)
    assert dict(cp3.square_free_parts) == {2: P(2, 1), 1: P(-4, 1)}

    p5 = multiplicity_profile(P5)
    assert (p5.mult0, p5.mult_minus1, p5.max_other_mult) == (1, 1, 1)


def test_profile_invariants_and_numeric_oracle(rng):
    for _ in range(150):
        n = rng.randint(1, 10)
        G = random_graph(rng, n, rng.random())
        prof = multiplicity_profile(G)
        assert prof.mult0 + prof.mult_minus1 + sum(i * s.degree for i, s in prof.square_free_parts) == n
        for _, s in prof.square_free_parts:
            assert s(0) != 0 and s(-1) != 0
        assert prof.mult0 == n - rank(G.adjacency_matrix())
        # floating-point spectrum as an independent check
        sizes = numeric_multiplicities(G)
        exact = [prof.mult0] * (prof.mult0 > 0) + [prof.mult_minus1] * (prof.mult_minus1 > 0)
        for i, s in prof.square_free_parts:
            exact += [i] * s.degree
        assert sorted(exact) == sizes


def test_profile_json():
    d = multiplicity_profile(gen.path(3)).to_json_dict()
    assert d["charPoly"] == ["0", "-2", "0", "1"]
    assert d["squareFreeParts"] == [{"multiplicity": 1, "poly": ["-2", "0", "1"]}]


def test_profile_empty_graph():
    prof = multiplicity_profile(empty_graph(0))
    assert prof.n == 0 and prof.max_other_mult == 0


# integer eigenvalues ------------------------------------------------------------


def test_integer_multiplicity_examples(P5):
    for n in range(1, 7):
        assert integer_eigenvalue_multiplicity(gen.complete(n), -1) == n - 1
    assert integer_eigenvalue_multiplicity(gen.tightness_family(2, 3), -2) == 3
    assert integer_eigenvalue_multiplicity(P5, 2) == 0


def test_integer_multiplicity_matches_polynomial(rng):
    for _ in range(100):
        G = random_graph(rng, rng.randint(1, 9), rng.random())
        p = char_poly(G.adjacency_matrix())
        for lam in range(-3, 4):
            assert integer_eigenvalue_multiplicity(G, lam) == p.multiplicity_of_root(lam)
            assert integer_eigenvalue_multiplicity(G, lam) == numeric_multiplicity_of(G, lam)


# eigenvectors ---------------------------------------------------------------------


def test_verify_eigenvector_examples(P5, house):
    assert verify_eigenvector(P5, 0, [1, 0, -1, 0, 1])
    # the -1 eigenspace of P5 is spanned by (1, -1, 0, 1, -1)
    assert verify_eigenvector(P5, -1, [1, -1, 0, 1, -1])
    # (1, -1, 0, -1, 1) breaks the sum rule at the middle vertex: -1 + -1 != -1 * 0
    assert not verify_eigenvector(P5, -1, [1, -1, 0, -1, 1])
    assert verify_eigenvector(house, 0, [0, -1, 1, -1, 1])
    assert not verify_eigenvector(P5, 0, [1, 1, 1, 1, 1])
    assert not verify_eigenvector(P5, 0, [0] * 5)
    with pytest.raises(ValueError):
        verify_eigenvector(P5, 0, [1, 0])


# quotient matrices ----------------------------------------------------------------


@pytest.mark.parametrize("s,k", [(2, 1), (2, 3), (3, 2), (3, 4), (4, 2)])
def test_quotient_matrix_tightness(s, k):
    G = gen.tightness_family(s, k)
    Q = quotient_matrix(G, gen.tightness_partition(s, k))
    expected = []
    for i in range(k):
        expected.append([0 if j == i else s for j in range(k)] + [1, 0])
    expected.append([s] * k + [0, s * s - s])
    expected.append([0] * k + [1, 0])
    assert Q == expected
    shifted = [[q + (s if i == j else 0) for j, q in enumerate(row)] for i, row in enumerate(Q)]
    assert rank(shifted) == 2


def test_quotient_matrix_regular():
    assert quotient_matrix(gen.cycle(7), [range(7)]) == [[2]]
    assert quotient_matrix(gen.cocktail_party(3), [range(6)]) == [[4]]


def test_quotient_matrix_rejects(P4):
    with pytest.raises(NotEquitable) as exc:
        quotient_matrix(P4, [[0, 1, 2, 3]])
    assert exc.value.pair == (0, 1)
    with pytest.raises(ValueError):
        quotient_matrix(P4, [[0, 1], [1, 2, 3]])
    with pytest.raises(ValueError):
        quotient_matrix(P4, [[0, 1]])
