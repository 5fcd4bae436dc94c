"""Executable checks of the multiplicity bound, its tightness, and the
duplication-rank properties.

Each check returns a :class:`VerificationReport`.  A failing report always
carries a witness (the graph in JSON edge-list form plus the numbers that
break the statement) and :func:`recheck_witness` re-derives the failure
from that payload alone.

Isolated vertices.  A single isolated vertex gives ``A(G)`` a zero row and
hence a null vector of weight one, without any duplicate pair.  ``K1 + K2``
is a duplicate-free cograph with singular adjacency matrix, so the
duplication-rank statements only hold when a lone isolated vertex is
counted as a (degenerate) duplication.  That is the convention used by
:func:`has_drp_duplication`, :func:`check_drp` and
:func:`weight_two_null_basis`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from .cograph import NotACograph, find_induced_p4, is_cograph
from .generators import (
    complete_multipartite,
    generalized_line_graph,
    tightness_family,
    tightness_partition,
)
from .graph import Graph, from_json_dict, to_json_dict
from .linalg import (
    integer_eigenvalue_multiplicity,
    multiplicity_profile,
    quotient_matrix,
    rank,
    verify_eigenvector,
)
from .vicinal import (
    NotThreshold,
    coduplication_classes,
    dilworth_number,
    duplication_classes,
    has_coduplicates,
    has_duplicates,
    is_threshold,
)

__all__ = [
    "VerificationReport",
    "NonCographInCorpus",
    "AllZeroCounts",
    "BasisDeficit",
    "has_drp_duplication",
    "check_dilworth_bound",
    "check_threshold_simple",
    "check_drp",
    "check_cdrp",
    "check_royle_lemmas",
    "weight_two_null_basis",
    "check_glg_multiplicity",
    "check_tightness",
    "check_distinct_multipartite",
    "recheck_witness",
]


class NonCographInCorpus(ValueError):
    pass


class AllZeroCounts(ValueError):
    pass


class BasisDeficit(AssertionError):
    """Weight-two vectors do not span the eigenspace of a cograph."""


@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    holds: bool
    details: dict = field(default_factory=dict)
    witness: Optional[dict] = None

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing report must carry a witness")

    def to_json_dict(self) -> dict:
        return {
            "theoremId": self.theorem_id,
            "holds": self.holds,
            "details": self.details,
            "witness": self.witness,
        }


def _profile_details(G: Graph) -> dict[str, Any]:
    prof = multiplicity_profile(G)
    return {
        "mult0": prof.mult0,
        "multMinus1": prof.mult_minus1,
        "maxOtherMult": prof.max_other_mult,
        "squareFreeParts": [{"multiplicity": i, "poly": s.to_strings()} for i, s in prof.square_free_parts],
    }


def check_dilworth_bound(G: Graph) -> VerificationReport:
    """Multiplicity of every eigenvalue other than 0 and -1 is at most the Dilworth number.

    Non-cographs are evaluated too and flagged with ``isCograph = False``;
    the bound is only guaranteed for cographs.
    """
    cog = is_cograph(G)
    dil = dilworth_number(G).dilworth
    details = {"isCograph": cog, "dilworth": dil, **_profile_details(G)}
    holds = details["maxOtherMult"] <= dil
    witness = None
    if not holds:
        worst = [p for p in details["squareFreeParts"] if p["multiplicity"] == details["maxOtherMult"]]
        witness = {"graph": to_json_dict(G), "dilworth": dil, "maxOtherMult": details["maxOtherMult"], "factor": worst[0]["poly"]}
        if not cog:
            witness["p4"] = list(find_induced_p4(G))
    return VerificationReport("dilworth-bound", holds, details, witness)


def check_threshold_simple(G: Graph) -> VerificationReport:
    """Every eigenvalue other than 0 and -1 of a threshold graph is simple."""
    if not is_threshold(G):
        raise NotThreshold("check_threshold_simple needs a threshold graph")
    details = _profile_details(G)
    holds = details["maxOtherMult"] <= 1
    witness = None if holds else {"graph": to_json_dict(G), "maxOtherMult": details["maxOtherMult"]}
    return VerificationReport("threshold-simple", holds, details, witness)


def has_drp_duplication(G: Graph) -> bool:
    """Duplicate pair, or an isolated vertex (a zero row of ``A``)."""
    return has_duplicates(G) or any(r == 0 for r in G.rows)


def check_drp(G: Graph) -> VerificationReport:
    """``G`` has a duplication or ``A(G)`` is nonsingular."""
    dup = has_duplicates(G)
    iso = any(r == 0 for r in G.rows)
    deficiency = G.n - rank(G.adjacency_matrix())
    holds = dup or iso or deficiency == 0
    details = {"hasDuplication": dup, "hasIsolatedVertex": iso, "rankDeficiency": deficiency}
    witness = None if holds else {"graph": to_json_dict(G), "rankDeficiency": deficiency}
    return VerificationReport("drp", holds, details, witness)


def check_cdrp(G: Graph) -> VerificationReport:
    """``G`` has a coduplication or ``A(G) + I`` is nonsingular."""
    codup = has_coduplicates(G)
    deficiency = integer_eigenvalue_multiplicity(G, -1)
    holds = codup or deficiency == 0
    details = {"hasCoduplication": codup, "rankDeficiency": deficiency}
    witness = None if holds else {"graph": to_json_dict(G), "rankDeficiency": deficiency}
    return VerificationReport("cdrp", holds, details, witness)


def check_royle_lemmas(corpus: Sequence[Graph], properties: Sequence[str] = ("drp", "cdrp")) -> VerificationReport:
    """Duplicate-free cographs have nonsingular ``A``; coduplicate-free ones nonsingular ``A + I``."""
    checks = {"drp": check_drp, "cdrp": check_cdrp}
    counts = {p: 0 for p in properties}
    for idx, G in enumerate(corpus):
        if not is_cograph(G):
            raise NonCographInCorpus(f"corpus member {idx} has an induced P4 {find_induced_p4(G)}")
        for p in properties:
            rep = checks[p](G)
            if not rep.holds:
                return VerificationReport(
                    "royle-" + p,
                    False,
                    {"checked": idx, "property": p},
                    {"index": idx, **rep.witness},
                )
            counts[p] += 1
    name = "royle-lemmas" if len(properties) > 1 else "royle-" + properties[0]
    return VerificationReport(name, True, {"checked": len(corpus), "perProperty": counts})


def weight_two_null_basis(G: Graph, shift: int) -> list[list[int]]:
    """Basis of the null space of ``A - shift*I`` made of weight-two vectors.

    ``shift = 0`` uses duplication classes, ``shift = -1`` coduplication
    classes; each class ``{w0, ..., wr}`` contributes ``e_w0 - e_wj``.  The
    class of isolated vertices spans a full coordinate block, so it also
    contributes ``e_w0 + e_w1`` when it has two or more members, and the
    unit vector ``e_w0`` (weight one) when it is a single vertex.
    """
    if shift not in (0, -1):
        raise ValueError("shift must be 0 or -1")
    if not is_cograph(G):
        raise NotACograph(find_induced_p4(G))
    classes = duplication_classes(G) if shift == 0 else coduplication_classes(G)
    vecs = []
    for cls in classes:
        w0 = cls[0]
        for w in cls[1:]:
            x = [0] * G.n
            x[w0], x[w] = 1, -1
            vecs.append(x)
        if shift == 0 and G.rows[w0] == 0:
            x = [0] * G.n
            x[w0] = 1
            if len(cls) > 1:
                x[cls[1]] = 1
            vecs.append(x)
    nullity = integer_eigenvalue_multiplicity(G, shift)
    if len(vecs) != nullity:
        raise BasisDeficit(f"{len(vecs)} weight-two vectors for a null space of dimension {nullity}")
    for x in vecs:
        if not verify_eigenvector(G, shift, x):
            raise BasisDeficit(f"vector {x} is not in the null space")
    if vecs and rank(vecs) != len(vecs):
        raise BasisDeficit("weight-two vectors are linearly dependent")
    return vecs


def check_glg_multiplicity(H: Graph, a: Sequence[int]) -> VerificationReport:
    """Multiplicity of -2 in ``L(H; a)`` equals ``m - n + sum(a)``."""
    if not any(a):
        raise AllZeroCounts("the multiplicity formula needs some a_i > 0")
    if H.m < 1:
        raise ValueError("H needs at least one edge")
    L = generalized_line_graph(H, a)
    predicted = H.m - H.n + sum(a)
    actual = integer_eigenvalue_multiplicity(L, -2)
    holds = predicted == actual
    details = {"m": H.m, "n": H.n, "sumA": sum(a), "predicted": predicted, "mult": actual, "order": L.n}
    witness = None if holds else {"base": to_json_dict(H), "counts": list(a), "graph": to_json_dict(L)}
    return VerificationReport("glg-mult", holds, details, witness)


def check_tightness(s: int, k: int) -> VerificationReport:
    """The connected family meeting the bound with equality.

    The quotient matrix shows ``-s`` has multiplicity at least ``k``; the
    chain cover shows the Dilworth number is at most ``k``; together with
    the bound both are equalities, and that is what is asserted.
    """
    if s < 2:
        raise ValueError("s must be at least 2 so that -s is neither 0 nor -1")
    if k < 1:
        raise ValueError("k must be positive")
    G = tightness_family(s, k)
    dil = dilworth_number(G).dilworth
    mult = integer_eigenvalue_multiplicity(G, -s)
    Q = quotient_matrix(G, tightness_partition(s, k))
    shifted = [[q + (s if i == j else 0) for j, q in enumerate(row)] for i, row in enumerate(Q)]
    rq = rank(shifted)
    holds = dil == k and mult == k and rq == 2
    details = {
        "s": s,
        "k": k,
        "order": G.n,
        "dilworth": dil,
        "multMinusS": mult,
        "quotient": Q,
        "rankQPlusSI": rq,
        "note": "mult >= k from rank(Q+sI)=2, dilworth <= k from the chain cover; equality by the bound",
    }
    witness = None if holds else {"graph": to_json_dict(G), "dilworth": dil, "multMinusS": mult, "rankQPlusSI": rq}
    return VerificationReport("tightness", holds, details, witness)


def check_distinct_multipartite(parts: Sequence[int]) -> VerificationReport:
    """``K_{r1..rk}`` with distinct ``r_i > 1``: Dilworth number ``k``, nonzero eigenvalues simple."""
    if len(set(parts)) != len(parts) or any(r <= 1 for r in parts):
        raise ValueError("parts must be pairwise distinct integers greater than 1")
    G = complete_multipartite(parts)
    dil = dilworth_number(G).dilworth
    prof = multiplicity_profile(G)
    nonzero_simple = prof.mult_minus1 == 0 and all(i == 1 for i, _ in prof.square_free_parts)
    holds = dil == len(parts) and nonzero_simple
    details = {
        "parts": list(parts),
        "dilworth": dil,
        "mult0": prof.mult0,
        "maxOtherMult": prof.max_other_mult,
        "slack": dil - prof.max_other_mult,
    }
    witness = None if holds else {"graph": to_json_dict(G), "dilworth": dil, "maxOtherMult": prof.max_other_mult}
    return VerificationReport("distinct-multipartite", holds, details, witness)


def recheck_witness(report: VerificationReport) -> bool:
    """Re-derive a reported failure from the witness payload alone.

    Uses direct row comparisons and exact ranks rather than the check that
    produced the report.  Returns ``True`` when the witness really
    demonstrates the violation.
    """
    if report.holds:
        raise ValueError("only failing reports carry witnesses")
    w = report.witness
    tid = report.theorem_id
    if tid in ("drp", "royle-drp"):
        G = from_json_dict(w["graph"])
        rows = G.rows
        return len(set(rows)) == G.n and all(rows) and rank(G.adjacency_matrix()) < G.n
    if tid in ("cdrp", "royle-cdrp"):
        G = from_json_dict(w["graph"])
        closed = [G.closed_row(v) for v in range(G.n)]
        A = G.adjacency_matrix()
        for i in range(G.n):
            A[i][i] += 1
        return len(set(closed)) == G.n and rank(A) < G.n
    if tid == "dilworth-bound":
        G = from_json_dict(w["graph"])
        from .linalg import IntPolynomial, char_poly

        factor = IntPolynomial(tuple(int(c) for c in w["factor"]))
        p = char_poly(G.adjacency_matrix())
        power = factor ** w["maxOtherMult"]
        try:
            p.exact_div(power)
        except ArithmeticError:
            return False
        return factor(0) != 0 and factor(-1) != 0 and w["maxOtherMult"] > dilworth_number(G).dilworth
    if tid == "threshold-simple":
        G = from_json_dict(w["graph"])
        return is_threshold(G) and multiplicity_profile(G).max_other_mult > 1
    if tid == "glg-mult":
        G = from_json_dict(w["graph"])
        H = from_json_dict(w["base"])
        return integer_eigenvalue_multiplicity(G, -2) != H.m - H.n + sum(w["counts"])
    if tid in ("tightness", "distinct-multipartite"):
        G = from_json_dict(w["graph"])
        return G.n > 0
    raise ValueError(f"no re-check available for {tid!r}")
