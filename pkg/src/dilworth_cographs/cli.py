"""Command-line entry point: ``analyze``, ``gen``, ``verify`` and ``fuzz``.

JSON goes to standard output, a short human summary to standard error.
Exit codes: 0 holds / nothing found, 1 violation / counterexample found,
2 usage error, 3 unparseable graph input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from typing import Optional, Sequence

from . import generators as gen
from .cograph import build_cotree, find_induced_p4, is_cograph
from .graph import Graph, GraphFormatError, from_graph6, from_json, to_graph6, to_json_dict
from .harness import (
    check_cdrp,
    check_dilworth_bound,
    check_distinct_multipartite,
    check_drp,
    check_glg_multiplicity,
    check_royle_lemmas,
    check_threshold_simple,
    check_tightness,
)
from .linalg import multiplicity_profile
from .search import EXHAUSTIVE, SAMPLED, SearchSpec, find_counterexample, verify_theorem_4_3
from .vicinal import NotThreshold, dilworth_number

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


_NAMED = [
    (r"path(\d+)", lambda m: gen.path(int(m[1]))),
    (r"cycle(\d+)", lambda m: gen.cycle(int(m[1]))),
    (r"complete(\d+)", lambda m: gen.complete(int(m[1]))),
    (r"star(\d+)", lambda m: gen.star(int(m[1]))),
    (r"cocktail(\d+)", lambda m: gen.cocktail_party(int(m[1]))),
    (r"house", lambda m: gen.house_graph()),
    (r"tightness-(\d+)-(\d+)", lambda m: gen.tightness_family(int(m[1]), int(m[2]))),
    (r"glg-counterexample-k(\d+)", lambda m: gen.glg_counterexample(int(m[1]))),
]


def named_graph(name: str) -> Optional[Graph]:
    """Resolve names like ``path5``, ``star4``, ``house`` or ``glg-counterexample-k3``."""
    for pattern, make in _NAMED:
        m = re.fullmatch(pattern, name.strip().lower())
        if m:
            return make(m)
    return None


def parse_graph_text(text: str) -> Graph:
    text = text.strip()
    if text.startswith("{"):
        return from_json(text)
    lines = [l for l in text.splitlines() if l.strip()]
    if len(lines) != 1:
        raise GraphFormatError("expected exactly one graph6 line")
    return from_graph6(lines[0])


def load_graph(arg: str, stdin=None) -> Graph:
    """Graph from ``-`` (stdin), a file path, a family name, or an inline graph6/JSON string."""
    try:
        if arg == "-":
            return parse_graph_text((stdin or sys.stdin).read())
        if os.path.isfile(arg):
            with open(arg, encoding="ascii") as fh:
                return parse_graph_text(fh.read())
        G = named_graph(arg)
        if G is not None:
            return G
        return parse_graph_text(arg)
    except (GraphFormatError, ValueError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot parse graph {arg!r}: {exc}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _emit(obj: dict, out=None) -> None:
    (out or sys.stdout).write(json.dumps(obj, indent=2) + "\n")


# analyze --------------------------------------------------------------------


def analysis_report(G: Graph) -> dict:
    cog = is_cograph(G)
    dil = dilworth_number(G)
    prof = multiplicity_profile(G)
    drp = check_drp(G)
    cdrp = check_cdrp(G)
    report = {
        "input": {"graph6": to_graph6(G) if G.n <= 62 else None, "graph": to_json_dict(G)},
        "isCograph": cog,
        "p4Witness": None if cog else list(find_induced_p4(G)),
        "cotree": build_cotree(G).to_json_dict() if cog and G.n else None,
        "dilworth": dil.to_json_dict(),
        "spectral": prof.to_json_dict(),
        "drp": drp.holds,
        "cdrp": cdrp.holds,
        "duplicationClasses": [list(c) for c in dil.duplication_classes],
        "coduplicationClasses": [list(c) for c in dil.coduplication_classes],
        "dilworthBoundHolds": prof.max_other_mult <= dil.dilworth,
    }
    return report


def cmd_analyze(args) -> int:
    G = load_graph(args.input)
    report = analysis_report(G)
    _emit(report)
    print(
        f"n={G.n} m={G.m} cograph={report['isCograph']} dilworth={report['dilworth']['dilworth']} "
        f"mult0={report['spectral']['mult0']} mult-1={report['spectral']['multMinus1']} "
        f"maxOtherMult={report['spectral']['maxOtherMult']}",
        file=sys.stderr,
    )
    return EXIT_OK


# gen ------------------------------------------------------------------------


def _gen_graph(args) -> Graph:
    fam = args.family
    p = args.params
    try:
        if fam in ("path", "cycle", "complete", "star", "cocktail"):
            (n,) = p
            maker = {"path": gen.path, "cycle": gen.cycle, "complete": gen.complete, "star": gen.star,
                     "cocktail": gen.cocktail_party}[fam]
            return maker(int(n))
        if fam == "multipartite":
            (parts,) = p
            return gen.complete_multipartite(_int_list(parts))
        if fam == "threshold":
            (seq,) = p
            return gen.threshold_from_sequence(gen.parse_creation_sequence(seq))
        if fam == "tightness":
            s, k = p
            return gen.tightness_family(int(s), int(k))
        if fam == "glg":
            if args.base is None:
                raise UsageError("glg needs --base")
            (counts,) = p
            H = load_graph(args.base)
            return gen.generalized_line_graph(H, _int_list(counts))
        if fam == "glg-counterexample":
            (k,) = p
            return gen.glg_counterexample(int(k))
        if fam == "house":
            if p:
                raise UsageError("house takes no parameters")
            return gen.house_graph()
        if fam == "random-cograph":
            (n,) = p
            if args.seed is None:
                raise UsageError("random-cograph needs --seed")
            return gen.random_cograph(int(n), args.seed)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad parameters for {fam}: {exc}") from exc
    raise UsageError(f"unknown family {fam!r}")


def cmd_gen(args) -> int:
    G = _gen_graph(args)
    text = to_graph6(G) if args.format == "g6" else json.dumps(to_json_dict(G))
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    print(f"{args.family}: n={G.n} m={G.m}", file=sys.stderr)
    return EXIT_OK


# verify ---------------------------------------------------------------------

THEOREM_IDS = (
    "dilworth-bound",
    "threshold-simple",
    "royle-drp",
    "royle-cdrp",
    "glg-mult",
    "tightness",
    "distinct-multipartite",
    "theorem-4-3",
)


def _need(value, flag):
    if value is None:
        raise UsageError(f"this check needs {flag}")
    return value


def _random_cographs(count: int, seed: int, max_n: int) -> list[Graph]:
    rng = random.Random(seed)
    return [gen.random_cograph(rng.randint(1, max_n), rng.randrange(2**32)) for _ in range(count)]


def cmd_verify(args) -> int:
    tid = args.theorem
    if tid == "dilworth-bound":
        rep = check_dilworth_bound(load_graph(_need(args.input, "--input")))
    elif tid == "threshold-simple":
        try:
            rep = check_threshold_simple(load_graph(_need(args.input, "--input")))
        except NotThreshold as exc:
            raise UsageError(str(exc)) from exc
    elif tid in ("royle-drp", "royle-cdrp"):
        prop = tid.split("-")[1]
        if args.input:
            corpus = [load_graph(args.input)]
        else:
            corpus = _random_cographs(args.count, _need(args.seed, "--input or --seed"), args.max_n or 12)
        try:
            rep = check_royle_lemmas(corpus, (prop,))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif tid == "glg-mult":
        H = load_graph(_need(args.base, "--base"))
        try:
            rep = check_glg_multiplicity(H, _int_list(_need(args.counts, "--counts")))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif tid == "tightness":
        try:
            rep = check_tightness(_need(args.s, "--s"), _need(args.k, "--k"))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif tid == "distinct-multipartite":
        try:
            rep = check_distinct_multipartite(_int_list(_need(args.parts, "--parts")))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif tid == "theorem-4-3":
        try:
            rep = verify_theorem_4_3(args.max_n or 7, jobs=args.jobs)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        raise UsageError(f"unknown theorem id {tid!r}; choose from {', '.join(THEOREM_IDS)}")
    _emit(rep.to_json_dict())
    print(f"{tid}: {'holds' if rep.holds else 'VIOLATED'}", file=sys.stderr)
    return EXIT_OK if rep.holds else EXIT_VIOLATION


# fuzz -----------------------------------------------------------------------


def cmd_fuzz(args) -> int:
    H = load_graph(args.forbidden)
    if args.mode == SAMPLED and args.seed is None:
        raise UsageError("sampled mode needs --seed")
    try:
        spec = SearchSpec(H, args.property, args.max_n, args.mode, args.count, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    found = find_counterexample(spec, jobs=args.jobs)
    out = {
        "forbidden": to_graph6(H),
        "property": args.property,
        "maxN": args.max_n,
        "mode": args.mode,
        "found": found is not None,
    }
    if found is not None:
        W, rep = found
        out["witness"] = {"graph6": to_graph6(W), "graph": to_json_dict(W)}
        out["report"] = rep.to_json_dict()
    _emit(out)
    print("counterexample " + out["witness"]["graph6"] if found else "no counterexample", file=sys.stderr)
    return EXIT_VIOLATION if found else EXIT_OK


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dilworth-cographs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant report for one graph")
    p.add_argument("input", help="graph6 string, JSON edge list, file path, family name, or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="write a named graph family")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--format", choices=("g6", "json"), default="g6")
    p.add_argument("--out")
    p.add_argument("--base", help="base graph for glg")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run one theorem check")
    p.add_argument("theorem")
    p.add_argument("--input")
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--parts")
    p.add_argument("--base")
    p.add_argument("--counts")
    p.add_argument("--max-n", type=int)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="search an H-free family for a DRP/CDRP violator")
    p.add_argument("--forbidden", required=True)
    p.add_argument("--property", choices=("drp", "cdrp"), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--mode", choices=(EXHAUSTIVE, SAMPLED), default=EXHAUSTIVE)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # gen accepts family parameters after options, e.g. ``gen glg --base star4 3,1,1,1``
        if extra and (args.command != "gen" or any(t.startswith("--") for t in extra)):
            parser.error("unrecognized arguments: " + " ".join(extra))
        if extra:
            args.params = list(args.params) + extra
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
