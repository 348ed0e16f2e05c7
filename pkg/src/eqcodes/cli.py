"""Batch command-line front end.

Subcommands: construct, verify, bounds, rankcode, search.
Exit codes: 0 ok, 1 usage error, 2 verification failure, 3 budget exhausted
without certification.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import constructions
from .codes import (CodeError, fw_bound, largest_sunflower_size,
                    partial_spread_bounds, profile, sunflower_bound)
from .document import (DocumentError, code_to_document, document_to_code,
                       profile_to_dict, rank_code_to_document, read_document,
                       write_document)
from .gf import FieldError, field_for_order
from .linalg import rank
from .rankmetric import RankMetricError, rank_code
from .search import SearchBudget, SearchError, max_partial_spread, max_t_intersecting_clique

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_BUDGET = 3

RANKCODE_PAIRWISE_CAP = 1024  # full pairwise check only below this many words


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage problems, not argparse's 2
        raise _UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="eqcodes", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", metavar="PATH", help="write the JSON document here")
        p.add_argument("--json", action="store_true", help="machine-readable report on stdout")
        p.add_argument("--seed", type=int, default=None,
                       help="reserved; deterministic paths ignore it")

    c = sub.add_parser("construct", help="build a code and write its document")
    c.add_argument("kind", choices=["spread", "sunflower", "ball", "plucker",
                                    "recursive", "example-g263", "mixed-projective",
                                    "orthogonal", "extend"])
    c.add_argument("--q", type=int, help="field order (prime power)")
    c.add_argument("--n", type=int, help="ambient dimension / parameter n")
    c.add_argument("--k", type=int, help="codeword dimension")
    c.add_argument("--t", type=int, help="intersection dimension")
    c.add_argument("--ell", type=int, help="number of extension steps")
    c.add_argument("--in", dest="infile", metavar="PATH",
                   help="input document (orthogonal, extend)")
    add_common(c)

    v = sub.add_parser("verify", help="recompute a document's profile and check expectations")
    v.add_argument("infile", metavar="PATH")
    v.add_argument("--expect-t", type=int, default=None)
    v.add_argument("--expect-size", type=int, default=None)
    v.add_argument("--expect-d", type=int, default=None)
    v.add_argument("--expect-sunflower", choices=["yes", "no"], default=None)
    add_common(v)

    b = sub.add_parser("bounds", help="print size bounds for the given parameters")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--n", type=int, default=None)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--t", type=int, default=None)
    add_common(b)

    r = sub.add_parser("rankcode", help="build and verify the constant-rank code")
    r.add_argument("--q", type=int, required=True)
    r.add_argument("--n", type=int, required=True)
    add_common(r)

    s = sub.add_parser("search", help="exact search for spreads or cliques")
    s.add_argument("kind", choices=["spread", "clique"])
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--t", type=int, default=None)
    s.add_argument("--forbid-sunflower", action="store_true")
    s.add_argument("--node-limit", type=int, default=None)
    s.add_argument("--time-limit", type=float, default=None)
    add_common(s)

    return parser


def _emit_document(doc, args) -> None:
    if args.out:
        write_document(doc, args.out)
    else:
        print(json.dumps(doc, indent=2))


def _require(args, names: Sequence[str]) -> None:
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise _UsageError(f"missing required options: {', '.join('--' + n for n in missing)}")


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "spread":
        _require(args, ["q", "n", "k"])
        ctx = field_for_order(args.q)
        code = constructions.spread(ctx, args.n, args.k)
        prov = f"spread q={args.q} n={args.n} k={args.k}"
    elif kind == "sunflower":
        _require(args, ["q", "n", "k", "t"])
        ctx = field_for_order(args.q)
        code = constructions.sunflower(ctx, args.n, args.k, args.t)
        prov = f"sunflower q={args.q} n={args.n} k={args.k} t={args.t}"
    elif kind == "ball":
        _require(args, ["q", "n", "k"])
        ctx = field_for_order(args.q)
        code = constructions.ball(ctx, args.n, args.k)
        prov = f"ball q={args.q} n={args.n} k={args.k}"
    elif kind == "plucker":
        _require(args, ["q", "n"])
        ctx = field_for_order(args.q)
        code = constructions.plucker_code(ctx, args.n)
        prov = f"plucker q={args.q} n={args.n}"
    elif kind == "recursive":
        _require(args, ["q", "n"])
        ctx = field_for_order(args.q)
        prev = constructions.plucker_code(ctx, args.n - 1)
        code = constructions.recursive_step(prev, ctx, args.n)
        prov = f"recursive q={args.q} n={args.n}"
    elif kind == "example-g263":
        code = constructions.example_code_g2_6_3()
        prov = "example-g263"
    elif kind == "mixed-projective":
        _require(args, ["n"])
        if args.q not in (None, 2):
            raise _UsageError("mixed-projective is a binary construction (--q 2)")
        code = constructions.mixed_projective_code(args.n)
        prov = f"mixed-projective n={args.n}"
    elif kind == "orthogonal":
        if not args.infile:
            raise _UsageError("orthogonal needs --in PATH")
        code_in = document_to_code(read_document(args.infile))
        code = constructions.orthogonal_code(code_in)
        prov = f"orthogonal of {args.infile}"
    elif kind == "extend":
        if not args.infile or args.ell is None:
            raise _UsageError("extend needs --in PATH and --ell")
        code_in = document_to_code(read_document(args.infile))
        code = constructions.extend_code(code_in, args.ell)
        prov = f"extend ell={args.ell} of {args.infile}"
    else:  # pragma: no cover
        raise _UsageError(f"unknown construct kind {kind}")

    doc = code_to_document(code, profile_block=profile(code), provenance=prov)
    _emit_document(doc, args)
    return EXIT_OK


def cmd_verify(args) -> int:
    code = document_to_code(read_document(args.infile))
    prof = profile(code)
    checks: list[tuple[str, object, object]] = []
    if args.expect_size is not None:
        checks.append(("size", args.expect_size, prof.size))
    if args.expect_t is not None:
        checks.append(("t", args.expect_t, prof.t))
    if args.expect_d is not None:
        checks.append(("d", args.expect_d, prof.min_distance))
        checks.append(("equidistant", True, prof.is_equidistant))
    if args.expect_sunflower is not None:
        want = args.expect_sunflower == "yes"
        checks.append(("sunflower", want, prof.sunflower_center is not None))
    failures = [(name, want, got) for name, want, got in checks if want != got]

    if args.json:
        print(json.dumps({
            "profile": profile_to_dict(prof),
            "checks": [{"name": n, "expected": w, "actual": g,
                        "ok": w == g} for n, w, g in checks],
            "ok": not failures,
        }, indent=2))
    else:
        print(f"size={prof.size} dims={list(prof.dimension_set)} "
              f"equidistant={prof.is_equidistant} t={prof.t} "
              f"min_distance={prof.min_distance} "
              f"sunflower={prof.sunflower_center is not None} ball={prof.is_ball}")
        for name, want, got in checks:
            status = "ok" if want == got else "FAIL"
            print(f"  check {name}: expected {want}, got {got} [{status}]")
    if failures:
        print(f"verification failed: {len(failures)} check(s)", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_bounds(args) -> int:
    rows = []
    if args.t is not None:
        rows.append(("sunflower_threshold",
                     f"q={args.q} k={args.k} t={args.t}",
                     sunflower_bound(args.q, args.k, args.t),
                     "above this size every t-intersecting code is a sunflower"))
    if args.n is not None and args.t is not None:
        rows.append(("intersecting_family_max",
                     f"q={args.q} n={args.n} k={args.k} t={args.t}",
                     fw_bound(args.q, args.n, args.k, args.t),
                     "Frankl-Wilson bound for pairwise intersection >= t"))
        b = largest_sunflower_size(args.q, args.n, args.k, args.t)
        rows.append(("largest_sunflower",
                     f"q={args.q} n={args.n} k={args.k} t={args.t}",
                     b.exact if b.exact is not None else (b.lower, b.upper),
                     "size of the largest t-intersecting sunflower"))
    if args.n is not None:
        b = partial_spread_bounds(args.q, args.n, args.k)
        note = ("exact (divisible/residue-1/binary k=3 case)" if b.exact is not None
                else "lower: constructive; upper: min(floor, Drake-Freeman)")
        rows.append(("partial_spread",
                     f"q={args.q} n={args.n} k={args.k}",
                     b.exact if b.exact is not None else (b.lower, b.upper),
                     note))
    if not rows:
        raise _UsageError("bounds needs --n and/or --t in addition to --q/--k")
    if args.json:
        print(json.dumps([{"bound": r[0], "params": r[1],
                           "value": r[2] if isinstance(r[2], int) else list(r[2]),
                           "note": r[3]} for r in rows], indent=2))
    else:
        for name, params, value, note in rows:
            print(f"{name:26s} {params:28s} {value!s:16s} {note}")
    return EXIT_OK


def cmd_rankcode(args) -> int:
    ctx = field_for_order(args.q)
    rc = rank_code(ctx, args.n)
    words = rc.sorted_words()
    ranks = {rank(w) for w in words}
    report = {
        "size": len(words),
        "shape": [rc.rows, rc.cols],
        "ranks": sorted(ranks),
    }
    pairwise_checked = len(words) <= RANKCODE_PAIRWISE_CAP
    if pairwise_checked:
        distances = set()
        for i in range(len(words)):
            for j in range(i + 1, len(words)):
                distances.add(rank(words[i] - words[j]))
        report["rank_distances"] = sorted(distances)
    report["pairwise_checked"] = pairwise_checked

    if args.out:
        write_document(rank_code_to_document(rc, provenance=f"rankcode q={args.q} n={args.n}"),
                       args.out)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        line = (f"{len(words)} matrices of shape {rc.rows}x{rc.cols} over GF({ctx.q}); "
                f"rank {sorted(ranks)}")
        if pairwise_checked:
            line += f", rank distance {report['rank_distances']}"
        else:
            line += ", pairwise distances not checked (too many words)"
        print(line)
    return EXIT_OK


def cmd_search(args) -> int:
    ctx = field_for_order(args.q)
    node_limit = args.node_limit
    if node_limit is None and args.time_limit is None:
        node_limit = 10_000_000
    budget = SearchBudget(node_limit=node_limit, time_limit=args.time_limit)
    if args.kind == "spread":
        result = max_partial_spread(ctx, args.n, args.k, budget)
        params = f"q={args.q} n={args.n} k={args.k}"
    else:
        if args.t is None:
            raise _UsageError("clique search needs --t")
        result = max_t_intersecting_clique(ctx, args.n, args.k, args.t, budget,
                                           forbid_sunflower=args.forbid_sunflower)
        params = f"q={args.q} n={args.n} k={args.k} t={args.t}"

    if args.out:
        doc = code_to_document(result.best_code,
                               profile_block=profile(result.best_code)
                               if len(result.best_code) else None,
                               provenance=f"search {args.kind} {params}")
        write_document(doc, args.out)
    if args.json:
        print(json.dumps({
            "kind": args.kind,
            "params": params,
            "best_size": len(result.best_code),
            "certified_optimal": result.certified_optimal,
            "nodes_explored": result.nodes_explored,
            "elapsed": result.elapsed,
        }, indent=2))
    else:
        tag = "certified optimal" if result.certified_optimal else "NOT certified"
        print(f"search {args.kind} {params}: best size {len(result.best_code)} "
              f"({tag}; {result.nodes_explored} nodes, {result.elapsed:.2f}s)")
    if not result.certified_optimal:
        return EXIT_BUDGET
    return EXIT_OK


_DISPATCH = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "rankcode": cmd_rankcode,
    "search": cmd_search,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _DISPATCH[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CodeError, FieldError, DocumentError, SearchError, RankMetricError,
            constructions.ConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:  # console_scripts entry point
    sys.exit(main())


if __name__ == "__main__":
    run()
