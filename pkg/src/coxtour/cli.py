"""Command-line front end.

Exit codes: 0 success or member, 1 non-member or infeasible, 2 usage or I/O
error, 3 precondition failure.  Results are printed as one JSON document.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from .birkhoff import birkhoff_decompose, mixture_tournament, strassen_construct
from .btfit import bt_fit, bt_forward
from .errors import (
    BoundaryError,
    ComplexityError,
    ConvergenceError,
    CoxtourError,
    InfeasibleError,
    PreconditionError,
)
from .hh import format_trace, hh_construct
from .landau import realize_deterministic, search_deterministic
from .oracle import OracleBudget, enumerate_deterministic_targets, lp_member
from .rational import fmt_vector, parse_vector
from .roots import AdmissibleSubset, RootType, delta_of, rho_complete
from .score import (
    complete_violation,
    h_signed,
    is_translated_lattice_point,
    rho_graph,
    violated_subset,
)
from .sgraph import SignedGraph, complete_graph, is_balanced, switching_signs

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(payload: dict, out) -> None:
    out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")


def _read_text(arg: str) -> str:
    path = Path(arg)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    return arg


def load_vector(arg: str):
    """A vector from a CSV file, or the argument itself (``"(0, 5/2)"``)."""
    try:
        return parse_vector(_read_text(arg))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse vector {arg!r}: {exc}") from exc


def load_graph(arg: str) -> SignedGraph:
    try:
        data = json.loads(_read_text(arg))
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot read graph {arg!r}: {exc}") from exc
    if "graph" in data and "root_type" not in data:
        data = data["graph"]  # accept a tournament document too
    try:
        return SignedGraph.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"invalid graph {arg!r}: {exc}") from exc


def parse_type(text: str, n: int | None) -> RootType:
    """``C`` (rank from ``n``), ``C3`` or ``C_3``."""
    m = re.fullmatch(r"\s*([ABCDabcd])_?(\d*)\s*", text)
    if not m:
        raise UsageError(f"unknown root type {text!r}")
    kind = m.group(1).upper()
    if m.group(2):
        rank = int(m.group(2))
        if n is not None and n != rank:
            raise UsageError(f"type {text} has rank {rank} but {n} scores were given")
    elif n is None:
        raise UsageError(f"type {text!r} needs a rank")
    else:
        rank = n
    try:
        return RootType(kind, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _subset_json(s) -> dict:
    return {"plus": sorted(s.plus), "minus": sorted(s.minus)}


def cmd_check(args, out) -> int:
    x = load_vector(args.scores)
    if args.graph:
        g = load_graph(args.graph)
        if len(x) != g.n:
            raise UsageError(f"graph has {g.n} players, got {len(x)} scores")
    elif args.type:
        g = complete_graph(parse_type(args.type, len(x)))
    else:
        raise UsageError("check needs --graph or --type")
    payload = {"root_type": str(g.root_type), "scores": fmt_vector(x)}
    if args.complete:
        bad = complete_violation(g.root_type, x)
        payload["member"] = bad is None
        if bad:
            k, lhs, rhs = bad
            payload["violation"] = {"k": k, "top_k_abs_sum": str(lhs), "rho_sum": str(rhs)}
    else:
        bad = violated_subset(g, x)
        payload["member"] = bad is None
        if bad:
            payload["violated_subset"] = _subset_json(bad)
            payload["h"] = str(h_signed(g, bad))
    _emit(payload, out)
    return EXIT_OK if payload["member"] else EXIT_NO


def cmd_construct(args, out, err) -> int:
    x = load_vector(args.scores)
    t = parse_type(args.type, len(x))
    trace = [] if args.trace else None
    extra = {}
    if args.method == "hh":
        tour = hh_construct(t, x, trace)
    elif args.method == "birkhoff":
        d = birkhoff_decompose(x, t)
        tour = mixture_tournament(d, t)
        extra["decomposition"] = str(d).splitlines()
        extra["rounds"] = d.rounds
    else:
        tour = strassen_construct(x, t)
    payload = {"method": args.method, **tour.to_json(), **extra}
    if trace is not None:
        err.write(format_trace(trace) + "\n")
    _emit(payload, out)
    return EXIT_OK


def cmd_fit_bt(args, out) -> int:
    x = load_vector(args.scores)
    t = parse_type(args.type, len(x))
    lam = bt_fit(x, t, tol=args.tol)
    residual = float(max(abs(a - float(b)) for a, b in zip(bt_forward(lam, t), x))) if len(x) else 0.0
    _emit({"root_type": str(t), "strengths": [float(v) for v in lam], "residual": residual}, out)
    return EXIT_OK


def cmd_realize_int(args, out) -> int:
    g = load_graph(args.graph)
    target = load_vector(args.target)
    if len(target) != g.n:
        raise UsageError(f"graph has {g.n} players, got {len(target)} target entries")
    if any(v.denominator != 1 for v in target):
        raise UsageError("integer targets only")
    try:
        tour = realize_deterministic(g, target)
        method = "tu-rounding"
    except PreconditionError as exc:
        try:
            tour = search_deterministic(g, target)
        except ComplexityError:
            _emit({"realized": False, "balanced": False, "reason": str(exc)}, out)
            return EXIT_PRECONDITION
        if tour is None:
            in_zonotope = is_translated_lattice_point(g, [int(v) for v in target])
            _emit({"realized": False, "balanced": False, "in_zonotope": in_zonotope,
                   "reason": "no deterministic tournament has this score (exhaustive search)"}, out)
            return EXIT_PRECONDITION if in_zonotope else EXIT_NO
        method = "exhaustive-search"
    _emit({"realized": True, "method": method, **tour.to_json()}, out)
    return EXIT_OK


def cmd_balance(args, out) -> int:
    g = load_graph(args.graph)
    signs = switching_signs(g)
    _emit({
        "balanced": is_balanced(g),
        "balanced_without_half_edges": is_balanced(g, drop_half_edges=True),
        "switching": signs,
    }, out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    g = load_graph(args.graph)
    budget = OracleBudget(max_edges=args.max_edges, max_n=args.max_n)
    if args.action == "enumerate":
        targets = sorted(enumerate_deterministic_targets(g, budget))
        if args.translated:
            _emit({"translated_scores": [list(t) for t in targets]}, out)
        else:
            rho = rho_graph(g)
            scores = [fmt_vector([Fraction(a) - r for a, r in zip(t, rho)]) for t in targets]
            _emit({"scores": scores}, out)
        return EXIT_OK
    if not args.scores:
        raise UsageError("oracle member needs --scores")
    x = load_vector(args.scores)
    member = lp_member(g, x, budget)
    _emit({"member": member}, out)
    return EXIT_OK if member else EXIT_NO


def cmd_info(args, out) -> int:
    payload = {}
    if args.graph:
        g = load_graph(args.graph)
        t = g.root_type
        payload["rho_G"] = fmt_vector(rho_graph(g))
    elif args.type:
        t = parse_type(args.type, args.n)
        g = complete_graph(t) if t.kind != "A" else None
    else:
        raise UsageError("info needs --graph or --type")
    payload = {"root_type": str(t), **payload}
    if t.kind != "A":
        payload["delta"] = str(delta_of(t))
        payload["rho"] = fmt_vector(rho_complete(t))
    if args.h:
        plus = [int(v) for v in args.h.split(",") if v.strip() and not v.strip().startswith("-")]
        minus = [-int(v) for v in args.h.split(",") if v.strip().startswith("-")]
        try:
            s = AdmissibleSubset(frozenset(plus), frozenset(minus))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if g is None or any(not 1 <= i <= t.n for i in plus + minus):
            raise UsageError("--h needs a B/C/D graph and indices in range")
        payload["h"] = {"subset": _subset_json(s), "value": str(h_signed(g, s))}
    _emit(payload, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxtour", description="Coxeter tournaments on signed graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="is a vector a mean score sequence?")
    c.add_argument("--graph", help="graph JSON file")
    c.add_argument("--type", help="complete graph of this type (C, C3, ...) instead of --graph")
    c.add_argument("--scores", required=True, help="CSV file or literal like '(0, 5/2)'")
    c.add_argument("--complete", action="store_true", help="use the sub-majorization test")

    c = sub.add_parser("construct", help="build a tournament on K_Φ with the given mean scores")
    c.add_argument("--method", choices=("hh", "birkhoff", "strassen"), default="hh")
    c.add_argument("--type", required=True)
    c.add_argument("--scores", required=True)
    c.add_argument("--trace", action="store_true", help="print the greedy steps (hh only) to stderr")

    c = sub.add_parser("fit-bt", help="Bradley-Terry strengths for a score sequence")
    c.add_argument("--type", required=True)
    c.add_argument("--scores", required=True)
    c.add_argument("--tol", type=float, default=1e-9)

    c = sub.add_parser("realize-int", help="deterministic tournament with a given translated score")
    c.add_argument("--graph", required=True)
    c.add_argument("--target", required=True)

    c = sub.add_parser("balance", help="balance of a signed graph")
    c.add_argument("--graph", required=True)

    c = sub.add_parser("oracle", help="brute-force enumeration and LP membership")
    c.add_argument("action", choices=("enumerate", "member"))
    c.add_argument("--graph", required=True)
    c.add_argument("--scores")
    c.add_argument("--translated", action="store_true", help="report I(G) p instead of mean scores")
    c.add_argument("--max-edges", type=int, default=20)
    c.add_argument("--max-n", type=int, default=6)

    c = sub.add_parser("info", help="delta, rho, rho_G and h-values")
    c.add_argument("--type")
    c.add_argument("--n", type=int)
    c.add_argument("--graph")
    c.add_argument("--h", help="signed subset, e.g. '1,-3'")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "check":
            return cmd_check(args, out)
        if args.command == "construct":
            if args.trace and args.method != "hh":
                raise UsageError("--trace is only available with --method hh")
            return cmd_construct(args, out, err)
        if args.command == "fit-bt":
            return cmd_fit_bt(args, out)
        if args.command == "realize-int":
            return cmd_realize_int(args, out)
        if args.command == "balance":
            return cmd_balance(args, out)
        if args.command == "oracle":
            return cmd_oracle(args, out)
        return cmd_info(args, out)
    except (UsageError, ComplexityError, OSError) as exc:
        err.write(f"coxtour: {exc}\n")
        return EXIT_USAGE
    except PreconditionError as exc:
        err.write(f"coxtour: {exc}\n")
        return EXIT_PRECONDITION
    except (InfeasibleError, BoundaryError, ConvergenceError) as exc:
        err.write(f"coxtour: {exc}\n")
        return EXIT_NO
    except (CoxtourError, ValueError) as exc:
        err.write(f"coxtour: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
