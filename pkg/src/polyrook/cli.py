"""Command-line surface: JSON documents in, JSON report lines out.

Exit codes: 0 success (all verdicts true), 1 verification failure, 2 input
error, 3 budget exhausted. POLYROOK_BUDGET overrides the default enumeration
budget; --budget overrides both.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import explorer
from .correspondence import verify_bijection, verify_main_theorem
from .errors import (
    BudgetExceeded,
    LemmaViolation,
    NoCanonicalInClass,
    OverlayOutOfRange,
    ParseError,
    PolyrookError,
)
from .families import (
    FrameSpec,
    NorthEastPath,
    build_frame,
    build_parallelogram,
    rectangle,
)
from .grid import Polyomino, build_polyomino, classify_simplicity, inner_intervals
from .ideal import h_from_hilbert, is_groebner, krull_dimension_frame
from .render import render_ascii, render_svg
from .rooks import AttackPolicy
from .simplicial import f_vector, facets, h_from_f, h_from_steps, make_facet, shelling_verify

REPORT_VERSION = "1"
DEFAULT_BUDGET = 5_000_000

_KIND_FIELDS = {
    "cells": {"cells"},
    "rectangle": {"m", "n"},
    "parallelogram": {"s1", "s2"},
    "frame": {"m", "n", "s1", "s2"},
}


def _point_list(raw, field: str) -> tuple[tuple[int, int], ...]:
    if not isinstance(raw, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p)
        for p in raw
    ):
        raise ParseError(f"field '{field}' must be a list of [i, j] integer pairs")
    return tuple((p[0], p[1]) for p in raw)


def parse_document(doc: dict) -> Polyomino:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError("document must be an object with a 'kind' field")
    kind = doc["kind"]
    if kind not in _KIND_FIELDS:
        raise ParseError(f"unknown kind '{kind}'")
    required = _KIND_FIELDS[kind]
    present = set(doc) - {"kind"}
    if present != required:
        missing = sorted(required - present)
        extra = sorted(present - required)
        problems = []
        if missing:
            problems.append(f"missing field(s): {', '.join(missing)}")
        if extra:
            problems.append(f"unexpected field(s): {', '.join(extra)}")
        raise ParseError(f"kind '{kind}': " + "; ".join(problems))
    try:
        if kind == "cells":
            return build_polyomino(_point_list(doc["cells"], "cells"))
        if kind == "rectangle":
            return rectangle(int(doc["m"]), int(doc["n"]))
        if kind == "parallelogram":
            s1 = NorthEastPath(_point_list(doc["s1"], "s1"))
            s2 = NorthEastPath(_point_list(doc["s2"], "s2"))
            return build_parallelogram(s1, s2)
        s1 = NorthEastPath(_point_list(doc["s1"], "s1"))
        s2 = NorthEastPath(_point_list(doc["s2"], "s2"))
        return build_frame(FrameSpec(m=int(doc["m"]), n=int(doc["n"]), s1=s1, s2=s2))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def serialize_polyomino(p: Polyomino) -> dict:
    if p.frame is not None:
        return {
            "kind": "frame",
            "m": p.frame.m,
            "n": p.frame.n,
            "s1": [list(v) for v in p.frame.s1],
            "s2": [list(v) for v in p.frame.s2],
        }
    if p.parallelogram is not None:
        s1, s2 = p.parallelogram
        return {
            "kind": "parallelogram",
            "s1": [list(v) for v in s1],
            "s2": [list(v) for v in s2],
        }
    return {"kind": "cells", "cells": [list(c) for c in sorted(p.cells)]}


def digest(p: Polyomino) -> str:
    blob = json.dumps(sorted(p.cells), separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def report_line(cmd: str, p: Polyomino | None, payload) -> str:
    record = {
        "cmd": cmd,
        "digest": digest(p) if p is not None else None,
        "payload": payload,
        "version": REPORT_VERSION,
    }
    return json.dumps(record, separators=(",", ":"))


def _load(path: str) -> Polyomino:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}") from exc
    return parse_document(doc)


def _poly(poly) -> list[int]:
    return list(poly.coeffs)


def cmd_info(args) -> int:
    p = _load(args.document)
    simple, holes = classify_simplicity(p)
    payload = {
        "vertices": len(p.vertices),
        "rank": p.rank,
        "simple": simple,
        "holes": [sorted(map(list, h)) for h in holes],
        "inner_intervals": len(inner_intervals(p)),
        "groebner": is_groebner(p),
        "frame": None
        if p.frame is None
        else {
            "m": p.frame.m,
            "n": p.frame.n,
            "a0": p.frame.a0,
            "b0": p.frame.b0,
            "ak": p.frame.ak,
            "bk": p.frame.bk,
        },
    }
    print(report_line("info", p, payload))
    return 0


def cmd_hvector(args) -> int:
    p = _load(args.document)
    budget = args.budget
    values: dict[str, list[int]] = {}
    if args.method in ("steps", "all"):
        values["steps"] = _poly(h_from_steps(p, budget=budget))
    if args.method in ("shelling", "all"):
        values["shelling"] = _poly(shelling_verify(p, budget=budget).h_shelling)
    if args.method in ("fvector", "all"):
        fv = f_vector(p, budget=budget)
        values["fvector"] = _poly(h_from_f(fv, len(fv) - 1))
    if args.method in ("hilbert", "all"):
        if p.frame is not None:
            d = krull_dimension_frame(p)
        else:
            d = len(f_vector(p, budget=budget)) - 1
        probe = h_from_steps(p, budget=budget)
        values["hilbert"] = _poly(
            h_from_hilbert(p, d, probe.degree + 3, budget=budget)
        )
    payload: dict = {"h": values}
    if args.method == "all":
        first = next(iter(values.values()))
        payload["agree"] = all(v == first for v in values.values())
    print(report_line("hvector", p, payload))
    return 0


def cmd_verify(args) -> int:
    p = _load(args.document)
    report = verify_main_theorem(
        p, policy=args.attack, budget=args.budget, polyomino_id=""
    )
    payload = {
        "groebner": report.groebner,
        "dim": report.dim,
        "h_steps": _poly(report.h_steps),
        "h_shelling": None
        if report.h_shelling is None
        else _poly(report.h_shelling),
        "h_fvector": _poly(report.h_fvector),
        "h_hilbert": _poly(report.h_hilbert),
        "r": _poly(report.r),
        "r_tilde": _poly(report.r_tilde),
        "verdicts": report.verdicts,
    }
    ok = report.all_true
    if p.frame is not None:
        try:
            bij = verify_bijection(p, policy=args.attack, budget=args.budget)
            payload["bijection"] = {
                "per_k": list(bij.per_k),
                "bijective": bij.bijective,
            }
            ok = ok and bij.bijective
        except (LemmaViolation, NoCanonicalInClass) as exc:
            payload["bijection"] = {"bijective": False, "error": str(exc)}
            ok = False
    payload["ok"] = ok
    print(report_line("verify", p, payload))
    return 0 if ok else 1


def cmd_explore(args) -> int:
    if (args.max_rank is None) == (args.frames is None):
        raise ParseError("explore needs exactly one of --max-rank or --frames")
    if args.max_rank is not None:
        stream = explorer.enumerate_fixed_polyominoes(args.max_rank, budget=args.budget)
        params = {"max_rank": args.max_rank}
    else:
        max_m, max_n = args.frames
        stream = explorer.enumerate_small_frames(max_m, max_n)
        params = {"frames": [max_m, max_n]}
    records = explorer.conjecture_sweep(stream, policy=args.attack, budget=args.budget)
    lines = [
        json.dumps(
            {"cmd": "explore", "digest": None, "payload": r.payload(),
             "version": REPORT_VERSION},
            separators=(",", ":"),
        )
        for r in records
    ]
    body = "\n".join(lines) + ("\n" if lines else "")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    summary = {"params": params, "records": len(records)}
    for status in ("match", "mismatch", "skipped_groebner", "skipped_budget"):
        summary[status] = sum(1 for r in records if r.status == status)
    print(report_line("explore-summary", None, summary))
    return 0 if summary["mismatch"] == 0 else 1


def cmd_render(args) -> int:
    p = _load(args.document)

    def overlay(raw, field):
        if raw is None:
            return None
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"--{field} is not valid JSON") from exc
        return _point_list(data, field)

    fv = overlay(args.facet, "facet")
    rc = overlay(args.rooks, "rooks")
    sc = None
    if fv is not None:
        from .simplicial import steps_of

        facet = make_facet(fv)
        sc = [st.corner for st in steps_of(p, facet)]
    if args.format == "ascii":
        text = render_ascii(p, fv, rc, sc)
    else:
        text = render_svg(p, fv, rc, sc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyrook",
        description="Polyomino ideals: complexes, h-vectors, rook polynomials.",
    )
    parser.add_argument(
        "--attack",
        choices=["coblock", "line"],
        default="coblock",
        help="rook attack policy (default: coblock)",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help="global enumeration cap (default: POLYROOK_BUDGET or 5000000)",
    )
    parser.add_argument(
        "--jobs", type=int, default=1,
        help="worker count; results are independent of this value",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="basic invariants of a polyomino")
    p_info.add_argument("document")
    p_info.set_defaults(func=cmd_info)

    p_h = sub.add_parser("hvector", help="h-vector by one or all methods")
    p_h.add_argument("document")
    p_h.add_argument(
        "--method",
        choices=["steps", "shelling", "fvector", "hilbert", "all"],
        default="all",
    )
    p_h.set_defaults(func=cmd_hvector)

    p_v = sub.add_parser("verify", help="verify the h = switching-rook theorems")
    p_v.add_argument("document")
    p_v.set_defaults(func=cmd_verify)

    p_e = sub.add_parser("explore", help="conjecture sweep over families")
    p_e.add_argument("--max-rank", type=int, default=None)
    p_e.add_argument("--frames", nargs=2, type=int, default=None, metavar=("M", "N"))
    p_e.add_argument("--out", default=None)
    p_e.set_defaults(func=cmd_explore)

    p_r = sub.add_parser("render", help="draw a polyomino (ascii or svg)")
    p_r.add_argument("document")
    p_r.add_argument("--facet", default=None, help="JSON list of [i,j] vertices")
    p_r.add_argument("--rooks", default=None, help="JSON list of [i,j] cells")
    p_r.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p_r.add_argument("--out", default=None)
    p_r.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        args.budget = int(os.environ.get("POLYROOK_BUDGET", DEFAULT_BUDGET))
    args.attack = AttackPolicy(args.attack)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"polyrook: budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ParseError, OverlayOutOfRange) as exc:
        print(f"polyrook: input error: {exc}", file=sys.stderr)
        return 2
    except PolyrookError as exc:
        print(f"polyrook: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
