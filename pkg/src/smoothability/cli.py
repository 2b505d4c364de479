"""Command-line front end.

    smoothability semigroup 13,14,15,16,17,18,20,22,23 --json
    smoothability pointset --builder tetrahedron-midpoints --gale - --t1 -3 3
    smoothability table --n 6..10 --format table

JSON goes to stdout, logs to stderr.  Exit codes: 0 success, 1 internal
assertion, 2 usage, 3 semigroup input error, 4 configuration input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from math import comb, floor
from pathlib import Path

from .conet1 import build
from .errors import BadParameters, BadRange, ConfigurationError, RetryExhausted, SemigroupError
from .pointset import (
    PointConfiguration,
    _COMPUTED_NON_SMOOTHABLE,
    classify_generic,
    format_ranges,
    generic_invariants,
    load_config,
    m_bound,
    modified_tetrahedron,
    non_smoothable_set,
    random_config,
    random_self_associated,
    tetrahedron_midpoints,
)
from .presentation import minimal_presentation, t1_profile
from .semigroup import DEFAULT_KMAX, from_generators, parse_generators

log = logging.getLogger("smoothability")

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_SEMIGROUP, EXIT_CONFIG = range(5)

BUILDERS = {
    "tetrahedron-midpoints": tetrahedron_midpoints,
    "modified-tetrahedron": modified_tetrahedron,
}

CELL_COLUMNS = ("d", "delta", "type", "e", "moduli", "verdict")
SET_COLUMNS = ("set", "M", "provenance")


class UsageError(Exception):
    pass


# -- semigroup ----------------------------------------------------------------------


def cmd_semigroup(args) -> dict:
    try:
        gens = parse_generators(args.generators)
    except ValueError as exc:
        if isinstance(exc, SemigroupError):
            raise UsageError(str(exc)) from exc
        raise UsageError(f"cannot parse generators {args.generators!r}") from exc
    S = from_generators(gens)
    log.info("semigroup %r, genus %d", S, S.genus)
    out = S.report(args.kmax)
    if args.presentation or args.t1:
        P = minimal_presentation(S)
        out["presentation"] = [r.format(S.generators) for r in P.relations]
        if args.t1:
            prof = t1_profile(P)
            out["t1"] = prof.to_dict()
            out["t1_total"] = prof.total
            out["t1_positive"] = prof.total_positive
    return out


def _format_semigroup(out: dict) -> str:
    lines = [
        "semigroup <" + ",".join(map(str, out["generators"])) + ">",
        f"  delta={out['delta']}  F={out['frobenius']}  c={out['conductor']}  "
        f"type={out['type']}  symmetric={out['symmetric']}  e={out['deligne_e']}",
        "  pseudo-Frobenius: " + ",".join(map(str, out["pseudo_frobenius"])),
    ]
    if out["dedekind"]:
        lines.append("  Dedekind: " + "  ".join(f"d_{k}={v}" for k, v in out["dedekind"].items()))
    v = out["verdict"]
    lines.append(f"  verdict: {v['outcome']}  ({v['provenance']})")
    if v["witnesses"]:
        lines.append("  witnesses: " + json.dumps(v["witnesses"]))
    for rel in out.get("presentation", []):
        lines.append("  " + rel)
    if "t1" in out:
        lines.append("  T1: " + json.dumps(out["t1"]) + f"  total={out['t1_total']}")
    return "\n".join(lines)


# -- pointset -------------------------------------------------------------------------


def _load_pointset(args) -> PointConfiguration:
    chosen = [x is not None for x in (args.builder, args.random, args.self_associated, args.file)]
    if sum(chosen) != 1:
        raise UsageError("give exactly one of --builder, --random, --self-associated, --file")
    if (args.random or args.self_associated) and args.seed is None:
        raise UsageError("random configurations need --seed")
    if args.builder:
        if args.builder not in BUILDERS:
            raise UsageError(f"unknown builder {args.builder!r}; choose from {sorted(BUILDERS)}")
        return BUILDERS[args.builder]()
    if args.random:
        n, r = args.random
        return random_config(n, r, args.seed)
    if args.self_associated:
        return random_self_associated(args.self_associated, args.seed)
    return load_config(args.file)


def cmd_pointset(args) -> dict:
    G = _load_pointset(args)
    log.info("configuration %s: %d points in P^%d", G.label, G.r, G.n - 1)
    out: dict = {"label": G.label, "n": G.n, "r": G.r, "points": G.to_json()["points"]}
    out["hilbert"] = G.hilbert_values()
    out["general_position"] = G.is_general_position()
    if G.r <= 12:
        out["uniform_position"] = G.is_uniform_position("exhaustive")
    elif args.seed is not None:
        out["uniform_position"] = G.is_uniform_position("sampled", seed=args.seed)
        out["uniform_position_mode"] = "sampled"
    else:
        out["uniform_position"] = "n/a"
    out["delta"] = G.delta_cone()
    out["quadric_deficiency"] = G.quadric_deficiency()
    if G.r == 2 * G.n:
        out["self_associated"] = G.is_self_associated()
    g = G.r - G.n
    if g >= 4 and G.r <= comb(G.n + 1, 2):
        out["quadric_test"] = G.cone_quadric_test(g).to_dict()
    Q = G.gale_transform() if args.gale is not None or args.t1_target == "gale" else None
    if args.gale is not None:
        gale = {"n": Q.n, "r": Q.r, "points": Q.to_json()["points"]}
        if args.gale == "-":
            out["gale"] = gale
        else:
            Path(args.gale).write_text(json.dumps(Q.to_json(), indent=1) + "\n")
            log.info("Gale transform written to %s", args.gale)
            out["gale"] = {"n": Q.n, "r": Q.r, "file": args.gale}
    if args.t1 is not None:
        lo, hi = args.t1
        if lo > hi:
            raise UsageError("--t1 needs lo <= hi")
        # with --gale the cone of interest is the one over the transform
        target = args.t1_target or ("gale" if Q is not None else "points")
        rep = build(Q if target == "gale" else G).t1_report(lo, hi)
        out["t1_report"] = {"target": target, **rep.to_dict()}
    return out


def _format_pointset(out: dict) -> str:
    lines = [f"{out['label'] or 'configuration'}: {out['r']} points in P^{out['n'] - 1}",
             f"  Hilbert function: {out['hilbert']}  delta={out['delta']}",
             f"  general position: {out['general_position']}  "
             f"uniform position: {out['uniform_position']}"]
    if "self_associated" in out:
        lines.append(f"  self-associated: {out['self_associated']}")
    if "quadric_test" in out:
        lines.append(f"  quadric test: {out['quadric_test']['outcome']}")
    if "gale" in out:
        lines.append(f"  Gale transform: {out['gale']['r']} points in P^{out['gale']['n'] - 1}")
    if "t1_report" in out:
        rep = out["t1_report"]
        lines.append(f"  T1 of the cone over the {rep['target']}: {json.dumps(rep['t1'])}  total={rep['t1_total']}  "
                     f"e={rep['e']}  checks={json.dumps(rep['checks'])}")
    return "\n".join(lines)


# -- table ----------------------------------------------------------------------------


def _parse_n_range(text: str) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..")
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise UsageError(f"bad --n value {text!r}") from exc
    if lo > hi or lo < 4:
        raise BadRange(f"n range {text!r} must be increasing with n >= 4")
    return list(range(lo, hi + 1))


def _table_row(n: int, cell_columns: list[str]) -> dict:
    values = non_smoothable_set(n)
    row: dict = {"n": n, "set": format_ranges(values)}
    if n >= 6:
        row["M"] = str(m_bound(n))
        row["provenance"] = "moduli count against e"
        top = floor(m_bound(n))
    else:
        row["M"] = None
        row["provenance"] = "published computation"
        top = max(hi for _, hi in _COMPUTED_NON_SMOOTHABLE[n])
    cells = []
    if cell_columns:
        for r in range(n + 1, top + 1):
            inv = generic_invariants(n, r)
            full = {"d": inv.d, "delta": inv.delta, "type": inv.type, "e": inv.deligne_e,
                    "moduli": inv.moduli, "verdict": classify_generic(n, r).outcome.value}
            cells.append({"n": n, "r": r, **{c: full[c] for c in cell_columns}})
    row["cells"] = cells
    return row


def cmd_table(args) -> dict:
    ns = _parse_n_range(args.n)
    columns = [c for c in args.columns.split(",") if c] if args.columns else list(SET_COLUMNS)
    unknown = [c for c in columns if c not in CELL_COLUMNS + SET_COLUMNS]
    if unknown:
        raise UsageError(f"unknown columns {unknown}")
    cell_columns = [c for c in columns if c in CELL_COLUMNS]
    with ThreadPoolExecutor() as pool:
        rows = list(pool.map(lambda n: _table_row(n, cell_columns), ns))
    set_columns = [c for c in columns if c in SET_COLUMNS] or ["set"]
    out_rows = []
    for row in rows:
        entry = {"n": row["n"], **{c: row[c] for c in set_columns}}
        if cell_columns:
            entry["cells"] = row["cells"]
        out_rows.append(entry)
    return {"columns": columns, "rows": out_rows}


def _format_table(out: dict, fmt: str) -> str:
    rows = out["rows"]
    has_cells = any("cells" in r for r in rows)
    if has_cells:
        records = [c for r in rows for c in r["cells"]]
    else:
        records = [{k: v for k, v in r.items() if k != "cells"} for r in rows]
    if not records:
        return ""
    keys = list(records[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        w.writerows(records)
        return buf.getvalue().rstrip("\n")
    widths = {k: max(len(k), *(len(str(rec[k])) for rec in records)) for k in keys}
    lines = ["  ".join(k.ljust(widths[k]) for k in keys),
             "  ".join("-" * widths[k] for k in keys)]
    for rec in records:
        lines.append("  ".join(str(rec[k]).ljust(widths[k]) for k in keys))
    return "\n".join(lines)


# -- entry point ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="smoothability",
                                description="Smoothability tests for monomial curves and cones over points.")
    p.add_argument("-v", "--verbose", action="count", default=0, help="more logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("semigroup", help="invariants and Buchweitz test of a numerical semigroup")
    s.add_argument("generators", help='comma separated, e.g. "13,14,15"')
    s.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    s.add_argument("--presentation", action="store_true", help="list minimal binomial relations")
    s.add_argument("--t1", action="store_true", help="graded T^1 of the monomial curve")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_semigroup, fmt=_format_semigroup)

    q = sub.add_parser("pointset", help="analyse a point configuration and its cone")
    q.add_argument("--builder", help=", ".join(sorted(BUILDERS)))
    q.add_argument("--random", nargs=2, type=int, metavar=("N", "R"))
    q.add_argument("--self-associated", type=int, metavar="N")
    q.add_argument("--file", help="JSON or CSV point file")
    q.add_argument("--seed", type=int)
    q.add_argument("--gale", metavar="OUT", help='write the Gale transform ("-" for inline)')
    q.add_argument("--t1", nargs=2, type=int, metavar=("LO", "HI"))
    q.add_argument("--t1-target", choices=("points", "gale"),
                   help="cone for --t1 (default: gale when --gale is given, else points)")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_pointset, fmt=_format_pointset)

    t = sub.add_parser("table", help="non-smoothable ranges for generic L_r^n")
    t.add_argument("--n", default="6..10", help='single n or range "6..10"')
    t.add_argument("--columns", help="comma separated: " + ",".join(SET_COLUMNS + CELL_COLUMNS))
    t.add_argument("--format", choices=("json", "csv", "table"), default="table")
    t.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        out = args.func(args)
    except (UsageError, BadRange, BadParameters) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SemigroupError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SEMIGROUP
    except (ConfigurationError, RetryExhausted, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.command == "table":
        text = json.dumps(out, ensure_ascii=False) if args.format == "json" \
            else _format_table(out, args.format)
    elif args.json:
        text = json.dumps(out, ensure_ascii=False)
    else:
        text = args.fmt(out)
    print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
