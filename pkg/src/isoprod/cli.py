"""Command-line front end.

Subcommands: chartab, covers, surfaces, classify, verify-example.
Exit codes: 0 success, 1 usage error, 2 validation error, 3 internal
consistency violation (a bug, not bad input).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .characters import character_table
from .classify import (
    ALL_BASE_GENERA,
    SearchBounds,
    check_conformance,
    classify_all,
    compute_aut0,
    ClassificationRecord,
)
from .covers import GeneratingVector, enumerate_vectors
from .errors import ConsistencyError, IsoprodError, UsageError
from .groups import build_group, builtin_groups_upto
from .surfaces import EXAMPLE_FAMILIES, build_surface, example46_construct

FORMATS = ("json", "csv", "table")


def _out(line=""):
    sys.stdout.write(line + "\n")


def _cache_dir(args):
    return args.cache_dir or os.environ.get("ISOPROD_CACHE_DIR") or None


def _parse_vector(G, text):
    """``b|alphas|betas|gammas`` with comma-separated element indices,
    e.g. ``1|1|2|3,3``; empty parts for empty tuples."""
    parts = text.split("|")
    if len(parts) != 4:
        raise UsageError(
            f"vector {text!r} must have 4 '|'-separated parts: b|alphas|betas|gammas"
        )
    try:
        b = int(parts[0])
        tup = [
            tuple(int(t) for t in p.split(",") if t.strip() != "")
            for p in parts[1:]
        ]
    except ValueError as exc:
        raise UsageError(f"bad integer in vector {text!r}") from exc
    return GeneratingVector(G, b, tup[0], tup[1], tup[2])


# -- chartab -----------------------------------------------------------


def cmd_chartab(args):
    G = build_group(args.group)
    table = character_table(G, method=args.method, cache_dir=_cache_dir(args))
    if args.format == "json":
        _out(json.dumps(table.to_json(), sort_keys=True))
        return 0
    e = table.exponent
    headers = ["chi", "degree"] + [
        f"{G.labels[c.representative]}[{len(c.members)}]" for c in table.classes
    ]
    rows = []
    for i, c in enumerate(table.characters):
        rendered = [
            table.value(i, cl.representative).render() for cl in table.classes
        ]
        rows.append([f"chi_{i}", str(c.degree)] + rendered)
    if args.format == "csv":
        _out(",".join(headers))
        for row in rows:
            _out(",".join('"%s"' % x if "," in x else x for x in row))
    else:
        _print_table(headers, rows)
        _out(f"exponent {e}, {len(table.classes)} classes, |G| = {G.order}")
    return 0


def _print_table(headers, rows):
    widths = [
        max(len(headers[j]), *(len(r[j]) for r in rows)) if rows else len(headers[j])
        for j in range(len(headers))
    ]
    _out("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
    for r in rows:
        _out("  ".join(x.ljust(w) for x, w in zip(r, widths)))


# -- covers ------------------------------------------------------------


def cmd_covers(args):
    G = build_group(args.group)
    exact = None
    if args.branch:
        try:
            exact = [int(t) for t in args.branch.split(",") if t.strip()]
        except ValueError as exc:
            raise UsageError(f"bad --branch value {args.branch!r}") from exc
    max_r = args.max_r if args.max_r is not None else (len(exact) if exact else 4)
    stream = enumerate_vectors(
        G,
        args.b,
        max_r,
        genus_cap=args.genus_cap,
        dedup=not args.no_dedup,
        branch_order_cap=args.branch_order_cap,
        exact_branch_orders=exact,
    )
    rows = []
    for cover in stream:
        rows.append((cover.vector.to_json(), cover.genus))
    if args.format == "json":
        for vj, g in rows:
            _out(json.dumps({"vector": vj, "genus": g}, sort_keys=True))
        _out(
            json.dumps(
                {"count": len(rows), "truncated": stream.truncated},
                sort_keys=True,
            )
        )
    elif args.format == "csv":
        _out("b,alphas,betas,gammas,genus")
        for vj, g in rows:
            _out(
                "%d,%s,%s,%s,%d"
                % (
                    vj["b"],
                    " ".join(map(str, vj["alphas"])),
                    " ".join(map(str, vj["betas"])),
                    " ".join(map(str, vj["gammas"])),
                    g,
                )
            )
    else:
        for vj, g in rows:
            _out(
                f"b={vj['b']} alphas={vj['alphas']} betas={vj['betas']} "
                f"gammas={vj['gammas']} genus={g}"
            )
        _out(f"{len(rows)} covers (truncated={stream.truncated})")
    return 0


# -- surfaces ----------------------------------------------------------


def cmd_surfaces(args):
    G = build_group(args.group)
    vC = _parse_vector(G, args.vc)
    vD = _parse_vector(G, args.vd)
    S = build_surface(vC, vD)
    aut0 = compute_aut0(S)
    data = S.to_json()
    data["genus_C"] = S.cover_C.genus
    data["genus_D"] = S.cover_D.genus
    data["aut0"] = sorted(aut0)
    data["aut0_labels"] = [G.labels[g] for g in sorted(aut0)]
    if args.format == "json":
        _out(json.dumps(data, sort_keys=True))
    else:
        for k in sorted(data):
            _out(f"{k}: {data[k]}")
    return 0


# -- classify ----------------------------------------------------------


def cmd_classify(args):
    if args.max_group_order < 1:
        raise UsageError("--max-group-order must be >= 1")
    base_genera = []
    for tok in args.base_genera.split(";"):
        parts = tok.split(",")
        if len(parts) != 2:
            raise UsageError(f"bad base genus pair {tok!r}")
        try:
            pair = (int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise UsageError(f"bad base genus pair {tok!r}") from exc
        if pair not in ALL_BASE_GENERA:
            raise UsageError(f"unsupported base genus pair {tok!r}")
        base_genera.append(pair)
    bounds = SearchBounds(
        max_group_order=args.max_group_order,
        max_branch_points_r=args.max_r,
        max_branch_points_s=args.max_s,
        genus_cap=args.genus_cap,
        base_genera=tuple(base_genera),
        branch_order_cap=args.branch_order_cap,
    ).validate()
    if args.groups:
        # comma-separated specs; commas inside "ab:d1,d2" belong to the
        # preceding spec (tokens without ':' are continuations)
        groups = []
        for tok in args.groups.split(","):
            tok = tok.strip()
            if not tok:
                continue
            if ":" not in tok and groups:
                groups[-1] += "," + tok
            else:
                groups.append(tok)
        if not groups:
            raise UsageError("--groups is empty")
    else:
        groups = builtin_groups_upto(args.max_group_order)
    records, summary = classify_all(
        bounds,
        groups,
        workers=args.workers,
        cache_dir=_cache_dir(args),
        detail="full" if args.full else "nontrivial",
    )
    for rec in records:
        _out(json.dumps(rec, sort_keys=True))
    _out(json.dumps(summary, sort_keys=True))
    if summary["conformance_failures"] or summary["errors"]:
        return 3
    return 0


# -- verify-example ----------------------------------------------------


def cmd_verify_example(args):
    S = example46_construct(args.family, args.m, args.n, args.k, args.l)
    aut0 = compute_aut0(S)
    if len(aut0) != 2:
        raise ConsistencyError(f"expected |Aut_0| = 2, got {len(aut0)}")
    gC = S.cover_C.vector.gammas[0]
    gD = S.cover_D.vector.gammas[0]
    sigma = S.group.mult[gC][gD]
    if aut0 != frozenset([0, sigma]):
        raise ConsistencyError("Aut_0 is not generated by gamma * gamma'")
    rec = ClassificationRecord(S, aut0)
    ok, reason = check_conformance(rec)
    data = S.to_json()
    data["genus_C"] = S.cover_C.genus
    data["genus_D"] = S.cover_D.genus
    data["aut0"] = sorted(aut0)
    data["aut0_generator"] = S.group.labels[sigma]
    data["conforms"] = ok
    if reason:
        data["reason"] = reason
    if args.format == "json":
        _out(json.dumps(data, sort_keys=True))
    else:
        for k in sorted(data):
            _out(f"{k}: {data[k]}")
    if args.family in (2, "2", "z2_z2m_z2mn"):
        _out(
            "# note: genus constants for this family follow Riemann-Hurwitz "
            "(g(C) = 4 m^2 n k + 1)"
        )
    return 0


# -- argument parsing --------------------------------------------------


def _add_common(p):
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--cache-dir", default=None)


def make_parser():
    p = argparse.ArgumentParser(
        prog="isoprod",
        description="Exact computation with surfaces isogenous to a product "
        "of curves (unmixed type).",
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="cmd", required=True)

    q = sub.add_parser("chartab", help="exact character table of a group")
    q.add_argument("group")
    q.add_argument("--method", choices=("auto", "abelian", "dixon"), default="auto")
    _add_common(q)
    q.set_defaults(fn=cmd_chartab)

    q = sub.add_parser("covers", help="enumerate generating vectors / covers")
    q.add_argument("group")
    q.add_argument("--b", type=int, default=1, help="base genus")
    q.add_argument("--max-r", type=int, default=None)
    q.add_argument("--branch", default=None, help="exact branch orders, e.g. 2,2")
    q.add_argument("--genus-cap", type=int, default=65)
    q.add_argument("--branch-order-cap", type=int, default=None)
    q.add_argument("--no-dedup", action="store_true")
    _add_common(q)
    q.set_defaults(fn=cmd_covers)

    q = sub.add_parser("surfaces", help="build one surface from two vectors")
    q.add_argument("group")
    q.add_argument("--vc", required=True, help="vector as b|alphas|betas|gammas")
    q.add_argument("--vd", required=True)
    _add_common(q)
    q.set_defaults(fn=cmd_surfaces)

    q = sub.add_parser("classify", help="exhaustive sweep for nontrivial Aut_0")
    q.add_argument("--groups", default=None, help="comma-separated group specs")
    q.add_argument("--max-group-order", type=int, default=16)
    q.add_argument("--max-r", type=int, default=4)
    q.add_argument("--max-s", type=int, default=4)
    q.add_argument("--genus-cap", type=int, default=33)
    q.add_argument("--branch-order-cap", type=int, default=8)
    q.add_argument("--base-genera", default="1,1", help='pairs like "1,1;1,2"')
    q.add_argument("--workers", type=int, default=1)
    q.add_argument(
        "--full",
        action="store_true",
        help="emit a record for every surface class, not only nontrivial Aut_0",
    )
    _add_common(q)
    q.set_defaults(fn=cmd_classify)

    q = sub.add_parser("verify-example", help="check the explicit family")
    q.add_argument("family", help=f"1|2 or one of {EXAMPLE_FAMILIES}")
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    q.add_argument("k", type=int)
    q.add_argument("l", type=int)
    _add_common(q)
    q.set_defaults(fn=cmd_verify_example)
    return p


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad flags; our contract says usage = 1
        code = exc.code or 0
        return 0 if code == 0 else 1
    try:
        return args.fn(args)
    except IsoprodError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
