"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a checked claim fails
(witnesses are printed), 2 on usage or format errors.  All commands are
deterministic; --seed is accepted for interface stability but unused.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import census as census_mod
from .audit import audit_fixture, audit_ok, fixture_path, render_audit
from .claims import ring_claims
from .core import (
    check_bl_identity,
    check_div,
    check_prel,
    classify,
    is_chain,
    is_involutive,
    is_mv,
    render_report,
    validate,
)
from .errors import ReslatError
from .expr import eval_expr, format_ring_expr, parse_expr, parse_ring_expr
from .ideals import all_ideals, check_blring, classify_ideals
from .rings import DEFAULT_SIZE_CAP, build_ring
from .serialization import serialize

_PROPS = ("prel", "div", "bl", "mv", "chain", "involutive", "thm1")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="reslat",
        description="workbench for finite residuated lattices built from finite commutative rings",
    )
    p.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP, metavar="N",
                   help="maximum ring/lattice carrier size (default %(default)s)")
    p.add_argument("--out", type=Path, default=None, metavar="DIR",
                   help="directory for serialized output (enumerate)")
    p.add_argument("--seed", type=int, default=None,
                   help="accepted for interface stability; everything is deterministic")
    # the same options are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed at the top level
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--size-cap", type=int, default=argparse.SUPPRESS, metavar="N")
    shared.add_argument("--out", type=Path, default=argparse.SUPPRESS, metavar="DIR")
    shared.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="classify an algebra expression", parents=[shared])
    c.add_argument("expr")
    c.add_argument("--props", default=None, metavar="LIST",
                   help="comma-separated subset of " + ",".join(_PROPS))

    t = sub.add_parser("tables", help="print order, product and implication tables", parents=[shared])
    t.add_argument("expr")
    t.add_argument("--format", choices=("text", "csv"), default="text")

    i = sub.add_parser("ideals", help="list the ideals of a ring with max/min flags", parents=[shared])
    i.add_argument("ring_expr")
    i.add_argument("--claims", action="store_true",
                   help="audit applicable closed-form predictions (PASS/FAIL lines)")

    b = sub.add_parser("blring", help="decide the BL-ring property two independent ways", parents=[shared])
    b.add_argument("ring_expr")

    e = sub.add_parser("enumerate", help="enumerate algebras of a given order up to isomorphism", parents=[shared])
    e.add_argument("n", type=int)
    e.add_argument("--method", choices=("ordinal", "oracle", "both"), default="both")
    e.add_argument("--filter", choices=("bl", "mv", "chain", "all"), default="bl")

    s = sub.add_parser("census", help="counts per order from both enumeration routes", parents=[shared])
    s.add_argument("--nmax", type=int, default=5)

    o = sub.add_parser("iso", help="isomorphism verdict and mapping for two expressions", parents=[shared])
    o.add_argument("expr1")
    o.add_argument("expr2")

    a = sub.add_parser("audit", help="audit a serialized fixture file", parents=[shared])
    a.add_argument("path")
    return p


def _cmd_check(args) -> int:
    rl = eval_expr(parse_expr(args.expr), size_cap=args.size_cap)
    print(f"expr: {args.expr.strip()}")
    print(f"elements: {rl.n}")
    if args.props is None:
        rep = classify(rl)
        print(render_report(rep, rl.names))
        return 0 if rep.ok("residuated_lattice") else 1
    wanted = [w.strip() for w in args.props.split(",") if w.strip()]
    for w in wanted:
        if w not in _PROPS:
            print(f"unknown property {w!r}; expected one of {','.join(_PROPS)}", file=sys.stderr)
            return 2
    rep = validate(rl)
    if not rep.ok("residuated_lattice"):
        print(render_report(rep, rl.names))
        return 1
    ok = True
    for w in wanted:
        if w == "prel":
            sub = check_prel(rl)
        elif w == "div":
            sub = check_div(rl)
        elif w == "mv":
            sub = is_mv(rl)
        elif w == "thm1":
            sub = check_bl_identity(rl)
        elif w == "bl":
            sub = check_prel(rl)
            sub.merge(check_div(rl))
            sub.verdicts["bl"] = sub.verdicts["prel"] and sub.verdicts["div"]
        elif w == "chain":
            sub = None
            val = is_chain(rl)
        elif w == "involutive":
            sub = None
            val = is_involutive(rl)
        if sub is None:
            print(f"{'PASS' if val else 'FAIL'} {w}")
            ok = ok and val
        else:
            print(render_report(sub, rl.names))
            ok = ok and sub.ok()
    return 0 if ok else 1


def _cmd_tables(args) -> int:
    rl = eval_expr(parse_expr(args.expr), size_cap=args.size_cap)
    names = rl.names
    blocks = [
        ("leq", [["1" if v else "0" for v in row] for row in rl.leq]),
        ("odot", [[names[v] for v in row] for row in rl.odot]),
        ("imp", [[names[v] for v in row] for row in rl.imp]),
    ]
    if args.format == "csv":
        for title, rows in blocks:
            print(title)
            print("," + ",".join(names))
            for name, row in zip(names, rows):
                print(name + "," + ",".join(row))
        return 0
    width = max(len(s) for s in names + ("odot",))
    for title, rows in blocks:
        print(title)
        header = " ".join(f"{s:>{width}}" for s in names)
        print(f"{'':>{width}} {header}")
        for name, row in zip(names, rows):
            print(f"{name:>{width}} " + " ".join(f"{s:>{width}}" for s in row))
        print()
    return 0


def _cmd_ideals(args) -> int:
    expr = parse_ring_expr(args.ring_expr)
    ring = build_ring(expr, size_cap=args.size_cap)
    ideals = all_ideals(ring)
    maximal, minimal, is_local = classify_ideals(ideals)
    print(f"ring {format_ring_expr(expr)}: {ring.size} elements, {len(ideals)} ideals")
    for idx, ideal in enumerate(ideals):
        flags = []
        if maximal[idx]:
            flags.append("maximal")
        if minimal[idx]:
            flags.append("minimal")
        members = ideal.member_ids()
        shown = ",".join(ring.label(m) for m in members[:12])
        if len(members) > 12:
            shown += f",... ({len(members)} elements)"
        print(f"  {ideal.label():<16} size {ideal.size:<5} {{{shown}}}"
              + (f"  [{' '.join(flags)}]" if flags else ""))
    print(f"local: {'true' if is_local else 'false'}")
    if not args.claims:
        return 0
    results = ring_claims(expr, ring, ideals, minimal, size_cap=args.size_cap)
    if not results:
        print("no closed-form predictions apply to this ring shape")
        return 0
    for res in results:
        print(res.line())
    return 0 if all(r.ok for r in results) else 1


def _cmd_blring(args) -> int:
    expr = parse_ring_expr(args.ring_expr)
    ring = build_ring(expr, size_cap=args.size_cap)
    rep = check_blring(ring)
    names = rep.notes.removeprefix("ideals: ").split() if rep.notes else None
    print(f"ring {format_ring_expr(expr)}: {ring.size} elements")
    print(render_report(rep, names))
    return 0 if rep.ok("bl_ring") else 1


def _cmd_enumerate(args) -> int:
    n = args.n
    out: dict[str, list] = {}
    if args.method in ("ordinal", "both"):
        pool = census_mod.enumerate_bl_ordinal(n)
        if args.filter == "mv":
            pool = [rl for rl in pool if is_mv(rl).ok("mv")]
        elif args.filter == "chain":
            pool = [rl for rl in pool if is_chain(rl)]
        elif args.filter == "all":
            print("note: the ordinal generator produces BL-algebras; "
                  "use --method oracle for all residuated lattices")
        out["ordinal"] = pool
    if args.method in ("oracle", "both"):
        out["oracle"] = census_mod.enumerate_reslat_oracle(
            n, args.filter if args.filter != "all" else "all"
        )
    for method, pool in out.items():
        print(f"{method}: {len(pool)} algebras of order {n} (filter={args.filter})")
    code = 0
    if len(out) == 2:
        keys0 = {census_mod.canonical_key(rl) for rl in out["ordinal"]}
        keys1 = {census_mod.canonical_key(rl) for rl in out["oracle"]}
        agree = keys0 == keys1
        print(f"canonical key sets agree: {'yes' if agree else 'NO'}")
        if not agree:
            code = 1
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        for method, pool in out.items():
            for idx, rl in enumerate(pool):
                path = args.out / f"{method}_{args.filter}_n{n}_{idx:03d}.reslat"
                path.write_text(serialize(rl), encoding="utf-8")
        print(f"wrote serialized algebras to {args.out}")
    return code


def _cmd_census(args) -> int:
    rows = census_mod.census_table(args.nmax)
    code = 0
    for row in rows:
        line = (
            f"n={row.n}: generator MV {row.mv_algebras} MV-chain {row.mv_chains} "
            f"BL {row.bl_algebras} BL-chain {row.bl_chains}"
        )
        if row.oracle_bl_algebras is not None:
            line += (
                f" | oracle MV {row.oracle_mv_algebras} MV-chain {row.oracle_mv_chains} "
                f"BL {row.oracle_bl_algebras} BL-chain {row.oracle_bl_chains}"
                f" | keys {'match' if row.keys_match else 'DIFFER'}"
            )
            if not row.keys_match:
                code = 1
        print(line)
    return code


def _cmd_iso(args) -> int:
    a = eval_expr(parse_expr(args.expr1), size_cap=args.size_cap)
    b = eval_expr(parse_expr(args.expr2), size_cap=args.size_cap)
    mapping = census_mod.are_isomorphic(a, b)
    if mapping is None:
        print("not isomorphic")
        return 1
    print("isomorphic via " + " ".join(
        f"{a.names[x]}->{b.names[mapping[x]]}" for x in range(a.n)
    ))
    return 0


def _cmd_audit(args) -> int:
    path = Path(args.path)
    if not path.exists():
        candidate = fixture_path(args.path)
        if candidate.exists():
            path = candidate
    rep = audit_fixture(path)
    from .serialization import deserialize_relaxed

    rl = deserialize_relaxed(path.read_text(encoding="utf-8")).lattice
    print(render_audit(path.stem, rep, rl.names))
    return 0 if audit_ok(rep) else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    handlers = {
        "check": _cmd_check,
        "tables": _cmd_tables,
        "ideals": _cmd_ideals,
        "blring": _cmd_blring,
        "enumerate": _cmd_enumerate,
        "census": _cmd_census,
        "iso": _cmd_iso,
        "audit": _cmd_audit,
    }
    try:
        return handlers[args.command](args)
    except ReslatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
