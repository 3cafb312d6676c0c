"""Command-line interface.

Subcommands:

* ``analyze <file>``      -- per-point invariants of a local-data document
* ``verify-table``        -- certify the built-in classification table rows
* ``classify``            -- run the constrained classification search
* ``ft <file>``           -- Fourier transform of the document's local data

``--json`` switches the output to a single machine-readable report document
(see `wildmono.schema`).  Exit code 0 means every requested check passed;
parse and validation failures exit with code 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .elementary import (ModelError, determinant, formal_monodromy,
                         invariant_dim, is_selfdual, torus_data)
from .fourier import TransformError, ft_rank, stationary_phase
from .g2 import (DEFAULT_PARAMS, RowSpec, classify, verify_table_row)
from .parser import GrammarError, default_p, parse_document, print_local_rep
from .rigidity import euler_char, index_of_rigidity
from .schema import REPORT_SCHEMA, SCHEMA_VERSION


def _report(command: str, p: int, parameters: dict, results: list, passed: bool):
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "wildmono", "version": __version__},
        "command": command,
        "field": {"p": p, "m": 1},
        "parameters": {k: str(v) for k, v in parameters.items()},
        "results": results,
        "passed": passed,
    }


def _emit(args, report, text_lines):
    if args.json:
        json.dump(report, sys.stdout, indent=2, default=str)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)
    return 0 if report["passed"] else 1


def _point_str(pt):
    return "inf" if pt == "inf" else repr(pt)


def cmd_analyze(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        doc = parse_document(fh.read())
    data = doc.global_data()
    results = []
    lines = [f"# analysis (p = {doc.p}, rank = {doc.rank})"]
    for pt, rep in data.points:
        res, tail = determinant(rep)
        entry = {
            "point": _point_str(pt),
            "rep": print_local_rep(rep),
            "rank": rep.rank(),
            "swan": rep.swan(),
            "slopes": [[str(s), d] for s, d in rep.slopes()],
            "invariants": invariant_dim(rep),
            "determinant": {"tame": str(res.residue), "wild": repr(tail)},
            "self_dual": is_selfdual(rep),
            "formal_monodromy": repr(formal_monodromy(rep)),
            "torus_data": [repr(t) for t in torus_data(rep)],
        }
        results.append(entry)
        lines.append(f"at {entry['point']}: {entry['rep']}")
        lines.append(f"  rank {entry['rank']}  Swan {entry['swan']}  "
                     f"slopes {entry['slopes']}  invariants {entry['invariants']}")
        lines.append(f"  det = (chi({res.residue}), {tail!r})  "
                     f"self-dual: {entry['self_dual']}")
    euler = euler_char(data)
    rig = index_of_rigidity(data)
    results.append({"point": "global", "euler": euler, "rig": rig})
    lines.append(f"euler: {euler}")
    lines.append(f"rig: {rig}")
    report = _report("analyze", doc.p, {k: v for k, v in doc.params.items()},
                     results, True)
    return _emit(args, report, lines)


def cmd_verify_table(args) -> int:
    p = args.p if args.p else default_p()
    overrides = {}
    for item in args.set or []:
        key, _, val = item.partition("=")
        if not _:
            raise SystemExit(f"bad --set {item!r}, expected name=value")
        key = key.strip()
        val = val.strip()
        if key in ("l1", "l2"):
            overrides[key] = int(val)
        else:
            overrides[key] = Fraction(val)
    rows = [args.row] if args.row else list(range(1, 11))
    results = []
    lines = [f"# table verification (p = {p})"]
    all_pass = True
    for row in rows:
        report = verify_table_row(RowSpec(row, overrides), p)
        results.append(report.to_json())
        status = "PASS" if report.passed else "FAIL"
        all_pass = all_pass and report.passed
        extra = f" rig={report.rig}" if report.rig is not None else ""
        if report.constraint_failures:
            extra = " constraint: " + "; ".join(report.constraint_failures)
        else:
            bad = [c.name for c in report.checks if not c.passed]
            if bad:
                extra += "  failed: " + ", ".join(bad)
        lines.append(f"row {row:2d}: {status}{extra}")
    params = dict(DEFAULT_PARAMS)
    params.update(overrides)
    report = _report("verify-table", p, params, results, all_pass)
    return _emit(args, report, lines)


def cmd_classify(args) -> int:
    p = args.p if args.p else default_p()
    res = classify(nmax=args.nmax, p=p)
    results = [res.to_json()]
    lines = [f"# classification (p = {p}, nmax = {args.nmax})"]
    for k in sorted(res.families):
        fam = res.families[k]
        lines.append(f"family -> row {k} ({fam.count} parameter witnesses)")
        lines.append(f"  0:   {fam.zero_side}")
        lines.append(f"  inf: {fam.infinity_side}")
    lines.append(f"families: {len(res.families)}  unmatched: {len(res.unmatched)}")
    if res.unmatched:
        lines.append("UNMATCHED CANDIDATES:")
        lines.extend(f"  {u}" for u in res.unmatched)
    lines.append("complete: " + ("yes" if res.complete else "no"))
    report = _report("classify", p, {"nmax": args.nmax}, results, res.complete)
    return _emit(args, report, lines)


def cmd_ft(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        doc = parse_document(fh.read())
    data = doc.global_data()
    res = stationary_phase(data)
    rank = ft_rank(data)
    out = res.output
    results = [{
        "output": print_local_rep(out) if out.atoms else "0",
        "rank": out.rank(),
        "swan": out.swan(),
        "slopes": [[str(s), d] for s, d in out.slopes()],
        "ft_rank": rank,
        "records": [{"ram_in": r.ram_in, "pole": r.pole, "ram_out": r.ram_out,
                     "leading_root": repr(r.leading_root)} for r in res.records],
    }]
    lines = [
        "# local Fourier transform at infinity of the dual line",
        f"output: {results[0]['output']}",
        f"rank {out.rank()}  Swan {out.swan()}  slopes {results[0]['slopes']}",
        f"generic rank of the transform: {rank}",
    ]
    ok = rank == out.rank()
    report = _report("ft", doc.p, doc.params, results, ok)
    return _emit(args, report, lines)


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wildmono",
        description="Invariant calculus for wildly ramified local monodromy "
                    "and the rank-7 G2 classification table.")
    ap.add_argument("--json", action="store_true",
                    help="emit a machine-readable report document")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="per-point invariants of a document")
    a.add_argument("file")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify-table", help="certify the classification table")
    v.add_argument("--row", type=int, choices=range(1, 11))
    v.add_argument("--set", action="append", metavar="name=value",
                   help="override a default parameter (l1, l2, chi, x, y, z, "
                        "eps, iota)")
    v.add_argument("--p", type=int, help="characteristic (default 13 or "
                                         "WILDMONO_P)")
    v.set_defaults(func=cmd_verify_table)

    c = sub.add_parser("classify", help="run the classification search")
    c.add_argument("--nmax", type=int, default=12,
                   help="bound on tame character denominators (default 12)")
    c.add_argument("--p", type=int, help="characteristic (default 13)")
    c.set_defaults(func=cmd_classify)

    f = sub.add_parser("ft", help="Fourier transform of a document")
    f.add_argument("file")
    f.set_defaults(func=cmd_ft)
    return ap


def main(argv=None) -> int:
    ap = build_arg_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (GrammarError, ModelError, TransformError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
