"""Command-line front end.

Subcommands
  enumerate    list the basic 2-term silting complexes of a family
  classify     full census: records plus summary counts
  count        evaluate one named counting quantity
  tables       three-way verification report (exit 2 on undocumented mismatch)
  realization  the explicit 2-term tilting complex of the realization check
  cache        build or verify the on-disk catalog cache

Deterministic output: identical invocations print identical bytes.
Exit codes: 0 success, 1 usage error, 2 verification mismatch.
"""

import argparse
import json
import os
import sys

from . import formulas as F
from .census import (
    AlgebraSpec,
    build_catalog_cache,
    classify_family,
    get_catalog,
    load_catalog_verified,
    realization_complex,
    records_to_json,
    silting_json,
)
from .quivers import qwr_to_json


QUANTITIES = {
    "t_a": lambda n, m: F.t_a(n),
    "t_lambda": lambda n, m: F.t_lambda(n),
    "delta": lambda n, m: F.delta_row(n),
    "tm_a": lambda n, m: F.tm_a(n, m),
    "tm_lambda": lambda n, m: F.tm_lambda(n, m),
    "a_t_a": lambda n, m: F.a_t_a(n),
    "a_nht_a": lambda n, m: F.a_nht_a(n),
    "a_t2_a": lambda n, m: F.a_t2_a(n),
    "a_t3_a": lambda n, m: F.a_t3_a(n),
    "a_t4_a": lambda n, m: F.a_t4_a(n),
    "a_ht_lambda": lambda n, m: F.a_ht_lambda(n),
    "a_nht_lambda": lambda n, m: F.a_nht_lambda(n),
    "a_t_lambda": lambda n, m: F.a_t_lambda(n),
    "a_t1_lambda": lambda n, m: F.a_t1_lambda(n),
    "a_t2_lambda": lambda n, m: F.a_t2_lambda(n),
    "a_ss": lambda n, m: F.a_ss_lambda(n),
    "a_ss_lambda": lambda n, m: F.a_ss_lambda(n),
    "a_ss_gamma": lambda n, m: F.a_ss_gamma(n),
    "a_s_lambda": lambda n, m: F.a_s_lambda(n),
    "a_s_gamma": lambda n, m: F.a_s_gamma(n),
    "a_s_mu": lambda n, m: F.a_s_mu(n),
}
for _i in range(1, 15):
    QUANTITIES[f"c{_i}"] = (lambda i: lambda n, m: F.c_part(n, i))(_i)
for _k in ("b1", "b247", "b3", "b5", "b6", "b7"):
    QUANTITIES[_k] = (lambda k: lambda n, m: F.b_part(n, k))(_k)

FAMILY_SYMBOL = {"a": "A", "d-linear": "Lambda", "d-reversed": "Gamma", "b": "B"}


def _build_parser():
    p = argparse.ArgumentParser(prog="silted", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_common(sp, family=True):
        if family:
            sp.add_argument("--family", required=True, choices=["a", "d-linear", "d-reversed", "b"])
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--format", choices=["json", "csv", "md"], default="json")

    sp = sub.add_parser("enumerate", help="list 2-term silting complexes")
    add_common(sp)
    sp.add_argument("--n-cap", type=int, default=9)

    sp = sub.add_parser("classify", help="census records and summary")
    add_common(sp)
    sp.add_argument("--n-cap", type=int, default=9)
    sp.add_argument("--summary-only", action="store_true")

    sp = sub.add_parser("count", help="evaluate a counting quantity")
    sp.add_argument("quantity", choices=sorted(QUANTITIES))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=1)

    sp = sub.add_parser("tables", help="verification report")
    sp.add_argument("--format", choices=["json", "csv", "md"], default="md")
    sp.add_argument("--enum-max", type=int, default=5)
    sp.add_argument("--deep-ss", action="store_true")

    sp = sub.add_parser("realization", help="the explicit realization complex")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--orientation", choices=["linear", "reversed"], required=True)
    sp.add_argument("--format", choices=["json", "csv", "md"], default="json")

    sp = sub.add_parser("cache", help="catalog cache maintenance")
    sp.add_argument("action", choices=["build", "verify"])
    sp.add_argument("--family", required=True, choices=["a", "d-linear", "d-reversed", "b"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cache-dir", default=None)
    return p


def _json_dump(doc):
    return json.dumps(doc, indent=2, sort_keys=False)


def _summary_md(summary):
    sym = FAMILY_SYMBOL[summary.family]
    lines = [
        f"# census {sym}_{summary.n}",
        "",
        f"silting objects: {summary.n_silting}",
        f"tilting modules: {summary.n_tilting}",
        "",
        "| quantity | value |",
        "|---|---|",
        f"| a_s({sym}_{summary.n}) | {summary.a_s} |",
        f"| a_t({sym}_{summary.n}) | {summary.a_t} |",
        f"| a_ss({sym}_{summary.n}) | {summary.a_ss} |",
        f"| a_ht({sym}_{summary.n}) | {summary.a_ht} |",
        f"| a_nht({sym}_{summary.n}) | {summary.a_nht} |",
    ]
    for label, count in sorted(summary.label_class_counts.items()):
        lines.append(f"| classes with label {label} | {count} |")
    if summary.overlaps:
        lines.append("")
        lines.append("label overlaps (one class, several case families):")
        for ov in summary.overlaps:
            lines.append(f"- class {ov['isoClass']}: {', '.join(ov['labels'])}")
    return "\n".join(lines)


def _summary_csv(summary):
    rows = [
        ("family", summary.family),
        ("n", summary.n),
        ("silting_objects", summary.n_silting),
        ("tilting_modules", summary.n_tilting),
        ("a_s", summary.a_s),
        ("a_t", summary.a_t),
        ("a_ss", summary.a_ss),
        ("a_ht", summary.a_ht),
        ("a_nht", summary.a_nht),
    ]
    rows += [(f"label_{k}", v) for k, v in sorted(summary.label_class_counts.items())]
    return "\n".join(f"{k},{v}" for k, v in rows)


def run(argv):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        if args.cmd == "enumerate":
            spec = AlgebraSpec(args.family, args.n)
            if args.n > args.n_cap:
                print(f"n={args.n} exceeds the cap {args.n_cap}", file=sys.stderr)
                return 1
            objs = silting_json(spec)
            if args.format == "json":
                print(_json_dump({"family": args.family, "n": args.n, "silting": objs}))
            elif args.format == "csv":
                print("modules,shifted")
                for o in objs:
                    print(f"\"{o['modules']}\",\"{o['shifted']}\"")
            else:
                print(f"# 2-term silting complexes, {FAMILY_SYMBOL[args.family]}_{args.n}")
                for o in objs:
                    print(f"- modules {o['modules']} shifted {o['shifted']}")
                print(f"total: {len(objs)}")
            return 0

        if args.cmd == "classify":
            spec = AlgebraSpec(args.family, args.n)
            records, summary = classify_family(spec, n_cap=args.n_cap)
            if args.format == "json":
                if args.summary_only:
                    print(_json_dump(summary.to_json()))
                else:
                    print(_json_dump(records_to_json(spec, records, summary)))
            elif args.format == "csv":
                print(_summary_csv(summary))
            else:
                print(_summary_md(summary))
            return 0

        if args.cmd == "count":
            try:
                val = QUANTITIES[args.quantity](args.n, args.m)
            except (ValueError, KeyError) as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 1
            print(val)
            return 0

        if args.cmd == "tables":
            from .papertables import verify_tables

            rep = verify_tables(enum_max_d=args.enum_max, deep_ss=args.deep_ss)
            if args.format == "json":
                print(_json_dump(rep.to_json()))
            elif args.format == "csv":
                print(rep.to_csv())
            else:
                print(rep.to_markdown())
            return 0 if rep.ok() else 2

        if args.cmd == "realization":
            s, ep, report = realization_complex(args.orientation, args.n)
            doc = {
                "report": report,
                "end": ep.to_json(),
            }
            if args.format == "json":
                print(_json_dump(doc))
            elif args.format == "csv":
                print("check,value")
                for k, v in report.items():
                    print(f"{k},{v}")
            else:
                print(f"# realization complex, orientation {args.orientation}, n={args.n}")
                for k, v in report.items():
                    print(f"- {k}: {v}")
            return 0 if report["hypothesesVerified"] else 2

        if args.cmd == "cache":
            cache_dir = args.cache_dir or os.environ.get("SILTED_CACHE_DIR") or ".silted-cache"
            spec = AlgebraSpec(args.family, args.n)
            if args.action == "build":
                path = build_catalog_cache(spec, cache_dir)
                print(path)
                return 0
            _, verified = load_catalog_verified(spec, cache_dir)
            print("verified" if verified else "no cache file; knitted fresh")
            return 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
