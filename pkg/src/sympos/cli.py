"""Command-line front end.

Subcommands: ``table`` (reproduce the summary table), ``compute`` (one
space), ``roots`` (dump a positive root system), ``verify`` (run the
invariant suite), ``discrepancies`` (closed-form vs enumeration scan) and
``export`` (machine-readable catalog).  Exit codes: 0 success, 1
verification failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .rootsys import LieType, height, positive_roots
from .spaces import Family, N_FAMILIES, PQ_FAMILIES, ParameterError, catalog_json, make_space
from .svalue import (
    closed_form_s,
    discrepancy_report,
    report,
    report_to_dict,
    s_value,
)
from .verify import run_verification

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

# Small sample parameters outside every exception-ledger instance, so the
# default table matches the closed forms verbatim.
DEFAULT_PARAMS: dict[Family, dict[str, int]] = {
    Family.AI: {"n": 5},
    Family.AII: {"n": 4},
    Family.AIII: {"p": 3, "q": 4},
    Family.BDI: {"p": 3, "q": 4},
    Family.DIII: {"n": 7},
    Family.CI: {"n": 4},
    Family.CII: {"p": 2, "q": 3},
}

TABLE_FIELDS = ["family", "label", "params", "rank", "dimension",
                "s", "s_table", "s_corrected", "match"]


def _space_from_args(family: Family, args: argparse.Namespace):
    kwargs = {}
    if family in N_FAMILIES:
        if args.n is None:
            raise ParameterError(f"{family} requires --n")
        kwargs["n"] = args.n
    elif family in PQ_FAMILIES:
        if args.p is None or args.q is None:
            raise ParameterError(f"{family} requires --p and --q")
        kwargs["p"], kwargs["q"] = args.p, args.q
    return make_space(family, **kwargs)


def _table_rows(overrides: dict[Family, dict[str, int]]) -> list[dict]:
    rows = []
    for family in Family:
        params = overrides.get(family, DEFAULT_PARAMS.get(family, {}))
        space = make_space(family, **params)
        s = s_value(space)
        s_table = closed_form_s(space, "table")
        s_corr = closed_form_s(space, "corrected")
        rows.append({
            "family": family.value,
            "label": space.label,
            "params": " ".join(f"{k}={v}" for k, v in params.items()),
            "rank": space.r,
            "dimension": space.dimension,
            "s": s,
            "s_table": s_table,
            "s_corrected": s_corr,
            "match": s == s_table,
        })
    return rows


def _render_rows(rows: list[dict], fields: list[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([row[f] for f in fields])
        return buf.getvalue().rstrip("\n")
    cells = [[str(row[f]) for f in fields] for row in rows]
    widths = [max(len(f), *(len(c[i]) for c in cells)) for i, f in enumerate(fields)]
    if fmt == "markdown":
        lines = ["| " + " | ".join(f.ljust(w) for f, w in zip(fields, widths)) + " |",
                 "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
        lines += ["| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |"
                  for row in cells]
        return "\n".join(lines)
    lines = ["  ".join(f.ljust(w) for f, w in zip(fields, widths))]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def cmd_table(args: argparse.Namespace) -> int:
    overrides: dict[Family, dict[str, int]] = {}
    for family in DEFAULT_PARAMS:
        prefix = family.value.lower()
        given = {name: getattr(args, f"{prefix}_{name}")
                 for name in DEFAULT_PARAMS[family]
                 if getattr(args, f"{prefix}_{name}") is not None}
        if given:
            merged = dict(DEFAULT_PARAMS[family])
            merged.update(given)
            overrides[family] = merged
    rows = _table_rows(overrides)
    print(_render_rows(rows, TABLE_FIELDS, args.format))
    ok = all(row["s"] == row["s_corrected"] for row in rows)
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def cmd_compute(args: argparse.Namespace) -> int:
    space = _space_from_args(Family(args.family), args)
    rep = report(space)
    if args.format == "json":
        print(json.dumps(report_to_dict(rep), indent=2))
        return EXIT_OK
    print(f"{space.family} {space.label}  l={space.ambient.rank} r={space.r} "
          f"dim={space.dimension}")
    print(f"s = {rep.s}")
    if args.detail:
        print("s_k = " + " ".join(str(v) for v in rep.s_k))
        print("|Delta_k+| = " + " ".join(str(v) for v in rep.delta_counts))
        print(f"argmax k = {list(rep.argmax)}")
        print(f"zero restrictions = {rep.zero_count}")
        print("multiplicities:")
        for lam, count in sorted(rep.multiplicities.items()):
            print(f"  {list(lam)}: {count}")
    return EXIT_OK


def cmd_roots(args: argparse.Namespace) -> int:
    lie_type = LieType.parse(args.type)
    system = positive_roots(lie_type)
    if args.format == "json":
        print(json.dumps({
            "type": str(lie_type),
            "positive_roots": [list(r) for r in system.positive_roots],
            "count": len(system),
        }, indent=2))
        return EXIT_OK
    if args.format == "csv":
        rows = [{"height": height(r), "coefficients": " ".join(map(str, r))}
                for r in system.positive_roots]
        print(_render_rows(rows, ["height", "coefficients"], "csv"))
        return EXIT_OK
    for r in system.positive_roots:
        print(" ".join(str(m) for m in r))
    print(f"count: {len(system)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_verification(max_rank=args.max_rank)
    summary = {
        "max_rank": args.max_rank,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                   for c in results],
        "passed": all(c.passed for c in results),
    }
    print(json.dumps(summary, indent=2))
    for c in results:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status} {c.name}" + (f": {c.detail}" if c.detail and not c.passed else ""),
              file=sys.stderr)
    return EXIT_OK if summary["passed"] else EXIT_VERIFICATION_FAILED


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise ParameterError(f"range must look like a..b, got {text!r}")
    return int(lo), int(hi)


def cmd_discrepancies(args: argparse.Namespace) -> int:
    lo, hi = _parse_range(args.range)
    families = [Family(args.family)] if args.family else sorted(
        N_FAMILIES | PQ_FAMILIES, key=lambda f: f.value)
    entries = []
    for family in families:
        entries.extend(discrepancy_report(family, lo, hi))
    if args.format == "json":
        print(json.dumps(entries, indent=2))
    else:
        fields = ["family", "params", "enumerated_s", "table_s", "corrected_s"]
        rows = [{**e, "params": " ".join(map(str, e["params"]))} for e in entries]
        print(_render_rows(rows, fields, args.format) if rows else "no discrepancies")
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    print(json.dumps(catalog_json(), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympos",
        description="Partial-positivity index s for irreducible Riemannian "
                    "symmetric spaces of compact type.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="reproduce the summary table")
    p_table.add_argument("--format", choices=["text", "markdown", "json", "csv"],
                         default="text")
    for family, params in DEFAULT_PARAMS.items():
        prefix = family.value.lower()
        for name, default in params.items():
            p_table.add_argument(f"--{prefix}-{name}", type=int, default=None,
                                 metavar="N", help=f"{family} {name} (default {default})")
    p_table.set_defaults(func=cmd_table)

    p_compute = sub.add_parser("compute", help="compute s for one space")
    p_compute.add_argument("family", choices=[f.value for f in Family])
    p_compute.add_argument("--n", type=int)
    p_compute.add_argument("--p", type=int)
    p_compute.add_argument("--q", type=int)
    p_compute.add_argument("--detail", action="store_true")
    p_compute.add_argument("--format", choices=["text", "json"], default="text")
    p_compute.set_defaults(func=cmd_compute)

    p_roots = sub.add_parser("roots", help="dump a positive root system")
    p_roots.add_argument("type", help="Lie type, e.g. A3, F4, E6")
    p_roots.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_roots.set_defaults(func=cmd_roots)

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    p_verify.add_argument("--max-rank", type=int, default=10)
    p_verify.set_defaults(func=cmd_verify)

    p_disc = sub.add_parser("discrepancies",
                            help="closed-form vs enumeration scan")
    p_disc.add_argument("family", nargs="?", default=None,
                        choices=[f.value for f in sorted(N_FAMILIES | PQ_FAMILIES,
                                                         key=lambda f: f.value)])
    p_disc.add_argument("--range", default="1..10", metavar="a..b")
    p_disc.add_argument("--format", choices=["text", "markdown", "json", "csv"],
                        default="text")
    p_disc.set_defaults(func=cmd_discrepancies)

    p_export = sub.add_parser("export", help="catalog as JSON")
    p_export.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
