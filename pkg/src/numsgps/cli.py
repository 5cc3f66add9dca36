"""Command line front end.

Subcommands: ``analyze`` (full report for one set), ``tables`` (CSV count
tables by Frobenius number and genus), ``plotdata`` (normalized series
derived from the tables), ``verify`` (the exhaustive check harness) and
``family`` (members of the explicit constructions).  All outputs are
plain UTF-8 text or CSV with deterministic row order.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import math
import sys
from fractions import Fraction
from pathlib import Path

from .core import format_set_spec, parse_set_spec
from .enumeration import TableSet, build_tables
from .families import (
    FamilySpec,
    family_as_enumerate,
    family_general_member,
    general_family_candidates,
)
from .transforms import TransformReport, is_almost_symmetric, type_of
from .verify import SweepBounds, run_all

_GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0


def _fmt_opt(value) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, tuple):
        return "{" + ",".join(str(x) for x in value) + "}"
    return str(value)


def cmd_analyze(args) -> int:
    H = parse_set_spec(args.set_spec)
    rep = TransformReport(H)
    F, g, m, n = rep.profile
    print(f"set: {H}")
    print(f"encoding: {format_set_spec(H)}")
    print(f"F={F} g={g} m={m} n={n}")
    print(f"gaps: {_fmt_opt(H.gaps())}")
    print(f"closed: {_fmt_opt(rep.closed)}")
    print(f"minimal generators: {_fmt_opt(rep.mingens)}")
    print(f"PF: {_fmt_opt(rep.pf)} (t={_fmt_opt(rep.t)})")
    print(f"T-set: {_fmt_opt(rep.tset and format_set_spec(rep.tset))}")
    print(f"A: {format_set_spec(rep.assoc)}")
    print(f"A*: {_fmt_opt(rep.astar and format_set_spec(rep.astar))}")
    print(f"B: {_fmt_opt(rep.bset)}")
    print(f"l={rep.l} L={rep.chain_length}")
    print("chain:")
    for X in rep.chain:
        print(f"  {format_set_spec(X)}")
    for name, value in rep.flags.items():
        print(f"{name}: {_fmt_opt(value)}")
    return 0


def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _table_rows(table, index_range) -> list[tuple[int, int, int]]:
    return [(i, t, c) for (i, t), c in sorted(table.rows.items())
            if index_range[0] <= i <= index_range[1]]


def _parity_rows(table, index_range) -> list[tuple[int, int, int]]:
    out = []
    for i in range(index_range[0], index_range[1] + 1):
        odd, even = table.parity.get(i, (0, 0))
        out.append((i, odd, even))
    return out


def write_tables(tables: TableSet, max_f: int, max_g: int, out_dir: Path) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    files = {
        "t_by_frobenius.csv": (["F", "t", "count"],
                               _table_rows(tables.by_frobenius, (1, max_f))),
        "t1_by_frobenius.csv": (["F", "t", "count"],
                                _table_rows(tables.almost_symmetric_by_frobenius, (1, max_f))),
        "t_by_genus.csv": (["g", "t", "count"],
                           _table_rows(tables.by_genus, (1, max_g))),
        "parity_by_frobenius.csv": (["F", "odd", "even"],
                                    _parity_rows(tables.by_frobenius, (1, max_f))),
        "parity_by_genus.csv": (["g", "odd", "even"],
                                _parity_rows(tables.by_genus, (1, max_g))),
    }
    written = []
    for name, (header, rows) in files.items():
        path = out_dir / name
        _write_csv(path, header, rows)
        written.append(path)
    return written


def cmd_tables(args) -> int:
    tables = build_tables(args.max_f, args.max_g, workers=args.workers)
    for path in write_tables(tables, args.max_f, args.max_g, Path(args.out)):
        print(f"wrote {path}")
    return 0


def _log_cell(count: int, denom: int, base_log: float) -> str:
    if count <= 0:
        return ""
    return f"{math.log(count) / base_log / denom:.6f}"


def write_plotdata(tables: TableSet, max_f: int, max_g: int,
                   alphas: list[int], out_dir: Path) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    def ratio_rows(table, hi):
        rows = []
        for i in range(1, hi + 1):
            odd, even = table.parity.get(i, (0, 0))
            total = odd + even
            rows.append((i, f"{odd / total:.6f}" if total else ""))
        return rows

    path = out_dir / "parity_ratio_by_frobenius.csv"
    _write_csv(path, ["F", "ratio"], ratio_rows(tables.by_frobenius, max_f))
    written.append(path)
    path = out_dir / "parity_ratio_by_genus.csv"
    _write_csv(path, ["g", "ratio"], ratio_rows(tables.by_genus, max_g))
    written.append(path)

    header = ["F"] + [f"t{a}" for a in alphas]
    log2 = math.log(2.0)
    for parity, name in ((1, "log2_t_by_frobenius_odd.csv"),
                         (0, "log2_t_by_frobenius_even.csv")):
        rows = []
        for F in range(1, max_f + 1):
            if F % 2 != parity:
                continue
            rows.append([F] + [
                _log_cell(tables.by_frobenius.count(F, a), F, log2) for a in alphas
            ])
        path = out_dir / name
        _write_csv(path, header, rows)
        written.append(path)

    logphi = math.log(_GOLDEN_RATIO)
    rows = []
    for g in range(1, max_g + 1):
        rows.append([g] + [
            _log_cell(tables.by_genus.count(g, a), g, logphi) for a in alphas
        ])
    path = out_dir / "logphi_l_by_genus.csv"
    _write_csv(path, ["g"] + [f"t{a}" for a in alphas], rows)
    written.append(path)
    return written


def cmd_plotdata(args) -> int:
    alphas = [int(tok) for tok in args.alpha.split(",") if tok.strip()]
    if not alphas:
        raise ValueError("--alpha needs at least one type value, e.g. 1,2,3,4,5")
    tables = build_tables(args.max_f, args.max_g, workers=args.workers)
    for path in write_plotdata(tables, args.max_f, args.max_g, alphas, Path(args.out)):
        print(f"wrote {path}")
    return 0


def cmd_verify(args) -> int:
    bounds = SweepBounds.full() if args.mode == "full" else SweepBounds.fast()
    if args.max_g is not None:
        bounds = dataclasses.replace(bounds, max_genus=args.max_g)
    if args.max_f is not None:
        bounds = dataclasses.replace(bounds, max_set_frobenius=args.max_f)
    results = run_all(bounds)
    bad = 0
    for result in results:
        print(result.summary())
        if not result.passed:
            bad += 1
    print(f"{len(results) - bad}/{len(results)} checks passed")
    return 0 if bad == 0 else 1


def parse_beta(text: str) -> Fraction:
    """Parse an exact rational expression like 43/100 or 43/100+1/1000000."""
    total = Fraction(0)
    for part in text.split("+"):
        part = part.strip()
        num, sep, den = part.partition("/")
        try:
            total += Fraction(int(num), int(den)) if sep else Fraction(int(num))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad rational {part!r} in beta expression {text!r}") from None
    return total


def cmd_family(args) -> int:
    params: dict[str, str] = {}
    for token in args.params:
        key, sep, value = token.partition("=")
        if not sep:
            raise ValueError(f"family parameters look like F=19 k=0, got {token!r}")
        params[key] = value
    if "F" not in params:
        raise ValueError("the family needs a Frobenius number, e.g. F=19")
    F = int(params.pop("F"))
    k = int(params.pop("k", args.k if args.k is not None else "0"))
    beta_text = params.pop("beta", args.beta)
    beta = parse_beta(beta_text) if beta_text is not None else None
    if params:
        raise ValueError(f"unknown family parameters: {sorted(params)}")

    if args.kind == "as":
        members = family_as_enumerate(F, k)
    else:
        if beta is None:
            raise ValueError("the general family needs beta=p/q (optionally p/q+r/s)")
        cands = list(general_family_candidates(F, beta))
        members = []
        for bits in range(1 << len(cands)):
            subset = tuple(c for j, c in enumerate(cands) if bits >> j & 1)
            members.append(family_general_member(FamilySpec(F, k, subset, beta)))

    types = sorted({type_of(S) for S in members})
    all_as = all(is_almost_symmetric(S) for S in members)
    lines = [format_set_spec(S) for S in members]
    lines.append(
        f"# count={len(members)}"
        f" type={types[0] if len(types) == 1 else types}"
        f" all_almost_symmetric={'yes' if all_as else 'no'}"
        f" frobenius={F}"
    )
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numsgps",
        description="numerical sets and semigroups: reports, counting tables, checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full derived-quantity report for one set")
    p.add_argument("set_spec", help="gaps=1,2,4,7 or gens=3,5")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("tables", help="write (index, type) count tables as CSV")
    p.add_argument("--max-f", type=int, default=30, help="largest Frobenius number")
    p.add_argument("--max-g", type=int, default=20, help="largest genus")
    p.add_argument("--out", default="tables", help="output directory")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("plotdata", help="write normalized count series as CSV")
    p.add_argument("--max-f", type=int, default=30)
    p.add_argument("--max-g", type=int, default=20)
    p.add_argument("--alpha", default="1,2,3,4,5",
                   help="comma-separated type values for the normalized series")
    p.add_argument("--out", default="plotdata")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_plotdata)

    p = sub.add_parser("verify", help="run the exhaustive check harness")
    p.add_argument("--mode", choices=("fast", "full"), default="fast")
    p.add_argument("--max-g", type=int, default=None,
                   help="override the semigroup sweep genus bound")
    p.add_argument("--max-f", type=int, default=None,
                   help="override the numerical-set sweep Frobenius bound")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="emit all members of an explicit family")
    p.add_argument("kind", choices=("as", "gen"),
                   help="'as' = almost symmetric family, 'gen' = general family")
    p.add_argument("params", nargs="*",
                   help="key=value parameters: F=19 k=0 [beta=43/100+1/1000000]")
    p.add_argument("--k", type=int, default=None, help="alternate spelling of k=")
    p.add_argument("--beta", default=None, help="alternate spelling of beta=")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_family)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
