"""Command-line front end.

Subcommands:

* ``index``: convert between monomial index and exponent tuple.
* ``table``: redundancy table of all four families over a range of t.
* ``code``: materialize one code over GF(p^e) and summarize it as JSON.
* ``verify``: run the formula/oracle cross-checks over a grid.

Exit codes: 0 success, 1 usage or domain error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import check_sets, codes, formulas, verify
from .gf import GF
from .monomials import divisor_count, index_to_monomial, monomial_to_index

TABLE_T_GUARD = 512
TABLE_M_GUARD = 8


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: D401 - argparse hook
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_t_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 0 or hi < lo:
        raise ValueError(f"bad t range {text!r}: need 0 <= min <= max")
    return lo, hi


def _build_parser() -> _Parser:
    parser = _Parser(prog="rmopt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", parents=[], help="index/exponent conversion")
    p_index.add_argument("--m", type=int, required=True, help="number of variables")
    p_index.add_argument("--i", type=int, help="monomial index to unrank")
    p_index.add_argument("--exp", type=str, help="comma-separated exponents to rank")

    p_table = sub.add_parser("table", help="redundancy table for all four families")
    p_table.add_argument("--m", type=int, required=True)
    p_table.add_argument("--t", type=str, required=True, help="range as MIN..MAX or a single value")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--with-oracle", action="store_true", help="append brute-force columns and cross-check")
    p_table.add_argument("--gnuplot", action="store_true", help="emit a gnuplot script with the data inlined")

    p_code = sub.add_parser("code", help="build one code over GF(p^e) and summarize it")
    p_code.add_argument("--variant", choices=check_sets.VARIANTS, required=True)
    p_code.add_argument("--t", type=int, required=True)
    p_code.add_argument("--p", type=int, required=True, help="field characteristic")
    p_code.add_argument("--e", type=int, default=1, help="extension degree")
    p_code.add_argument("--m", type=int, required=True)
    p_code.add_argument("--format", choices=("json", "csv"), default="json")

    p_verify = sub.add_parser("verify", help="cross-check formulas against enumeration")
    p_verify.add_argument("--m-max", type=int, required=True)
    p_verify.add_argument("--t-max", type=int, required=True)
    return parser


def cmd_index(args) -> int:
    if (args.i is None) == (args.exp is None):
        raise ValueError("give exactly one of --i and --exp")
    if args.m < 1:
        raise ValueError("need m >= 1")
    if args.i is not None:
        if args.i < 0:
            raise ValueError("need i >= 0")
        exps = index_to_monomial(args.i, args.m)
        i = args.i
    else:
        try:
            exps = tuple(int(part) for part in args.exp.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed exponent list {args.exp!r}") from exc
        if len(exps) != args.m:
            raise ValueError(f"expected {args.m} exponents, got {len(exps)}")
        i = monomial_to_index(exps)
    print(f"index: {i}")
    print(f"exponents: {','.join(str(x) for x in exps)}")
    print(f"degree: {sum(exps)}")
    print(f"divisors: {divisor_count(exps)}")
    return 0


class VerificationFailure(Exception):
    """A formula disagreed with its enumerating oracle."""


_ORACLES = {
    "oracle_r": check_sets.standard_set,
    "oracle_r_tilde": check_sets.feng_rao_set,
    "oracle_r_star": check_sets.generic_standard_set,
    "oracle_r_tilde_star": check_sets.generic_improved_set,
}


def _table_rows(m: int, t_lo: int, t_hi: int, with_oracle: bool) -> list[dict]:
    rows = []
    for t in range(t_lo, t_hi + 1):
        report = formulas.redundancy_report(t, m)
        row = {
            "t": t,
            "r": report.r,
            "r_tilde": report.r_tilde,
            "r_star": report.r_star,
            "r_tilde_star": report.r_tilde_star,
        }
        if with_oracle:
            for key, build in _ORACLES.items():
                row[key] = len(build(t, m))
            for key in ("r", "r_tilde", "r_star", "r_tilde_star"):
                if row[key] != row[f"oracle_{key}"]:
                    raise VerificationFailure(
                        f"table mismatch at t={t} m={m}: "
                        f"{key} expected {row[f'oracle_{key}']}, got {row[key]}"
                    )
        rows.append(row)
    return rows


def _emit_csv(rows: list[dict]) -> str:
    header = list(rows[0]) if rows else ["t", "r", "r_tilde", "r_star", "r_tilde_star"]
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(row[key]) for key in header))
    return "\n".join(lines)


_GNUPLOT_PREFIX = """\
set datafile separator ','
set key left top
set xlabel 't'
set ylabel 'checks'
"""


def _emit_gnuplot(rows: list[dict]) -> str:
    body = _emit_csv(rows)
    plot = (
        "plot $data using 1:2 with linespoints title 'r', \\\n"
        "     $data using 1:3 with linespoints title 'r_tilde', \\\n"
        "     $data using 1:4 with linespoints title 'r_star', \\\n"
        "     $data using 1:5 with linespoints title 'r_tilde_star'"
    )
    return f"{_GNUPLOT_PREFIX}$data << EOD\n{body}\nEOD\n{plot}\n"


def cmd_table(args) -> int:
    t_lo, t_hi = _parse_t_range(args.t)
    if args.m < 1 or args.m > TABLE_M_GUARD:
        raise ValueError(f"need 1 <= m <= {TABLE_M_GUARD}")
    if t_hi > TABLE_T_GUARD:
        raise ValueError(f"t max {t_hi} exceeds the {TABLE_T_GUARD} guard")
    try:
        rows = _table_rows(args.m, t_lo, t_hi, args.with_oracle)
    except VerificationFailure as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.gnuplot:
        print(_emit_gnuplot(rows), end="")
    elif args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        print(_emit_csv(rows))
    return 0


def cmd_code(args) -> int:
    if args.m < 1:
        raise ValueError("need m >= 1")
    if args.t < 0:
        raise ValueError("need t >= 0")
    field = GF(args.p, args.e)
    summary = codes.code_summary(args.variant, args.t, field, args.m)
    payload = {
        "variant": summary.variant,
        "t": summary.t,
        "q": summary.q,
        "m": summary.m,
        "n": summary.n,
        "checks": summary.checks,
        "redundancy": summary.redundancy,
        "dimension": summary.dimension,
        "max_exponent": summary.max_exponent,
        "rank_deficit": summary.rank_deficit,
    }
    if args.format == "csv":
        print(",".join(payload))
        print(",".join(str(v).lower() if isinstance(v, bool) else str(v) for v in payload.values()))
    else:
        print(json.dumps(payload, indent=2))
    return 0


def cmd_verify(args) -> int:
    if args.m_max < 1 or args.t_max < 0:
        raise ValueError("need m-max >= 1 and t-max >= 0")
    grid = {m: args.t_max for m in range(1, args.m_max + 1)}
    results = verify.run_checks(grid)
    width = max(len(res.name) for res in results)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"{status}  {res.name:<{width}}  {res.cases} cases"
        if res.detail:
            line += f"  [{res.detail}]"
        print(line)
    failed = [res for res in results if not res.passed]
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed", file=sys.stderr)
        return 2
    print(f"all {len(results)} checks passed")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "index": cmd_index,
        "table": cmd_table,
        "code": cmd_code,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"rmopt: error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
