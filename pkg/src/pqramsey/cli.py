"""Command-line entry point: ``pqramsey {compute,witness,oracle,selfcheck,table}``.

Exit codes: 0 success, 1 usage error, 2 oracle capacity exceeded,
3 internal consistency failure (an invalid witness or disagreeing formulas).
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Optional, Sequence

from . import formulas
from .detectors import Cycle, Path, Quasar, Star, Target, Wheel
from .formulas import LinearForest, RamseyAnswer
from .graph import describe, dot_export, graph6_encode
from .oracle import CapacityError, OracleResult, append_log, ramsey_exact, read_log
from .witnesses import WitnessConsistencyError, quasar_reports, star_report

EXIT_OK, EXIT_USAGE, EXIT_CAPACITY, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _forest(text: str) -> LinearForest:
    try:
        return LinearForest.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pqramsey", description="Ramsey numbers of a path against stars, quasars, fans, cycles and wheels.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="evaluate a formula")
    p.add_argument("kind", choices=["star", "quasar", "fan", "cycle", "wheel"])
    p.add_argument("-n", type=int, required=True, help="path order")
    p.add_argument("-m", type=int, help="star leaves, cycle length or wheel rim")
    p.add_argument("-k", type=int, help="number of K_2 blades in a fan")
    p.add_argument("--forest", type=_forest, help='path orders, e.g. "3,2,2" or "4x2"')
    p.add_argument("--check", action="store_true", help="cross-check path-star values by all routes")

    p = sub.add_parser("witness", help="build and verify lower-bound witnesses")
    p.add_argument("-n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--star", type=int, metavar="M")
    group.add_argument("--forest", type=_forest)
    p.add_argument("--emit", choices=["graph6", "dot"], default="graph6")

    p = sub.add_parser("oracle", help="exact value by exhaustive search")
    p.add_argument("-n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--star", type=int, metavar="M")
    group.add_argument("--forest", type=_forest)
    group.add_argument("--cycle", type=int, metavar="M")
    group.add_argument("--wheel", type=int, metavar="M")
    group.add_argument("--path", type=int, metavar="M")
    p.add_argument("--cap", type=int, default=9, help="largest order searched (at most 10)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--log", metavar="FILE", help="append a JSON line per completed query")
    p.add_argument("--stable-output", action="store_true", help="omit timings")

    p = sub.add_parser("selfcheck", help="cross-check the path-star characterizations")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--m-max", type=int, default=40)

    p = sub.add_parser("table", help="print reference tables")
    p.add_argument("--scope", choices=["stars", "fans", "oracle", "all"], default="all")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--m-max", type=int, default=16)
    p.add_argument("--cap", type=int, default=9, help="oracle comparison covers values up to this")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("--log", metavar="FILE", help="reuse and extend oracle results in this log")
    p.add_argument("--workers", type=int, default=1)
    return parser


# -- compute ------------------------------------------------------------

def compute_answer(args: argparse.Namespace) -> RamseyAnswer:
    kind, n = args.kind, args.n
    if kind in ("star", "cycle", "wheel") and args.m is None:
        raise UsageError(f"compute {kind} needs -m")
    if kind == "star":
        return RamseyAnswer.exact(formulas.path_star(n, args.m, check=args.check), "path-star formula")
    if kind == "cycle":
        return RamseyAnswer.exact(formulas.path_cycle(n, args.m), "path-cycle formula")
    if kind == "wheel":
        return RamseyAnswer.exact(formulas.path_wheel(n, args.m), "path-wheel formula")
    if kind == "fan":
        if args.k is None:
            raise UsageError("compute fan needs -k")
        return formulas.path_fan(n, args.k)
    if args.forest is None:
        raise UsageError("compute quasar needs --forest")
    return formulas.path_quasar(n, args.forest)


def cmd_compute(args: argparse.Namespace, out) -> int:
    print(compute_answer(args), file=out)
    return EXIT_OK


# -- witness ------------------------------------------------------------

def cmd_witness(args: argparse.Namespace, out) -> int:
    if args.star is not None:
        reports = [("star witness", star_report(args.n, args.star))]
    else:
        reports = [(f"G{i}", rep) for i, rep in enumerate(quasar_reports(args.n, args.forest), 1)]
    ok = True
    for name, rep in reports:
        verdict = "valid" if rep.valid else (
            f"INVALID (contains P_{rep.n}: {not rep.no_path}, "
            f"complement contains target: {not rep.no_target_in_complement})"
        )
        ok &= rep.valid
        print(f"# {name}: {describe(rep.graph)}, order {rep.graph.order}, "
              f"claimed bound {rep.claimed_bound}, {verdict}", file=out)
        if args.emit == "dot":
            out.write(dot_export(rep.graph, name))
        else:
            print(graph6_encode(rep.graph).decode(), file=out)
    return EXIT_OK if ok else EXIT_INTERNAL


# -- oracle -------------------------------------------------------------

def target_from_args(args: argparse.Namespace) -> Target:
    if args.star is not None:
        return Star(args.star)
    if args.forest is not None:
        return Quasar(args.forest)
    if args.cycle is not None:
        return Cycle(args.cycle)
    if args.wheel is not None:
        return Wheel(args.wheel)
    return Path(args.path)


def format_oracle(res: OracleResult, stable: bool) -> str:
    g6 = graph6_encode(res.counterexample).decode()
    text = (f"R = {res.ramsey_value}, counterexample {g6} (graph6, {describe(res.counterexample)}), "
            f"examined {res.graphs_examined} graphs")
    if not stable:
        text += f", {res.elapsed:.3f}s"
    return text


def cmd_oracle(args: argparse.Namespace, out) -> int:
    target = target_from_args(args)
    try:
        res = ramsey_exact(args.n, target, args.cap, workers=args.workers, log=args.log)
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        if exc.counterexample is not None:
            print(f"largest counterexample: {graph6_encode(exc.counterexample).decode()} (graph6)", file=sys.stderr)
        return EXIT_CAPACITY
    print(format_oracle(res, args.stable_output), file=out)
    return EXIT_OK


# -- selfcheck ------------------------------------------------------------

def cmd_selfcheck(args: argparse.Namespace, out, routes: Optional[dict] = None) -> int:
    cells, mismatch = formulas.compare_routes(args.n_max, args.m_max, routes)
    if mismatch is not None:
        print(f"MISMATCH at {mismatch}", file=out)
        return EXIT_INTERNAL
    print(f"all {len(routes or formulas.STAR_ROUTES)} characterizations agree on {cells} cells", file=out)
    bad = formulas.sandwich_violations(args.n_max, args.m_max)
    if bad:
        n, m, t = bad[0]
        print(f"sandwich m+floor(n/2) <= t <= m+n-1 fails on {len(bad)} cells, first n={n}, m={m}, t={t}", file=out)
    else:
        print(f"sandwich m+floor(n/2) <= t <= m+n-1 holds on {cells} cells", file=out)
    row = all(formulas.t_closed(2, m) == m + 1 for m in range(2, args.m_max + 1))
    print(f"n=2 row equals m+1: {'yes' if row else 'NO'}", file=out)
    return EXIT_OK if row else EXIT_INTERNAL


# -- table ----------------------------------------------------------------

def _star_case(n: int, m: int) -> str:
    if m <= -(-n // 2):
        return "a"
    return "b" if m <= n else "c"


def _fan_case(n: int, k: int) -> str:
    m = 2 * k
    if m <= n:
        return "a"
    return "b" if m < 2 * n else "c"


def _grid(title: str, legend: str, col_name: str, rows: list, cols: list, cell) -> tuple[str, list[str], list[list[str]]]:
    header = ["n"] + [f"{col_name}={c}" for c in cols]
    body = [[str(r)] + [cell(r, c) for c in cols] for r in rows]
    return f"{title}\n{legend}", header, body


def oracle_rows(cap: int, n_max: int, log: Optional[str], workers: int) -> list[list[str]]:
    cached = {(rec["n"], rec["target"]): rec for rec in read_log(log)} if log else {}
    cells: list[tuple[int, Target, int]] = []
    for n in range(2, n_max + 1):
        for m in range(2, 4 * cap):
            if formulas.t_closed(n, m) <= cap:
                cells.append((n, Star(m), formulas.t_closed(n, m)))
        for k in range(1, 2 * cap):
            ans = formulas.path_fan(n, k)
            if ans.value <= cap:
                cells.append((n, Quasar(LinearForest.fan(k)), ans.value))
    rows = []
    for n, target, expected in cells:
        rec = cached.get((n, str(target)))
        if rec is None:
            res = ramsey_exact(n, target, cap, workers=workers)
            if log:
                append_log(log, res)
            rec = res.log_record()
        value = rec["value"]
        rows.append([str(n), str(target), str(expected), str(value),
                     "agree" if value == expected else "DISAGREE", rec["counterexample"]])
    return rows


def _render(title: str, header: list[str], body: list[list[str]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buf.getvalue()
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    lines = [title]
    for row in [header] + body:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def cmd_table(args: argparse.Namespace, out) -> int:
    sections = []
    ns = list(range(2, args.n_max + 1))
    if args.scope in ("stars", "all"):
        ms = list(range(2, args.m_max + 1))
        sections.append(_grid(
            "# R(P_n, K_1,m)",
            "# case a: m <= ceil(n/2) gives n; b: m <= n gives 2m-1; c: larger m",
            "m", ns, ms, lambda n, m: f"{formulas.t_closed(n, m)}{_star_case(n, m)}",
        ))
    if args.scope in ("fans", "all"):
        ks = list(range(1, args.m_max // 2 + 1))
        sections.append(_grid(
            "# R(P_n, K_1 + kK_2), forest on 2k vertices",
            "# case a: 2k <= n gives 2n-1; b: n < 2k < 2n gives 2k+n-2; c: 2k >= 2n gives t(n,2k)",
            "k", ns, ks, lambda n, k: f"{formulas.path_fan(n, k).value}{_fan_case(n, k)}",
        ))
    if args.scope in ("oracle", "all"):
        header = ["n", "target", "formula", "oracle", "status", "counterexample"]
        sections.append((f"# exhaustive search versus formulas, values <= {args.cap}", header,
                         oracle_rows(args.cap, min(args.n_max, args.cap), args.log, args.workers)))
    disagree = False
    for title, header, body in sections:
        disagree |= any("DISAGREE" in row for row in body)
        out.write(_render(title, header, body, args.format))
        if args.format == "text":
            out.write("\n")
    return EXIT_INTERNAL if disagree else EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "witness": cmd_witness,
    "oracle": cmd_oracle,
    "selfcheck": cmd_selfcheck,
    "table": cmd_table,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        print(f"pqramsey {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (WitnessConsistencyError, AssertionError) as exc:
        print(f"pqramsey {args.command}: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
