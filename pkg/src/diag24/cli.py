"""Command-line interface.

Exit codes: 0 success / property holds, 1 property fails (or methods
disagree), 2 usage or domain error, 3 inconclusive bounded search.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import os
import sys

from . import primes as P
from .errors import Diag24Error, Inconclusive, TheoremViolation
from .modring import make_ring
from .proofs import (
    verify_proof_bertrand,
    verify_proof_crt,
    verify_proof_dirichlet,
    verify_proof_erdos,
    verify_proof_unit_structure,
    verify_proposition_equivalence,
)
from .tables_cubes import (
    TABLE_SCAN_CAP,
    check_diagonal_table,
    check_diagonal_units,
    cube_check,
    cube_scan,
    format_table_csv,
    format_table_json,
    format_table_text,
    render_table,
)
from .unit_group import check_diagonal_structural, is_f2_vector_space, unit_group_structure

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
SIEVE_ENV = "DIAG24_SIEVE_LIMIT"
UNIT_LIST_CAP = 10**6

CHECKERS = {
    "brute": check_diagonal_table,
    "units": check_diagonal_units,
    "structural": check_diagonal_structural,
}


class Output:
    """What a subcommand produced, rendered once at the end."""

    def __init__(self, data, text: str, rows=None, code: int = EXIT_OK):
        self.data, self.text, self.rows, self.code = data, text, rows, code

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data) + "\n"
        if fmt == "csv":
            if isinstance(self.rows, str):
                return self.rows
            rows = self.rows if self.rows is not None else _dict_rows(self.data)
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerows(rows)
            return buf.getvalue()
        return self.text if self.text.endswith("\n") else self.text + "\n"


def _dict_rows(data: dict):
    for k, v in data.items():
        yield [k, json.dumps(v) if isinstance(v, (list, dict)) else v]


def _bool(b) -> str:
    return str(b).lower()


def _report_text(rep) -> str:
    if rep.holds:
        return f"n={rep.n} holds=true method={rep.method}"
    a, b = rep.witness
    return f"n={rep.n} holds=false witness=({a}, {b}) method={rep.method}  # {a}*{b} = {a * b} = 1 mod {rep.n}"


def cmd_table(args, table_limit):
    tab = render_table(make_ring(args.n))
    return Output(
        json.loads(format_table_json(tab)),
        format_table_text(tab),
        rows=format_table_csv(tab),
    )


def cmd_check(args, table_limit):
    if args.method != "all":
        rep = CHECKERS[args.method](args.n)
        return Output(rep.to_dict(), _report_text(rep), code=EXIT_OK if rep.holds else EXIT_FAIL)
    methods = ["units", "structural"] + (["brute"] if args.n <= TABLE_SCAN_CAP else [])
    reps = [CHECKERS[m](args.n) for m in methods]
    agree = len({r.holds for r in reps}) == 1
    text = "\n".join(_report_text(r) for r in reps) + f"\nagree={_bool(agree)}"
    data = {"n": args.n, "agree": agree, "reports": [r.to_dict() for r in reps]}
    code = EXIT_OK if agree and reps[0].holds else EXIT_FAIL
    return Output(data, text, rows=[[r.method, r.holds, *(r.witness or ())] for r in reps], code=code)


def cmd_scan(args, table_limit):
    lo, hi = args.min, args.max
    make_ring(hi)
    if args.method == "all":
        holding, disagree = [], []
        for n in range(lo, hi + 1):
            verdicts = {check_diagonal_units(n).holds, check_diagonal_structural(n).holds}
            if n <= TABLE_SCAN_CAP:
                verdicts.add(check_diagonal_table(n).holds)
            if len(verdicts) > 1:
                disagree.append(n)
            elif verdicts.pop():
                holding.append(n)
        data = {"min": lo, "max": hi, "method": "all", "holds": holding, "disagreements": disagree}
        text = " ".join(map(str, holding))
        if disagree:
            text += "\ndisagreements: " + " ".join(map(str, disagree))
        return Output(data, text, rows=[[n] for n in holding], code=EXIT_FAIL if disagree else EXIT_OK)
    check = CHECKERS[args.method]
    holding = [n for n in range(lo, hi + 1) if check(n).holds]
    data = {"min": lo, "max": hi, "method": args.method, "holds": holding}
    return Output(data, " ".join(map(str, holding)), rows=[[n] for n in holding])


def cmd_units(args, table_limit):
    ring = make_ring(args.n)
    s = unit_group_structure(args.n)
    f2 = is_f2_vector_space(args.n)
    us = ring.units() if args.n <= UNIT_LIST_CAP else None
    data = {"n": args.n, "units": us, **s.to_dict(), "f2_vector_space": f2}
    lines = [
        "units: " + (" ".join(map(str, us)) if us is not None else f"(not listed above n={UNIT_LIST_CAP})"),
        "structure: " + " + ".join(f"C{c}" for c in s.cyclic_orders),
        f"order: {s.order}",
        f"exponent: {s.exponent}",
        f"f2_vector_space: {_bool(f2)}",
    ]
    return Output(data, "\n".join(lines))


def cmd_primes(args, table_limit):
    what = args.what
    if what == "dirichlet":
        q = P.DirichletQuery(args.q, args.r, avoid=args.avoid, bound=args.bound, above=args.above)
        tab = P.shared_table(table_limit if q.bound is None else max(q.bound, 2))
        p = P.dirichlet_witness(tab, q)
        bound = tab.limit if q.bound is None else q.bound
        data = {"q": q.q, "r": q.r, "avoid": q.avoid, "above": q.above, "bound": bound, "prime": p}
        if p is None:
            return Output(data, f"inconclusive: no prime found up to {bound}", code=EXIT_INCONCLUSIVE)
        return Output(data, str(p))
    tab = P.shared_table(table_limit)
    if what == "pi":
        val = P.pi(tab, args.x)
        return Output({"x": args.x, "pi": val}, str(val))
    if what == "bertrand":
        p = P.bertrand_witness(tab, args.n)
        return Output({"n": args.n, "prime": p}, str(p))
    if what == "erdos":
        ps = P.erdos_witnesses(tab, args.n)
        return Output({"n": args.n, "primes": list(ps)}, f"{ps[0]} {ps[1]}")
    if what == "ramanujan":
        rs = P.ramanujan_primes(tab, args.count)
        return Output({"count": args.count, "ramanujan_primes": rs}, " ".join(map(str, rs)), rows=[rs])
    if what == "nondividing":
        p = P.smallest_nondividing_prime(tab, args.n)
        return Output({"n": args.n, "prime": p}, str(p))
    raise AssertionError(what)


def cmd_verify(args, table_limit):
    which = args.which
    if which == "crt":
        v = verify_proof_crt(args.limit)
    elif which == "dirichlet":
        v = verify_proof_dirichlet(args.n, args.bound or table_limit)
    elif which == "units":
        v = verify_proof_unit_structure(args.max_prime_power)
    elif which == "bertrand":
        v = verify_proof_bertrand(args.scan_limit)
    elif which == "erdos":
        v = verify_proof_erdos(args.scan_limit)
    else:
        v = verify_proposition_equivalence(args.n, args.prime_bound)
    lines = [f"proof: {v.proof_id}"]
    for s in v.steps:
        lines.append(f"[{'ok' if s.checked else 'FAIL'}] {s.description}")
        lines.append("      " + json.dumps(s.evidence))
    lines.append(f"overall: {_bool(v.overall)}" + (" (inconclusive)" if v.inconclusive else ""))
    rows = [["description", "checked", "evidence"]] + [
        [s.description, s.checked, json.dumps(s.evidence)] for s in v.steps
    ]
    code = EXIT_INCONCLUSIVE if v.inconclusive else (EXIT_OK if v.overall else EXIT_FAIL)
    return Output(v.to_dict(), "\n".join(lines), rows=rows, code=code)


def cmd_cube(args, table_limit):
    if args.scan:
        if args.n is not None:
            raise _Usage("cube takes either --n or --scan, not both")
        hs = cube_scan(args.max)
        return Output({"max": args.max, "holds": hs}, " ".join(map(str, hs)), rows=[[n] for n in hs])
    if args.n is None:
        raise _Usage("cube needs --n or --scan")
    rep = cube_check(args.n)
    if rep.holds:
        text = f"n={rep.n} holds=true"
    else:
        i, j, k = rep.witness
        text = f"n={rep.n} holds=false witness=({i}, {j}, {k})"
    return Output(rep.to_dict(), text, code=EXIT_OK if rep.holds else EXIT_FAIL)


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    # SUPPRESS keeps subparser defaults from clobbering top-level values
    fmt.add_argument("--format", choices=("text", "csv", "json"), default=argparse.SUPPRESS)
    fmt.add_argument("--json", dest="format", action="store_const", const="json", default=argparse.SUPPRESS)
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv", default=argparse.SUPPRESS)
    common.add_argument(
        "--sieve-limit", type=int, default=argparse.SUPPRESS,
        help=f"prime sieve bound (default: ${SIEVE_ENV} or {P.DEFAULT_SIEVE_LIMIT})",
    )

    parser = argparse.ArgumentParser(
        prog="diag24",
        description="Multiplication tables of Z_n with 1's only on the diagonal.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="render the multiplication table of Z_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", parents=[common], help="decide the diagonal property for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("brute", "units", "structural", "all"), default="structural")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", parents=[common], help="list every n in a range with the property")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--min", type=int, default=1)
    p.add_argument("--method", choices=("brute", "units", "structural", "all"), default="structural")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("units", parents=[common], help="units of Z_n and the structure of R_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_units)

    p = sub.add_parser("primes", parents=[common], help="prime queries")
    psub = p.add_subparsers(dest="what", required=True)
    q = psub.add_parser("pi", parents=[common])
    q.add_argument("--x", type=int, required=True)
    for name in ("bertrand", "erdos", "nondividing"):
        q = psub.add_parser(name, parents=[common])
        q.add_argument("--n", type=int, required=True)
    q = psub.add_parser("ramanujan", parents=[common])
    q.add_argument("--count", type=int, default=5)
    q = psub.add_parser("dirichlet", parents=[common])
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--avoid", type=int, default=1)
    q.add_argument("--bound", type=int, default=None)
    q.add_argument("--above", type=int, default=0)
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("verify", parents=[common], help="replay one proof of the theorem")
    vsub = p.add_subparsers(dest="which", required=True)
    q = vsub.add_parser("crt", parents=[common])
    q.add_argument("--limit", type=int, default=5000)
    q = vsub.add_parser("dirichlet", parents=[common])
    q.add_argument("--n", type=int, default=24)
    q.add_argument("--bound", type=int, default=None)
    q = vsub.add_parser("units", parents=[common])
    q.add_argument("--max-prime-power", type=int, default=10**4)
    for name, default in (("bertrand", 10**5), ("erdos", 10**5)):
        q = vsub.add_parser(name, parents=[common])
        q.add_argument("--scan-limit", type=int, default=default)
    q = vsub.add_parser("proposition", parents=[common])
    q.add_argument("--n", type=int, default=24)
    q.add_argument("--prime-bound", type=int, default=10**4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cube", parents=[common], help="multiplication cubes")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--scan", action="store_true")
    p.add_argument("--max", type=int, default=300)
    p.set_defaults(func=cmd_cube)
    return parser


def _sieve_limit(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(SIEVE_ENV)
    return int(env) if env else P.DEFAULT_SIEVE_LIMIT


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        out = args.func(args, _sieve_limit(getattr(args, "sieve_limit", None)))
    except _Usage as e:
        print(f"diag24: error: {e}", file=stderr)
        return EXIT_USAGE
    except Inconclusive as e:
        print(f"diag24: inconclusive: {e}", file=stderr)
        return EXIT_INCONCLUSIVE
    except TheoremViolation as e:
        print(f"diag24: theorem violation: {e}", file=stderr)
        return EXIT_FAIL
    except (Diag24Error, ValueError) as e:
        print(f"diag24: error: {e}", file=stderr)
        return EXIT_USAGE
    stdout.write(out.render(getattr(args, "format", "text")))
    return out.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
