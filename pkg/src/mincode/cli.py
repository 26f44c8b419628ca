"""``mincode`` command line.

Exit status: 0 success, 2 precondition failure, 3 enumeration cap exceeded,
1 anything else.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from mincode import constructions as cons
from mincode.analysis import analyze
from mincode.codes import LinearCode
from mincode.errors import MincodeError
from mincode.families import FAMILIES, family_parameters
from mincode.matfile import format_matrix, read_matrix, write_matrix
from mincode.report import dumps_flat, render
from mincode.reproduce import all_tables, reproduce

CONSTRUCTIONS = ("simplex", "solomon-stiffler", "even-weight", "dual-bch")


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise SystemExit(f"mincode: error: {args.command} {getattr(args, 'family', '')} requires {' '.join(missing)}")


def _u_list(values: Sequence[str] | None) -> list[int]:
    out: list[int] = []
    for v in values or []:
        out.extend(int(x) for x in v.replace(",", " ").split())
    return out


def _emit_code(C: LinearCode, out: str | None, comments: Sequence[str]) -> None:
    if out:
        write_matrix(C, out, comments)
    else:
        sys.stdout.write(format_matrix(C, comments))


def _say(args, text: str) -> None:
    # Matrix on stdout means the human summary goes to stderr.
    (sys.stdout if args.out else sys.stderr).write(text)


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "simplex":
        _need(args, "q", "m")
        C = cons.simplex(args.q, args.m)
    elif fam == "solomon-stiffler":
        _need(args, "k", "u")
        C = cons.solomon_stiffler(args.k, _u_list(args.u))
    elif fam == "even-weight":
        _need(args, "n")
        C = cons.even_weight_code(args.n)
    else:
        _need(args, "m")
        C = cons.dual_bch_trace(args.m)
    _emit_code(C, args.out, [C.name or fam])
    report = analyze(C, skip_minimality=True, cap=args.cap)
    _say(args, render(report, args.json))
    return 0


def _parse_values(text: str | None) -> list[int] | None:
    if text is None:
        return None
    return [int(x) for x in text.replace(",", " ").split()]


def cmd_extend(args) -> int:
    C = read_matrix(args.input)
    if args.self_orthogonal:
        if args.values is not None:
            raise SystemExit("mincode: error: --values cannot be combined with --self-orthogonal")
        res = cons.self_orthogonal_extend(C, cap=args.cap)
    else:
        res = cons.ab_violating_extend(C, _parse_values(args.values), cap=args.cap)
    if args.out:
        write_matrix(res.code, args.out, [res.code.name or "extension"])
    report = analyze(res.code, skip_minimality=args.skip_minimality, cap=args.cap, workers=args.jobs)
    report.n_prime, report.pad, report.predicted_distribution = res.n_prime, res.pad, res.predicted
    sys.stdout.write(render(report, args.json))
    return 0


def cmd_complement(args) -> int:
    C = read_matrix(args.input)
    res = cons.simplex_complement(C, args.h, cap=args.cap)
    if args.out:
        write_matrix(res.code, args.out, [res.code.name or "complement"])
    report = analyze(res.code, skip_minimality=args.skip_minimality, cap=args.cap, workers=args.jobs)
    report.complement_threshold_met = res.threshold_met
    sys.stdout.write(render(report, args.json))
    return 0


def cmd_analyze(args) -> int:
    C = read_matrix(args.input)
    report = analyze(C, skip_minimality=args.skip_minimality, cap=args.cap, workers=args.jobs)
    sys.stdout.write(render(report, args.json))
    return 0


def cmd_predict(args) -> int:
    params = {
        name: getattr(args, name)
        for name in ("q", "m", "k", "n", "h", "l", "t", "n1")
        if getattr(args, name) is not None
    }
    if args.u:
        params["u"] = _u_list(args.u)
    e = family_parameters(args.family, params)
    if args.json:
        doc = {
            "family": e.family, "q": e.q, "n": e.n, "k": e.k, "d": e.d, "w_max": e.w_max,
            "n_prime": e.n_prime, "pad": e.pad,
            "distribution": e.distribution.pairs() if e.distribution else None,
            "base": None if e.base is None else {"n": e.base.n, "k": e.base.k, "d": e.base.d, "w_max": e.base.w_max},
            "minimality_condition": e.minimality_condition,
            "notes": list(e.notes),
        }
        sys.stdout.write(dumps_flat(doc))
        return 0
    lines = [f"{e.family}: [{e.n},{e.k},{e.d}]_{e.q}, max weight {e.w_max}, n' = {e.n_prime}" + (f", pad {e.pad}" if e.pad else "")]
    if e.base is not None:
        b = e.base
        lines.append(f"base: [{b.n},{b.k},{b.d}]_{b.q}, max weight {b.w_max}")
    if e.distribution is not None:
        lines.append(f"weight enumerator: {e.distribution.enumerator()}")
    if e.minimality_condition:
        lines.append(f"condition: {e.minimality_condition}")
    lines.extend(f"note: {n}" for n in e.notes)
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_reproduce(args) -> int:
    tables = list(all_tables()) if args.table.lower() == "all" else [args.table]
    ok = True
    for t in tables:
        result = reproduce(t, jobs=args.jobs, extended=args.extended, emit=print)
        ok &= result.ok
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mincode", description="Construct and verify minimal linear codes over GF(q).")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, io_in=True, out=True, analysis=True):
        if io_in:
            sp.add_argument("--in", dest="input", required=True, metavar="PATH", help="generator matrix file")
        if out:
            sp.add_argument("--out", metavar="PATH", help="write the resulting generator matrix here")
        sp.add_argument("--json", action="store_true", help="machine-readable report")
        sp.add_argument("--cap", type=int, help="enumeration cap (default 2^22 or $MINCODE_CAP)")
        if analysis:
            sp.add_argument("--skip-minimality", action="store_true")
            sp.add_argument("--jobs", type=int, default=1, help="worker threads for enumeration")

    c = sub.add_parser("construct", help="build a code from a built-in family")
    c.add_argument("family", choices=CONSTRUCTIONS)
    c.add_argument("--q", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--u", action="append", help="subspace dimension (repeatable or comma separated)")
    c.add_argument("--n", type=int)
    common(c, io_in=False, analysis=False)
    c.set_defaults(func=cmd_construct)

    e = sub.add_parser("extend", help="extension to a minimal code violating the AB condition")
    e.add_argument("--self-orthogonal", action="store_true", help="pad until the Gram matrix vanishes")
    e.add_argument("--values", help="comma separated nonzero entries for the new coordinates")
    common(e)
    e.set_defaults(func=cmd_extend)

    s = sub.add_parser("complement", help="simplex complement of a projective code")
    s.add_argument("--h", type=int, default=0, help="number of appended zero coordinates")
    common(s)
    s.set_defaults(func=cmd_complement)

    a = sub.add_parser("analyze", help="full verification report")
    common(a, out=False)
    a.set_defaults(func=cmd_analyze)

    pr = sub.add_parser("predict", help="closed-form parameters of a family")
    pr.add_argument("family", help=", ".join(FAMILIES))
    for name in ("q", "m", "k", "n", "h", "l", "t", "n1"):
        pr.add_argument(f"--{name}", type=int)
    pr.add_argument("--u", action="append")
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(func=cmd_predict)

    r = sub.add_parser("reproduce", help="run an embedded fixture table")
    r.add_argument("--table", required=True, help="table id or alias, or 'all'")
    r.add_argument("--jobs", type=int, default=1)
    r.add_argument("--extended", action="store_true", help="also run rows marked extended")
    r.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MincodeError as exc:
        print(f"mincode: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"mincode: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
