"""Command-line front end: ``cyclomat verify|search|det|pell|gamma-p``."""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys
from fractions import Fraction

from . import linalg, padic, pell, search, verify
from .chars import CharSpec
from .ff import field_of_order

MATRICES = ("bq", "dq+", "dq-", "carlitz+", "carlitz-", "chapman0", "chapman1", "sun")
ENGINES = ("auto", "modp", "exact", "complex")


class UsageError(Exception):
    pass


def _emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row, sort_keys=True) + "\n")
        return
    if not rows:
        return
    keys = sorted({k for r in rows for k in r})
    w = csv.DictWriter(out, fieldnames=keys, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v for k, v in r.items()})


def _open_out(path: str | None):
    return open(path, "w", encoding="utf-8") if path else sys.stdout


# ---------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    ids = list(verify.REGISTRY) if args.check == ["all"] else args.check
    unknown = [c for c in ids if c not in verify.REGISTRY]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}")
    jobs = verify.plan(ids, args.q_min, args.q_max, args.char_q_max)
    failed = False
    out = _open_out(args.out)
    fields = [f.name for f in dataclasses.fields(verify.CheckReport)]
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    if args.format == "csv":
        writer.writeheader()
    try:
        for rep in verify.run_suite(jobs, args.jobs or search.default_jobs()):
            failed |= rep.verdict == "fail"
            if args.format == "json":
                out.write(rep.to_json() + "\n")
            else:
                row = dataclasses.asdict(rep)
                writer.writerow({k: json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v for k, v in row.items()})
            out.flush()
    finally:
        if args.out:
            out.close()
    return 1 if failed else 0


# ---------------------------------------------------------------- search


def cmd_search(args) -> int:
    try:
        res = search.search(args.predicate, args.min, args.max, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = _open_out(args.out)
    try:
        _emit([res.to_dict()], args.format, out)
    finally:
        if args.out:
            out.close()
    return 0


# ---------------------------------------------------------------- det


def _char(F, spec: str) -> CharSpec:
    if spec == "quadratic":
        return CharSpec(F, F.n)
    try:
        k = int(spec)
    except ValueError as exc:
        raise UsageError(f"--char must be 'quadratic' or an integer, got {spec!r}") from exc
    psi = CharSpec(F, k)
    if psi.is_trivial:
        raise UsageError("--char must select a nontrivial character")
    return psi


def compute_det(matrix: str, q: int, m: int | None = None, char: str = "quadratic", engine: str = "auto") -> dict:
    """Build the selected matrix and evaluate its determinant; returns a tagged value."""
    if matrix not in MATRICES:
        raise UsageError(f"unknown matrix {matrix!r}")
    if engine not in ENGINES:
        raise UsageError(f"unknown engine {engine!r}")
    try:
        F = field_of_order(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if matrix in ("carlitz+", "carlitz-", "chapman0", "chapman1", "sun") and F.f != 1:
        raise UsageError(f"{matrix} needs a prime --q")

    if matrix == "bq":
        if m is None:
            raise UsageError("bq needs --m")
        if engine not in ("auto", "modp"):
            raise UsageError("bq lives over F_q; use the modp engine")
        M = linalg.build_bq(F, m)
        return {"matrix": matrix, "q": q, "m": m, "engine": "modp", "det": verify.encode(linalg.det_mod_p(M))}
    if matrix == "sun":
        if m is None:
            raise UsageError("sun needs --m")
        if engine not in ("auto", "modp"):
            raise UsageError("sun lives over F_p; use the modp engine")
        M = linalg.build_sun(q, m)
        return {"matrix": matrix, "p": q, "m": m, "engine": "modp", "det": verify.encode(linalg.det_mod_p(M))}
    if matrix.startswith("chapman"):
        if engine not in ("auto", "exact"):
            raise UsageError("chapman matrices are integral; use the exact engine")
        M = linalg.build_chapman(q, int(matrix[-1]))
        return {"matrix": matrix, "p": q, "engine": "exact", "det": verify.encode(linalg.det_exact(M))}

    psi = _char(F, char)
    sign = matrix[-1]
    M = linalg.build_dq(F, psi, sign) if matrix.startswith("dq") else linalg.build_carlitz(q, psi, sign)
    base = {"matrix": matrix, "q": q, "k": psi.k}
    if engine == "exact" or (engine == "auto" and psi.order <= 2):
        try:
            M_int = linalg.to_integer(M)
        except ValueError as exc:
            raise UsageError("exact engine needs a quadratic character (integer entries)") from exc
        return {**base, "engine": "exact", "det": verify.encode(linalg.det_exact(M_int))}
    if engine == "modp":
        raise UsageError("character matrices have no mod-p engine")
    return {**base, "engine": "complex", "det": verify.encode(linalg.det_complex(M))}


def cmd_det(args) -> int:
    _emit([compute_det(args.matrix, args.q, args.m, args.char, args.engine)], args.format, sys.stdout)
    return 0


# ---------------------------------------------------------------- pell / gamma


def cmd_pell(args) -> int:
    if args.index < 0 or args.mod < 1:
        raise UsageError("need --index >= 0 and --mod >= 1")
    try:
        pair = pell.pell_pair_mod(args.index, args.mod)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    row = {"index": pair.index, "modulus": str(pair.modulus), "P": str(pair.P), "Q": str(pair.Q)}
    _emit([row], args.format, sys.stdout)
    return 0


def cmd_gamma_p(args) -> int:
    try:
        x = Fraction(args.x)
        if x.denominator == 1:
            x = x.numerator
        val = padic.gamma_p(x, args.p, args.precision)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    row = {"p": val.p, "N": val.N, "x": args.x, "value": str(val.value), "modulus": str(val.modulus)}
    _emit([row], args.format, sys.stdout)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclomat", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("--check", nargs="+", default=["all"], help="check ids or 'all'")
    v.add_argument("--q-min", type=int, default=3)
    v.add_argument("--q-max", type=int, default=121)
    v.add_argument("--char-q-max", type=int, default=49)
    v.add_argument("--jobs", type=int, default=None)
    v.add_argument("--out", default=None)
    fmt(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="scan primes for a Pell congruence")
    s.add_argument("predicate", choices=sorted(pell.PREDICATES))
    s.add_argument("--min", type=int, default=7)
    s.add_argument("--max", type=int, default=search.DEFAULT_MAX)
    s.add_argument("--jobs", type=int, default=None)
    s.add_argument("--out", default=None)
    fmt(s)
    s.set_defaults(func=cmd_search)

    d = sub.add_parser("det", help="determinant of a single matrix")
    d.add_argument("--matrix", required=True, choices=MATRICES)
    d.add_argument("--q", type=int, required=True)
    d.add_argument("--m", type=int, default=None)
    d.add_argument("--char", default="quadratic")
    d.add_argument("--engine", choices=ENGINES, default="auto")
    fmt(d)
    d.set_defaults(func=cmd_det)

    pl = sub.add_parser("pell", help="(P_i, Q_i) modulo m")
    pl.add_argument("--index", type=int, required=True)
    pl.add_argument("--mod", type=int, required=True)
    fmt(pl)
    pl.set_defaults(func=cmd_pell)

    g = sub.add_parser("gamma-p", help="Morita's p-adic Gamma modulo p^N")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--x", required=True, help="integer or a/b with b | p - 1")
    g.add_argument("--precision", type=int, default=1)
    fmt(g)
    g.set_defaults(func=cmd_gamma_p)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cyclomat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
