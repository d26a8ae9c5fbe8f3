"""Command line front end: ``coxkrew {tables,verify,css,orbits}``.

Exit codes: 0 success, 1 an identity failed, 2 bad configuration, 3 a size
or chain budget was exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from . import kreweras as K
from .coxeter import DEFAULT_CHAIN_BUDGET, SizeLimit, build_group, count_fixed_chains, enumerate_nc_chains
from .partitions import enumerate_bipartitions, pair_stats
from .qlaurent import NonConstant, NotDivisible, QRational
from .springer_bc import (collapse_C, critical_values, enumerate_omega, iota, level_stratum_sum_check,
                          orbit_count_exotic, kreweras_via_orbit, phi_C)
from .types import CoxeterType, irreducible_labels, parabolic_classes

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_LIMIT = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


# -- argument handling -------------------------------------------------------------------------

def _t_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("expected LO..HI")
    lo_i, hi_i = int(lo), int(hi)
    if lo_i < 1 or hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"empty or nonpositive range {text}")
    return list(range(lo_i, hi_i + 1))


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxkrew", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", choices=["a", "bc", "h3", "i2"], dest="family")
    common.add_argument("--rank", type=_positive, help="Coxeter rank (type A_N acts on N+1 letters)")
    common.add_argument("--m", type=int, help="dihedral parameter for i2")
    tg = common.add_mutually_exclusive_group()
    tg.add_argument("--t", type=_positive)
    tg.add_argument("--t-range", type=_t_range)
    common.add_argument("--s", type=_positive)
    common.add_argument("--symbolic", action="store_true")
    common.add_argument("--format", choices=["json", "csv", "latex"], default="json")
    common.add_argument("--budget", type=_positive,
                        default=int(os.environ.get("COXKREW_BUDGET", DEFAULT_CHAIN_BUDGET)))
    common.add_argument("--jobs", type=_positive, default=1)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    for name, helptext in [("tables", "Kreweras tables"), ("verify", "integrality, positivity and refinement checks"),
                           ("css", "cyclic sieving census"), ("orbits", "type BC orbit data")]:
        sub.add_parser(name, parents=[common], help=helptext)
    return p


def coxeter_type(args) -> CoxeterType:
    fam = args.family
    if fam is None:
        raise ConfigError("--type is required")
    try:
        if fam == "h3":
            return CoxeterType.H3()
        if fam == "i2":
            if args.m is None:
                raise ConfigError("--m is required for i2")
            return CoxeterType.I2(args.m)
        if args.rank is None:
            raise ConfigError("--rank is required")
        return CoxeterType.A(args.rank + 1) if fam == "a" else CoxeterType.BC(args.rank)
    except ValueError as e:
        raise ConfigError(str(e)) from e


def _ts(args, default: list[int]) -> list[int]:
    if args.t is not None:
        return [args.t]
    if args.t_range is not None:
        return args.t_range
    return default


# -- rendering ---------------------------------------------------------------------------------

def value_str(r: QRational) -> str:
    p = r.try_normalize()
    return str(p) if p is not None else f"({r.numerator}) / ({r.denominator})"


def render(meta: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"meta": meta, "rows": rows}, indent=2, ensure_ascii=False) + "\n"
    if not rows:
        return ""
    cols = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    body = "\n".join(" & ".join(str(r[c]) for c in cols) + r" \\" for r in rows)
    return ("\\begin{tabular}{|" + "c|" * len(cols) + "}\n\\hline\n" + " & ".join(cols) + r" \\" + "\n\\hline\n"
            + body + "\n\\hline\n\\end{tabular}\n")


def _pmap(fn: Callable, cells: list, jobs: int) -> list:
    if jobs <= 1 or len(cells) <= 1:
        return [fn(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, cells))


# -- tables ------------------------------------------------------------------------------------

def _parabolic_of(T: CoxeterType) -> dict:
    return {K.phi(T, P): P for P in parabolic_classes(T)}


def table_rows(T: CoxeterType, t: int) -> list[dict]:
    inv = _parabolic_of(T)
    rows = []
    for chi in irreducible_labels(T):
        val = K.kreweras_any_t(T, chi, t)
        p = val.try_normalize()
        rows.append({
            "t": t,
            "label": str(chi),
            "kreweras": value_str(val),
            "level": K.level(T, chi),
            "parabolic": str(inv[chi]) if chi in inv else "-",
            "positive": bool(p is not None and p.is_nonnegative()),
            "in_image": K.in_image_phi(T, chi),
        })
    return rows


def symbolic_rows(T: CoxeterType) -> list[dict]:
    if T.family == "H3":
        items = [(row.label_tex, row, {}) for row in K.H3_TABLE.values()]
    elif T.family == "I2":
        items = [(row.label_tex, row, {"m": T.m}) for _, row in K.i2_table(T.m, symbolic=True)]
    else:
        raise ConfigError("--symbolic is available for h3 and i2 only")
    return [{"label": lab, "kreweras": row.formula.render(env), "qv": row.qv.render(env),
             "parabolic": row.parabolic_tex.replace("(m)", f"({T.m})") if env else row.parabolic_tex}
            for lab, row, env in items]


def symbolic_latex_rows(T: CoxeterType) -> list[str]:
    """LaTeX table rows with ``m`` left symbolic."""
    if T.family == "H3":
        rows = list(K.H3_TABLE.values())
    else:
        rows = [row for _, row in K.i2_table(T.m, symbolic=True)]
    return [" & ".join([r.label_tex, r.formula.render(), r.qv.render(), r.parabolic_tex]) for r in rows]


def cmd_tables(args) -> tuple[dict, list[dict], int]:
    T = coxeter_type(args)
    meta = {"command": "tables", "type": str(T)}
    if args.symbolic:
        return meta, symbolic_rows(T), EXIT_OK
    ts = _ts(args, [T.coxeter_number + 1])
    meta["t"] = ts
    rows = [r for chunk in _pmap(_table_cell, [(T, t) for t in ts], args.jobs) for r in chunk]
    return meta, rows, EXIT_OK


def _table_cell(cell):
    return table_rows(*cell)


# -- verify ------------------------------------------------------------------------------------

def default_verify_grid(T: CoxeterType) -> list[int]:
    """Very good ``t`` only; pass ``--t`` or ``--t-range`` to probe the rest."""
    if T.family == "A":
        return [t for t in range(1, 26) if K.is_very_good(T, t)]
    if T.family == "BC":
        return list(range(1, 22, 2))
    if T.family == "H3":
        return [11, 15, 19, 21, 25, 29, 31]
    return [t for t in range(1, 3 * T.m + 2) if t % T.m in (1, T.m - 1)]


def verify_cell(cell) -> list[dict]:
    T, t = cell
    out = []
    vg = K.is_very_good(T, t)

    def row(suite, ok, detail="", expected=False):
        status = "pass" if ok else ("expected" if expected else "fail")
        out.append({"suite": suite, "type": str(T), "t": t, "status": status, "detail": detail})

    # integrality and positivity
    bad_int, bad_pos, zeros = [], [], []
    for chi in irreducible_labels(T):
        try:
            p = K.kreweras_poly(T, chi, t)
        except NotDivisible:
            bad_int.append(str(chi))
            continue
        if not p.is_polynomial():
            bad_int.append(str(chi))
        elif p.is_zero():
            zeros.append(str(chi))
        elif p.is_nonnegative() != K.in_image_phi(T, chi):
            bad_pos.append(str(chi))
    note = "expected: t not very good" if not vg else ""
    row("integrality", not bad_int,
        "; ".join(filter(None, [note, bad_int and "NotDivisible: " + ", ".join(bad_int)])), expected=not vg)
    pos_detail = ", ".join(bad_pos[:1]) + (f" zero values: {', '.join(zeros)}" if zeros else "")
    row("positivity", not bad_pos, pos_detail.strip() or note, expected=not vg)
    fails = K.refinement_failures(T, t)
    cat_at_one = K.catalan(T, t).try_normalize()
    row("refinement", not fails, f"levels {fails}" if fails else
        (f"sum Nar = Cat = {cat_at_one.eval_at_one()} at q=1" if cat_at_one is not None else ""))
    row("catalan_sum", K.catalan_sum_check(T, t))
    if T.family == "BC" and t % 2:
        mism = [str(b) for b in enumerate_bipartitions(T.n) if kreweras_via_orbit(b, t) != K.kreweras(T, b, t)]
        row("bc_cross", not mism, ", ".join(mism[:1]))
    return out


def _verify_types(args) -> list[CoxeterType]:
    if args.family is not None and (args.rank is not None or args.m is not None or args.family == "h3"):
        return [coxeter_type(args)]
    fams = [args.family] if args.family else ["a", "bc", "h3", "i2"]
    out: list[CoxeterType] = []
    for f in fams:
        if f == "a":
            out += [CoxeterType.A(n) for n in range(2, 9)]
        elif f == "bc":
            out += [CoxeterType.BC(n) for n in range(1, 7)]
        elif f == "h3":
            out.append(CoxeterType.H3())
        else:
            out += [CoxeterType.I2(m) for m in range(3, 13)]
    return out


def cmd_verify(args) -> tuple[dict, list[dict], int]:
    types = _verify_types(args)
    cells = [(T, t) for T in types for t in _ts(args, default_verify_grid(T))]
    rows = [r for chunk in _pmap(verify_cell, cells, args.jobs) for r in chunk]
    failed = [r for r in rows if r["status"] == "fail"]
    meta = {"command": "verify", "cells": len(cells), "failures": len(failed)}
    return meta, rows, EXIT_FAIL if failed else EXIT_OK


# -- css -------------------------------------------------------------------------------------

DEFAULT_S = {"A": 3, "BC": 2, "H3": 3, "I2": 4}


def css_cell(cell) -> list[dict]:
    T, s, budget = cell
    G = build_group(T)
    chains = enumerate_nc_chains(G, s, budget)
    sh = s * G.h
    rows = []
    for d in (d for d in range(1, sh + 1) if sh % d == 0):
        for P in parabolic_classes(T):
            census = count_fixed_chains(G, s, d, P, chains)
            try:
                value = K.specialize(T, K.phi(T, P), sh + 1, d)
            except NonConstant as e:
                value = f"non-integer: {e.remainder}"
            rows.append({"class": str(P), "s": s, "d": d, "census": census,
                         "specialized": value, "equal": census == value})
    return rows


def cmd_css(args) -> tuple[dict, list[dict], int]:
    T = coxeter_type(args)
    ss = [args.s] if args.s else list(range(1, DEFAULT_S[T.family] + 1))
    rows = [r for chunk in _pmap(css_cell, [(T, s, args.budget) for s in ss], args.jobs) for r in chunk]
    bad = [r for r in rows if not r["equal"]]
    return {"command": "css", "type": str(T), "s": ss, "mismatches": len(bad)}, rows, EXIT_FAIL if bad else EXIT_OK


# -- orbits ----------------------------------------------------------------------------------

def cmd_orbits(args) -> tuple[dict, list[dict], int]:
    if args.rank is None:
        raise ConfigError("--rank is required")
    if args.family not in (None, "bc"):
        raise ConfigError("orbits is a type BC command")
    n = args.rank
    if n > 8:
        raise ConfigError("orbits enumerates Omega; keep --rank <= 8")
    rows = []
    for w in enumerate_omega(n):
        b = iota(w)
        rows.append({"lambda": str(w.lam), "kappa": ",".join(f"{r}:{k}" for r, k in w.kappa),
                     "iota": str(b), "level": pair_stats(b).l,
                     "critical": ",".join(map(str, sorted(critical_values(w)))),
                     "orbit_count": str(orbit_count_exotic(b)), "phi_C": str(phi_C(b)),
                     "collapse": str(collapse_C(b))})
    ok = all(level_stratum_sum_check(n, k) for k in range(n + 1))
    return {"command": "orbits", "n": n, "level_sums_match": ok}, rows, EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"tables": cmd_tables, "verify": cmd_verify, "css": cmd_css, "orbits": cmd_orbits}


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as e:
        return int(e.code or 0)
    try:
        meta, rows, code = COMMANDS[args.command](args)
        if args.command == "tables" and args.symbolic and args.format == "latex":
            T = coxeter_type(args)
            text = "\n".join(r + r" \\" for r in symbolic_latex_rows(T)) + "\n"
        else:
            text = render(meta, rows, args.format)
    except ConfigError as e:
        print(f"coxkrew: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except SizeLimit as e:
        print(f"coxkrew: {e}", file=sys.stderr)
        return EXIT_LIMIT
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
