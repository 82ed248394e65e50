"""Command-line interface.

Subcommands: ops, map, classify, tables, measure, descend.  Every command
emits a single JSON document (stable key order, canonical scalar strings) so
the reports double as regression fixtures.  Exit codes: 0 all assertions
pass, 1 an assertion failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .classifier import class_bounds_check, descend_pearson
from .cubic_cases import (
    CASE_IDS,
    build_case,
    case_fixture,
    expected_phi_psi,
    inverse_reconstruct_case13,
    validate_case,
)
from .errors import QmapError
from .families import FAMILY_JACOBI, FAMILY_LAGUERRE, little_q_jacobi_pair, little_q_laguerre_pair
from .functionals import PearsonPair, pearson_moments, pearson_residual
from .measures import case13_measure, case1_measure, discrete_lift
from .opseq import orthogonality_check, recurrence_from_moments
from .scalars import QParam, embed_complex, format_scalar, parse_scalar
from .stieltjes import series_from_functional, stieltjes_residual, verify_susvq

USAGE_ERROR = 2
ASSERTION_ERROR = 1


def _qparam(text: str, N: int) -> QParam:
    return QParam(parse_scalar(text), max_order=max(64, 3 * N + 16))


def _worker_count() -> int:
    raw = os.environ.get("QMAP_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit(report: dict, output: str | None) -> None:
    text = json.dumps(report, indent=2)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _cmd_ops(args) -> int:
    q = _qparam(args.q, args.N)
    a = parse_scalar(args.a)
    if args.family == FAMILY_LAGUERRE:
        pair = little_q_laguerre_pair(a, q)
        params = {"a": format_scalar(a)}
    elif args.family == FAMILY_JACOBI:
        if args.b is None:
            print("error: --b is required for the jacobi family", file=sys.stderr)
            return USAGE_ERROR
        b = parse_scalar(args.b)
        pair = little_q_jacobi_pair(a, b, q)
        params = {"a": format_scalar(a), "b": format_scalar(b)}
    else:
        print(f"error: unknown family {args.family}", file=sys.stderr)
        return USAGE_ERROR
    u = pearson_moments(pair, parse_scalar(args.u0), args.N, q)
    residual = pearson_residual(u, pair, q)
    rec, ops = recurrence_from_moments(u, args.N // 2)
    orth = orthogonality_check(u, ops)
    report = {
        "command": "ops",
        "family": args.family,
        "params": params,
        "q": format_scalar(q.q),
        "N": args.N,
        "moments": u.to_strings(),
        "order": u.order,
        "recurrence": {"b": [format_scalar(v) for v in rec.b], "a": [format_scalar(v) for v in rec.a]},
        "polynomials": [p.to_strings() for p in ops],
        "pearson_residual_zero": not any(residual),
        "residual_entries": len(residual),
        "orthogonality_ok": orth.ok,
    }
    _emit(report, args.output)
    return 0 if report["pearson_residual_zero"] and orth.ok else ASSERTION_ERROR


def _case_and_q(args):
    q = _qparam(args.q, args.N)
    case = case_fixture(args.case, q)
    val = validate_case(case, q)
    return case, q, val


def _cmd_map(args) -> int:
    case, q, val = _case_and_q(args)
    if not val.ok:
        print("error: fixture invalid: " + "; ".join(val.failures), file=sys.stderr)
        return USAGE_ERROR
    bundle = build_case(case, q, args.N)
    from .mapping import verify_interleave

    il = verify_interleave(bundle.p_ops, bundle.mapping, bundle.q_ops_mapped, min(4, len(bundle.q_ops_mapped) - 2))
    report = {
        "command": "map",
        "case": case.id,
        "q": format_scalar(q.q),
        "mapping": bundle.mapping.to_dict(),
        "conditions_ok": bundle.mapping.conditions.ok,
        "interleave_ok": il.ok,
        "interleave_checked": il.checked,
    }
    _emit(report, args.output)
    return 0 if report["conditions_ok"] and il.ok else ASSERTION_ERROR


def _cmd_classify(args) -> int:
    case, q, val = _case_and_q(args)
    if not val.ok:
        print("error: fixture invalid: " + "; ".join(val.failures), file=sys.stderr)
        return USAGE_ERROR
    bundle = build_case(case, q, args.N)
    expected = expected_phi_psi(case, q)
    ok = (
        bundle.report.s == case.expected_class
        and bundle.report.phi == expected.phi
        and bundle.report.psi == expected.psi
    )
    report = {
        "command": "classify",
        "case": case.id,
        "q": format_scalar(q.q),
        "class": bundle.report.s,
        "expected_class": case.expected_class,
        "phi": bundle.report.phi.to_strings(),
        "psi": bundle.report.psi.to_strings(),
        "matches_expected_pair": ok,
        "reduction_trace": [g.to_strings() for g in bundle.report.trace],
    }
    _emit(report, args.output)
    return 0 if ok else ASSERTION_ERROR


def _run_table_entry(entry):
    cid, qtext, N = entry
    q = _qparam(qtext, N)
    case = case_fixture(cid, q)
    val = validate_case(case, q)
    if not val.ok:
        return {"case": cid, "q": qtext, "ok": False, "error": "; ".join(val.failures)}
    try:
        bundle = build_case(case, q, N)
    except QmapError as exc:
        return {"case": cid, "q": qtext, "ok": False, "error": str(exc)}
    expected = expected_phi_psi(case, q)
    Su = series_from_functional(bundle.u)
    residual = stieltjes_residual(bundle.acd, Su, q)
    susvq = verify_susvq(Su, series_from_functional(bundle.v), bundle.eta, 3, q)
    bounds = class_bounds_check(bundle.report.s, 0, 3)
    row = {
        "case": cid,
        "q": qtext,
        "class": bundle.report.s,
        "expected_class": case.expected_class,
        "class_ok": bundle.report.s == case.expected_class,
        "phi_ok": bundle.report.phi == expected.phi,
        "psi_ok": bundle.report.psi == expected.psi,
        "stieltjes_residual_zero": residual.is_zero,
        "residual_depth": residual.depth,
        "susvq_ok": susvq.ok,
        "bounds_ok": bounds.ok,
    }
    row["ok"] = all(row[k] for k in ("class_ok", "phi_ok", "psi_ok", "stieltjes_residual_zero", "susvq_ok", "bounds_ok"))
    if not row["ok"]:
        diffs = [k for k in ("class_ok", "phi_ok", "psi_ok", "stieltjes_residual_zero", "susvq_ok", "bounds_ok") if not row[k]]
        row["error"] = "failed: " + ", ".join(diffs)
    return row


def _cmd_tables(args) -> int:
    qs = args.q or ["1/2", "1/3"]
    entries = [(cid, qtext, args.N) for qtext in qs for cid in CASE_IDS]
    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_run_table_entry, entries))
    else:
        rows = [_run_table_entry(e) for e in entries]
    rows.sort(key=lambda r: (r["case"], r["q"]))
    all_ok = all(r["ok"] for r in rows)
    report = {"command": "tables", "q_values": qs, "N": args.N, "all_ok": all_ok, "cases": rows}
    _emit(report, args.output)
    return 0 if all_ok else ASSERTION_ERROR


def _cmd_measure(args) -> int:
    if args.case not in (1, 13):
        print("error: measure comparisons are provided for cases 1 and 13", file=sys.stderr)
        return USAGE_ERROR
    q = _qparam(args.q, args.N)
    if q.q.om or not 0 < q.q.re < 1:
        print("error: measure comparisons need rational q in (0,1)", file=sys.stderr)
        return USAGE_ERROR
    qf = float(q.q.re)
    case = case_fixture(args.case, q)
    bundle = build_case(case, q, args.N)
    if args.case == 1:
        measure = case1_measure(qf, args.L)
    else:
        a = float(Fraction(case.params["a"].re))
        c = float(Fraction(case.params["c"].re))
        measure = case13_measure(a, c, qf, args.L)
    n_max = min(10, bundle.u.order)
    numeric = discrete_lift(measure, bundle.eta, 1.0, n_max)
    rows = []
    worst = 0.0
    for n in range(n_max + 1):
        exact = embed_complex(bundle.u.moment(n))
        err = abs(numeric[n] - exact)
        worst = max(worst, err)
        rows.append(
            {
                "n": n,
                "exact": [exact.real, exact.imag],
                "numeric": [numeric[n].real, numeric[n].imag],
                "abs_err": err,
            }
        )
    ok = worst <= args.tol
    report = {
        "command": "measure",
        "case": args.case,
        "q": format_scalar(q.q),
        "L": args.L,
        "tol": args.tol,
        "max_abs_err": worst,
        "ok": ok,
        "moments": rows,
    }
    _emit(report, args.output)
    return 0 if ok else ASSERTION_ERROR


def _cmd_descend(args) -> int:
    case, q, val = _case_and_q(args)
    if not val.ok:
        print("error: fixture invalid: " + "; ".join(val.failures), file=sys.stderr)
        return USAGE_ERROR
    bundle = build_case(case, q, args.N)
    basis = [bundle.p_ops[j] for j in range(3)]
    pair_u = PearsonPair(bundle.report.phi, bundle.report.psi)
    pair_v = descend_pearson(pair_u, bundle.report.s, basis, 3, q, bundle.u, bundle.v)
    residual = pearson_residual(bundle.v, pair_v, q.pow(3))
    report = {
        "command": "descend",
        "case": case.id,
        "q": format_scalar(q.q),
        "class": bundle.report.s,
        "f0": pair_v.phi.to_strings(),
        "g0": pair_v.psi.to_strings(),
        "v_residual_zero": not any(residual),
    }
    if case.id == 13:
        rec = inverse_reconstruct_case13(case.params["a"], case.params["c"], case.params["tau"], q)
        report["reconstruction"] = {
            "r0": format_scalar(rec.r0),
            "b01": format_scalar(rec.b01),
            "b02": format_scalar(rec.b02),
            "a02": format_scalar(rec.a02),
        }
    _emit(report, args.output)
    return 0 if report["v_residual_zero"] else ASSERTION_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qmap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_case=True):
        p.add_argument("--q", required=True, help="q value, e.g. 1/2")
        p.add_argument("--N", type=int, default=48, help="target truncation order")
        p.add_argument("--output", help="also write the JSON report to this path")
        if with_case:
            p.add_argument("--case", type=int, required=True, choices=CASE_IDS)

    p_ops = sub.add_parser("ops", help="moments, recurrence and polynomials of a classical family")
    p_ops.add_argument("--family", required=True, choices=[FAMILY_LAGUERRE, FAMILY_JACOBI])
    p_ops.add_argument("--a", required=True, help="family parameter a")
    p_ops.add_argument("--b", help="family parameter b (jacobi)")
    p_ops.add_argument("--u0", default="1", help="normalization u_0")
    p_ops.add_argument("--q", required=True)
    p_ops.add_argument("--N", type=int, default=24)
    p_ops.add_argument("--output")
    p_ops.set_defaults(func=_cmd_ops)

    p_map = sub.add_parser("map", help="build the cubic mapping for a case and verify it")
    common(p_map)
    p_map.set_defaults(func=_cmd_map)

    p_cls = sub.add_parser("classify", help="class and canonical pair for a case")
    common(p_cls)
    p_cls.set_defaults(func=_cmd_classify)

    p_tab = sub.add_parser("tables", help="run all 13 cases at one or more q values")
    p_tab.add_argument("--q", action="append", help="repeatable; default 1/2 and 1/3")
    p_tab.add_argument("--N", type=int, default=48)
    p_tab.add_argument("--output")
    p_tab.set_defaults(func=_cmd_tables)

    p_mea = sub.add_parser("measure", help="discrete-measure moment comparison for cases 1 and 13")
    common(p_mea)
    p_mea.add_argument("--L", type=int, default=200, help="measure truncation")
    p_mea.add_argument("--tol", type=float, default=1e-10)
    p_mea.set_defaults(func=_cmd_measure)

    p_des = sub.add_parser("descend", help="transport the canonical pair down to the mapped functional")
    common(p_des)
    p_des.set_defaults(func=_cmd_descend)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, QmapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
