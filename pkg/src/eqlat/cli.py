"""Command line interface.

Exit codes: 0 on success, 1 on domain errors or verification failures, 2 on
usage errors.  Machine output is one JSON document per invocation with every
integer rendered as a decimal string.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import catalog, ehrhart, frame, oracle
from .intmath import gcd_nonneg
from .lattice import Triple, generators, plane_basis


def _stringify(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    return value


def _vec(v) -> list[int]:
    return list(v.as_tuple())


def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format",
        choices=["human", "machine"],
        default="human",
        help="output style (default: human)",
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="eqlat",
        description="Ehrhart polynomials of equilateral lattice triangles in Z^3",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("triples", help="list canonical triples for a radius")
    sp.add_argument("d", type=int)
    _add_format(sp)

    sp = sub.add_parser("frame", help="frame, basis and invariant checks for a plane")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("c", type=int)
    _add_format(sp)

    sp = sub.add_parser("ehrhart", help="counting polynomial of the (m, n) triangle")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("c", type=int)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--n", type=int, default=0)
    _add_format(sp)

    sp = sub.add_parser("count", help="oracle count of a dilated triangle versus the formula")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("c", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("t", type=int)
    sp.add_argument("--inflate-check", action="store_true", help="re-scan with a widened box")
    _add_format(sp)

    sp = sub.add_parser("table1", help="catalog rows for all radii up to d_max")
    sp.add_argument("d_max", type=int)
    _add_format(sp)

    sp = sub.add_parser("ed", help="distinct polynomials of minimal triangles for a radius")
    sp.add_argument("d", type=int)
    _add_format(sp)

    sp = sub.add_parser("verify", help="formula-versus-oracle campaign")
    sp.add_argument("d_max", type=int)
    sp.add_argument("mn_list", type=str, help='pairs like "(1,0),(2,1)"')
    sp.add_argument("t_max", type=int)
    sp.add_argument("--parallel", type=int, default=1, metavar="N")
    _add_format(sp)

    return p


def _parse_mn_list(text: str) -> list[tuple[int, int]]:
    pairs = re.findall(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", text)
    if not pairs or not re.fullmatch(r"\s*(\(\s*-?\d+\s*,\s*-?\d+\s*\)\s*,?\s*)+", text):
        raise ValueError(f'cannot parse (m, n) list from {text!r}')
    return [(int(m), int(n)) for m, n in pairs]


def cmd_triples(args) -> tuple[dict, list, list[str]]:
    ts = frame.enumerate_triples(args.d)
    results = {"d": args.d, "count": len(ts), "triples": [list(t.abc()) for t in ts]}
    human = [f"d = {args.d}: {len(ts)} triple(s)"]
    human += [f"  {t.a} {t.b} {t.c}" for t in ts]
    return results, [], human


def cmd_frame(args) -> tuple[dict, list, list[str]]:
    t = Triple.from_abc(args.a, args.b, args.c)
    f = frame.build_frame(t)
    gens = generators(t)
    basis = plane_basis(t)
    ab = frame.solve_alpha_beta(f, basis)
    checks = frame.check_frame_vectors(t, f.e1, f.e2)
    diag = frame.rs_structure(f)
    results = {
        "triple": list(t.abc()),
        "d": t.d,
        "r": f.r,
        "s": f.s,
        "q": f.q,
        "omega": f.omega,
        "r_red": f.r_red,
        "s_red": f.s_red,
        "e1": _vec(f.e1),
        "e2": _vec(f.e2),
        "perp": _vec(f.perp),
        "u": _vec(gens.u),
        "v": _vec(gens.v),
        "w": _vec(gens.w),
        "bezout_k": gens.bezout_k,
        "bezout_l": gens.bezout_l,
        "tau": _vec(basis.tau),
        "alpha": ab.alpha,
        "beta": ab.beta,
        "tau_sign": ab.tau_sign,
        "checks": checks,
        "rs_diagnostic": diag,
    }
    human = [f"triple ({t.a}, {t.b}, {t.c}), d = {t.d}"]
    for key in ("r", "s", "q", "omega", "r_red", "s_red"):
        human.append(f"  {key} = {results[key]}")
    for key in ("e1", "e2", "perp", "u", "v", "w", "tau"):
        human.append(f"  {key} = {tuple(results[key])}")
    human.append(f"  bezout (k, l) = ({gens.bezout_k}, {gens.bezout_l})")
    human.append(f"  alpha = {ab.alpha}, beta = {ab.beta}, tau_sign = {ab.tau_sign}")
    human.append("  checks: " + ", ".join(f"{k}={v}" for k, v in checks.items()))
    human.append("  rs structure: " + ", ".join(f"{k}={v}" for k, v in diag.items()))
    failures = [f"invariant check failed: {k}" for k, v in checks.items() if not v]
    return results, failures, human


def cmd_ehrhart(args) -> tuple[dict, list, list[str]]:
    t = Triple.from_abc(args.a, args.b, args.c)
    poly = ehrhart.ehrhart_poly(t, args.m, args.n)
    results = {
        "triple": list(t.abc()),
        "d": t.d,
        "m": args.m,
        "n": args.n,
        "quad_num": poly.quad_num,
        "lin_num": poly.lin_num,
        "polynomial": poly.render(),
    }
    human = [
        f"triple ({t.a}, {t.b}, {t.c}), d = {t.d}, (m, n) = ({args.m}, {args.n})",
        f"  (A, B) = ({poly.quad_num}, {poly.lin_num})",
        f"  L(t) = {poly.render()}",
    ]
    return results, [], human


def cmd_count(args) -> tuple[dict, list, list[str]]:
    t = Triple.from_abc(args.a, args.b, args.c)
    f, ab = ehrhart.frame_system(t)
    basis = plane_basis(t)
    p_vert, q_vert = frame.triangle_vertices(f, args.m, args.n)
    poly = ehrhart.ehrhart_from_frame(f, ab, args.m, args.n)
    rep = oracle.count(p_vert, q_vert, t, args.t, basis=basis)
    g = gcd_nonneg(args.m, args.n)
    nus = ehrhart.side_divisors(f, ab, args.m // g, args.n // g)
    eff = g * args.t
    formula = poly.evaluate(args.t)
    pick_ok = oracle.pick_check(rep, poly.quad_num, args.t)
    match = (
        formula == rep.total
        and rep.boundary == nus.total() * eff
        and rep.per_side == nus.interior_counts(eff)
        and pick_ok
    )
    results = {
        "triple": list(t.abc()),
        "d": t.d,
        "m": args.m,
        "n": args.n,
        "t": args.t,
        "vertices": [_vec(p_vert), _vec(q_vert)],
        "total": rep.total,
        "boundary": rep.boundary,
        "interior": rep.interior,
        "per_side": list(rep.per_side),
        "formula_count": formula,
        "quad_num": poly.quad_num,
        "lin_num": poly.lin_num,
        "match": match,
        "pick_ok": pick_ok,
        "kernel": oracle.kernel_name(),
    }
    failures = []
    if not match:
        failures.append(
            {
                "triple": list(t.abc()),
                "m": args.m,
                "n": args.n,
                "t": args.t,
                "formula_count": formula,
                "oracle_count": rep.total,
            }
        )
    human = [
        f"triangle ({args.m}, {args.n}) on ({t.a}, {t.b}, {t.c}), dilation {args.t}",
        f"  P = {p_vert.as_tuple()}, Q = {q_vert.as_tuple()}",
        f"  oracle: total {rep.total}, boundary {rep.boundary}, "
        f"interior {rep.interior}, per side {rep.per_side}",
        f"  formula: {formula}  [{poly.render()}]",
        f"  match: {'yes' if match else 'NO'}, pick identity: {'ok' if pick_ok else 'FAILED'}",
    ]
    if args.inflate_check:
        rep2 = oracle.count(p_vert, q_vert, t, args.t, basis=basis, inflate=2)
        stable = rep2 == rep
        results["inflate_check"] = stable
        human.append(f"  inflate check: {'stable' if stable else 'UNSTABLE'}")
        if not stable:
            failures.append({"inflate_check": "counts changed with widened box"})
    return results, failures, human


def cmd_table1(args) -> tuple[dict, list, list[str]]:
    rows = []
    human = ["d | triples | |E(d)| | c1 set", "--+---------+--------+-------"]
    for d in range(1, args.d_max + 1):
        row = catalog.table1_row(d)
        rows.append(
            {
                "d": d,
                "triples": [list(t) for t in row.triples],
                "e_size": row.e_size,
                "c1_set": list(row.c1_set),
            }
        )
        if row.triples:
            shown = "; ".join(",".join(str(x) for x in t) for t in row.triples)
            c1s = "{" + ", ".join(str(c) for c in row.c1_set) + "}"
            human.append(f"{d} | {shown} | {row.e_size} | {c1s}")
    return {"d_max": args.d_max, "rows": rows}, [], human


def cmd_ed(args) -> tuple[dict, list, list[str]]:
    polys = sorted(catalog.e_of_d(args.d), key=lambda p: (p.quad_num, p.lin_num))
    results = {
        "d": args.d,
        "count": len(polys),
        "polynomials": [
            {"quad_num": p.quad_num, "lin_num": p.lin_num, "rendered": p.render()}
            for p in polys
        ],
    }
    human = [f"d = {args.d}: {len(polys)} distinct polynomial(s)"]
    human += [f"  {p.render()}" for p in polys]
    return results, [], human


def cmd_verify(args) -> tuple[dict, list, list[str]]:
    mn_list = _parse_mn_list(args.mn_list)
    records = catalog.verify_campaign(
        args.d_max, mn_list, args.t_max, workers=max(1, args.parallel)
    )
    passed, failed = catalog.campaign_summary(records)

    def rec_dict(r):
        return {
            "triple": list(r.triple),
            "d": r.d,
            "m": r.m,
            "n": r.n,
            "t": r.t,
            "quad_num": r.quad_num,
            "lin_num": r.lin_num,
            "formula_count": r.formula_count,
            "oracle_count": r.oracle_count,
            "boundary_expected": r.boundary_expected,
            "boundary_actual": r.boundary_actual,
            "per_side_expected": list(r.per_side_expected),
            "per_side_actual": list(r.per_side_actual),
            "pick_ok": r.pick_ok,
            "passed": r.passed,
        }

    results = {
        "d_max": args.d_max,
        "mn_list": [list(p) for p in mn_list],
        "t_max": args.t_max,
        "records": [rec_dict(r) for r in records],
        "passed": passed,
        "failed": failed,
    }
    failures = [rec_dict(r) for r in records if not r.passed]
    human = [
        f"campaign: d <= {args.d_max}, (m, n) in {mn_list}, t <= {args.t_max}",
        f"  records: {len(records)}, passed: {passed}, failed: {failed}",
    ]
    for r in records:
        if not r.passed:
            human.append(
                f"  FAIL {r.triple} (m,n)=({r.m},{r.n}) t={r.t}: "
                f"formula {r.formula_count} oracle {r.oracle_count}"
            )
    return results, failures, human


_HANDLERS = {
    "triples": cmd_triples,
    "frame": cmd_frame,
    "ehrhart": cmd_ehrhart,
    "count": cmd_count,
    "table1": cmd_table1,
    "ed": cmd_ed,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        results, failures, human = _HANDLERS[args.command](args)
    except ValueError as exc:
        results, failures, human = {}, [str(exc)], []
        print(f"error: {exc}", file=sys.stderr)
    doc = {
        "schema_version": "1",
        "command": args.command,
        "inputs": {
            k: v for k, v in vars(args).items() if k not in ("command", "format")
        },
        "results": results,
        "failures": failures,
    }
    if args.format == "machine":
        print(json.dumps(_stringify(doc), sort_keys=True, indent=2))
    else:
        for line in human:
            print(line)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
