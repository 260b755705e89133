"""Catalog rows per radius d and the formula-versus-oracle campaign."""

from __future__ import annotations

import time
from dataclasses import dataclass
from multiprocessing import Pool

from .ehrhart import (
    EhrhartPoly,
    ehrhart_from_frame,
    frame_system,
    side_divisors,
)
from .frame import Triple, enumerate_triples, triangle_vertices
from .intmath import gcd_nonneg
from .lattice import plane_basis
from .oracle import count, pick_check


@dataclass(frozen=True, slots=True)
class CatalogRow:
    """All triples of one radius with their distinct boundary counts."""

    d: int
    triples: tuple[tuple[int, int, int], ...]
    e_size: int
    c1_set: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class VerificationRecord:
    """One formula-versus-oracle comparison."""

    triple: tuple[int, int, int]
    d: int
    m: int
    n: int
    t: int
    quad_num: int
    lin_num: int
    formula_count: int
    oracle_count: int
    boundary_expected: int
    boundary_actual: int
    per_side_expected: tuple[int, int, int]
    per_side_actual: tuple[int, int, int]
    pick_ok: bool
    passed: bool
    elapsed: float


def table1_row(d: int) -> CatalogRow:
    """Triples and minimal-triangle boundary counts for one radius."""
    triples = enumerate_triples(d)
    c1s = set()
    for t in triples:
        f, ab = frame_system(t)
        c1s.add(ehrhart_from_frame(f, ab, 1, 0).lin_num)
    return CatalogRow(
        d=d,
        triples=tuple(t.abc() for t in triples),
        e_size=len(c1s),
        c1_set=tuple(sorted(c1s)),
    )


def e_of_d(d: int) -> set[EhrhartPoly]:
    """Distinct minimal-triangle polynomials over all triples of radius d."""
    out = set()
    for t in enumerate_triples(d):
        f, ab = frame_system(t)
        out.add(ehrhart_from_frame(f, ab, 1, 0))
    return out


def verify_triple(
    t: Triple,
    mn_list: list[tuple[int, int]],
    t_max: int,
    kernel: str = "auto",
) -> list[VerificationRecord]:
    """Run every (m, n, dilation) comparison for one triple."""
    f, ab = frame_system(t)
    basis = plane_basis(t)
    records = []
    for m, n in mn_list:
        g = gcd_nonneg(m, n)
        mr, nr = m // g, n // g
        poly = ehrhart_from_frame(f, ab, m, n)
        nus = side_divisors(f, ab, mr, nr)
        p_vert, q_vert = triangle_vertices(f, m, n)
        for dil in range(1, t_max + 1):
            start = time.perf_counter()
            rep = count(p_vert, q_vert, t, dil, basis=basis, kernel=kernel)
            elapsed = time.perf_counter() - start
            # the (m, n) triangle at dilation dil is the reduced (mr, nr)
            # triangle at dilation g*dil
            eff = g * dil
            expected_sides = nus.interior_counts(eff)
            expected_boundary = nus.total() * eff
            formula = poly.evaluate(dil)
            pick_ok = pick_check(rep, poly.quad_num, dil)
            ok = (
                formula == rep.total
                and rep.boundary == expected_boundary
                and rep.per_side == expected_sides
                and pick_ok
            )
            records.append(
                VerificationRecord(
                    triple=t.abc(),
                    d=t.d,
                    m=m,
                    n=n,
                    t=dil,
                    quad_num=poly.quad_num,
                    lin_num=poly.lin_num,
                    formula_count=formula,
                    oracle_count=rep.total,
                    boundary_expected=expected_boundary,
                    boundary_actual=rep.boundary,
                    per_side_expected=expected_sides,
                    per_side_actual=rep.per_side,
                    pick_ok=pick_ok,
                    passed=ok,
                    elapsed=elapsed,
                )
            )
    return records


def _verify_task(args: tuple) -> list[VerificationRecord]:
    t_abc, d, mn_list, t_max, kernel = args
    return verify_triple(Triple(*t_abc, d), mn_list, t_max, kernel)


def verify_campaign(
    d_max: int,
    mn_list: list[tuple[int, int]],
    t_max: int,
    workers: int = 1,
    kernel: str = "auto",
) -> list[VerificationRecord]:
    """Compare formulas against the oracle for every triple with d <= d_max."""
    for m, n in mn_list:
        if m == 0 and n == 0:
            raise ValueError("degenerate triangle: (m, n) = (0, 0)")
    triples = [t for d in range(1, d_max + 1) for t in enumerate_triples(d)]
    if workers > 1:
        tasks = [(t.abc(), t.d, mn_list, t_max, kernel) for t in triples]
        with Pool(workers) as pool:
            chunks = pool.map(_verify_task, tasks)
    else:
        chunks = [verify_triple(t, mn_list, t_max, kernel) for t in triples]
    return [rec for chunk in chunks for rec in chunk]


def campaign_summary(records: list[VerificationRecord]) -> tuple[int, int]:
    """(passed, failed) totals."""
    passed = sum(1 for r in records if r.passed)
    return passed, len(records) - passed
