import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqlat import _countcore_py
from eqlat.ehrhart import ehrhart_poly, frame_system, side_divisors
from eqlat.frame import triangle_vertices
from eqlat.intmath import Vec3
from eqlat.lattice import Triple
from eqlat.oracle import CountReport, count, has_compiled, kernel_name, pick_check

try:
    from eqlat import _countcore
except ImportError:
    _countcore = None


def naive_scan(o_lo, o_hi, i_lo, i_hi, a_o, a_i, b_o, b_i, bound):
    """Reference: classify every box cell, no interval shortcuts."""
    total = on_op = on_pq = on_oq = verts = 0
    for o in range(o_lo, o_hi + 1):
        for i in range(i_lo, i_hi + 1):
            lam = o * a_o + i * a_i
            mu = o * b_o + i * b_i
            if lam < 0 or mu < 0 or lam + mu > bound:
                continue
            total += 1
            edges = (lam == 0) + (mu == 0) + (lam + mu == bound)
            if edges >= 2:
                verts += 1
            elif edges == 1:
                if mu == 0:
                    on_op += 1
                elif lam == 0:
                    on_oq += 1
                else:
                    on_pq += 1
    return total, on_op, on_pq, on_oq, verts


small = st.integers(min_value=-9, max_value=9)
edge = st.integers(min_value=-8, max_value=8)


@settings(max_examples=300)
@given(edge, edge, edge, edge, small, small, small, small, st.integers(min_value=-20, max_value=120))
def test_row_scan_equals_naive(o_lo, o_span, i_lo, i_span, a_o, a_i, b_o, b_i, bound):
    o_hi = o_lo + abs(o_span)
    i_hi = i_lo + abs(i_span)
    args = (o_lo, o_hi, i_lo, i_hi, a_o, a_i, b_o, b_i, bound)
    assert _countcore_py.scan_box(*args) == naive_scan(*args)


@pytest.mark.skipif(not has_compiled(), reason="compiled kernel not built")
@settings(max_examples=300)
@given(edge, edge, edge, edge, small, small, small, small, st.integers(min_value=-20, max_value=120))
def test_compiled_equals_naive(o_lo, o_span, i_lo, i_span, a_o, a_i, b_o, b_i, bound):
    o_hi = o_lo + abs(o_span)
    i_hi = i_lo + abs(i_span)
    args = (o_lo, o_hi, i_lo, i_hi, a_o, a_i, b_o, b_i, bound)
    assert _countcore.scan_box(*args) == naive_scan(*args)


def test_kernel_name():
    assert kernel_name() in ("compiled", "pure")
    assert (kernel_name() == "compiled") == has_compiled()


def test_count_minimal_plane():
    t = Triple(1, 1, 1, 1)
    f, _ = frame_system(t)
    p, q = triangle_vertices(f, 1, 0)
    rep = count(p, q, t, 1)
    assert rep == CountReport(total=3, boundary=3, interior=0, per_side=(0, 0, 0), vertices=3)
    rep3 = count(p, q, t, 3)
    assert rep3.total == 10 and rep3.boundary == 9 and rep3.interior == 1
    assert rep3.per_side == (2, 2, 2)


worked_examples = [
    # explicit vertex coordinates with known counts at dilations 1 and 2
    ((5, 13, 13), Vec3(13, -8, 3), Vec3(0, -11, 11), 13, 36),
    ((1, 1, 19), Vec3(4, 15, -1), Vec3(15, 4, -1), 13, 36),
]


@pytest.mark.parametrize("abc,p,q,at1,at2", worked_examples)
def test_worked_examples(abc, p, q, at1, at2):
    t = Triple.from_abc(*abc)
    assert count(p, q, t, 1).total == at1
    assert count(p, q, t, 2).total == at2
    poly = ehrhart_poly(t)
    assert poly.evaluate(1) == at1 and poly.evaluate(2) == at2


def test_large_triple_sides():
    t = Triple.from_abc(245, 613, 713)
    f, ab = frame_system(t)
    p, q = triangle_vertices(f, 1, 0)
    rep = count(p, q, t, 1)
    assert rep.total == 297
    assert rep.per_side == side_divisors(f, ab, 1, 0).interior_counts(1)
    assert sorted(rep.per_side) == [2, 10, 16]
    assert pick_check(rep, ehrhart_poly(t).quad_num, 1)


def test_formula_matches_oracle_small_grid():
    for abc in [(1, 1, 5), (5, 7, 13), (1, 7, 25)]:
        t = Triple.from_abc(*abc)
        f, ab = frame_system(t)
        for m, n in [(1, 0), (1, 1), (2, 1), (-1, 2)]:
            p, q = triangle_vertices(f, m, n)
            poly = ehrhart_poly(t, m, n)
            for dil in (1, 2, 3):
                rep = count(p, q, t, dil)
                assert rep.total == poly.evaluate(dil)
                assert rep.boundary == poly.lin_num * dil
                assert pick_check(rep, poly.quad_num, dil)


def test_inflate_stability():
    t = Triple.from_abc(1, 1, 19)
    p, q = worked_examples[1][1], worked_examples[1][2]
    base = count(p, q, t, 2)
    assert count(p, q, t, 2, inflate=2) == base
    assert count(p, q, t, 2, inflate=5) == base


def test_kernels_agree_end_to_end():
    t = Triple.from_abc(5, 7, 13)
    f, _ = frame_system(t)
    p, q = triangle_vertices(f, 3, 2)
    rep_py = count(p, q, t, 2, kernel="py")
    rep_auto = count(p, q, t, 2, kernel="auto")
    assert rep_py == rep_auto
    if has_compiled():
        assert count(p, q, t, 2, kernel="c") == rep_py


def test_count_input_validation():
    t = Triple(1, 1, 1, 1)
    f, _ = frame_system(t)
    p, q = triangle_vertices(f, 1, 0)
    with pytest.raises(ValueError, match="positive"):
        count(p, q, t, 0)
    with pytest.raises(ValueError, match="nonnegative"):
        count(p, q, t, 1, inflate=-1)
    with pytest.raises(ValueError, match="coincident"):
        count(p, p, t, 1)
    with pytest.raises(ValueError, match="coincident"):
        count(Vec3(0, 0, 0), q, t, 1)
    with pytest.raises(ValueError, match="off the plane"):
        count(p, Vec3(0, 0, 1), t, 1)
    with pytest.raises(ValueError, match="unequal sides"):
        count(Vec3(-1, 1, 0), Vec3(-2, 1, 1), t, 1)
    with pytest.raises(ValueError, match="unequal sides"):
        count(Vec3(-1, 1, 0), Vec3(1, -1, 0), t, 1)  # collinear
    with pytest.raises(ValueError, match="unknown kernel"):
        count(p, q, t, 1, kernel="fortran")


@pytest.mark.skipif(not has_compiled(), reason="compiled kernel not built")
def test_compiled_kernel_range_guard():
    # bound = dilation * det overflows int64 here; the guard must refuse
    t = Triple.from_abc(139, 2461, 2461)
    f, _ = frame_system(t)
    p, q = triangle_vertices(f, 1, 0)
    with pytest.raises(ValueError, match="int64"):
        count(p, q, t, 10**6, kernel="c")
    # auto falls back to the pure kernel instead of refusing; spot-check a
    # cheap configuration where both paths exist
    assert count(p, q, t, 1, kernel="auto").total == ehrhart_poly(t).evaluate(1)


def test_pick_check():
    t = Triple.from_abc(5, 7, 13)
    f, _ = frame_system(t)
    p, q = triangle_vertices(f, 1, 0)
    rep = count(p, q, t, 1)
    assert pick_check(rep, 9, 1)
    assert not pick_check(rep, 11, 1)
