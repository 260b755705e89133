import pytest
from hypothesis import given
from hypothesis import strategies as st

from eqlat.frame import (
    aeqb_generate,
    build_frame,
    check_frame_vectors,
    enumerate_triples,
    equal_pair_frame,
    find_rs,
    rs_structure,
    solve_alpha_beta,
    sublattice_coords,
    triangle_vertices,
)
from eqlat.intmath import Vec3
from eqlat.lattice import Triple, plane_basis


def all_triples(d_max):
    out = []
    for d in range(1, d_max + 1, 2):
        out.extend(enumerate_triples(d))
    return out


def test_enumerate_small():
    assert [t.abc() for t in enumerate_triples(1)] == [(1, 1, 1)]
    assert [t.abc() for t in enumerate_triples(3)] == [(1, 1, 5)]
    assert [t.abc() for t in enumerate_triples(9)] == [(1, 11, 11), (5, 7, 13)]
    assert [t.abc() for t in enumerate_triples(11)] == [(1, 1, 19), (5, 7, 17), (5, 13, 13)]
    assert [t.abc() for t in enumerate_triples(15)] == [(1, 7, 25), (5, 11, 23), (5, 17, 19)]


@pytest.mark.parametrize("d", [2, 4, 10, 40])
def test_no_triples_for_even_d(d):
    # a^2+b^2+c^2 = 3*d^2 has no primitive solutions when d is even
    assert enumerate_triples(d) == []


def test_enumerate_rejects_nonpositive():
    with pytest.raises(ValueError):
        enumerate_triples(0)


def test_find_rs_known():
    assert find_rs(Triple(1, 1, 1, 1)) == (1, 1)
    assert find_rs(Triple(5, 7, 13, 9)) == (3, 11)
    assert find_rs(Triple(1, 7, 25, 15)) == (5, 5)


def test_frame_d1():
    f = build_frame(Triple(1, 1, 1, 1))
    assert f.e1 == Vec3(-1, 0, 1)
    assert f.perp == Vec3(1, -2, 1)
    assert f.e2 == Vec3(0, -1, 1)
    assert (f.omega, f.r_red, f.s_red) == (1, 1, 1)


def test_frame_d15_canonical():
    f = build_frame(Triple(1, 7, 25, 15))
    assert (f.r, f.s) == (5, 5)
    assert f.e1 == Vec3(-13, -16, 5)
    assert f.e2 == Vec3(8, -19, 5)


def test_frame_d15_alternative_rs():
    # a different admissible representation gives a different, equally valid frame
    f = build_frame(Triple(1, 7, 25, 15), rs=(-5, 5))
    assert f.e1 == Vec3(-8, 19, -5)
    assert f.perp == Vec3(-34, -13, 5)
    assert f.e2 == Vec3(-21, 3, 0)
    checks = check_frame_vectors(f.triple, f.e1, f.e2)
    assert all(checks.values())


def test_build_frame_rejects_non_representation():
    with pytest.raises(ValueError, match="not a representation"):
        build_frame(Triple(1, 7, 25, 15), rs=(1, 7))


def test_build_frame_rejects_fractional():
    # (4, 10) solves s^2 + 3*r^2 = 2*q for q = 74 but the entries are not integers
    with pytest.raises(ValueError, match="fractional"):
        build_frame(Triple(5, 7, 13, 9), rs=(4, 10))


def test_build_frame_accepts_larger_representation():
    # (7, 1) also works for (5, 7, 13); the canonical search just prefers |r| = 3
    f = build_frame(Triple(5, 7, 13, 9), rs=(7, 1))
    assert f.e1 == Vec3(-7, -8, 7)
    assert all(check_frame_vectors(f.triple, f.e1, f.e2).values())


def test_roles_validation():
    with pytest.raises(ValueError, match="permutation"):
        build_frame(Triple(1, 1, 1, 1), roles=(0, 0, 1))


@pytest.mark.parametrize("t", all_triples(21))
def test_frame_invariants(t):
    f = build_frame(t)
    d = t.d
    assert f.e1.norm_sq() == 2 * d * d
    assert f.e2.norm_sq() == 2 * d * d
    assert f.e1.dot(f.e2) == d * d
    assert f.perp == 2 * f.e2 - f.e1
    # the frame spans an index-d sublattice of the plane lattice
    assert f.e1.cross(f.e2).norm_sq() == 3 * d**4
    assert all(check_frame_vectors(t, f.e1, f.e2).values())


@pytest.mark.parametrize("t", all_triples(21))
def test_alpha_beta_identity(t):
    f = build_frame(t)
    ab = solve_alpha_beta(f, plane_basis(t))
    hs = (ab.r_red + ab.s_red) // 2
    assert hs * ab.beta + ab.r_red * ab.alpha == t.d
    assert ab.tau_sign in (1, -1)
    # reconstruct both basis rows from the recorded coordinates
    basis = plane_basis(t)
    assert basis.u * t.d == f.e1 * hs - f.e2 * ab.r_red
    assert basis.tau * (t.d * ab.tau_sign) == f.e1 * ab.alpha + f.e2 * ab.beta


def test_alpha_beta_d15():
    t = Triple(1, 7, 25, 15)
    ab = solve_alpha_beta(build_frame(t), plane_basis(t))
    assert (ab.alpha, ab.beta) == (19, -16)
    ab2 = solve_alpha_beta(build_frame(t, rs=(-5, 5)), plane_basis(t))
    assert (ab2.alpha, ab2.beta, ab2.tau_sign) == (-3, 19, 1)


def test_alpha_beta_d1():
    t = Triple(1, 1, 1, 1)
    ab = solve_alpha_beta(build_frame(t), plane_basis(t))
    assert (ab.alpha, ab.beta) == (1, 0)


def test_sublattice_coords_rejects_off_plane():
    f = build_frame(Triple(1, 1, 1, 1))
    with pytest.raises(RuntimeError, match="mismatch"):
        sublattice_coords(f, Vec3(1, 0, 0))


def test_equal_pair_frame():
    f = equal_pair_frame(Triple(5, 13, 13, 11))
    assert f.roles == (1, 2, 0)
    assert (f.r, f.s) == (13, 13)
    assert (f.r_red, f.s_red) == (1, 1)
    assert all(check_frame_vectors(f.triple, f.e1, f.e2).values())
    f2 = equal_pair_frame(Triple(1, 1, 1, 1))
    assert f2.roles == (0, 1, 2)
    with pytest.raises(ValueError, match="equal pair"):
        equal_pair_frame(Triple(5, 7, 13, 9))


def test_triangle_vertices():
    f = build_frame(Triple(5, 7, 13, 9))
    p, q = triangle_vertices(f, 3, 1)
    m2 = 9 - 3 + 1
    assert p.norm_sq() == q.norm_sq() == (p - q).norm_sq() == 2 * 81 * m2
    with pytest.raises(ValueError, match="degenerate"):
        triangle_vertices(f, 0, 0)


@given(st.integers(min_value=-6, max_value=6), st.integers(min_value=-6, max_value=6))
def test_triangle_always_equilateral(m, n):
    if (m, n) == (0, 0):
        return
    f = build_frame(Triple(1, 7, 25, 15))
    p, q = triangle_vertices(f, m, n)
    assert p.norm_sq() == q.norm_sq() == (p - q).norm_sq()


def test_aeqb_generate_small():
    assert [t.abc() for t in aeqb_generate(1, 1)] == [(1, 1, 5)]
    assert [t.abc() for t in aeqb_generate(3, 1)] == [(1, 1, 19), (5, 13, 13)]


def test_aeqb_generate_collision():
    # both branches land on d = 2011, producing two distinct triples
    triples = aeqb_generate(43, 9)
    assert [t.abc() for t in triples] == [(913, 913, 3235), (139, 2461, 2461)]
    assert all(t.d == 2011 for t in triples)


@pytest.mark.parametrize("k,l", [(2, 1), (0, 1), (-1, 1), (1, 0), (3, 3)])
def test_aeqb_generate_rejects(k, l):
    with pytest.raises(ValueError):
        aeqb_generate(k, l)


@given(st.integers(min_value=1, max_value=15), st.integers(min_value=1, max_value=15))
def test_aeqb_generate_property(k, l):
    from math import gcd

    if k % 2 == 0 or gcd(k, l) != 1:
        return
    triples = aeqb_generate(k, l)
    assert 1 <= len(triples) <= 2
    for t in triples:
        assert t.a == t.b or t.b == t.c
        assert t.d == 2 * l * l + k * k


def test_rs_structure():
    info = rs_structure(build_frame(Triple(5, 7, 13, 9)))
    assert info == {"omega": 1, "chi": 1, "divides": True, "cofactors_coprime": True}
    info15 = rs_structure(build_frame(Triple(1, 7, 25, 15)))
    assert info15["chi"] == 5 and info15["divides"]
