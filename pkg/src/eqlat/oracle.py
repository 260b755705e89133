"""Brute-force lattice point counting, independent of the closed forms.

A dilated triangle t*(O, P, Q) is scanned by enumerating the integer
bounding box, in (u, tau) basis coordinates, of its three vertices.  Each
candidate X is classified through exact barycentric numerators built from
Gram data of the vertices:

    lam_num = (X.P)*g22 - (X.Q)*g12      (= lam * D)
    mu_num  = (X.Q)*g11 - (X.P)*g12      (= mu * D)
    D = g11*g22 - g12^2 > 0

X lies in the dilation iff lam_num >= 0, mu_num >= 0 and
lam_num + mu_num <= t*D; side OP carries mu_num = 0, side OQ lam_num = 0 and
side PQ lam_num + mu_num = t*D.  Everything is integer arithmetic.

Two interchangeable kernels do the scan: a compiled extension working in
int64 (used when a conservative bound proves no intermediate can overflow)
and a pure-Python twin with arbitrary precision.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _countcore_py
from .intmath import Vec3
from .lattice import BasisPair, Triple, coordinates_in_basis, membership, plane_basis

try:
    from . import _countcore  # type: ignore[attr-defined]
except ImportError:  # extension not built; pure path only
    _countcore = None

_INT64_LIMIT = 2**62


def has_compiled() -> bool:
    return _countcore is not None


def kernel_name() -> str:
    return "compiled" if has_compiled() else "pure"


def _int64_safe(args: tuple[int, ...]) -> bool:
    """Conservative check that every kernel intermediate fits in int64."""
    o_lo, o_hi, i_lo, i_hi, a_o, a_i, b_o, b_i, bound = args
    om = max(abs(o_lo), abs(o_hi), 1)
    im = max(abs(i_lo), abs(i_hi), 1)
    worst = abs(bound) + om * (abs(a_o) + abs(b_o)) + im * (abs(a_i) + abs(b_i))
    return worst < _INT64_LIMIT


@dataclass(frozen=True, slots=True)
class CountReport:
    """Exact counts for one dilated triangle.

    per_side holds boundary points interior to sides (OP, PQ, OQ); the three
    vertices are counted separately.
    """

    total: int
    boundary: int
    interior: int
    per_side: tuple[int, int, int]
    vertices: int


def count(
    p: Vec3,
    q: Vec3,
    t: Triple,
    dilation: int,
    basis: BasisPair | None = None,
    kernel: str = "auto",
    inflate: int = 0,
) -> CountReport:
    """Count lattice points of the dilated triangle with vertices O, p, q."""
    if dilation < 1:
        raise ValueError("dilation must be a positive integer")
    if inflate < 0:
        raise ValueError("inflate margin must be nonnegative")
    if p.is_zero() or q.is_zero() or p == q:
        raise ValueError("degenerate triangle: coincident vertices")
    if not (membership(p, t) and membership(q, t)):
        raise ValueError("not an equilateral lattice triangle: vertex off the plane")
    g11 = p.dot(p)
    g22 = q.dot(q)
    g12 = p.dot(q)
    if not (g11 == g22 == (p - q).norm_sq()):
        raise ValueError("not an equilateral lattice triangle: unequal sides")
    det = g11 * g22 - g12 * g12
    assert det > 0
    bound = dilation * det

    if basis is None:
        basis = plane_basis(t)
    cp = coordinates_in_basis(p, basis, t)
    cq = coordinates_in_basis(q, basis, t)
    if cp is None or cq is None:
        raise RuntimeError("vertex not representable in the plane basis")
    i_lo = min(0, dilation * cp[0], dilation * cq[0]) - inflate
    i_hi = max(0, dilation * cp[0], dilation * cq[0]) + inflate
    j_lo = min(0, dilation * cp[1], dilation * cq[1]) - inflate
    j_hi = max(0, dilation * cp[1], dilation * cq[1]) + inflate

    up, uq = basis.u.dot(p), basis.u.dot(q)
    tp, tq = basis.tau.dot(p), basis.tau.dot(q)
    c_lu = up * g22 - uq * g12
    c_lt = tp * g22 - tq * g12
    c_mu = uq * g11 - up * g12
    c_mt = tq * g11 - tp * g12

    # scan rows along the shorter box dimension
    if j_hi - j_lo <= i_hi - i_lo:
        args = (j_lo, j_hi, i_lo, i_hi, c_lt, c_lu, c_mt, c_mu, bound)
    else:
        args = (i_lo, i_hi, j_lo, j_hi, c_lu, c_lt, c_mu, c_mt, bound)

    if kernel == "auto":
        impl = _countcore if (_countcore is not None and _int64_safe(args)) else _countcore_py
    elif kernel == "c":
        if _countcore is None:
            raise ValueError("compiled kernel is not available")
        if not _int64_safe(args):
            raise ValueError("inputs exceed the compiled kernel's int64 range")
        impl = _countcore
    elif kernel == "py":
        impl = _countcore_py
    else:
        raise ValueError(f"unknown kernel {kernel!r}")

    total, on_op, on_pq, on_oq, verts = impl.scan_box(*args)
    if verts != 3:
        raise RuntimeError(f"scan found {verts} vertices, expected 3")
    boundary = 3 + on_op + on_pq + on_oq
    return CountReport(
        total=total,
        boundary=boundary,
        interior=total - boundary,
        per_side=(on_op, on_pq, on_oq),
        vertices=3,
    )


def pick_check(report: CountReport, quad_num: int, dilation: int) -> bool:
    """Pick's identity: normalized area equals 2*interior + boundary - 2."""
    return quad_num * dilation * dilation == 2 * report.interior + report.boundary - 2
