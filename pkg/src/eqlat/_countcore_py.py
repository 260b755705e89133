"""Pure-Python scan kernel, arbitrary precision.

Counts lattice points of the box {(o, i)} classified against the triangle
with barycentric numerators

    lam(o, i) = o*a_o + i*a_i,   mu(o, i) = o*b_o + i*b_i,

a point being inside iff lam >= 0, mu >= 0, lam + mu <= bound.  Rows run over
the outer index; within a row the feasible inner range is an interval, which
is derived exactly, padded by one on each side, and every candidate in it is
still checked against the full predicate.  The result therefore equals a
scan of the entire box.
"""

from __future__ import annotations


def _ceildiv(a: int, b: int) -> int:
    # b > 0 everywhere below
    return -((-a) // b)


def scan_box(
    o_lo: int,
    o_hi: int,
    i_lo: int,
    i_hi: int,
    a_o: int,
    a_i: int,
    b_o: int,
    b_i: int,
    bound: int,
) -> tuple[int, int, int, int, int]:
    """Return (total, on_op, on_pq, on_oq, vertices) over the box."""
    total = on_op = on_pq = on_oq = verts = 0
    c_s = a_i + b_i
    for o in range(o_lo, o_hi + 1):
        ka = o * a_o
        kb = o * b_o
        lo, hi = i_lo, i_hi
        if a_i > 0:
            lo = max(lo, _ceildiv(-ka, a_i))
        elif a_i < 0:
            hi = min(hi, ka // (-a_i))
        elif ka < 0:
            continue
        if b_i > 0:
            lo = max(lo, _ceildiv(-kb, b_i))
        elif b_i < 0:
            hi = min(hi, kb // (-b_i))
        elif kb < 0:
            continue
        rest = bound - ka - kb
        if c_s > 0:
            hi = min(hi, rest // c_s)
        elif c_s < 0:
            lo = max(lo, _ceildiv(-rest, -c_s))
        elif rest < 0:
            continue
        lo = max(lo - 1, i_lo)
        hi = min(hi + 1, i_hi)
        for i in range(lo, hi + 1):
            lam = ka + i * a_i
            mu = kb + i * b_i
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
