# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _countcore_py.scan_box, restricted to int64 inputs.

The caller guarantees every intermediate product fits in a signed 64-bit
integer; see the bound check in oracle._int64_safe.
"""


cdef inline long long _fdiv(long long a, long long b) noexcept:
    # floor division; cdivision truncates, so fix up the sign case by hand
    cdef long long q = a / b
    if a % b != 0 and (a < 0) != (b < 0):
        q -= 1
    return q


cdef inline long long _cdiv(long long a, long long b) noexcept:
    # ceil division for b > 0
    return -_fdiv(-a, b)


def scan_box(long long o_lo, long long o_hi, long long i_lo, long long i_hi,
             long long a_o, long long a_i, long long b_o, long long b_i,
             long long bound):
    """Return (total, on_op, on_pq, on_oq, vertices) over the box."""
    cdef long long total = 0, on_op = 0, on_pq = 0, on_oq = 0, verts = 0
    cdef long long c_s = a_i + b_i
    cdef long long o, i, ka, kb, lo, hi, rest, lam, mu, t
    cdef int edges
    for o in range(o_lo, o_hi + 1):
        ka = o * a_o
        kb = o * b_o
        lo = i_lo
        hi = i_hi
        if a_i > 0:
            t = _cdiv(-ka, a_i)
            if t > lo:
                lo = t
        elif a_i < 0:
            t = _fdiv(ka, -a_i)
            if t < hi:
                hi = t
        elif ka < 0:
            continue
        if b_i > 0:
            t = _cdiv(-kb, b_i)
            if t > lo:
                lo = t
        elif b_i < 0:
            t = _fdiv(kb, -b_i)
            if t < hi:
                hi = t
        elif kb < 0:
            continue
        rest = bound - ka - kb
        if c_s > 0:
            t = _fdiv(rest, c_s)
            if t < hi:
                hi = t
        elif c_s < 0:
            t = _cdiv(-rest, -c_s)
            if t > lo:
                lo = t
        elif rest < 0:
            continue
        lo = lo - 1
        if lo < i_lo:
            lo = i_lo
        hi = hi + 1
        if hi > i_hi:
            hi = i_hi
        for i in range(lo, hi + 1):
            lam = ka + i * a_i
            mu = kb + i * b_i
            if lam < 0 or mu < 0 or lam + mu > bound:
                continue
            total += 1
            edges = 0
            if lam == 0:
                edges += 1
            if mu == 0:
                edges += 1
            if lam + mu == bound:
                edges += 1
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
