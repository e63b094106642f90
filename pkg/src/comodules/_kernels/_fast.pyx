# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular kernels: word-size matmul and Howell-form row reduction
over Z/n, with semantics identical to pure.py (see its docstring for the form
contract).  The dispatcher only routes moduli below 2**31 here, so every
product of two reduced entries fits a 64-bit word.

Division notes: C division truncates toward zero while Python's floors, but
every quotient taken here has nonnegative operands (entries are canonical
residues), so the two agree.
"""

from libc.stdlib cimport free, malloc

NAME = "fast"

ctypedef long long i64


cdef inline i64 _m(i64 x, i64 n) noexcept nogil:
    x %= n
    if x < 0:
        x += n
    return x


cdef i64 _gcd(i64 a, i64 b) noexcept nogil:
    cdef i64 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef void _gcdex(i64 a, i64 b, i64 *g, i64 *s, i64 *t, i64 *p, i64 *q) noexcept nogil:
    # s*a + t*b = g = gcd(a, b); p*a + q*b = 0; det [[s,t],[p,q]] = 1
    cdef i64 old_r = a, r = b
    cdef i64 old_s = 1, s_ = 0
    cdef i64 old_t = 0, t_ = 1
    cdef i64 qq, tmp
    while r != 0:
        qq = old_r / r
        tmp = old_r - qq * r
        old_r = r
        r = tmp
        tmp = old_s - qq * s_
        old_s = s_
        s_ = tmp
        tmp = old_t - qq * t_
        old_t = t_
        t_ = tmp
    if old_r == 0:
        g[0] = 0
        s[0] = 1
        t[0] = 0
        p[0] = 0
        q[0] = 1
        return
    g[0] = old_r
    s[0] = old_s
    t[0] = old_t
    p[0] = -(b / old_r)
    q[0] = a / old_r


cdef void _unit_for(i64 a, i64 n, i64 *uu, i64 *dd) noexcept nogil:
    # uu a unit mod n with uu*a = gcd(a, n) mod n
    cdef i64 d = _gcd(a, n)
    cdef i64 m = n / d
    cdef i64 g, s, t, p, q, u
    if m == 1:
        uu[0] = 1
        dd[0] = d
        return
    _gcdex((a / d) % m, m, &g, &s, &t, &p, &q)
    u = s % m
    if u < 0:
        u += m
    while _gcd(u, n) != 1:
        u += m
    uu[0] = u % n
    dd[0] = d


def matmul_mod(a, b, n):
    cdef Py_ssize_t p = len(a)
    cdef Py_ssize_t q = len(b)
    cdef Py_ssize_t r = len(b[0]) if q else 0
    cdef i64 nn = n
    if p == 0 or q == 0:
        return [[] for _ in range(p)]
    cdef i64 *wa = <i64 *> malloc(p * q * sizeof(i64))
    cdef i64 *wb = <i64 *> malloc(q * r * sizeof(i64))
    if wa == NULL or wb == NULL:
        free(wa)
        free(wb)
        raise MemoryError()
    cdef Py_ssize_t i, j, k
    cdef i64 acc
    try:
        for i in range(p):
            row = a[i]
            for k in range(q):
                wa[i * q + k] = _m(row[k], nn)
        for k in range(q):
            row = b[k]
            for j in range(r):
                wb[k * r + j] = _m(row[j], nn)
        out = []
        for i in range(p):
            orow = [0] * r
            for j in range(r):
                acc = 0
                for k in range(q):
                    acc = (acc + wa[i * q + k] * wb[k * r + j]) % nn
                orow[j] = acc
            out.append(orow)
        return out
    finally:
        free(wa)
        free(wb)


cdef struct Work:
    i64 *w
    i64 *u
    Py_ssize_t R
    Py_ssize_t C
    i64 n


cdef void _combine(Work *wk, Py_ssize_t i, Py_ssize_t j, Py_ssize_t col) noexcept nogil:
    # rows i, j <- (s*i + t*j, p*i + q*j), clearing w[j][col]
    cdef i64 g, s, t, p, q, x, y
    cdef Py_ssize_t k
    _gcdex(wk.w[i * wk.C + col], wk.w[j * wk.C + col], &g, &s, &t, &p, &q)
    for k in range(wk.C):
        x = wk.w[i * wk.C + k]
        y = wk.w[j * wk.C + k]
        wk.w[i * wk.C + k] = _m(s * x + t * y, wk.n)
        wk.w[j * wk.C + k] = _m(p * x + q * y, wk.n)
    for k in range(wk.R):
        x = wk.u[i * wk.R + k]
        y = wk.u[j * wk.R + k]
        wk.u[i * wk.R + k] = _m(s * x + t * y, wk.n)
        wk.u[j * wk.R + k] = _m(p * x + q * y, wk.n)


cdef void _scale(Work *wk, Py_ssize_t i, i64 c) noexcept nogil:
    cdef Py_ssize_t k
    for k in range(wk.C):
        wk.w[i * wk.C + k] = _m(c * wk.w[i * wk.C + k], wk.n)
    for k in range(wk.R):
        wk.u[i * wk.R + k] = _m(c * wk.u[i * wk.R + k], wk.n)


cdef void _addmul(Work *wk, Py_ssize_t dst, Py_ssize_t src, i64 c) noexcept nogil:
    c = _m(c, wk.n)
    if c == 0:
        return
    cdef Py_ssize_t k
    for k in range(wk.C):
        wk.w[dst * wk.C + k] = _m(wk.w[dst * wk.C + k] + c * wk.w[src * wk.C + k], wk.n)
    for k in range(wk.R):
        wk.u[dst * wk.R + k] = _m(wk.u[dst * wk.R + k] + c * wk.u[src * wk.R + k], wk.n)


cdef void _swap(Work *wk, Py_ssize_t i, Py_ssize_t j) noexcept nogil:
    cdef Py_ssize_t k
    cdef i64 t
    for k in range(wk.C):
        t = wk.w[i * wk.C + k]
        wk.w[i * wk.C + k] = wk.w[j * wk.C + k]
        wk.w[j * wk.C + k] = t
    for k in range(wk.R):
        t = wk.u[i * wk.R + k]
        wk.u[i * wk.R + k] = wk.u[j * wk.R + k]
        wk.u[j * wk.R + k] = t


cdef Py_ssize_t _echelonize(Work *wk, Py_ssize_t *prow, Py_ssize_t *pcol) noexcept nogil:
    cdef Py_ssize_t np = 0, r = 0, col, i, sel
    cdef i64 uu, d
    for col in range(wk.C):
        if r == wk.R:
            break
        sel = -1
        for i in range(r, wk.R):
            if wk.w[i * wk.C + col] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            _swap(wk, sel, r)
        for i in range(r + 1, wk.R):
            if wk.w[i * wk.C + col] != 0:
                _combine(wk, r, i, col)
        _unit_for(wk.w[r * wk.C + col], wk.n, &uu, &d)
        if uu != 1:
            _scale(wk, r, uu)
        prow[np] = r
        pcol[np] = col
        np += 1
        r += 1
    return np


def row_canonical_mod(a, n):
    cdef Py_ssize_t R = len(a)
    cdef Py_ssize_t C = len(a[0]) if R else 0
    cdef i64 nn = n
    if R == 0:
        return [], []
    cdef Work wk
    wk.R = R
    wk.C = C
    wk.n = nn
    wk.w = <i64 *> malloc(max(R * C, 1) * sizeof(i64))
    wk.u = <i64 *> malloc(R * R * sizeof(i64))
    cdef i64 *cand = <i64 *> malloc(max(C, 1) * sizeof(i64))
    cdef i64 *coeff = <i64 *> malloc(R * sizeof(i64))
    cdef Py_ssize_t *prow = <Py_ssize_t *> malloc(max(R, 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *pcol = <Py_ssize_t *> malloc(max(R, 1) * sizeof(Py_ssize_t))
    if (wk.w == NULL or wk.u == NULL or cand == NULL or coeff == NULL
            or prow == NULL or pcol == NULL):
        free(wk.w)
        free(wk.u)
        free(cand)
        free(coeff)
        free(prow)
        free(pcol)
        raise MemoryError()
    cdef Py_ssize_t i, j, k, np, pi, pj, r, col, r2, col2, slot
    cdef i64 d, mult, x, q
    cdef bint grew, nonzero
    try:
        for i in range(R):
            row = a[i]
            for j in range(C):
                wk.w[i * C + j] = _m(row[j], nn)
        for i in range(R):
            for j in range(R):
                wk.u[i * R + j] = 1 if i == j else 0

        while True:
            np = _echelonize(&wk, prow, pcol)
            grew = False
            for pi in range(np):
                r = prow[pi]
                col = pcol[pi]
                d = wk.w[r * C + col]
                if d == 1:
                    continue
                mult = nn / d
                # candidate Howell row: mult * row_r, reduced against the form
                for k in range(C):
                    cand[k] = _m(mult * wk.w[r * C + k], nn)
                for i in range(R):
                    coeff[i] = 0
                for pj in range(np):
                    r2 = prow[pj]
                    col2 = pcol[pj]
                    x = cand[col2]
                    if x == 0:
                        continue
                    q = x / wk.w[r2 * C + col2]
                    if q:
                        for k in range(C):
                            cand[k] = _m(cand[k] - q * wk.w[r2 * C + k], nn)
                        coeff[r2] = q
                nonzero = False
                for k in range(C):
                    if cand[k] != 0:
                        nonzero = True
                        break
                if nonzero:
                    # materialize via elementary ops into a free zero row, then
                    # re-echelonize at once so at most one extra row is ever live
                    slot = -1
                    for i in range(R - 1, -1, -1):
                        nonzero = False
                        for k in range(C):
                            if wk.w[i * C + k] != 0:
                                nonzero = True
                                break
                        if not nonzero:
                            slot = i
                            break
                    if slot < 0:
                        raise ValueError("howell: no free row; caller must pad input")
                    _addmul(&wk, slot, r, mult)
                    for pj in range(np):
                        r2 = prow[pj]
                        if coeff[r2]:
                            _addmul(&wk, slot, r2, -coeff[r2])
                    grew = True
                    break
            if not grew:
                break

        np = _echelonize(&wk, prow, pcol)
        # reduce entries above each pivot into [0, pivot)
        for pi in range(np):
            r = prow[pi]
            col = pcol[pi]
            d = wk.w[r * C + col]
            for i in range(r):
                q = wk.w[i * C + col] / d
                if q:
                    _addmul(&wk, i, r, -q)

        w_out = [[wk.w[i * C + j] for j in range(C)] for i in range(R)]
        u_out = [[wk.u[i * R + j] for j in range(R)] for i in range(R)]
        return w_out, u_out
    finally:
        free(wk.w)
        free(wk.u)
        free(cand)
        free(coeff)
        free(prow)
        free(pcol)
