"""Pure-Python modular kernels: word-size matmul and Howell-form row
reduction over Z/n.  Semantics are identical to the compiled backend in
_fast.pyx; tests cross-check the two.

The row canonical form over Z/n is the Howell form: row echelon, each pivot
normalized to the divisor gcd(pivot, n) of n, entries above a pivot reduced
into [0, pivot), and the span closed under the Howell property (for every
pivot d at row r, (n/d)*row_r is reducible to zero by the rows of the form).
For prime n the closure step is vacuous and the result is the RREF.

row_canonical_mod returns (H, U) with H = U * A mod n and U invertible mod n.
If extra zero rows are needed for the closure (only possible for composite n)
the caller must pad the input; max(nrows, ncols + 1) rows always suffice,
because the form keeps at most ncols pivot rows and a closure row is absorbed
by re-echelonization before the next one is materialized.
"""

from __future__ import annotations

from math import gcd

NAME = "pure"


def matmul_mod(a: list[list[int]], b: list[list[int]], n: int) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % n for col in bt] for row in a]


def _gcdex(a: int, b: int) -> tuple[int, int, int, int, int]:
    """(g, s, t, u, v) with s*a + t*b = g = gcd(a,b), u*a + v*b = 0 and
    det [[s,t],[u,v]] = 1, so the 2x2 transform is invertible over any Z/n."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    g = old_r
    if g == 0:
        return 0, 1, 0, 0, 1
    return g, old_s, old_t, -(b // g), a // g


def _unit_for(a: int, n: int) -> tuple[int, int]:
    """(u, d) with d = gcd(a, n), u a unit mod n, u*a = d mod n."""
    d = gcd(a, n)
    m = n // d
    if m == 1:
        return 1, d
    u = pow((a // d) % m, -1, m)
    while gcd(u, n) != 1:
        u += m
    return u % n, d


def row_canonical_mod(a: list[list[int]], n: int) -> tuple[list[list[int]], list[list[int]]]:
    R = len(a)
    C = len(a[0]) if R else 0
    w = [[x % n for x in row] for row in a]
    u = [[1 if i == j else 0 for j in range(R)] for i in range(R)]

    def combine(i: int, j: int, col: int) -> None:
        # rows i, j <- (s*i + t*j, p*i + q*j), clearing w[j][col]
        g, s, t, p, q = _gcdex(w[i][col], w[j][col])
        wi, wj = w[i], w[j]
        w[i] = [(s * x + t * y) % n for x, y in zip(wi, wj)]
        w[j] = [(p * x + q * y) % n for x, y in zip(wi, wj)]
        ui, uj = u[i], u[j]
        u[i] = [(s * x + t * y) % n for x, y in zip(ui, uj)]
        u[j] = [(p * x + q * y) % n for x, y in zip(ui, uj)]

    def scale(i: int, c: int) -> None:
        w[i] = [(c * x) % n for x in w[i]]
        u[i] = [(c * x) % n for x in u[i]]

    def addmul(dst: int, src: int, c: int) -> None:
        c %= n
        if c == 0:
            return
        w[dst] = [(x + c * y) % n for x, y in zip(w[dst], w[src])]
        u[dst] = [(x + c * y) % n for x, y in zip(u[dst], u[src])]

    def swap(i: int, j: int) -> None:
        w[i], w[j] = w[j], w[i]
        u[i], u[j] = u[j], u[i]

    def echelonize() -> list[tuple[int, int]]:
        """Sort rows into echelon form; returns [(row, pivot_col)]."""
        pivots = []
        r = 0
        for col in range(C):
            if r == R:
                break
            sel = None
            for i in range(r, R):
                if w[i][col] != 0:
                    sel = i
                    break
            if sel is None:
                continue
            if sel != r:
                swap(sel, r)
            for i in range(r + 1, R):
                if w[i][col] != 0:
                    combine(r, i, col)
            uu, d = _unit_for(w[r][col], n)
            if uu != 1:
                scale(r, uu)
            pivots.append((r, col))
            r += 1
        return pivots

    while True:
        pivots = echelonize()
        grew = False
        for (r, col) in pivots:
            d = w[r][col]
            if d == 1:
                continue
            mult = n // d
            # candidate Howell row: mult * row_r, reduced against the form
            cand = [(mult * x) % n for x in w[r]]
            coeffs = {}
            for (r2, col2) in pivots:
                x = cand[col2]
                if x == 0:
                    continue
                q = x // w[r2][col2]
                if q:
                    cand = [(cx - q * rx) % n for cx, rx in zip(cand, w[r2])]
                    coeffs[r2] = q
            if any(cand):
                # materialize via elementary ops into a free zero row, then
                # re-echelonize at once so at most one extra row is ever live
                slot = None
                for i in range(R - 1, -1, -1):
                    if not any(w[i]):
                        slot = i
                        break
                if slot is None:
                    raise ValueError("howell: no free row; caller must pad input")
                addmul(slot, r, mult)
                for r2, q in coeffs.items():
                    addmul(slot, r2, -q)
                grew = True
                break
        if not grew:
            break

    pivots = echelonize()
    # reduce entries above each pivot into [0, pivot)
    for (r, col) in pivots:
        d = w[r][col]
        for i in range(r):
            q = w[i][col] // d
            if q:
                addmul(i, r, -q)
    return w, u
