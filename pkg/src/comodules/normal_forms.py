"""Row canonical forms, kernels, membership and linear solving.

One canonical form per ring: RREF over the fields, row-style HNF over Z
(positive pivots, entries above a pivot reduced into [0, pivot)), Howell form
over Z/n, and SNF over Z as a separate mode with both transforms.  Everything
else in the package (kernels of maps, particular solutions, membership in a
row span, coset representatives) reduces to these forms via the block matrix
[A^T | I]: its canonical form simultaneously exposes kernel generators (rows
whose left block vanishes) and a triangular basis for solving A x = b by
greedy division on the left blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from ._kernels.pure import _gcdex
from .matrix import Matrix
from .rings import RingDescriptor


@dataclass(frozen=True)
class CanonicalForm:
    form: Matrix
    row_transform: Matrix
    col_transform: Matrix | None
    kind: str  # RREF | HNF | SNF | HOWELL


def _rref_fraction(a: list[list[Fraction]], ncols: int) -> tuple[list, list]:
    nr = len(a)
    w = [list(row) for row in a]
    u = [[Fraction(int(i == j)) for j in range(nr)] for i in range(nr)]
    r = 0
    for col in range(ncols):
        if r == nr:
            break
        sel = None
        for i in range(r, nr):
            if w[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        if sel != r:
            w[sel], w[r] = w[r], w[sel]
            u[sel], u[r] = u[r], u[sel]
        piv = w[r][col]
        if piv != 1:
            inv = Fraction(1) / piv
            w[r] = [x * inv for x in w[r]]
            u[r] = [x * inv for x in u[r]]
        for i in range(nr):
            if i != r and w[i][col] != 0:
                f = w[i][col]
                w[i] = [x - f * y for x, y in zip(w[i], w[r])]
                u[i] = [x - f * y for x, y in zip(u[i], u[r])]
        r += 1
    return w, u


def _hnf_int(a: list[list[int]], ncols: int) -> tuple[list, list]:
    nr = len(a)
    w = [list(map(int, row)) for row in a]
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nr:
            break
        sel = None
        for i in range(r, nr):
            if w[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        if sel != r:
            w[sel], w[r] = w[r], w[sel]
            u[sel], u[r] = u[r], u[sel]
        for i in range(r + 1, nr):
            if w[i][col] != 0:
                g, s, t, p, q = _gcdex(w[r][col], w[i][col])
                wr, wi = w[r], w[i]
                w[r] = [s * x + t * y for x, y in zip(wr, wi)]
                w[i] = [p * x + q * y for x, y in zip(wr, wi)]
                ur, ui = u[r], u[i]
                u[r] = [s * x + t * y for x, y in zip(ur, ui)]
                u[i] = [p * x + q * y for x, y in zip(ur, ui)]
        if w[r][col] < 0:
            w[r] = [-x for x in w[r]]
            u[r] = [-x for x in u[r]]
        pivots.append((r, col))
        r += 1
    for (r, col) in pivots:
        d = w[r][col]
        for i in range(r):
            q = w[i][col] // d
            if q:
                w[i] = [x - q * y for x, y in zip(w[i], w[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
    return w, u


def _snf_int(a: list[list[int]], ncols: int) -> tuple[list, list, list]:
    """Smith normal form over Z: returns (D, U, V) with D = U*A*V."""
    nr = len(a)
    w = [list(map(int, row)) for row in a]
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def row_combine(i: int, k: int, col: int) -> None:
        g, s, t, p, q = _gcdex(w[i][col], w[k][col])
        wi, wk = w[i], w[k]
        w[i] = [s * x + t * y for x, y in zip(wi, wk)]
        w[k] = [p * x + q * y for x, y in zip(wi, wk)]
        ui, uk = u[i], u[k]
        u[i] = [s * x + t * y for x, y in zip(ui, uk)]
        u[k] = [p * x + q * y for x, y in zip(ui, uk)]

    def col_combine(j: int, k: int, row: int) -> None:
        g, s, t, p, q = _gcdex(w[row][j], w[row][k])
        for ww in w:
            xj, xk = ww[j], ww[k]
            ww[j] = s * xj + t * xk
            ww[k] = p * xj + q * xk
        for vv in v:
            xj, xk = vv[j], vv[k]
            vv[j] = s * xj + t * xk
            vv[k] = p * xj + q * xk

    t0 = 0
    limit = min(nr, ncols)
    while t0 < limit:
        # locate a nonzero entry of smallest magnitude in the working block
        best = None
        for i in range(t0, nr):
            for j in range(t0, ncols):
                x = abs(w[i][j])
                if x and (best is None or x < best[0]):
                    best = (x, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t0:
            w[bi], w[t0] = w[t0], w[bi]
            u[bi], u[t0] = u[t0], u[bi]
        if bj != t0:
            for ww in w:
                ww[bj], ww[t0] = ww[t0], ww[bj]
            for vv in v:
                vv[bj], vv[t0] = vv[t0], vv[bj]
        while True:
            for i in range(t0 + 1, nr):
                if w[i][t0]:
                    row_combine(t0, i, t0)
            for j in range(t0 + 1, ncols):
                if w[t0][j]:
                    col_combine(t0, j, t0)
            if any(w[i][t0] for i in range(t0 + 1, nr)):
                continue
            if any(w[t0][j] for j in range(t0 + 1, ncols)):
                continue
            d = w[t0][t0]
            bad = None
            for i in range(t0 + 1, nr):
                for j in range(t0 + 1, ncols):
                    if w[i][j] % d != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            w[t0] = [x + y for x, y in zip(w[t0], w[bad])]
            u[t0] = [x + y for x, y in zip(u[t0], u[bad])]
        if w[t0][t0] < 0:
            w[t0] = [-x for x in w[t0]]
            u[t0] = [-x for x in u[t0]]
        t0 += 1
    return w, u, v


def canonical_form(m: Matrix, mode: str = "auto") -> CanonicalForm:
    """Canonical row form with transforms.

    mode "auto" picks RREF (fields), HNF (Z) or Howell (Z/n); mode "snf" is
    available over Z only and also returns a column transform.

    Over Z/n the Howell form of an r x c matrix can have more than r nonzero
    generators, so the input is zero-padded to max(r, c + 1) rows internally
    (at most c pivot rows plus one working row for the closure); the returned
    form and (invertible) row transform refer to the padded matrix.  All
    other rings keep the input shape.  Re-running on a form is a fixed point
    in every mode.
    """
    ring = m.ring
    if mode == "snf":
        if ring.kind != "Z":
            raise ValueError("SNF mode is defined over Z only")
        rows = [list(r) for r in m.rows]
        d, u, v = _snf_int(rows, m.ncols)
        return CanonicalForm(Matrix(ring, d, m.ncols), Matrix(ring, u, m.nrows),
                             Matrix(ring, v, m.ncols), "SNF")
    if mode != "auto":
        raise ValueError(f"unknown canonical form mode {mode!r}")
    rows = [list(r) for r in m.rows]
    if ring.kind == "Q":
        w, u = _rref_fraction(rows, m.ncols)
        return CanonicalForm(Matrix(ring, w, m.ncols), Matrix(ring, u, m.nrows), None, "RREF")
    if ring.kind == "GF":
        if m.nrows == 0:
            return CanonicalForm(m, Matrix.identity(ring, 0), None, "RREF")
        w, u = _kernels.row_canonical_mod(rows, ring.modulus)
        return CanonicalForm(Matrix(ring, w, m.ncols), Matrix(ring, u, m.nrows), None, "RREF")
    if ring.kind == "Z":
        w, u = _hnf_int(rows, m.ncols)
        return CanonicalForm(Matrix(ring, w, m.ncols), Matrix(ring, u, m.nrows), None, "HNF")
    # Z/n: pad so the Howell closure always has room
    if m.ncols == 0:
        return CanonicalForm(m, Matrix.identity(ring, m.nrows), None, "HOWELL")
    height = max(m.nrows, m.ncols + 1)
    rows.extend([ring.zero] * m.ncols for _ in range(height - m.nrows))
    w, u = _kernels.row_canonical_mod(rows, ring.modulus)
    return CanonicalForm(Matrix(ring, w, m.ncols), Matrix(ring, u, height), None, "HOWELL")


def canonical_rows(m: Matrix) -> Matrix:
    """Canonical form with zero rows stripped: the canonical generating set of
    the row span.  This is the normal form used for relation matrices."""
    form = canonical_form(m).form
    keep = [r for r in form.rows if any(x != m.ring.zero for x in r)]
    return Matrix(m.ring, keep, m.ncols)


def pivot_positions(h: Matrix) -> list[tuple[int, int]]:
    """[(row, col)] of leading nonzero entries; h must be in echelon form."""
    out = []
    z = h.ring.zero
    for i, row in enumerate(h.rows):
        for j, x in enumerate(row):
            if x != z:
                out.append((i, j))
                break
    return out


def reduce_vector(h: Matrix, v, with_coeffs: bool = False):
    """Reduce v against canonical rows h; returns the canonical coset
    representative of v + rowspan(h) (and the coefficients used).

    A zero remainder is equivalent to membership of v in the row span.
    """
    ring = h.ring
    res = [ring.normalize(x) for x in v]
    coeffs = [ring.zero] * h.nrows
    field = ring.is_field
    for (i, j) in pivot_positions(h):
        x = res[j]
        if x == 0:
            continue
        d = h.rows[i][j]
        if field:
            q = x / d if ring.kind == "Q" else (x * ring.inv(d)) % ring.modulus
        else:
            q = x // d
        if q:
            row = h.rows[i]
            if ring.is_modular:
                n = ring.modulus
                res = [(a - q * b) % n for a, b in zip(res, row)]
            else:
                res = [a - q * b for a, b in zip(res, row)]
            coeffs[i] = ring.normalize(q)
    if with_coeffs:
        return res, coeffs
    return res


def in_row_span(h: Matrix, v) -> bool:
    """Membership of v in the row span of the canonical matrix h."""
    z = h.ring.zero
    return all(x == z for x in reduce_vector(h, v))


class LinearSolver:
    """Repeated exact solving of A x = b for a fixed matrix A.

    Factors the canonical form of [A^T | I] once; kernel generators and
    particular solutions are read off from it.
    """

    def __init__(self, a: Matrix):
        self.a = a
        self.ring = a.ring
        p, q = a.nrows, a.ncols
        self.p = p
        self.q = q
        block = a.T.hstack(Matrix.identity(a.ring, q))
        self.h = canonical_form(block).form
        self._pivots = pivot_positions(self.h)
        self._left = [(i, j) for (i, j) in self._pivots if j < p]

    def kernel_rows(self) -> Matrix:
        """Generators of {x : A x = 0} as rows (a canonical generating set)."""
        z = self.ring.zero
        rows = []
        for i, row in enumerate(self.h.rows):
            if all(x == z for x in row[: self.p]) and any(x != z for x in row[self.p:]):
                rows.append(row[self.p:])
        return Matrix(self.ring, rows, self.q)

    def solve(self, b) -> tuple | None:
        """One particular solution of A x = b, or None."""
        ring = self.ring
        res = [ring.normalize(x) for x in b]
        if len(res) != self.p:
            raise ValueError("rhs length mismatch")
        x = [ring.zero] * self.q
        field = ring.is_field
        modn = ring.modulus if ring.is_modular else None
        for (i, j) in self._left:
            r = res[j]
            if r == 0:
                continue
            d = self.h.rows[i][j]
            if field:
                qq = r / d if ring.kind == "Q" else (r * ring.inv(d)) % modn
            else:
                if r % d != 0:
                    return None
                qq = r // d
            row = self.h.rows[i]
            if modn is not None:
                res = [(a - qq * bb) % modn for a, bb in zip(res, row[: self.p])]
                x = [(a + qq * bb) % modn for a, bb in zip(x, row[self.p:])]
            else:
                res = [a - qq * bb for a, bb in zip(res, row[: self.p])]
                x = [a + qq * bb for a, bb in zip(x, row[self.p:])]
        if any(v != ring.zero for v in res):
            return None
        return tuple(x)

    def solve_matrix(self, b: Matrix) -> Matrix | None:
        """Solve A X = B columnwise; None if any column is unsolvable."""
        cols = []
        for j in range(b.ncols):
            x = self.solve(b.column(j))
            if x is None:
                return None
            cols.append(x)
        return Matrix.from_cols(self.ring, cols, self.q)


def kernel_rows(a: Matrix) -> Matrix:
    return LinearSolver(a).kernel_rows()


def invariant_factors(m: Matrix) -> list[int]:
    """Nonzero diagonal of the SNF over Z."""
    d = canonical_form(m, mode="snf").form
    out = []
    for i in range(min(d.nrows, d.ncols)):
        if d.rows[i][i] != 0:
            out.append(int(d.rows[i][i]))
    return out
