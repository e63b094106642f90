"""Canonical forms and the linear solver.

The fixed expected values below were computed by hand or by the independent
oracles in this file (determinantal divisors for SNF, brute-force enumeration
for kernels over small Z/n), never by running the code under test.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comodules import GF, QQ, ZZ, Matrix, Zmod, canonical_form, canonical_rows
from comodules.normal_forms import (LinearSolver, in_row_span,
                                    invariant_factors, kernel_rows,
                                    pivot_positions, reduce_vector)


def snf_invariants_by_minors(rows, k_max):
    """Independent SNF oracle: d_k = gcd of all k x k minors, invariant
    factor s_k = d_k / d_{k-1}."""

    def minor(mat, rr, cc):
        sub = [[mat[i][j] for j in cc] for i in rr]
        n = len(sub)
        if n == 1:
            return sub[0][0]
        total = 0
        for j in range(n):
            sign = -1 if j % 2 else 1
            rest = [r[:j] + r[j + 1:] for r in sub[1:]]
            total += sign * sub[0][j] * _det(rest)
        return total

    def _det(mat):
        n = len(mat)
        if n == 0:
            return 1
        if n == 1:
            return mat[0][0]
        total = 0
        for j in range(n):
            sign = -1 if j % 2 else 1
            rest = [r[:j] + r[j + 1:] for r in mat[1:]]
            total += sign * mat[0][j] * _det(rest)
        return total

    nr, nc = len(rows), len(rows[0])
    out = []
    prev = 1
    for k in range(1, k_max + 1):
        g = 0
        for rr in combinations(range(nr), k):
            for cc in combinations(range(nc), k):
                g = gcd(g, minor(rows, rr, cc))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def brute_force_kernel(rows, n, ncols_a):
    """All x over Z/n with A x = 0, by enumeration."""
    nr = len(rows)
    sols = []
    idx = [0] * ncols_a
    total = n ** ncols_a
    for t in range(total):
        v, x = t, []
        for _ in range(ncols_a):
            x.append(v % n)
            v //= n
        if all(sum(rows[i][j] * x[j] for j in range(ncols_a)) % n == 0 for i in range(nr)):
            sols.append(tuple(x))
    return set(sols)


class TestFrozenValues:
    def test_snf_2468(self):
        rows = [[2, 4], [6, 8]]
        assert snf_invariants_by_minors(rows, 2) == [2, 4]
        m = Matrix(ZZ, rows, 2)
        assert invariant_factors(m) == [2, 4]
        cf = canonical_form(m, mode="snf")
        assert cf.form == Matrix(ZZ, [[2, 0], [0, 4]], 2)
        assert cf.row_transform @ m @ cf.col_transform == cf.form

    def test_hnf_2468(self):
        m = Matrix(ZZ, [[2, 4], [6, 8]], 2)
        cf = canonical_form(m)
        assert cf.kind == "HNF"
        assert cf.form == Matrix(ZZ, [[2, 0], [0, 4]], 2)
        assert cf.row_transform @ m == cf.form

    def test_howell_21_mod4(self):
        m = Matrix(Zmod(4), [[2, 1]], 2)
        cf = canonical_form(m)
        assert cf.kind == "HOWELL"
        assert cf.form == Matrix(Zmod(4), [[2, 1], [0, 2], [0, 0]], 2)
        assert canonical_rows(m) == Matrix(Zmod(4), [[2, 1], [0, 2]], 2)
        # the transform refers to the input zero-padded to ncols + 1 rows
        padded = Matrix(Zmod(4), [[2, 1], [0, 0], [0, 0]], 2)
        assert cf.row_transform @ padded == cf.form

    def test_howell_needs_working_row_mod12(self):
        # all three rows carry pivots and the closure of the first pivot
        # contributes (0, 2, 0), which no pivot divides
        m = Matrix(Zmod(12), [[0, 0, 1], [2, 1, 0], [0, 4, 0]], 3)
        h = canonical_rows(m)
        assert in_row_span(h, [0, 2, 0])
        again = canonical_rows(h)
        assert again == h

    def test_kernel_of_2_mod4(self):
        k = kernel_rows(Matrix(Zmod(4), [[2]], 1))
        assert k == Matrix(Zmod(4), [[2]], 1)
        assert brute_force_kernel([[2]], 4, 1) == {(0,), (2,)}

    def test_rref_dependent_rows(self):
        m = Matrix(QQ, [[1, 2], [2, 4]], 2)
        cf = canonical_form(m)
        assert cf.kind == "RREF"
        assert cf.form == Matrix(QQ, [[1, 2], [0, 0]], 2)

    def test_rref_gf5(self):
        m = Matrix(GF(5), [[2, 1], [1, 1]], 2)  # det = 1
        cf = canonical_form(m)
        assert cf.form == Matrix.identity(GF(5), 2)


small_int = st.integers(min_value=-9, max_value=9)


def matrices(ring, max_dim=4, entries=small_int):
    def build(draw_rows):
        nr, nc, flat = draw_rows
        rows = [flat[i * nc:(i + 1) * nc] for i in range(nr)]
        return Matrix(ring, rows, nc)

    return st.tuples(
        st.integers(min_value=1, max_value=max_dim),
        st.integers(min_value=1, max_value=max_dim),
    ).flatmap(lambda s: st.tuples(
        st.just(s[0]), st.just(s[1]),
        st.lists(entries, min_size=s[0] * s[1], max_size=s[0] * s[1]),
    )).map(build)


@pytest.mark.parametrize("ring", [QQ, ZZ, GF(3), Zmod(4), Zmod(12)])
@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_form_is_transform_times_input(ring, data):
    m = data.draw(matrices(ring))
    cf = canonical_form(m)
    src = m
    if cf.row_transform.nrows != m.nrows:
        pad = Matrix.zeros(ring, cf.row_transform.nrows - m.nrows, m.ncols)
        src = m.vstack(pad)
    assert cf.row_transform @ src == cf.form


@pytest.mark.parametrize("ring", [QQ, ZZ, GF(3), Zmod(4), Zmod(12)])
@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_canonical_form_is_fixed_point(ring, data):
    m = data.draw(matrices(ring))
    form = canonical_form(m).form
    again = canonical_form(form).form
    assert again == form


@pytest.mark.parametrize("ring", [QQ, ZZ, GF(3), Zmod(4), Zmod(12)])
@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_kernel_rows_annihilate(ring, data):
    a = data.draw(matrices(ring))
    k = kernel_rows(a)
    if k.nrows:
        assert (a @ k.T).is_zero()


@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_kernel_complete_against_enumeration_mod4(data):
    n = 4
    nr = data.draw(st.integers(min_value=1, max_value=2))
    nc = data.draw(st.integers(min_value=1, max_value=3))
    flat = data.draw(st.lists(st.integers(min_value=0, max_value=3),
                              min_size=nr * nc, max_size=nr * nc))
    rows = [flat[i * nc:(i + 1) * nc] for i in range(nr)]
    a = Matrix(Zmod(n), rows, nc)
    k = kernel_rows(a)
    expected = brute_force_kernel(rows, n, nc)
    got = set()
    for t in range(n ** k.nrows):
        v, lam = t, []
        for _ in range(k.nrows):
            lam.append(v % n)
            v //= n
        x = [0] * nc
        for i, li in enumerate(lam):
            for j in range(nc):
                x[j] = (x[j] + li * k.rows[i][j]) % n
        got.add(tuple(x))
    assert got == expected


@pytest.mark.parametrize("ring", [QQ, ZZ, GF(3), Zmod(4), Zmod(12)])
@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_solver_finds_consistent_rhs(ring, data):
    a = data.draw(matrices(ring, max_dim=3))
    xs = data.draw(st.lists(small_int, min_size=a.ncols, max_size=a.ncols))
    x = Matrix.col_vector(ring, xs)
    b = a @ x
    solver = LinearSolver(a)
    got = solver.solve(b.column(0))
    assert got is not None
    back = a @ Matrix.col_vector(ring, list(got))
    assert back == b


@pytest.mark.parametrize("ring", [QQ, ZZ, GF(3), Zmod(4), Zmod(12)])
@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_reduce_vector_is_canonical_on_cosets(ring, data):
    m = data.draw(matrices(ring, max_dim=3))
    h = canonical_rows(m)
    v = data.draw(st.lists(small_int, min_size=m.ncols, max_size=m.ncols))
    lam = data.draw(st.lists(small_int, min_size=h.nrows, max_size=h.nrows))
    shifted = list(v)
    for i, li in enumerate(lam):
        for j in range(m.ncols):
            shifted[j] = ring.add(shifted[j], ring.mul(ring.normalize(li), h.rows[i][j]))
    assert reduce_vector(h, v) == reduce_vector(h, shifted)


def test_in_row_span_examples():
    h = canonical_rows(Matrix(ZZ, [[2, 0], [0, 3]], 2))
    assert in_row_span(h, [4, 3])
    assert not in_row_span(h, [1, 0])
    assert not in_row_span(h, [3, 3])


def test_howell_weak_entry_not_in_naive_span():
    # over Z/4 the row [2, 1] generates (2, 1) and (0, 2) = 2*(2, 1) mod 4;
    # a non-Howell echelon form would miss the second generator
    h = canonical_rows(Matrix(Zmod(4), [[2, 1]], 2))
    assert in_row_span(h, [0, 2])


def test_pivot_positions():
    h = Matrix(ZZ, [[2, 0, 1], [0, 0, 3]], 3)
    assert pivot_positions(h) == [(0, 0), (1, 2)]
