"""Named example comodules and Morita-Takeuchi contexts used across the test
suite and shipped as reference material for the command line front end."""

from __future__ import annotations

from .coalgebras import grouplike_coalgebra, matrix_coalgebra
from .comodule import Bicomodule, Comodule, regular_comodule
from .cotensor import cotensor
from .matrix import Matrix
from .modules import ModuleMap, free_module, solve_mod_relations
from .morita import MoritaContext


def column_comodule(ring, n: int) -> Comodule:
    """R^n as a right comodule over the n-by-n matrix coalgebra:
    rho(x_b) = sum_a x_a (x) e_ab."""
    mc = matrix_coalgebra(ring, n)
    d = n * n
    rows = [[ring.zero] * n for _ in range(n * d)]
    for a in range(n):
        for b in range(n):
            rows[a * d + (a * n + b)][b] = ring.one
    return Comodule(mc, "right", free_module(ring, n), Matrix(ring, rows, n))


def row_comodule(ring, n: int) -> Comodule:
    """R^n as a left comodule over the matrix coalgebra:
    rho(r_i) = sum_j e_ij (x) r_j."""
    mc = matrix_coalgebra(ring, n)
    rows = [[ring.zero] * n for _ in range(n * n * n)]
    for i in range(n):
        for j in range(n):
            rows[(i * n + j) * n + j][i] = ring.one
    return Comodule(mc, "left", free_module(ring, n), Matrix(ring, rows, n))


def _corestrict(ct, ambient_map: Matrix) -> ModuleMap:
    sol = solve_mod_relations(ct.inclusion.matrix, ct.ambient.relations,
                              ambient_map)
    if sol is None:
        raise ValueError("map does not land in the cotensor submodule")
    return ModuleMap(free_module(ct.m.ring, ambient_map.ncols), ct.module, sol)


def trivial_context(c) -> MoritaContext:
    """(C, C, C, C) with both structure maps the corestriction of the
    comultiplication."""
    reg = Bicomodule(c, c, free_module(c.ring, c.dim), c.delta, c.delta)
    ct = cotensor(reg, reg)
    f = _corestrict(ct, c.delta)
    return MoritaContext(c, c, reg, reg, f, f)


def comatrix_context(ring, n: int = 2, f_scale=None, g_scale=None
                     ) -> MoritaContext:
    """The context between the n-by-n matrix coalgebra D and the base ring
    C = grouplike(R, 1): M the row comodule, N the column comodule,
    f(e_ij) = r_i (x) x_j and g(1) = sum_j x_j (x) r_j.

    f_scale and g_scale multiply the respective structure map; any value
    other than a unit breaks strictness or the triangles and exists for
    mutation tests."""
    d = matrix_coalgebra(ring, n)
    c = grouplike_coalgebra(ring, 1)
    col = column_comodule(ring, n)
    row = row_comodule(ring, n)
    eye = Matrix.identity(ring, n)
    m = Bicomodule(d, c, row.carrier, row.rho, eye)
    nn = Bicomodule(c, d, col.carrier, eye, col.rho)
    ct_mn = cotensor(m, nn)
    ct_nm = cotensor(nn, m)
    f_amb = Matrix.identity(ring, n * n)
    if f_scale is not None:
        f_amb = f_amb.scale(f_scale)
    g_amb = Matrix(ring, [[ring.one if i % (n + 1) == 0 else ring.zero]
                          for i in range(n * n)], 1)
    if g_scale is not None:
        g_amb = g_amb.scale(g_scale)
    f = _corestrict(ct_mn, f_amb)
    g = _corestrict(ct_nm, g_amb)
    return MoritaContext(d, c, m, nn, f, g)


def nonstrict_grouplike_context(ring) -> MoritaContext:
    """A context that verifies but is not strict: C = grouplike(R, 2),
    D = grouplike(R, 1), both carriers concentrated at c0, and g killing
    the second grouplike of C."""
    c = grouplike_coalgebra(ring, 2)
    d = grouplike_coalgebra(ring, 1)
    one = Matrix.identity(ring, 1)
    at_c0_right = Matrix(ring, [[ring.one], [ring.zero]], 1)
    m = Bicomodule(d, c, free_module(ring, 1), one, at_c0_right)
    nn = Bicomodule(c, d, free_module(ring, 1), at_c0_right, one)
    ct_mn = cotensor(m, nn)
    ct_nm = cotensor(nn, m)
    f = _corestrict(ct_mn, one)
    g_amb = Matrix(ring, [[ring.one, ring.zero]], 2)
    sol = solve_mod_relations(ct_nm.inclusion.matrix, ct_nm.ambient.relations,
                              g_amb)
    g = ModuleMap(free_module(ring, 2), ct_nm.module, sol)
    return MoritaContext(d, c, m, nn, f, g)
