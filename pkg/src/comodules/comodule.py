"""Comodules and bicomodules over coalgebras, structure checks and the
R-module of colinear maps.

Coactions are stored as matrices on generator coordinates.  For a right
comodule with carrier generators g over a coalgebra of rank d the coaction is
a (g*d) x g matrix into the tensor basis m_a (x) c_k at flat index a*d + k;
for a left comodule it is (d*g) x g with c_k (x) m_a at flat index k*g + a.
Input carriers are typically free; carriers computed by the cotensor layer
may be honest presentations, so all structure equalities are tested modulo
the codomain relations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebras import Coalgebra, LawCheck, StructureReport
from .matrix import Matrix, vstack_all
from .modules import (ModuleMap, PresentedModule, direct_sum_modules,
                      free_module, hom_module, solution_rows,
                      solve_mod_relations, tensor_modules)
from .normal_forms import in_row_span


@dataclass(frozen=True)
class Comodule:
    coalgebra: Coalgebra
    side: str  # "right" or "left"
    carrier: PresentedModule
    rho: Matrix

    def __post_init__(self):
        if self.side not in ("right", "left"):
            raise ValueError(f"side must be 'right' or 'left', not {self.side!r}")
        g, d = self.carrier.generators, self.coalgebra.dim
        if self.rho.shape != (g * d, g):
            raise ValueError(f"coaction must be {g * d} x {g}, got {self.rho.shape}")
        if self.carrier.ring != self.coalgebra.ring:
            raise ValueError("carrier and coalgebra ring mismatch")

    @property
    def ring(self):
        return self.coalgebra.ring

    def tensor_carrier(self) -> PresentedModule:
        """Carrier of M (x) C (right) or C (x) M (left)."""
        cfree = free_module(self.ring, self.coalgebra.dim)
        if self.side == "right":
            return tensor_modules(self.carrier, cfree)
        return tensor_modules(cfree, self.carrier)

    def rho_map(self) -> ModuleMap:
        """The coaction as a map of presented modules; raises ValueError when
        it is not well defined on the presentation."""
        return ModuleMap(self.carrier, self.tensor_carrier(), self.rho)

    def __repr__(self) -> str:
        return (f"Comodule({self.side}, over={self.coalgebra.name or 'C'}, "
                f"gens={self.carrier.generators})")


def _maps_equal_mod(cod: PresentedModule, a: Matrix, b: Matrix) -> LawCheck | None:
    diff = a - b
    rel = cod.relations
    for j in range(diff.ncols):
        col = diff.column(j)
        if not in_row_span(rel, col):
            return LawCheck("", False, column=j, defect=tuple(col))
    return None


def check_comodule(m: Comodule) -> StructureReport:
    """Well-definedness on the presentation, coassociativity and the counit
    law, all modulo the codomain relations."""
    ring = m.ring
    d = m.coalgebra.dim
    g = m.carrier.generators
    checks = []
    try:
        m.rho_map()
        checks.append(LawCheck("well defined", True))
    except ValueError:
        checks.append(LawCheck("well defined", False))
        return StructureReport(False, tuple(checks))
    eye_g = Matrix.identity(ring, g)
    eye_d = Matrix.identity(ring, d)
    cfree = free_module(ring, d)
    if m.side == "right":
        big = tensor_modules(m.carrier, tensor_modules(cfree, cfree))
        lhs = m.rho.kron(eye_d) @ m.rho          # (rho (x) id) rho
        rhs = eye_g.kron(m.coalgebra.delta) @ m.rho  # (id (x) Delta) rho
        counit_m = eye_g.kron(m.coalgebra.epsilon) @ m.rho
    else:
        big = tensor_modules(tensor_modules(cfree, cfree), m.carrier)
        lhs = eye_d.kron(m.rho) @ m.rho          # (id (x) rho) rho
        rhs = m.coalgebra.delta.kron(eye_g) @ m.rho  # (Delta (x) id) rho
        counit_m = m.coalgebra.epsilon.kron(eye_g) @ m.rho
    bad = _maps_equal_mod(big, lhs, rhs)
    checks.append(LawCheck("coassociativity", True) if bad is None else
                  LawCheck("coassociativity", False, bad.column, bad.defect))
    bad = _maps_equal_mod(m.carrier, counit_m, eye_g)
    checks.append(LawCheck("counit", True) if bad is None else
                  LawCheck("counit", False, bad.column, bad.defect))
    return StructureReport(all(c.ok for c in checks), tuple(checks))


@dataclass(frozen=True)
class Bicomodule:
    """A (D, C)-bicomodule: left D-coaction and right C-coaction on one
    carrier."""
    left_coalgebra: Coalgebra
    right_coalgebra: Coalgebra
    carrier: PresentedModule
    rho_left: Matrix  # (dim(D) * g) x g
    rho_right: Matrix  # (g * dim(C)) x g

    def __post_init__(self):
        g = self.carrier.generators
        dd, dc = self.left_coalgebra.dim, self.right_coalgebra.dim
        if self.rho_left.shape != (dd * g, g):
            raise ValueError("left coaction shape mismatch")
        if self.rho_right.shape != (g * dc, g):
            raise ValueError("right coaction shape mismatch")

    @property
    def ring(self):
        return self.carrier.ring

    def left_comodule(self) -> Comodule:
        return Comodule(self.left_coalgebra, "left", self.carrier, self.rho_left)

    def right_comodule(self) -> Comodule:
        return Comodule(self.right_coalgebra, "right", self.carrier, self.rho_right)


def check_bicomodule(b: Bicomodule) -> StructureReport:
    """Both comodule laws plus the compatibility square
    (id_D (x) rho_right) rho_left = (rho_left (x) id_C) rho_right."""
    left_report = check_comodule(b.left_comodule())
    right_report = check_comodule(b.right_comodule())
    checks = [LawCheck(f"left {c.law}", c.ok, c.column, c.defect)
              for c in left_report.checks]
    checks += [LawCheck(f"right {c.law}", c.ok, c.column, c.defect)
               for c in right_report.checks]
    ring = b.ring
    dd, dc = b.left_coalgebra.dim, b.right_coalgebra.dim
    g = b.carrier.generators
    dfree = free_module(ring, dd)
    cfree = free_module(ring, dc)
    big = tensor_modules(dfree, tensor_modules(b.carrier, cfree))
    lhs = Matrix.identity(ring, dd).kron(b.rho_right) @ b.rho_left
    rhs = b.rho_left.kron(Matrix.identity(ring, dc)) @ b.rho_right
    bad = _maps_equal_mod(big, lhs, rhs)
    checks.append(LawCheck("compatibility", True) if bad is None else
                  LawCheck("compatibility", False, bad.column, bad.defect))
    return StructureReport(all(c.ok for c in checks), tuple(checks))


def regular_comodule(c: Coalgebra, side: str = "right") -> Comodule:
    """C as a comodule over itself via Delta (either side)."""
    return Comodule(c, side, free_module(c.ring, c.dim), c.delta)


def cofree_comodule(c: Coalgebra, w: PresentedModule, side: str = "right") -> Comodule:
    """W (x) C with coaction id_W (x) Delta (right side), or C (x) W with
    Delta (x) id_W (left side)."""
    ring = c.ring
    cfree = free_module(ring, c.dim)
    if side == "right":
        carrier = tensor_modules(w, cfree)
        rho = Matrix.identity(ring, w.generators).kron(c.delta)
    else:
        carrier = tensor_modules(cfree, w)
        rho = c.delta.kron(Matrix.identity(ring, w.generators))
    return Comodule(c, side, carrier, rho)


def trivial_comodule(w: PresentedModule, m: Comodule) -> Comodule:
    """W (x) M with coaction id_W (x) rho for a right comodule; for a left
    comodule the module tensors on the other side, M (x) W with rho (x) id_W."""
    if w.ring != m.ring:
        raise ValueError("module and comodule ring mismatch")
    eye_w = Matrix.identity(m.ring, w.generators)
    if m.side == "right":
        return Comodule(m.coalgebra, "right", tensor_modules(w, m.carrier),
                        eye_w.kron(m.rho))
    return Comodule(m.coalgebra, "left", tensor_modules(m.carrier, w),
                    m.rho.kron(eye_w))


def direct_sum_comodules(a: Comodule, b: Comodule) -> Comodule:
    if a.coalgebra != b.coalgebra or a.side != b.side:
        raise ValueError("direct sum needs the same coalgebra and side")
    ring = a.ring
    d = a.coalgebra.dim
    g1, g2 = a.carrier.generators, b.carrier.generators
    g = g1 + g2
    carrier = direct_sum_modules(a.carrier, b.carrier)
    z = ring.zero
    rows = [[z] * g for _ in range(g * d)]
    if a.side == "right":
        for j in range(g1):
            for i in range(g1):
                for k in range(d):
                    rows[i * d + k][j] = a.rho[i * d + k, j]
        for j in range(g2):
            for i in range(g2):
                for k in range(d):
                    rows[(g1 + i) * d + k][g1 + j] = b.rho[i * d + k, j]
    else:
        for j in range(g1):
            for k in range(d):
                for i in range(g1):
                    rows[k * g + i][j] = a.rho[k * g1 + i, j]
        for j in range(g2):
            for k in range(d):
                for i in range(g2):
                    rows[k * g + g1 + i][g1 + j] = b.rho[k * g2 + i, j]
    return Comodule(a.coalgebra, a.side, carrier, Matrix(ring, rows, g))


def cofree_adjunction_check(m: Comodule, x: PresentedModule) -> bool:
    """Verifies that f |-> (id_X (x) eps) f is an isomorphism
    Com_C(M, X (x) C) -> Hom_R(M, X) with inverse g |-> (g (x) id_C) rho_M
    (mirrored on the left side).  Free carriers only."""
    if not (m.carrier.is_free_presentation() and x.is_free_presentation()):
        raise ValueError("adjunction check needs free carriers")
    c = m.coalgebra
    ring = m.ring
    d = c.dim
    gm, gx = m.carrier.generators, x.generators
    cof = cofree_comodule(c, x, m.side)
    hcom, cmats = com_hom(m, cof)
    hhom, _ = hom_module(m.carrier, x)
    eye_x = Matrix.identity(ring, gx)
    eye_d = Matrix.identity(ring, d)
    post = eye_x.kron(c.epsilon) if m.side == "right" else c.epsilon.kron(eye_x)
    fcols = []
    for fm in cmats:
        g = post @ fm
        fcols.append([g[a, b] for a in range(gx) for b in range(gm)])
    fwd = ModuleMap(hcom, hhom,
                    Matrix.from_cols(ring, fcols, gx * gm) if fcols
                    else Matrix(ring, [[] for _ in range(gx * gm)], 0))
    bcols = []
    for a in range(gx):
        for b in range(gm):
            gt_rows = [[ring.one if (i == a and j == b) else ring.zero
                        for j in range(gm)] for i in range(gx)]
            gt = Matrix(ring, gt_rows, gm)
            lift = (gt.kron(eye_d) if m.side == "right" else eye_d.kron(gt)) @ m.rho
            bcols.append([lift[r, s] for r in range(lift.nrows)
                          for s in range(lift.ncols)])
    target = Matrix.from_cols(ring, bcols, cof.carrier.generators * gm)
    sol = solve_mod_relations(hcom.embedding, Matrix(ring, [], hcom.ambient_rank),
                              target)
    if sol is None:
        return False
    bwd = ModuleMap(hhom, hcom, sol)
    return (bwd.compose(fwd).equal_as_maps(ModuleMap.identity(hcom))
            and fwd.compose(bwd).equal_as_maps(ModuleMap.identity(hhom)))


def com_hom(m: Comodule, n: Comodule) -> tuple[PresentedModule, list[Matrix]]:
    """The R-module of C-colinear maps M -> N (same side, same coalgebra),
    as a presented module together with representative matrices for its
    generators.

    A map F (n.gens x m.gens) is a solution of the colinearity equation
    rho_N F = (F (x) id_C) rho_M (right side; mirrored on the left), modulo
    the relations of N (x) C, and must respect the carrier presentations.
    The result quotients by maps that are zero into N.
    """
    if m.coalgebra is not n.coalgebra and m.coalgebra != n.coalgebra:
        raise ValueError("comodules over different coalgebras")
    if m.side != n.side:
        raise ValueError("comodules on different sides")
    ring = m.ring
    d = m.coalgebra.dim
    gm, gn = m.carrier.generators, n.carrier.generators
    eye_gm = Matrix.identity(ring, gm)
    nc = n.tensor_carrier()

    # vec(F) is row major: index a*gm + b for F[a, b]
    t1 = n.rho.kron(eye_gm)
    rows = []
    zero = ring.zero
    if n.side == "right":
        # T2[(a*d + k)*gm + b, a*gm + b2] = rho_M[b2*d + k, b]
        out_rows = gn * d * gm
        t2rows = [[zero] * (gn * gm) for _ in range(out_rows)]
        for a in range(gn):
            for k in range(d):
                for b in range(gm):
                    r = (a * d + k) * gm + b
                    for b2 in range(gm):
                        t2rows[r][a * gm + b2] = m.rho[b2 * d + k, b]
    else:
        # T2[(k*gn + a)*gm + b, a*gm + b2] = rho_M[k*gm + b2, b]
        out_rows = d * gn * gm
        t2rows = [[zero] * (gn * gm) for _ in range(out_rows)]
        for k in range(d):
            for a in range(gn):
                for b in range(gm):
                    r = (k * gn + a) * gm + b
                    for b2 in range(gm):
                        t2rows[r][a * gm + b2] = m.rho[k * gm + b2, b]
    t2 = Matrix(ring, t2rows, gn * gm)
    colinear = t1 - t2
    rel_blocks = []
    eq_blocks = [colinear]
    rel_blocks.append(nc.relations.kron(eye_gm) if nc.relations.nrows
                      else Matrix(ring, [], colinear.nrows))
    if m.carrier.relations.nrows:
        # well-definedness: F rel_M^T = 0 mod rel_N, vec form
        wd = Matrix.identity(ring, gn).kron(m.carrier.relations)
        eq_blocks.append(wd)
        rel_blocks.append(n.carrier.relations.kron(
            Matrix.identity(ring, m.carrier.relations.nrows))
            if n.carrier.relations.nrows else Matrix(ring, [], wd.nrows))
    a_big = vstack_all(eq_blocks)
    total_rows = a_big.nrows
    rel_rows = []
    offset = 0
    for eq, rel in zip(eq_blocks, rel_blocks):
        for rr in rel.rows:
            row = [zero] * total_rows
            row[offset:offset + rel.ncols] = list(rr)
            rel_rows.append(row)
        offset += eq.nrows
    rel_big = Matrix(ring, rel_rows, total_rows)
    gens = solution_rows(a_big, rel_big)

    # quotient by maps whose image lies in the relations of N
    zf_rows = []
    for t in range(n.carrier.relations.nrows):
        nrel = n.carrier.relations.rows[t]
        for b in range(gm):
            vecrow = [zero] * (gn * gm)
            for a in range(gn):
                vecrow[a * gm + b] = nrel[a]
            zf_rows.append(vecrow)
    zf = Matrix(ring, zf_rows, gn * gm) if zf_rows else Matrix(ring, [], gn * gm)
    relations = solution_rows(gens.T, zf)
    mats = [Matrix(ring, [row[a * gm:(a + 1) * gm] for a in range(gn)], gm)
            for row in gens.rows]
    amb = None
    emb = None
    if m.carrier.is_free_presentation() and n.carrier.is_free_presentation():
        amb = gn * gm
        emb = gens.T
    h = PresentedModule(ring, gens.nrows, relations, ambient_rank=amb, embedding=emb)
    return h, mats


def comodule_map_is_colinear(f: ModuleMap, m: Comodule, n: Comodule) -> bool:
    """Direct check that a given module map intertwines the coactions."""
    ring = m.ring
    d = m.coalgebra.dim
    nc = n.tensor_carrier()
    if n.side == "right":
        lhs = n.rho @ f.matrix
        rhs = f.matrix.kron(Matrix.identity(ring, d)) @ m.rho
    else:
        lhs = n.rho @ f.matrix
        rhs = Matrix.identity(ring, d).kron(f.matrix) @ m.rho
    return _maps_equal_mod(nc, lhs, rhs) is None
