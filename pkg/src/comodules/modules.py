"""Finitely presented modules, module maps, tensor products, kernels and the
purity test.

A PresentedModule is (generator count, canonical relation rows, optional free
ambient with an embedding).  Input carriers in the comodule layer are free;
everything computed (kernels, cotensors, duals, hom modules) may be a general
presentation.  Equality of modules is syntactic equality of canonicalized
presentations; isomorphism is a separate, weaker check via explicit maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import UnsupportedRing
from .matrix import Matrix, vstack_all
from .normal_forms import (LinearSolver, canonical_rows, in_row_span,
                           invariant_factors, reduce_vector)
from .rings import RingDescriptor


@dataclass(frozen=True)
class PresentedModule:
    ring: RingDescriptor
    generators: int
    relations: Matrix  # canonical rows, shape (r, generators)
    ambient_rank: int | None = None
    embedding: Matrix | None = None  # ambient_rank x generators

    def __post_init__(self):
        if self.relations.ncols != self.generators:
            raise ValueError("relation width must equal generator count")
        if (self.ambient_rank is None) != (self.embedding is None):
            raise ValueError("ambient_rank and embedding go together")
        if self.embedding is not None:
            if self.embedding.shape != (self.ambient_rank, self.generators):
                raise ValueError("embedding shape mismatch")
            # every relation must map to zero in the ambient free module
            prod = self.embedding @ self.relations.T
            if not prod.is_zero():
                raise ValueError("embedding does not kill the relations")

    # -- predicates -----------------------------------------------------------

    def same_presentation(self, other: "PresentedModule") -> bool:
        return (self.ring == other.ring and self.generators == other.generators
                and self.relations == other.relations)

    def is_free_presentation(self) -> bool:
        return self.relations.nrows == 0

    def is_zero(self) -> bool:
        ring = self.ring
        z, o = ring.zero, ring.one
        for j in range(self.generators):
            e = [z] * self.generators
            e[j] = o
            if not in_row_span(self.relations, e):
                return False
        return True

    def cardinality(self) -> int:
        """Number of elements; finite coefficient rings only."""
        if not self.ring.is_finite:
            raise UnsupportedRing(f"cardinality over {self.ring} is not finite")
        n = self.ring.modulus
        size = n ** self.generators
        for (i, j) in _pivots(self.relations):
            size //= n // gcd(int(self.relations.rows[i][j]), n)
        return size

    def reduce(self, v) -> tuple:
        """Canonical coset representative of an element given in generator
        coordinates."""
        return tuple(reduce_vector(self.relations, v))

    def __repr__(self) -> str:
        amb = f", ambient={self.ambient_rank}" if self.ambient_rank is not None else ""
        return (f"PresentedModule({self.ring}, gens={self.generators}, "
                f"relations={self.relations.nrows}{amb})")


def _pivots(h: Matrix):
    z = h.ring.zero
    out = []
    for i, row in enumerate(h.rows):
        for j, x in enumerate(row):
            if x != z:
                out.append((i, j))
                break
    return out


def free_module(ring: RingDescriptor, n: int) -> PresentedModule:
    return PresentedModule(ring, n, Matrix(ring, [], n),
                           ambient_rank=n, embedding=Matrix.identity(ring, n))


def presented_module(ring: RingDescriptor, generators: int, relations: Matrix,
                     ambient_rank: int | None = None,
                     embedding: Matrix | None = None) -> PresentedModule:
    return PresentedModule(ring, generators, canonical_rows(relations),
                           ambient_rank=ambient_rank, embedding=embedding)


def cyclic_module(ring: RingDescriptor, d: int) -> PresentedModule:
    """R/(d) as a presented module with one generator."""
    return presented_module(ring, 1, Matrix(ring, [[d]], 1))


def submodule_from_rows(ring: RingDescriptor, ambient_rank: int,
                        gens: Matrix) -> PresentedModule:
    """Submodule of R^ambient_rank spanned by the given row vectors, with the
    canonical generating set as generators and honestly computed relations."""
    g = canonical_rows(gens)
    emb = g.T  # ambient_rank x generators
    rel = canonical_rows(LinearSolver(emb).kernel_rows())
    return PresentedModule(ring, g.nrows, rel, ambient_rank=ambient_rank, embedding=emb)


@dataclass(frozen=True)
class ModuleMap:
    domain: PresentedModule
    codomain: PresentedModule
    matrix: Matrix  # codomain.generators x domain.generators

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.generators, self.domain.generators):
            raise ValueError(f"map matrix shape {self.matrix.shape} does not match "
                             f"({self.codomain.generators}, {self.domain.generators})")
        if self.domain.relations.nrows:
            img = self.matrix @ self.domain.relations.T
            for j in range(img.ncols):
                if not in_row_span(self.codomain.relations, img.column(j)):
                    raise ValueError("map does not respect domain relations")

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other."""
        if not other.codomain.same_presentation(self.domain):
            raise ValueError("composition mismatch")
        return ModuleMap(other.domain, self.codomain, self.matrix @ other.matrix)

    def equal_as_maps(self, other: "ModuleMap") -> bool:
        if not (self.domain.same_presentation(other.domain)
                and self.codomain.same_presentation(other.codomain)):
            return False
        diff = self.matrix - other.matrix
        rel = self.codomain.relations
        return all(in_row_span(rel, diff.column(j)) for j in range(diff.ncols))

    def is_zero_map(self) -> bool:
        rel = self.codomain.relations
        return all(in_row_span(rel, self.matrix.column(j)) for j in range(self.matrix.ncols))

    def apply(self, v) -> tuple:
        col = self.matrix @ Matrix.col_vector(self.domain.ring, list(v))
        return self.codomain.reduce(col.column(0))

    @staticmethod
    def identity(m: PresentedModule) -> "ModuleMap":
        return ModuleMap(m, m, Matrix.identity(m.ring, m.generators))


def tensor_modules(m: PresentedModule, n: PresentedModule) -> PresentedModule:
    """M (x) N with generator (i, j) at flat index i * n.generators + j.

    Relations are rel_M (x) id and id (x) rel_N; the flat index convention
    makes the construction strictly associative after canonicalization."""
    ring = m.ring
    gm, gn = m.generators, n.generators
    blocks = []
    if m.relations.nrows:
        blocks.append(m.relations.kron(Matrix.identity(ring, gn)))
    if n.relations.nrows:
        blocks.append(Matrix.identity(ring, gm).kron(n.relations))
    rel = vstack_all(blocks) if blocks else Matrix(ring, [], gm * gn)
    amb = None
    emb = None
    if m.embedding is not None and n.embedding is not None:
        amb = m.ambient_rank * n.ambient_rank
        emb = m.embedding.kron(n.embedding)
    return PresentedModule(ring, gm * gn, canonical_rows(rel),
                           ambient_rank=amb, embedding=emb)


def tensor_maps(f: ModuleMap, g: ModuleMap,
                dom: PresentedModule | None = None,
                cod: PresentedModule | None = None) -> ModuleMap:
    dom = dom if dom is not None else tensor_modules(f.domain, g.domain)
    cod = cod if cod is not None else tensor_modules(f.codomain, g.codomain)
    return ModuleMap(dom, cod, f.matrix.kron(g.matrix))


def direct_sum_modules(m: PresentedModule, n: PresentedModule) -> PresentedModule:
    ring = m.ring
    g = m.generators + n.generators
    rows = []
    z = ring.zero
    for r in m.relations.rows:
        rows.append(list(r) + [z] * n.generators)
    for r in n.relations.rows:
        rows.append([z] * m.generators + list(r))
    return presented_module(ring, g, Matrix(ring, rows, g))


# -- kernels and isomorphism ---------------------------------------------------


def solution_rows(a: Matrix, rel_cod: Matrix) -> Matrix:
    """Canonical generating rows of {x : a @ x lies in rowspan(rel_cod)}."""
    if rel_cod.nrows:
        big = LinearSolver(a.hstack(rel_cod.T)).kernel_rows()
        proj = big.submatrix(range(big.nrows), range(a.ncols))
    else:
        proj = LinearSolver(a).kernel_rows()
    return canonical_rows(proj)


def solve_mod_relations(a: Matrix, rel_cod: Matrix, b: Matrix) -> Matrix | None:
    """X with a @ X = B modulo rowspan(rel_cod) in each column, or None."""
    if rel_cod.nrows:
        solver = LinearSolver(a.hstack(rel_cod.T))
        full = solver.solve_matrix(b)
        if full is None:
            return None
        return full.submatrix(range(a.ncols), range(b.ncols))
    return LinearSolver(a).solve_matrix(b)


def kernel_of_map(f: ModuleMap) -> tuple[PresentedModule, ModuleMap]:
    """Kernel of a map of presented modules: the submodule of the domain that
    maps into the relation span of the codomain, presented with honest
    relations, together with its inclusion into the domain.

    For a map of free modules this is the plain nullspace and the kernel is
    free over fields and over Z (and may carry relations over Z/n)."""
    dom = f.domain
    gens = solution_rows(f.matrix, f.codomain.relations)  # h x g_dom
    rel = solution_rows(gens.T, dom.relations)            # relations among the gens
    amb = None
    emb = None
    if dom.embedding is not None and dom.is_free_presentation():
        amb = dom.ambient_rank
        emb = dom.embedding @ gens.T
    k = PresentedModule(dom.ring, gens.nrows, rel, ambient_rank=amb, embedding=emb)
    incl = ModuleMap(k, dom, gens.T)
    return k, incl


def image_is_everything(f: ModuleMap) -> bool:
    """Surjectivity: generator columns of f together with the codomain
    relations span the full generator lattice."""
    ring = f.domain.ring
    stack = f.matrix.T
    if f.codomain.relations.nrows:
        stack = stack.vstack(f.codomain.relations)
    h = canonical_rows(stack)
    z, o = ring.zero, ring.one
    for j in range(f.codomain.generators):
        e = [z] * f.codomain.generators
        e[j] = o
        if not in_row_span(h, e):
            return False
    return True


def is_isomorphism(f: ModuleMap) -> tuple[bool, ModuleMap | None]:
    """(True, inverse) when f is bijective, else (False, None)."""
    k, _ = kernel_of_map(f)
    if not k.is_zero():
        return False, None
    if not image_is_everything(f):
        return False, None
    ring = f.domain.ring
    ident = Matrix.identity(ring, f.codomain.generators)
    inv = solve_mod_relations(f.matrix, f.codomain.relations, ident)
    if inv is None:
        return False, None
    g = ModuleMap(f.codomain, f.domain, inv)
    if not g.compose(f).equal_as_maps(ModuleMap.identity(f.domain)):
        return False, None
    if not f.compose(g).equal_as_maps(ModuleMap.identity(f.codomain)):
        return False, None
    return True, g


# -- duals and hom modules (QF path) ------------------------------------------


def dual_module(m: PresentedModule) -> PresentedModule:
    """Hom(M, R) presented inside the free ambient R^generators: a functional
    is its vector of values on the generators.  QF coefficient rings only."""
    if not m.ring.is_qf:
        raise UnsupportedRing(f"duals need a QF base ring, not {m.ring}")
    gens = solution_rows(m.relations, Matrix(m.ring, [], m.relations.nrows))
    rel = solution_rows(gens.T, Matrix(m.ring, [], m.generators))
    return PresentedModule(m.ring, gens.nrows, rel,
                           ambient_rank=m.generators, embedding=gens.T)


def hom_module(m: PresentedModule, w: PresentedModule) -> tuple[PresentedModule, list[Matrix]]:
    """Hom_R(M, W) as a presented module together with representative
    matrices (w.generators x m.generators) for its generators."""
    ring = m.ring
    gm, gw = m.generators, w.generators
    # condition: for each relation r of M, G @ r^T = 0 in W
    # unknowns vec(G) row-major: index a*gm + b for G[a, b]
    cond_blocks = []
    for r in m.relations.rows:
        cond_blocks.append(Matrix.identity(ring, gw).kron(Matrix.row_vector(ring, list(r))))
    if cond_blocks:
        a = vstack_all(cond_blocks)
        rel_cod = (Matrix.identity(ring, m.relations.nrows).kron(w.relations)
                   if w.relations.nrows else Matrix(ring, [], a.nrows))
        gens = solution_rows(a, rel_cod)
    else:
        gens = Matrix.identity(ring, gw * gm)
    # zero maps: every column of G lands in the relation span of W
    zero_rows = []
    z = ring.zero
    for t in range(w.relations.nrows):
        wrow = w.relations.rows[t]
        for b in range(gm):
            vec = [z] * (gw * gm)
            for a_i in range(gw):
                vec[a_i * gm + b] = wrow[a_i]
            zero_rows.append(vec)
    zm = Matrix(ring, zero_rows, gw * gm) if zero_rows else Matrix(ring, [], gw * gm)
    rel = solution_rows(gens.T, zm)
    mats = [Matrix(ring, [row[a_i * gm:(a_i + 1) * gm] for a_i in range(gw)], gm)
            for row in gens.rows]
    amb = None
    emb = None
    if w.is_free_presentation():
        amb = gw * gm
        emb = gens.T
    return PresentedModule(ring, gens.nrows, rel, ambient_rank=amb, embedding=emb), mats


# -- purity ---------------------------------------------------------------------


@dataclass(frozen=True)
class PurityCertificate:
    ring: RingDescriptor
    family: tuple  # descriptions of the test modules W, e.g. ("Z/2",)
    verdicts: tuple  # per-W bool
    pure: bool
    witness: tuple | None = None  # (W description, kernel generator) when impure
    mode: str = "complete"

    @property
    def family_label(self) -> str:
        return "complete finite family over " + str(self.ring)


def _tensor_with_cyclic(m: PresentedModule, d: int) -> PresentedModule:
    ring = m.ring
    rows = [list(r) for r in m.relations.rows]
    for j in range(m.generators):
        row = [ring.zero] * m.generators
        row[j] = ring.normalize(d)
        rows.append(row)
    return presented_module(ring, m.generators, Matrix(ring, rows, m.generators))


def purity_test(k: PresentedModule, mode: str = "complete") -> PurityCertificate:
    """Purity of the embedded submodule k inside its free ambient, certified
    against the complete finite test family for the base ring:

    * fields: every embedding is pure (empty family);
    * Z: W = Z/d for d over the elementary divisors of the embedding cokernel;
    * Z/n: W = Z/d for every divisor d of n with d >= 2.

    The verdict is exact: the family is complete for finitely generated
    modules over these rings, so "pure against the family" means pure.
    """
    if k.embedding is None:
        raise ValueError("purity_test needs an ambient embedding")
    if mode != "complete":
        raise ValueError(f"unknown purity mode {mode!r}")
    ring = k.ring
    if ring.is_field:
        return PurityCertificate(ring, (), (), True)
    if ring.kind == "Z":
        divisors = [d for d in invariant_factors(k.embedding) if d > 1]
        # duplicate elementary divisors add nothing
        divisors = sorted(set(divisors))
    else:
        n = ring.modulus
        divisors = [d for d in range(2, n + 1) if n % d == 0]
    family = tuple(f"Z/{d}" for d in divisors)
    verdicts = []
    witness = None
    ambient = free_module(ring, k.ambient_rank)
    for d, label in zip(divisors, family):
        mw = _tensor_with_cyclic(k, d)
        vw = _tensor_with_cyclic(ambient, d)
        f = ModuleMap(mw, vw, k.embedding)
        ker, incl = kernel_of_map(f)
        ok = ker.is_zero()
        verdicts.append(ok)
        if not ok and witness is None:
            # a nonzero element of the kernel of K (x) W -> ambient (x) W,
            # in K-generator coordinates (W is cyclic on one generator)
            for j in range(incl.matrix.ncols):
                col = incl.matrix.column(j)
                if not in_row_span(mw.relations, col):
                    witness = (label, col)
                    break
    pure = all(verdicts)
    return PurityCertificate(ring, family, tuple(verdicts), pure, witness)
