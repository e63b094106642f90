"""Cotensor products of comodules, purity certificates, associativity
verification and coflatness probes.

The cotensor M square_C N is the kernel of

    alpha = rho_M (x) id_N - id_M (x) rho_N : M (x) N -> M (x) C (x) N,

computed as an honest presented module with its inclusion.  Purity of the
defining sequence under tensoring controls everything downstream: the
comparison maps gamma_W and mu_W are isomorphisms exactly when the sequence
stays exact after tensoring with W, and associativity of iterated cotensors
is certified through the purity of the two inner cotensors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .coalgebras import Coalgebra, check_coalgebra, grouplike_coalgebra
from .comodule import (Bicomodule, Comodule, check_comodule,
                       comodule_map_is_colinear, direct_sum_comodules,
                       regular_comodule, trivial_comodule)
from .errors import CancelToken, PurityObstruction
from .matrix import Matrix
from .modules import (ModuleMap, PresentedModule, cyclic_module, free_module,
                      image_is_everything, is_isomorphism, kernel_of_map,
                      presented_module, solve_mod_relations, tensor_modules)
from .normal_forms import invariant_factors
from .rings import ZZ, RingDescriptor


@dataclass(frozen=True)
class CotensorResult:
    """M square_C N together with the maps realizing the defining sequence
    0 -> module -> M (x) N -> M (x) C (x) N, plus induced coactions when an
    argument was a bicomodule."""
    m: Comodule
    n: Comodule
    module: PresentedModule
    inclusion: ModuleMap  # module -> M (x) N
    alpha: ModuleMap      # M (x) N -> M (x) C (x) N
    induced_left: Matrix | None = None
    induced_right: Matrix | None = None
    left_over: Coalgebra | None = None
    right_over: Coalgebra | None = None

    @property
    def ambient(self) -> PresentedModule:
        return self.inclusion.codomain

    def induced_left_comodule(self) -> Comodule:
        if self.induced_left is None:
            raise ValueError("no induced left coaction; the first argument "
                             "was not a bicomodule")
        return Comodule(self.left_over, "left", self.module, self.induced_left)

    def induced_right_comodule(self) -> Comodule:
        if self.induced_right is None:
            raise ValueError("no induced right coaction; the second argument "
                             "was not a bicomodule")
        return Comodule(self.right_over, "right", self.module, self.induced_right)

    def __repr__(self) -> str:
        return (f"CotensorResult(gens={self.module.generators}, "
                f"relations={self.module.relations.nrows})")


def cotensor(m: Comodule | Bicomodule, n: Comodule | Bicomodule,
             token: CancelToken | None = None) -> CotensorResult:
    """Kernel of alpha with the stored inclusion.  A bicomodule in either slot
    contributes its coaction over the outer coalgebra as an induced structure
    on the result (left coalgebra of the first slot, right of the second)."""
    left_bi = m if isinstance(m, Bicomodule) else None
    right_bi = n if isinstance(n, Bicomodule) else None
    mc = left_bi.right_comodule() if left_bi is not None else m
    nc = right_bi.left_comodule() if right_bi is not None else n
    if mc.side != "right":
        raise ValueError("first argument must be a right comodule")
    if nc.side != "left":
        raise ValueError("second argument must be a left comodule")
    if mc.coalgebra != nc.coalgebra:
        raise ValueError("cotensor needs both comodules over the same coalgebra")
    ring = mc.ring
    d = mc.coalgebra.dim
    gm, gn = mc.carrier.generators, nc.carrier.generators
    eye_m = Matrix.identity(ring, gm)
    eye_n = Matrix.identity(ring, gn)
    ambient = tensor_modules(mc.carrier, nc.carrier)
    big = tensor_modules(mc.carrier, tensor_modules(free_module(ring, d),
                                                    nc.carrier))
    amat = mc.rho.kron(eye_n) - eye_m.kron(nc.rho)
    alpha = ModuleMap(ambient, big, amat)
    if token is not None:
        token.raise_if_cancelled()
    module, incl = kernel_of_map(alpha)
    res = CotensorResult(mc, nc, module, incl, alpha)
    if left_bi is None and right_bi is None:
        return res
    il = ir = None
    if left_bi is not None:
        il = _corestrict_left_coaction(left_bi, res)
    if right_bi is not None:
        if token is not None:
            token.raise_if_cancelled()
        ir = _corestrict_right_coaction(right_bi, res)
    return CotensorResult(mc, nc, module, incl, alpha, il, ir,
                          left_bi.left_coalgebra if left_bi is not None else None,
                          right_bi.right_coalgebra if right_bi is not None else None)


def _corestrict_right_coaction(bi: Bicomodule, res: CotensorResult) -> Matrix:
    """Right coaction on M square N from the right coalgebra of the second
    slot: corestrict (id_M (x) rho_plus) along inclusion (x) id."""
    ring = res.m.ring
    dd = bi.right_coalgebra.dim
    gm = res.m.carrier.generators
    target = tensor_modules(res.ambient, free_module(ring, dd))
    rhs = (Matrix.identity(ring, gm).kron(bi.rho_right)) @ res.inclusion.matrix
    sol = solve_mod_relations(res.inclusion.matrix.kron(Matrix.identity(ring, dd)),
                              target.relations, rhs)
    if sol is None:
        raise PurityObstruction(
            "induced right coaction does not land in (M square N) (x) D")
    return sol


def _corestrict_left_coaction(bi: Bicomodule, res: CotensorResult) -> Matrix:
    ring = res.m.ring
    dd = bi.left_coalgebra.dim
    gn = res.n.carrier.generators
    target = tensor_modules(free_module(ring, dd), res.ambient)
    rhs = (bi.rho_left.kron(Matrix.identity(ring, gn))) @ res.inclusion.matrix
    sol = solve_mod_relations(Matrix.identity(ring, dd).kron(res.inclusion.matrix),
                              target.relations, rhs)
    if sol is None:
        raise PurityObstruction(
            "induced left coaction does not land in D (x) (M square N)")
    return sol


def induced_comodule(m: Comodule, l: Bicomodule) -> Comodule:
    """M square_C L as a right comodule over the right coalgebra of L; the
    containment of the coaction image is checked, not assumed, and the result
    is verified against the comodule axioms."""
    ct = cotensor(m, l)
    com = ct.induced_right_comodule()
    report = check_comodule(com)
    if not report.ok:
        raise PurityObstruction(
            f"induced coaction violates {report.failed_laws()}")
    return com


def induced_comodule_left(l: Bicomodule, n: Comodule) -> Comodule:
    """L square_D N as a left comodule over the left coalgebra of L."""
    ct = cotensor(l, n)
    com = ct.induced_left_comodule()
    report = check_comodule(com)
    if not report.ok:
        raise PurityObstruction(
            f"induced coaction violates {report.failed_laws()}")
    return com


def counit_iso(m: Comodule, ct: CotensorResult | None = None) -> ModuleMap:
    """The natural isomorphism M square C -> M (right side; C square N -> N on
    the left), forward direction id (x) eps restricted to the cotensor.  The
    inverse, the corestriction of rho, is built and both composites are
    verified before returning."""
    c = m.coalgebra
    ring = m.ring
    eye = Matrix.identity(ring, m.carrier.generators)
    if m.side == "right":
        if ct is None:
            ct = cotensor(m, regular_comodule(c, "left"))
        post = eye.kron(c.epsilon)
    else:
        if ct is None:
            ct = cotensor(regular_comodule(c, "right"), m)
        post = c.epsilon.kron(eye)
    fwd = ModuleMap(ct.module, m.carrier, post @ ct.inclusion.matrix)
    back = solve_mod_relations(ct.inclusion.matrix, ct.ambient.relations, m.rho)
    if back is None:
        raise PurityObstruction("coaction does not corestrict to the cotensor")
    bwd = ModuleMap(m.carrier, ct.module, back)
    if not bwd.compose(fwd).equal_as_maps(ModuleMap.identity(ct.module)):
        raise AssertionError("counit comparison is not a left inverse")
    if not fwd.compose(bwd).equal_as_maps(ModuleMap.identity(m.carrier)):
        raise AssertionError("counit comparison is not a right inverse")
    return fwd


def cotensor_map(src: CotensorResult, dst: CotensorResult,
                 f: Matrix, g: Matrix) -> ModuleMap:
    """The restriction of f (x) g to the cotensors, for f: M -> M' and
    g: N -> N' colinear.  Raises ValueError when the restriction does not
    factor (it always does for colinear f, g)."""
    big = (f.kron(g)) @ src.inclusion.matrix
    sol = solve_mod_relations(dst.inclusion.matrix, dst.ambient.relations, big)
    if sol is None:
        raise ValueError("f (x) g does not restrict to the cotensor products")
    return ModuleMap(src.module, dst.module, sol)


# -- purity ---------------------------------------------------------------------


def _tensor_flank(ct: CotensorResult, w: PresentedModule, side: str):
    """The defining sequence tensored with W on the given side, as a triple of
    maps (inclusion, alpha) between the tensored presented modules."""
    ring = ct.m.ring
    eye_w = Matrix.identity(ring, w.generators)
    if side == "left":
        tk = tensor_modules(w, ct.module)
        ta = tensor_modules(w, ct.ambient)
        tb = tensor_modules(w, ct.alpha.codomain)
        mi = eye_w.kron(ct.inclusion.matrix)
        ma = eye_w.kron(ct.alpha.matrix)
    else:
        tk = tensor_modules(ct.module, w)
        ta = tensor_modules(ct.ambient, w)
        tb = tensor_modules(ct.alpha.codomain, w)
        mi = ct.inclusion.matrix.kron(eye_w)
        ma = ct.alpha.matrix.kron(eye_w)
    return ModuleMap(tk, ta, mi), ModuleMap(ta, tb, ma)


def _sequence_pure_for(ct: CotensorResult, w: PresentedModule,
                       side: str = "left") -> tuple[bool, bool]:
    """(inclusion stays injective, kernel of tensored alpha equals the image):
    together these say the defining sequence stays exact under (x) W."""
    ti, ta = _tensor_flank(ct, w, side)
    inj = kernel_of_map(ti)[0].is_zero()
    _, ker_incl = kernel_of_map(ta)
    mid = solve_mod_relations(ti.matrix, ti.codomain.relations,
                              ker_incl.matrix) is not None
    return inj, mid


def gamma_map(ct: CotensorResult, w: PresentedModule) -> tuple[ModuleMap, CotensorResult]:
    """The canonical W (x) (M square N) -> (W (x) M) square N, the
    corestriction of id_W (x) inclusion."""
    ring = ct.m.ring
    wct = cotensor(trivial_comodule(w, ct.m), ct.n)
    dom = tensor_modules(w, ct.module)
    big = Matrix.identity(ring, w.generators).kron(ct.inclusion.matrix)
    sol = solve_mod_relations(wct.inclusion.matrix, wct.ambient.relations, big)
    if sol is None:
        raise AssertionError("gamma does not corestrict; kernel is not maximal")
    return ModuleMap(dom, wct.module, sol), wct


def mu_map(ct: CotensorResult, w: PresentedModule) -> tuple[ModuleMap, CotensorResult]:
    """The canonical (M square N) (x) W -> M square (N (x) W)."""
    ring = ct.m.ring
    mct = cotensor(ct.m, trivial_comodule(w, ct.n))
    dom = tensor_modules(ct.module, w)
    big = ct.inclusion.matrix.kron(Matrix.identity(ring, w.generators))
    sol = solve_mod_relations(mct.inclusion.matrix, mct.ambient.relations, big)
    if sol is None:
        raise AssertionError("mu does not corestrict; kernel is not maximal")
    return ModuleMap(dom, mct.module, sol), mct


@dataclass(frozen=True)
class PurityCertificateCot:
    """Per test module W: whether the defining sequence of the cotensor stays
    exact under (x) W, and the isomorphism verdicts for gamma_W and mu_W.  The
    three verdict tuples are equal entrywise; the constructor path asserts it."""
    ring: RingDescriptor
    family: tuple[str, ...]
    purity_verdicts: tuple[bool, ...]
    gamma_results: tuple[bool, ...]
    mu_results: tuple[bool, ...]
    pure: bool
    mode: str = "complete"
    witness: str | None = None

    @property
    def family_label(self) -> str:
        kind = "complete finite family" if self.mode == "complete" else "given family"
        return f"{kind} over {self.ring}"


def _complete_cyclic_family(ct: CotensorResult) -> tuple[int, ...]:
    ring = ct.m.ring
    if ring.is_field:
        return ()
    if ring.kind == "Z":
        coker_in = ct.inclusion.matrix.T
        if ct.ambient.relations.nrows:
            coker_in = coker_in.vstack(ct.ambient.relations)
        coker_im = ct.alpha.matrix.T
        if ct.alpha.codomain.relations.nrows:
            coker_im = coker_im.vstack(ct.alpha.codomain.relations)
        ds = {d for d in invariant_factors(coker_in) if d > 1}
        ds |= {d for d in invariant_factors(coker_im) if d > 1}
        return tuple(sorted(ds))
    n = ring.modulus
    return tuple(d for d in range(2, n + 1) if n % d == 0)


def purity_certificate(m: Comodule | Bicomodule, n: Comodule | Bicomodule,
                       test_family=None, ct: CotensorResult | None = None,
                       token: CancelToken | None = None) -> PurityCertificateCot:
    """Purity of M square N inside M (x) N, certified per test module W = R/(d)
    with the gamma_W and mu_W isomorphism verdicts cross-checked against the
    sequence-purity verdict on every W.

    test_family None selects the complete family for the base ring (empty over
    fields; elementary divisors of the two cokernels of the defining sequence
    over the integers; all divisors of the modulus otherwise).  An explicit
    family is a sequence of nonnegative d, each meaning W = R/(d)."""
    if ct is None:
        ct = cotensor(m, n, token=token)
    ring = ct.m.ring
    if test_family is None or test_family == "complete":
        divisors = _complete_cyclic_family(ct)
        mode = "complete"
    else:
        divisors = tuple(int(d) for d in test_family)
        mode = "given"
    labels = []
    purity = []
    gammas = []
    mus = []
    witness = None
    for d in divisors:
        if token is not None:
            token.raise_if_cancelled()
        label = "R" if d == 0 else f"Z/{d}"
        w = free_module(ring, 1) if d == 0 else cyclic_module(ring, d)
        inj, mid = _sequence_pure_for(ct, w, "left")
        seq_pure = inj and mid
        g_iso = is_isomorphism(gamma_map(ct, w)[0])[0]
        m_iso = is_isomorphism(mu_map(ct, w)[0])[0]
        if not (seq_pure == g_iso == m_iso):
            raise AssertionError(
                f"three-way purity equivalence violated at W = {label}: "
                f"sequence {seq_pure}, gamma {g_iso}, mu {m_iso}")
        labels.append(label)
        purity.append(seq_pure)
        gammas.append(g_iso)
        mus.append(m_iso)
        if not seq_pure and witness is None:
            witness = label
    return PurityCertificateCot(ring, tuple(labels), tuple(purity),
                                tuple(gammas), tuple(mus), all(purity),
                                mode, witness)


# -- associativity ----------------------------------------------------------------


@dataclass(frozen=True)
class AssocReport:
    """Comparison of (M square L) square N with M square (L square N) along
    the three-column diagram.  psi2 and psi3 are the gamma-type isomorphisms
    of the inner rows; psi1 is the induced comparison of the kernels."""
    ml: CotensorResult
    ln: CotensorResult
    ml_comodule: Comodule
    ln_comodule: Comodule
    left: CotensorResult   # (M square L) square N
    right: CotensorResult  # M square (L square N)
    purity_ml: bool        # M square L stays exact under (x) N
    purity_ln: bool        # L square N stays exact under M (x) -
    psi1: ModuleMap | None
    psi1_iso: bool
    psi2_iso: bool
    psi3_iso: bool

    @property
    def associative(self) -> bool:
        return self.psi1_iso


def associativity_check(m: Comodule, l: Bicomodule, n: Comodule,
                        token: CancelToken | None = None) -> AssocReport:
    """Builds both iterated cotensors and the comparison map between them.
    When both purity preconditions hold the comparison must be an isomorphism;
    that implication is asserted, not just reported."""
    if m.side != "right":
        raise ValueError("first argument must be a right comodule")
    if n.side != "left":
        raise ValueError("third argument must be a left comodule")
    if m.coalgebra != l.left_coalgebra:
        raise ValueError("m and the left coalgebra of l disagree")
    if n.coalgebra != l.right_coalgebra:
        raise ValueError("n and the right coalgebra of l disagree")
    ring = m.ring
    gm, gn = m.carrier.generators, n.carrier.generators
    ct_ml = cotensor(m, l, token=token)
    ct_ln = cotensor(l, n, token=token)
    ml_com = ct_ml.induced_right_comodule()
    ln_com = ct_ln.induced_left_comodule()
    if token is not None:
        token.raise_if_cancelled()
    left = cotensor(ml_com, n, token=token)
    right = cotensor(m, ln_com, token=token)

    p1 = all(_sequence_pure_for(ct_ml, n.carrier, "right"))
    p2 = all(_sequence_pure_for(ct_ln, m.carrier, "left"))
    if token is not None:
        token.raise_if_cancelled()
    psi2_iso = is_isomorphism(gamma_map(ct_ln, m.carrier)[0])[0]
    mc_carrier = tensor_modules(m.carrier, free_module(ring, m.coalgebra.dim))
    psi3_iso = is_isomorphism(gamma_map(ct_ln, mc_carrier)[0])[0]

    x_big = (ct_ml.inclusion.matrix.kron(Matrix.identity(ring, gn))) \
        @ left.inclusion.matrix
    y_big = (Matrix.identity(ring, gm).kron(ct_ln.inclusion.matrix)) \
        @ right.inclusion.matrix
    mln = tensor_modules(m.carrier, tensor_modules(l.carrier, n.carrier))
    psi1 = None
    psi1_iso = False
    sol = solve_mod_relations(y_big, mln.relations, x_big)
    if sol is not None:
        try:
            psi1 = ModuleMap(left.module, right.module, sol)
            psi1_iso = is_isomorphism(psi1)[0]
        except ValueError:
            psi1 = None
    if p1 and p2 and not psi1_iso:
        raise AssertionError(
            "both purity preconditions hold but the associativity comparison "
            "is not an isomorphism")
    return AssocReport(ct_ml, ct_ln, ml_com, ln_com, left, right,
                       p1, p2, psi1, psi1_iso, psi2_iso, psi3_iso)


# -- coflatness probes -------------------------------------------------------------


@dataclass(frozen=True)
class ShortExactSequence:
    """0 -> sub -> mid -> quot -> 0 of left comodules, with the maps given on
    carrier generators."""
    sub: Comodule
    mid: Comodule
    quot: Comodule
    inj: Matrix   # mid.gens x sub.gens
    surj: Matrix  # quot.gens x mid.gens
    name: str = ""

    def inj_map(self) -> ModuleMap:
        return ModuleMap(self.sub.carrier, self.mid.carrier, self.inj)

    def surj_map(self) -> ModuleMap:
        return ModuleMap(self.mid.carrier, self.quot.carrier, self.surj)

    def members(self):
        yield f"{self.name or 'probe'}.sub", self.sub
        yield f"{self.name or 'probe'}.mid", self.mid
        yield f"{self.name or 'probe'}.quot", self.quot


def _probe_purity_family(seq: ShortExactSequence) -> tuple[int, ...]:
    ring = seq.sub.ring
    if ring.is_field:
        return ()
    if ring.kind == "Z":
        coker = seq.inj.T
        if seq.mid.carrier.relations.nrows:
            coker = coker.vstack(seq.mid.carrier.relations)
        return tuple(sorted({d for d in invariant_factors(coker) if d > 1}))
    n = ring.modulus
    return tuple(d for d in range(2, n + 1) if n % d == 0)


def verify_probe(seq: ShortExactSequence) -> None:
    """Raises ValueError unless the probe is a genuinely exact, R-pure short
    exact sequence of colinear maps (exactness checked in R-Mod)."""
    for a, b in ((seq.sub, seq.mid), (seq.mid, seq.quot)):
        if a.coalgebra != b.coalgebra or a.side != "left" or b.side != "left":
            raise ValueError("probe comodules must all be left comodules "
                             "over one coalgebra")
    inj, surj = seq.inj_map(), seq.surj_map()
    if not comodule_map_is_colinear(inj, seq.sub, seq.mid):
        raise ValueError(f"probe {seq.name!r}: inclusion is not colinear")
    if not comodule_map_is_colinear(surj, seq.mid, seq.quot):
        raise ValueError(f"probe {seq.name!r}: projection is not colinear")
    if not kernel_of_map(inj)[0].is_zero():
        raise ValueError(f"probe {seq.name!r}: inclusion is not injective")
    if not image_is_everything(surj):
        raise ValueError(f"probe {seq.name!r}: projection is not surjective")
    if not surj.compose(inj).is_zero_map():
        raise ValueError(f"probe {seq.name!r}: composite is nonzero")
    _, ker_incl = kernel_of_map(surj)
    if solve_mod_relations(seq.inj, seq.mid.carrier.relations,
                           ker_incl.matrix) is None:
        raise ValueError(f"probe {seq.name!r}: not exact in the middle")
    for d in _probe_purity_family(seq):
        sub_d = _mod_d(seq.sub.carrier, d)
        mid_d = _mod_d(seq.mid.carrier, d)
        if not kernel_of_map(ModuleMap(sub_d, mid_d, seq.inj))[0].is_zero():
            raise ValueError(f"probe {seq.name!r}: inclusion is not R-pure "
                             f"(fails against Z/{d})")


def _mod_d(m: PresentedModule, d: int) -> PresentedModule:
    ring = m.ring
    rows = [list(r) for r in m.relations.rows]
    dd = ring.normalize(d)
    for j in range(m.generators):
        row = [ring.zero] * m.generators
        row[j] = dd
        rows.append(row)
    return presented_module(ring, m.generators, Matrix(ring, rows, m.generators))


@dataclass(frozen=True)
class ProbeResult:
    name: str
    left_exact: bool
    middle_exact: bool
    surjective: bool

    @property
    def exact(self) -> bool:
        return self.left_exact and self.middle_exact and self.surjective


@dataclass(frozen=True)
class ProbeReport:
    """Exactness of M square - against each probe plus the faithfulness
    sub-report.  Verdicts are certified against the supplied family only."""
    probes: tuple[ProbeResult, ...]
    coflat: bool
    faithful_failures: tuple[str, ...]
    faithful: bool
    family_label: str

    @property
    def verdict(self) -> str:
        word = "coflat" if self.coflat else "not coflat"
        faith = "faithful" if self.faithful else "not faithful"
        return f"{word}, {faith} (certified against family)"


def coflatness_probe(m: Comodule, probes, token: CancelToken | None = None) -> ProbeReport:
    """Exactness of M square - on each verified probe, and the faithfulness
    check M square N != 0 over every nonzero comodule appearing in the family."""
    probes = list(probes)
    for seq in probes:
        verify_probe(seq)
    results = []
    seen: list[tuple[str, Comodule, CotensorResult]] = []

    def cot(name: str, n: Comodule) -> CotensorResult:
        for (_, other, ct) in seen:
            if other == n:
                return ct
        ct = cotensor(m, n, token=token)
        seen.append((name, n, ct))
        return ct

    for seq in probes:
        if token is not None:
            token.raise_if_cancelled()
        names = list(seq.members())
        ct_sub = cot(names[0][0], seq.sub)
        ct_mid = cot(names[1][0], seq.mid)
        ct_quot = cot(names[2][0], seq.quot)
        eye = Matrix.identity(m.ring, m.carrier.generators)
        f1 = cotensor_map(ct_sub, ct_mid, eye, seq.inj)
        f2 = cotensor_map(ct_mid, ct_quot, eye, seq.surj)
        left_exact = kernel_of_map(f1)[0].is_zero()
        _, ker_incl = kernel_of_map(f2)
        middle = solve_mod_relations(f1.matrix, ct_mid.module.relations,
                                     ker_incl.matrix) is not None
        surjective = image_is_everything(f2)
        results.append(ProbeResult(seq.name or "probe", left_exact, middle,
                                   surjective))
    failures = []
    for (name, n, ct) in seen:
        if not n.carrier.is_zero() and ct.module.is_zero():
            failures.append(name)
    coalg = m.coalgebra.name or "C"
    label = (f"{len(probes)} short exact probe(s) over {coalg}, "
             f"{len(seen)} distinct member comodule(s)")
    return ProbeReport(tuple(results), all(r.exact for r in results),
                       tuple(failures), not failures, label)


def _stable_subsets(c: Coalgebra):
    """Coordinate subsets S with Delta(c_j) in C (x) span(S) for all j in S;
    these span the coordinate left subcomodules."""
    d = c.dim
    z = c.ring.zero
    out = []
    for mask in range(1, (1 << d) - 1):
        s = [j for j in range(d) if mask >> j & 1]
        inside = set(s)
        ok = True
        for j in s:
            for i in range(d):
                for k in range(d):
                    if k not in inside and c.delta[i * d + k, j] != z:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(s)
    return out


def _coordinate_probe(c: Coalgebra, s: list[int]) -> ShortExactSequence:
    ring = c.ring
    d = c.dim
    t = [j for j in range(d) if j not in s]
    z, o = ring.zero, ring.one

    def restricted(indices):
        g = len(indices)
        pos = {j: a for a, j in enumerate(indices)}
        rows = [[z] * g for _ in range(d * g)]
        for j in indices:
            for i in range(d):
                for k in indices:
                    rows[i * g + pos[k]][pos[j]] = c.delta[i * d + k, j]
        return Comodule(c, "left", free_module(ring, g), Matrix(ring, rows, g))

    sub = restricted(s)
    quot = restricted(t)
    inj = Matrix(ring, [[o if (j in s and s.index(j) == b) else z
                         for b in range(len(s))] for j in range(d)], len(s))
    surj = Matrix(ring, [[o if t[a] == j else z for j in range(d)]
                         for a in range(len(t))], d)
    mid = regular_comodule(c, "left")
    label = "".join(str(j) for j in s)
    return ShortExactSequence(sub, mid, quot, inj, surj, name=f"coord[{label}]")


def standard_probes(c: Coalgebra) -> list[ShortExactSequence]:
    """The stock probe family for a coalgebra: one short exact sequence per
    coordinate-stable subset of the basis (subcomodule, C, quotient), plus the
    split diagonal sequence 0 -> C -> C + C -> C -> 0."""
    ring = c.ring
    d = c.dim
    probes = [_coordinate_probe(c, s) for s in _stable_subsets(c)]
    reg = regular_comodule(c, "left")
    both = direct_sum_comodules(reg, reg)
    eye = Matrix.identity(ring, d)
    diag = eye.vstack(eye)
    diff = eye.hstack(-eye)
    probes.append(ShortExactSequence(reg, both, reg, diag, diff, name="diagonal"))
    return probes


# -- search for a non-pure cotensor over the integers ------------------------------


def _comodule_from_block(c: Coalgebra, side: str, b: Matrix) -> Comodule:
    """Comodule on a dimension-2 coalgebra with basis (c0, c1), eps = c0*,
    determined by the matrix acting through the c1 leg.  The counit law pins
    the c0 block to the identity, so b is the only free datum; coassociativity
    becomes a polynomial condition on b that the caller is responsible for."""
    ring = c.ring
    g = b.ncols
    rows = [[ring.zero] * g for _ in range(2 * g)]
    for a in range(g):
        for col in range(g):
            if side == "right":
                rows[a * 2][col] = ring.one if a == col else ring.zero
                rows[a * 2 + 1][col] = b[a, col]
            else:
                rows[a][col] = ring.one if a == col else ring.zero
                rows[g + a][col] = b[a, col]
    com = Comodule(c, side, free_module(ring, g), Matrix(ring, rows, g))
    if not check_comodule(com).ok:
        raise AssertionError("block matrix does not satisfy coassociativity")
    return com


def _random_comodule(rng: random.Random, c: Coalgebra, side: str,
                     rank: int) -> Comodule | None:
    """Draw a random valid comodule of the given rank.  Raw coaction matrices
    almost never satisfy the counit law, so sampling is structured per
    coalgebra: grouplikes get a random grading assignment, the nilpotent
    coalgebra a random square-zero block, the trigonometric one a random
    trace-zero block of determinant one."""
    ring = c.ring
    d = c.dim
    if c.name in ("g1", "g2"):
        rows = [[ring.zero] * rank for _ in range(rank * d)]
        for a in range(rank):
            k = rng.randrange(d)
            if side == "right":
                rows[a * d + k][a] = ring.one
            else:
                rows[k * rank + a][a] = ring.one
        return Comodule(c, side, free_module(ring, rank), Matrix(ring, rows, rank))
    if c.name == "nil":
        if rank == 1:
            b = Matrix(ring, [[0]], 1)
        elif rank == 2:
            t = rng.randint(-3, 3)
            b = Matrix(ring, [[0, t], [0, 0]] if rng.random() < 0.5
                       else [[0, 0], [t, 0]], 2)
        else:
            return None
        return _comodule_from_block(c, side, b)
    if c.name == "trig":
        if rank != 2:
            return None
        a = rng.randint(-2, 2)
        rest = -(1 + a * a)
        divs = [t for t in range(1, -rest + 1) if rest % t == 0]
        top = rng.choice(divs) * rng.choice([1, -1])
        b = Matrix(ring, [[a, top], [rest // top, -a]], 2)
        return _comodule_from_block(c, side, b)
    return None


def _search_coalgebras() -> list[Coalgebra]:
    ring = ZZ
    trig = Coalgebra(ring, 2, Matrix(ring, [[1, 0], [0, 1], [0, 1], [-1, 0]], 2),
                     Matrix(ring, [[1, 0]], 2), name="trig")
    dual_numbers = Coalgebra(ring, 2,
                             Matrix(ring, [[1, 0], [0, 1], [0, 1], [0, 0]], 2),
                             Matrix(ring, [[1, 0]], 2), name="nil")
    out = [grouplike_coalgebra(ring, 1, "g1"), grouplike_coalgebra(ring, 2, "g2"),
           trig, dual_numbers]
    for c in out:
        if not check_coalgebra(c).ok:
            raise AssertionError(f"search coalgebra {c.name} is invalid")
    return out


def impure_cotensor_search(seed: int = 0, attempts: int = 400,
                           max_rank: int = 2):
    """Empirical hunt for a cotensor over the integers whose defining sequence
    is not pure, over random valid comodule pairs of rank at most max_rank on
    a panel of small coalgebras.  Returns a description dict for the first hit
    or None when the budget is exhausted."""
    rng = random.Random(seed)
    panel = _search_coalgebras()
    for attempt in range(attempts):
        c = panel[rng.randrange(len(panel))]
        m = _random_comodule(rng, c, "right", rng.randint(1, max_rank))
        if m is None:
            continue
        n = _random_comodule(rng, c, "left", rng.randint(1, max_rank))
        if n is None:
            continue
        cert = purity_certificate(m, n)
        if not cert.pure:
            return {"attempt": attempt, "coalgebra": c.name,
                    "rho_m": m.rho, "rho_n": n.rho, "witness": cert.witness}
    return None
