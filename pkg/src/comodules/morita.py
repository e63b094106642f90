"""Morita-Takeuchi contexts between coalgebras: verification, strictness,
induced equivalences of comodule categories, and synthesis of a strict
context from a single well-behaved comodule.

A context is a sextuple (D, C, M, N, f, g) with M a (D, C)-bicomodule, N a
(C, D)-bicomodule, f: D -> M square_C N and g: C -> N square_D M bicolinear,
subject to purity of both cotensor products and two triangle identities.
Purity is not decoration: without it the associativity rearrangements used
by the triangles are unavailable, so verification refuses to continue
rather than silently identifying the two iterated cotensors."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coalgebras import Coalgebra
from .cohom import (CoendComparison, InjectorReport, coend, coend_comparison,
                    cohom, delta_map, injector_and_exactness_probe)
from .comodule import (Bicomodule, Comodule, _maps_equal_mod,
                       comodule_map_is_colinear, regular_comodule)
from .cotensor import (AssocReport, CotensorResult, PurityCertificateCot,
                       associativity_check, cotensor, cotensor_map,
                       counit_iso, purity_certificate)
from .errors import (AssociativityUnavailable, HypothesisNotCertified,
                     UnsupportedRing, UnverifiedContext)
from .matrix import Matrix
from .modules import (ModuleMap, free_module, is_isomorphism,
                      solve_mod_relations)


def _require_qf(ring):
    if not ring.is_qf:
        raise UnsupportedRing(
            f"Morita-Takeuchi constructions need a QF base ring, not {ring}")


@dataclass
class MoritaContext:
    """(D, C, M, N, f, g) with a cache of verification certificates."""
    d_coalgebra: Coalgebra
    c_coalgebra: Coalgebra
    m: Bicomodule
    n: Bicomodule
    f: ModuleMap
    g: ModuleMap
    certificates: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.m.left_coalgebra != self.d_coalgebra or \
                self.m.right_coalgebra != self.c_coalgebra:
            raise ValueError("M must be a (D, C)-bicomodule")
        if self.n.left_coalgebra != self.c_coalgebra or \
                self.n.right_coalgebra != self.d_coalgebra:
            raise ValueError("N must be a (C, D)-bicomodule")
        if self.f.matrix.ncols != self.d_coalgebra.dim:
            raise ValueError("f must be defined on the carrier of D")
        if self.g.matrix.ncols != self.c_coalgebra.dim:
            raise ValueError("g must be defined on the carrier of C")

    @property
    def ring(self):
        return self.d_coalgebra.ring


@dataclass(frozen=True)
class TriangleVerdict:
    name: str
    ok: bool
    defect: Matrix | None

    @property
    def defect_is_zero(self) -> bool:
        return self.defect is None or self.defect.is_zero()


@dataclass(frozen=True)
class ContextReport:
    """Per-condition verdicts for a Morita-Takeuchi context."""
    flatness: str
    purity_mn: PurityCertificateCot
    purity_nm: PurityCertificateCot
    f_bicolinear: bool
    g_bicolinear: bool
    triangle_m: TriangleVerdict
    triangle_n: TriangleVerdict

    @property
    def ok(self) -> bool:
        return (self.f_bicolinear and self.g_bicolinear
                and self.triangle_m.ok and self.triangle_n.ok)


def _bicolinear(fm: ModuleMap, left_dom: Comodule, right_dom: Comodule,
                ct: CotensorResult) -> bool:
    left_cod = Comodule(left_dom.coalgebra, "left", ct.module, ct.induced_left)
    right_cod = Comodule(right_dom.coalgebra, "right", ct.module,
                         ct.induced_right)
    return (comodule_map_is_colinear(fm, left_dom, left_cod)
            and comodule_map_is_colinear(fm, right_dom, right_cod))


def _triangle(name: str, outer: Comodule, outer_left: Comodule,
              ctx_map_a: "_CtxMap", ctx_map_b: "_CtxMap",
              assoc: AssocReport) -> TriangleVerdict:
    """The composite through ctx_map_a on the counit-of-A side must agree
    with the composite through ctx_map_b on the counit-of-B side, after
    rerouting through the associativity comparison.

    outer is the test comodule as a right comodule over mid.left_coalgebra,
    outer_left the same carrier as a left comodule over mid.right_coalgebra;
    ctx_map_a: A-carrier -> (outer square mid-left-part) style map used on
    the first factor, ctx_map_b the map used on the second factor."""
    ring = outer.ring
    eye = Matrix.identity(ring, outer.carrier.generators)
    # side A: outer = A square outer --(a square id)--> (..) square outer
    ct_a = cotensor(regular_comodule(ctx_map_a.domain_coalgebra, "right"),
                    outer_left)
    unit_a = counit_iso(outer_left, ct_a)
    ok_a, unit_a_inv = is_isomorphism(unit_a)
    if not ok_a:
        raise AssertionError("counit comparison must be invertible")
    step_a = cotensor_map(ct_a, assoc.left, ctx_map_a.matrix, eye)
    lhs = assoc.psi1.matrix @ step_a.matrix @ unit_a_inv.matrix
    # side B: outer = outer square B --(id square b)--> outer square (..)
    ct_b = cotensor(outer, regular_comodule(ctx_map_b.domain_coalgebra, "left"))
    unit_b = counit_iso(outer, ct_b)
    ok_b, unit_b_inv = is_isomorphism(unit_b)
    if not ok_b:
        raise AssertionError("counit comparison must be invertible")
    step_b = cotensor_map(ct_b, assoc.right, eye, ctx_map_b.matrix)
    rhs = step_b.matrix @ unit_b_inv.matrix
    defect = lhs - rhs
    ok = _maps_equal_mod(assoc.right.module, lhs, rhs) is None
    return TriangleVerdict(name, ok, None if ok else defect)


def verify_context(ctx: MoritaContext) -> ContextReport:
    """Checks the context conditions: carrier flatness (free carriers, so
    automatic), purity of both cotensor products via the complete cyclic
    family, bicolinearity of f and g for the induced structures, and both
    triangle identities with every associativity rearrangement routed
    through the certified comparison map."""
    _require_qf(ctx.ring)
    cert_mn = purity_certificate(ctx.m, ctx.n)
    cert_nm = purity_certificate(ctx.n, ctx.m)
    if not (cert_mn.pure and cert_nm.pure):
        raise AssociativityUnavailable(
            "purity certificates failed; the triangle identities need "
            "associative rearrangements that purity alone licenses")
    ct_mn = cotensor(ctx.m, ctx.n)
    ct_nm = cotensor(ctx.n, ctx.m)
    d_left = regular_comodule(ctx.d_coalgebra, "left")
    d_right = regular_comodule(ctx.d_coalgebra, "right")
    c_left = regular_comodule(ctx.c_coalgebra, "left")
    c_right = regular_comodule(ctx.c_coalgebra, "right")
    f_ok = _bicolinear(ctx.f, d_left, d_right, ct_mn)
    g_ok = _bicolinear(ctx.g, c_left, c_right, ct_nm)

    mr = ctx.m.right_comodule()
    ml = ctx.m.left_comodule()
    nr = ctx.n.right_comodule()
    nl = ctx.n.left_comodule()
    assoc_m = associativity_check(mr, ctx.n, ml)
    assoc_n = associativity_check(nr, ctx.m, nl)
    if not (assoc_m.associative and assoc_n.associative):
        raise AssociativityUnavailable(
            "iterated cotensor comparison is not an isomorphism")
    fa = _CtxMap(ctx.f, ctx.d_coalgebra)
    ga = _CtxMap(ctx.g, ctx.c_coalgebra)
    tri_m = _triangle("M-triangle", mr, ml, fa, ga, assoc_m)
    tri_n = _triangle("N-triangle", nr, nl, ga, fa, assoc_n)
    report = ContextReport("automatic: free carriers over the base ring",
                           cert_mn, cert_nm, f_ok, g_ok, tri_m, tri_n)
    ctx.certificates["context"] = report
    return report


class _CtxMap:
    """A structure map together with the coalgebra it starts from, so the
    triangle builder can construct the matching counit comparison."""

    def __init__(self, fm: ModuleMap, dom: Coalgebra):
        self.matrix = fm.matrix
        self.domain_coalgebra = dom


def is_strict(ctx: MoritaContext) -> bool:
    """Both structure maps bijective.  Requires a passing verify_context
    first; its report is read from the certificate cache."""
    report = ctx.certificates.get("context")
    if report is None or not report.ok:
        raise UnverifiedContext(
            "run verify_context to a passing report before testing strictness")
    ok_f, _ = is_isomorphism(ctx.f)
    ok_g, _ = is_isomorphism(ctx.g)
    ctx.certificates["strict"] = ok_f and ok_g
    return ok_f and ok_g


@dataclass(frozen=True)
class RoundTrip:
    direction: str
    index: int
    comparison: ModuleMap
    colinear: bool
    iso: bool


@dataclass(frozen=True)
class EquivalenceWitness:
    """Certified round-trips of the four induced functor directions on the
    supplied finite test families.  Instance evidence, not a proof for the
    whole category."""
    round_trips: tuple

    @property
    def ok(self) -> bool:
        return all(rt.colinear and rt.iso for rt in self.round_trips)


def _round_trip_right(ctx: MoritaContext, x: Comodule, through: Bicomodule,
                      back: Bicomodule, unit_map: "_CtxMap",
                      direction: str, index: int) -> RoundTrip:
    """x square through square back, compared with x through the counit of
    the coalgebra that unit_map starts from."""
    gx = cotensor(x, through)
    gx_com = Comodule(through.right_coalgebra, "right", gx.module,
                      gx.induced_right)
    fg = cotensor(gx_com, back)
    assoc = associativity_check(x, through, back.left_comodule())
    if not assoc.associative:
        raise AssertionError("associativity must hold for a verified context")
    ring = x.ring
    ct_unit = cotensor(x, regular_comodule(unit_map.domain_coalgebra, "left"))
    unit_fwd = counit_iso(x, ct_unit)
    step = cotensor_map(ct_unit, assoc.right,
                        Matrix.identity(ring, x.carrier.generators),
                        unit_map.matrix)
    ok_step, step_inv = is_isomorphism(step)
    if not ok_step:
        raise AssertionError(
            f"{direction}[{index}]: id square g must be invertible for a "
            "strict context")
    lam = unit_fwd.matrix @ step_inv.matrix @ assoc.psi1.matrix
    fg_com = Comodule(back.right_coalgebra, "right", fg.module,
                      fg.induced_right)
    lam_map = ModuleMap(fg.module, x.carrier, lam)
    colinear = comodule_map_is_colinear(lam_map, fg_com, x)
    iso, _ = is_isomorphism(lam_map)
    if not (colinear and iso):
        raise AssertionError(
            f"round-trip failure on {direction}[{index}]: colinear={colinear} "
            f"iso={iso}; this contradicts strictness of a verified context")
    return RoundTrip(direction, index, lam_map, colinear, iso)


def _round_trip_left(ctx: MoritaContext, x: Comodule, through: Bicomodule,
                     back: Bicomodule, unit_map: "_CtxMap",
                     direction: str, index: int) -> RoundTrip:
    """The mirrored construction for left comodule test objects."""
    gx = cotensor(through, x)
    gx_com = Comodule(through.left_coalgebra, "left", gx.module,
                      gx.induced_left)
    fg = cotensor(back, gx_com)
    assoc = associativity_check(back.right_comodule(), through, x)
    if not assoc.associative:
        raise AssertionError("associativity must hold for a verified context")
    ring = x.ring
    ok_psi, psi_inv = is_isomorphism(assoc.psi1)
    if not ok_psi:
        raise AssertionError("associativity comparison must be invertible")
    ct_unit = cotensor(regular_comodule(unit_map.domain_coalgebra, "right"), x)
    unit_fwd = counit_iso(x, ct_unit)
    step = cotensor_map(ct_unit, assoc.left, unit_map.matrix,
                        Matrix.identity(ring, x.carrier.generators))
    ok_step, step_inv = is_isomorphism(step)
    if not ok_step:
        raise AssertionError(
            f"{direction}[{index}]: g square id must be invertible for a "
            "strict context")
    lam = unit_fwd.matrix @ step_inv.matrix @ psi_inv.matrix
    fg_com = Comodule(back.left_coalgebra, "left", fg.module, fg.induced_left)
    lam_map = ModuleMap(fg.module, x.carrier, lam)
    colinear = comodule_map_is_colinear(lam_map, fg_com, x)
    iso, _ = is_isomorphism(lam_map)
    if not (colinear and iso):
        raise AssertionError(
            f"round-trip failure on {direction}[{index}]: colinear={colinear} "
            f"iso={iso}; this contradicts strictness of a verified context")
    return RoundTrip(direction, index, lam_map, colinear, iso)


def equivalence_from_context(ctx: MoritaContext, test_right_c, test_right_d,
                             test_left_c=None, test_left_d=None
                             ) -> EquivalenceWitness:
    """For a strict verified context, certifies FG(X) = X and GF(Y) = Y on
    every supplied test comodule in all four directions (right and left
    comodules over both coalgebras).  Defaults for the left families are the
    regular comodules."""
    if not ctx.certificates.get("strict"):
        if "strict" in ctx.certificates:
            raise UnverifiedContext("context is not strict")
        raise UnverifiedContext("run verify_context and is_strict first")
    if test_left_c is None:
        test_left_c = [regular_comodule(ctx.c_coalgebra, "left")]
    if test_left_d is None:
        test_left_d = [regular_comodule(ctx.d_coalgebra, "left")]
    fa = _CtxMap(ctx.f, ctx.d_coalgebra)
    ga = _CtxMap(ctx.g, ctx.c_coalgebra)
    trips = []
    for i, x in enumerate(test_right_c):
        if x.side != "right" or x.coalgebra != ctx.c_coalgebra:
            raise ValueError(f"test_right_c[{i}] is not a right C-comodule")
        trips.append(_round_trip_right(ctx, x, ctx.n, ctx.m, ga, "right_C", i))
    for i, y in enumerate(test_right_d):
        if y.side != "right" or y.coalgebra != ctx.d_coalgebra:
            raise ValueError(f"test_right_d[{i}] is not a right D-comodule")
        trips.append(_round_trip_right(ctx, y, ctx.m, ctx.n, fa, "right_D", i))
    for i, x in enumerate(test_left_c):
        if x.side != "left" or x.coalgebra != ctx.c_coalgebra:
            raise ValueError(f"test_left_c[{i}] is not a left C-comodule")
        trips.append(_round_trip_left(ctx, x, ctx.m, ctx.n, ga, "left_C", i))
    for i, y in enumerate(test_left_d):
        if y.side != "left" or y.coalgebra != ctx.d_coalgebra:
            raise ValueError(f"test_left_d[{i}] is not a left D-comodule")
        trips.append(_round_trip_left(ctx, y, ctx.n, ctx.m, fa, "left_D", i))
    witness = EquivalenceWitness(tuple(trips))
    ctx.certificates["equivalence"] = witness
    return witness


def context_from_comodule(x: Comodule, probes=None) -> MoritaContext:
    """The strict context (e_C(X), C, X, h(C)) synthesized from a
    quasi-finite, faithfully coflat injector X: f is the cotensor
    comparison delta_X, g the corestricted unit of adjunction at C.  Both
    verification and strictness are rechecked and must pass."""
    if x.side != "right":
        raise ValueError("context synthesis starts from a right comodule")
    _require_qf(x.ring)
    rep = injector_and_exactness_probe(x, probes)
    if not (rep.positive and rep.faithful):
        raise HypothesisNotCertified(
            "x must be certified coflat, faithful, and an injector against "
            f"the probe family; verdicts: injective={rep.injective}, "
            f"faithful={rep.faithful}")
    ring = x.ring
    c = x.coalgebra
    ce = coend(x)
    m_bi = ce.bicomodule()
    reg_c = Bicomodule(c, c, free_module(ring, c.dim), c.delta, c.delta)
    hc = cohom(m_bi, reg_c)
    n_bi = Bicomodule(c, ce.coalgebra, hc.module, hc.left_coaction,
                      hc.right_coaction)
    f_map = delta_map(m_bi, x, hd=hc)
    ct_nm = cotensor(n_bi, m_bi)
    g_matrix = solve_mod_relations(ct_nm.inclusion.matrix,
                                   ct_nm.ambient.relations,
                                   hc.unit_eta.matrix)
    if g_matrix is None:
        raise AssertionError(
            "the unit of adjunction must land in the cotensor submodule")
    g_map = ModuleMap(free_module(ring, c.dim), ct_nm.module, g_matrix)
    ctx = MoritaContext(ce.coalgebra, c, m_bi, n_bi, f_map, g_map)
    report = verify_context(ctx)
    if not report.ok:
        raise AssertionError(
            "synthesized context failed verification: "
            f"f_bicolinear={report.f_bicolinear} "
            f"g_bicolinear={report.g_bicolinear} "
            f"triangles=({report.triangle_m.ok}, {report.triangle_n.ok})")
    if not is_strict(ctx):
        raise AssertionError("synthesized context must be strict")
    return ctx


@dataclass(frozen=True)
class InvertibilityReport:
    """Outcome of the invertibility certification for a bicomodule: probe
    verdicts, the coend comparison with C, and (on success) the certified
    equivalence.  Failures are reported with the stage that refused, not
    raised."""
    invertible: bool
    stage: str | None
    probe: InjectorReport
    comparison: CoendComparison | None
    witness: EquivalenceWitness | None
    context: MoritaContext | None


def invertibility_check(x: Bicomodule, probes=None, tests=None
                        ) -> InvertibilityReport:
    """Certifies invertibility of a (C, D)-bicomodule: coflat, faithful and
    an injector on the D-side, with e_D(X) isomorphic to C; on success the
    synthesized context's equivalence is exercised on the test family."""
    _require_qf(x.right_comodule().ring)
    rep = injector_and_exactness_probe(x, probes)
    if not (rep.positive and rep.faithful):
        return InvertibilityReport(False, "probes", rep, None, None, None)
    xr = x.right_comodule()
    ce = coend(xr)
    comp = coend_comparison(x, ce)
    if not (comp.morphism_ok and comp.iso):
        return InvertibilityReport(False, "coend", rep, comp, None, None)
    ctx = context_from_comodule(xr, probes)
    if tests is None:
        tests = [regular_comodule(x.right_coalgebra, "right"), xr]
    witness = equivalence_from_context(
        ctx, tests, [regular_comodule(ctx.d_coalgebra, "right")])
    return InvertibilityReport(witness.ok, None if witness.ok else "equivalence",
                               rep, comp, witness, ctx)
