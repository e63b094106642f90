"""Tests for the cohom functor, the coendomorphism coalgebra, and the
injectivity/exactness certification.

Expected values for the fixed examples are pinned down independently before
touching the implementation: colinear-map counts over finite rings come from
exhaustive enumeration, small unit matrices are derived by hand from the
universal property, and coalgebra comparisons go through the generic
morphism checker rather than anything in the cohom code."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comodules.coalgebras import (Coalgebra, check_coalgebra,
                                  check_coalgebra_morphism, dual_algebra,
                                  grouplike_coalgebra, matrix_coalgebra)
from comodules.cohom import (CohomResult, adjunction_round_trip,
                             anti_iso_report, coend, coend_comparison, cohom,
                             cohom_map, delta_check, delta_map,
                             dual_anti_iso_check, injector_and_exactness_probe,
                             lambda_check)
from comodules.comodule import (Bicomodule, Comodule, _maps_equal_mod,
                                check_bicomodule, com_hom,
                                comodule_map_is_colinear,
                                direct_sum_comodules, regular_comodule,
                                trivial_comodule)
from comodules.cotensor import cotensor, standard_probes
from comodules.errors import (ExactnessNotCertified, NotFree, UnsupportedRing)
from comodules.matrix import Matrix
from comodules.modules import (ModuleMap, free_module, is_isomorphism,
                               presented_module, tensor_modules)
from comodules.rings import GF, QQ, ZZ, Zmod

F2 = GF(2)
F3 = GF(3)
F5 = GF(5)
Z4 = Zmod(4)


def column_comodule(ring, n):
    """R^n with x_b going to sum_a x_a (x) e_ab over the matrix coalgebra."""
    mc = matrix_coalgebra(ring, n)
    d = n * n
    rows = [[ring.zero] * n for _ in range(n * d)]
    for a in range(n):
        for b in range(n):
            rows[a * d + (a * n + b)][b] = ring.one
    return Comodule(mc, "right", free_module(ring, n), Matrix(ring, rows, n))


def nil_coalgebra(ring):
    """Dual numbers: c0 grouplike, c1 primitive over c0."""
    delta = Matrix(ring, [[1, 0], [0, 1], [0, 1], [0, 0]], 2)
    eps = Matrix(ring, [[1, 0]], 2)
    return Coalgebra(ring, 2, delta, eps, name="nil")


def rank1_nil_comodule(ring, t):
    """rho(x) = x (x) c0 + t * x (x) c1; coassociative iff t^2 = 0."""
    c = nil_coalgebra(ring)
    return Comodule(c, "right", free_module(ring, 1),
                    Matrix(ring, [[ring.one], [t]], 1))


def count_colinear_maps(m, n):
    """Exhaustive count of colinear maps m -> n over a finite ring, checking
    the defining square entrywise.  Independent of com_hom."""
    ring = m.ring
    if ring.kind in ("GF", "Zn"):
        elements = list(range(ring.modulus))
    else:
        raise AssertionError("enumeration needs a finite ring")
    gm, gn = m.carrier.generators, n.carrier.generators
    d = m.coalgebra.dim
    count = 0
    for entries in itertools.product(elements, repeat=gm * gn):
        f = Matrix(ring, [[ring.normalize(entries[a * gm + b])
                           for b in range(gm)] for a in range(gn)], gm)
        lhs = n.rho @ f
        rhs = f.kron(Matrix.identity(ring, d)) @ m.rho
        ok = lhs == rhs
        if ok and m.carrier.relations.nrows:
            prod = f @ m.carrier.relations.T
            ok = _maps_equal_mod(n.carrier, prod,
                                 Matrix.zeros(ring, prod.nrows,
                                              prod.ncols)) is None
        if ok:
            count += 1
    return count


def grading_comodule(c, assignment, side="right"):
    """Free comodule over a grouplike coalgebra with basis vector a placed in
    the component assignment[a]."""
    ring = c.ring
    d = c.dim
    g = len(assignment)
    if side == "right":
        rows = [[ring.zero] * g for _ in range(g * d)]
        for a, k in enumerate(assignment):
            rows[a * d + k][a] = ring.one
    else:
        rows = [[ring.zero] * g for _ in range(d * g)]
        for a, k in enumerate(assignment):
            rows[k * g + a][a] = ring.one
    return Comodule(c, side, free_module(ring, g), Matrix(ring, rows, g))


def regular_bicomodule(c):
    return Bicomodule(c, c, free_module(c.ring, c.dim), c.delta, c.delta)


def column_bicomodule(ring, n):
    """The column comodule as a (grouplike(R,1), M^c(n))-bicomodule."""
    col = column_comodule(ring, n)
    one = grouplike_coalgebra(ring, 1)
    return Bicomodule(one, col.coalgebra, col.carrier,
                      Matrix.identity(ring, n), col.rho)


class TestHomCounts:
    """Frozen counts from exhaustive enumeration, fixed before comparing
    against the presentation sizes the implementation reports."""

    def test_grouplike_endomorphisms_f2(self):
        # hand count: f(c_j) = y_j c_j, so 2^2 = 4 maps
        reg = regular_comodule(grouplike_coalgebra(F2, 2))
        assert count_colinear_maps(reg, reg) == 4
        hom, mats = com_hom(reg, reg)
        assert hom.cardinality() == 4

    def test_rank1_nil_maps_z4(self):
        # X_2 -> X_0 forces 2y = 0 in Z/4: exactly 2 maps
        x2 = rank1_nil_comodule(Z4, Z4.normalize(2))
        x0 = rank1_nil_comodule(Z4, Z4.zero)
        assert count_colinear_maps(x2, x0) == 2
        hom, _ = com_hom(x2, x0)
        assert hom.cardinality() == 2

    def test_schur_for_comatrix_column(self):
        # identity is colinear; three non-scalar witnesses are not
        col = column_comodule(QQ, 2)
        d = col.coalgebra.dim
        ident = Matrix.identity(QQ, 2)
        assert col.rho @ ident == ident.kron(Matrix.identity(QQ, d)) @ col.rho
        for bad in ([[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]):
            f = Matrix(QQ, bad, 2)
            assert col.rho @ f != f.kron(Matrix.identity(QQ, d)) @ col.rho


class TestCohomValues:

    def test_cohom_of_regular_is_identity_like(self):
        # h_D(D, M) recovers M; for m = D the canonical map
        # (id (x) eps) eta is an isomorphism and the value has rank 2
        d = grouplike_coalgebra(F2, 2)
        reg = regular_comodule(d)
        c = cohom(reg, reg)
        assert c.module.generators == 2
        assert c.module.is_free_presentation()
        kappa = Matrix.identity(F2, 2).kron(d.epsilon) @ c.unit_eta.matrix
        ok, _ = is_isomorphism(ModuleMap(reg.carrier, c.module, kappa))
        assert ok

    def test_cohom_of_regular_identity_like_z4(self):
        d = grouplike_coalgebra(Z4, 2)
        reg = regular_comodule(d)
        c = cohom(reg, reg)
        kappa = Matrix.identity(Z4, 2).kron(d.epsilon) @ c.unit_eta.matrix
        ok, _ = is_isomorphism(ModuleMap(reg.carrier, c.module, kappa))
        assert ok

    def test_comatrix_column_self_cohom_rank_one(self):
        col = column_comodule(QQ, 2)
        c = cohom(col, col)
        assert c.module.generators == 1
        assert c.module.is_free_presentation()

    def test_trivial_tensor_splits_off_the_free_part(self):
        # h(W (x) X) = W (x) h(X): rank 3 for the column fixture, 2*3 for
        # the grouplike regular fixture
        col = column_comodule(QQ, 2)
        c = cohom(col, trivial_comodule(free_module(QQ, 3), col))
        assert c.module.generators == 3
        reg = regular_comodule(grouplike_coalgebra(F2, 2))
        c2 = cohom(reg, trivial_comodule(free_module(F2, 3), reg))
        assert c2.module.generators == 6

    def test_presented_carrier_value(self):
        # M = Z/2 (x) D over Z/4: Com(M, D) has 4 elements, so h(M) does too
        reg = regular_comodule(grouplike_coalgebra(Z4, 2))
        w = presented_module(Z4, 1, Matrix(Z4, [[2]], 1))
        c = cohom(reg, trivial_comodule(w, reg))
        assert c.hom.cardinality() == 4
        assert c.module.cardinality() == 4

    def test_finitely_presented_sanity_bound(self):
        # generators of Com(M, X) never exceed the ambient count gm * gx
        for m_rank in (1, 2, 3):
            reg = regular_comodule(grouplike_coalgebra(Z4, 2))
            m = trivial_comodule(free_module(Z4, m_rank), reg)
            c = cohom(reg, m)
            assert c.hom.generators <= m.carrier.generators * 2
            assert c.module.generators <= c.hom.generators

    def test_arguments_must_share_the_coalgebra(self):
        reg = regular_comodule(grouplike_coalgebra(F2, 2))
        other = regular_comodule(nil_coalgebra(F2))
        with pytest.raises(ValueError, match="share the coalgebra"):
            cohom(reg, other)


class TestUnitEta:

    def test_unit_matrix_for_grouplike_regular(self):
        # by hand: eta(c_b) = phi_b (x) c_b, so eta[v*2+t, b] = [v=t=b]
        reg = regular_comodule(grouplike_coalgebra(F2, 2))
        c = cohom(reg, reg)
        expected = Matrix(F2, [[1, 0], [0, 0], [0, 0], [0, 1]], 2)
        assert c.unit_eta.matrix == expected

    def test_unit_is_colinear(self):
        col = column_comodule(QQ, 2)
        c = cohom(col, col)
        cod = trivial_comodule(c.module, col)
        assert comodule_map_is_colinear(c.unit_eta, col, cod)

    def test_unit_reproduces_hom_generators(self):
        # (ev_u (x) id) eta = F_u, with ev_u read off the dual pairing
        reg = regular_comodule(grouplike_coalgebra(F5, 3))
        c = cohom(reg, reg)
        e = c.module.embedding
        q = reg.carrier.generators
        for u, fu in enumerate(c.hom_mats):
            row = Matrix(F5, [[e[u, v] for v in range(c.module.generators)]],
                         c.module.generators)
            assert row.kron(Matrix.identity(F5, q)) @ c.unit_eta.matrix == fu

    def test_naturality_on_component_inclusion(self):
        d = grouplike_coalgebra(F2, 2)
        reg = regular_comodule(d)
        sub = Comodule(d, "right", free_module(F2, 1),
                       Matrix(F2, [[1], [0]], 1))
        c_sub = cohom(reg, sub)
        c_reg = cohom(reg, reg)
        f = Matrix(F2, [[1], [0]], 1)
        hf = cohom_map(c_sub, c_reg, f)
        lhs = c_reg.unit_eta.matrix @ f
        rhs = hf.matrix.kron(Matrix.identity(F2, 2)) @ c_sub.unit_eta.matrix
        cod = tensor_modules(c_reg.module, reg.carrier)
        assert _maps_equal_mod(cod, lhs, rhs) is None

    def test_cohom_map_of_identity_is_identity(self):
        col = column_comodule(QQ, 2)
        c = cohom(col, col)
        hf = cohom_map(c, c, Matrix.identity(QQ, 2))
        assert hf.matrix == Matrix.identity(QQ, 1)

    def test_cohom_map_requires_matching_x(self):
        col = column_comodule(QQ, 2)
        reg = regular_comodule(grouplike_coalgebra(QQ, 2))
        c1 = cohom(col, col)
        c2 = cohom(reg, reg)
        with pytest.raises(ValueError, match="same X"):
            cohom_map(c1, c2, Matrix.identity(QQ, 2))


class TestAdjunction:

    def test_round_trip_field(self):
        reg = regular_comodule(grouplike_coalgebra(F2, 2))
        c = cohom(reg, reg)
        assert adjunction_round_trip(c, free_module(F2, 1))
        assert adjunction_round_trip(c, free_module(F2, 2))

    def test_round_trip_z4_with_torsion_w(self):
        reg = regular_comodule(grouplike_coalgebra(Z4, 2))
        c = cohom(reg, reg)
        assert adjunction_round_trip(c, free_module(Z4, 1))
        assert adjunction_round_trip(c, presented_module(Z4, 1,
                                                         Matrix(Z4, [[2]], 1)))

    def test_round_trip_comatrix(self):
        col = column_comodule(QQ, 2)
        c = cohom(col, col)
        assert adjunction_round_trip(c, free_module(QQ, 2))

    def test_non_factoring_map_raises(self):
        reg = regular_comodule(grouplike_coalgebra(F2, 2))
        c = cohom(reg, reg)
        # maps factoring through eta are diagonal here; this one is not
        bad = Matrix(F2, [[1, 1], [0, 1]], 2)
        with pytest.raises(ValueError, match="does not factor"):
            c.phi_inverse(free_module(F2, 1), bad)


class TestLambda:

    def test_lambda_trivial_w(self):
        reg = regular_comodule(grouplike_coalgebra(F2, 2))
        assert lambda_check(reg, reg, free_module(F2, 1))

    def test_lambda_torsion_w_over_z4(self):
        reg = regular_comodule(grouplike_coalgebra(Z4, 2))
        w = presented_module(Z4, 1, Matrix(Z4, [[2]], 1))
        assert lambda_check(reg, reg, w)

    def test_lambda_free_rank_three(self):
        reg = regular_comodule(grouplike_coalgebra(F5, 2))
        assert lambda_check(reg, reg, free_module(F5, 3))

    def test_lambda_comatrix(self):
        col = column_comodule(QQ, 2)
        assert lambda_check(col, col, free_module(QQ, 2))


class TestCoend:

    def test_coend_of_regular_is_the_coalgebra_itself(self):
        for c in (grouplike_coalgebra(F2, 2), grouplike_coalgebra(QQ, 3),
                  matrix_coalgebra(QQ, 2)):
            ce = coend(regular_comodule(c))
            assert ce.coalgebra.dim == c.dim
            comp = coend_comparison(regular_bicomodule(c), ce)
            assert comp.morphism_ok and comp.iso

    def test_coend_of_column_is_the_base_ring(self):
        ce = coend(column_comodule(QQ, 2))
        assert ce.coalgebra.dim == 1
        comp = coend_comparison(column_bicomodule(QQ, 2), ce)
        assert comp.morphism_ok and comp.iso

    def test_coend_of_doubled_column_is_the_matrix_coalgebra(self):
        col = column_comodule(QQ, 2)
        xx = direct_sum_comodules(col, col)
        ce = coend(xx)
        assert ce.coalgebra.dim == 4
        # left coaction of M^c(2) on W (x) X through the W leg
        g = 4
        rows = [[QQ.zero] * g for _ in range(4 * g)]
        for j in range(2):
            for i in range(2):
                for t in range(2):
                    rows[(j * 2 + i) * g + (i * 2 + t)][j * 2 + t] = QQ.one
        bi = Bicomodule(matrix_coalgebra(QQ, 2), col.coalgebra, xx.carrier,
                        Matrix(QQ, rows, g), xx.rho)
        comp = coend_comparison(bi, ce)
        assert comp.morphism_ok and comp.iso

    def test_coend_structures_verify(self):
        ce = coend(regular_comodule(grouplike_coalgebra(F3, 2)))
        assert check_coalgebra(ce.coalgebra).ok
        assert check_bicomodule(ce.bicomodule()).ok

    def test_grouplike_coend_dual_algebra_is_the_product_ring(self):
        # e(C) = C for C = grouplike(F3, 2), and the comparison transports
        # the dual algebra to the componentwise product table
        ce = coend(regular_comodule(grouplike_coalgebra(F3, 2)))
        comp = coend_comparison(regular_bicomodule(grouplike_coalgebra(F3, 2)),
                                ce)
        assert comp.iso
        alg = dual_algebra(ce.coalgebra)
        # product table of F3 x F3 after transporting along kappa: the
        # convolution of the transported basis stays componentwise
        k = comp.kappa
        ki = comp.inverse
        prods = {}
        for i in range(2):
            for j in range(2):
                col_idx = i * 2 + j
                prods[(i, j)] = [alg.mult[r, col_idx] for r in range(2)]
        # idempotents multiply diagonally exactly when kappa is diagonal up
        # to permutation scaling; verify through the counit instead:
        # eps(e_i * e_j) must be delta_ij after transport
        for i in range(2):
            for j in range(2):
                val = sum((ce.coalgebra.epsilon[0, r] * prods[(i, j)][r]
                           for r in range(2)), F3.zero)
                expected = F3.one if i == j else F3.zero
                assert F3.normalize(val) == expected

    def test_coend_rejects_nonfree_dual(self):
        x = direct_sum_comodules(rank1_nil_comodule(Z4, Z4.normalize(2)),
                                 rank1_nil_comodule(Z4, Z4.zero))
        with pytest.raises(NotFree):
            coend(x)


class TestAntiIso:

    def test_commutative_cases_pass_without_witness(self):
        assert dual_anti_iso_check(column_comodule(QQ, 2))
        rep = anti_iso_report(coend(regular_comodule(grouplike_coalgebra(F3, 2))))
        assert rep.ok
        assert rep.noncommuting_pair is None

    def test_matrix_coalgebra_reverses_with_witness(self):
        ce = coend(regular_comodule(matrix_coalgebra(QQ, 2)))
        rep = anti_iso_report(ce)
        assert rep.ok
        assert rep.noncommuting_pair is not None
        # recompute the two images from the coaction and watch them fail to
        # commute, independently of the report
        u, v = rep.noncommuting_pair
        q = 4
        eta = ce.coaction_on_x
        su = Matrix(QQ, [[eta[u * q + t, b] for b in range(q)]
                         for t in range(q)], q)
        sv = Matrix(QQ, [[eta[v * q + t, b] for b in range(q)]
                         for t in range(q)], q)
        assert su @ sv != sv @ su

    def test_grouplike_field_case(self):
        assert dual_anti_iso_check(regular_comodule(grouplike_coalgebra(F3, 2)))


class TestDelta:

    def test_delta_for_the_regular_comodule(self):
        bi = regular_bicomodule(grouplike_coalgebra(F2, 2))
        assert delta_check(bi, bi.right_comodule())

    def test_delta_comatrix_fixtures(self):
        bi = regular_bicomodule(matrix_coalgebra(QQ, 2))
        col = column_comodule(QQ, 2)
        assert delta_check(bi, col)
        assert delta_check(bi, bi.right_comodule())

    def test_delta_on_w_tensor_d(self):
        bi = regular_bicomodule(grouplike_coalgebra(F2, 2))
        m = trivial_comodule(free_module(F2, 2), bi.right_comodule())
        assert delta_check(bi, m)

    def test_delta_lands_in_the_cotensor(self):
        bi = regular_bicomodule(grouplike_coalgebra(F2, 2))
        reg = bi.right_comodule()
        dm = delta_map(bi, reg)
        ok, _ = is_isomorphism(dm)
        assert ok

    def test_exactness_gate(self):
        nc = nil_coalgebra(F2)
        triv = Comodule(nc, "right", free_module(F2, 1),
                        Matrix(F2, [[1], [0]], 1))
        bi = Bicomodule(grouplike_coalgebra(F2, 1), nc, triv.carrier,
                        Matrix.identity(F2, 1), triv.rho)
        with pytest.raises(ExactnessNotCertified):
            delta_check(bi, regular_comodule(nc))


class TestInjectorProbe:

    def test_regular_comodule_is_an_injector(self):
        rep = injector_and_exactness_probe(regular_bicomodule(
            grouplike_coalgebra(F2, 2)))
        assert rep.positive and rep.injective and rep.faithful
        assert len(rep.chain) == 3

    def test_column_comodule_is_an_injector(self):
        rep = injector_and_exactness_probe(column_bicomodule(QQ, 2))
        assert rep.positive

    def test_point_comodule_coflat_but_not_faithful(self):
        gq2 = grouplike_coalgebra(QQ, 2)
        pt = Comodule(gq2, "right", free_module(QQ, 1),
                      Matrix(QQ, [[1], [0]], 1))
        bi = Bicomodule(grouplike_coalgebra(QQ, 1), gq2, pt.carrier,
                        Matrix.identity(QQ, 1), pt.rho)
        rep = injector_and_exactness_probe(bi)
        assert rep.injective and rep.injector
        assert not rep.faithful
        assert rep.probe_report.faithful_failures == ("coord[0].quot",)

    def test_explicit_probe_family(self):
        bi = regular_bicomodule(grouplike_coalgebra(F5, 2))
        probes = standard_probes(bi.right_coalgebra)
        rep = injector_and_exactness_probe(bi, probes)
        assert rep.positive


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=1), min_size=1, max_size=3))
def test_coend_of_graded_comodules_always_verifies(assignment):
    """The coendomorphism coalgebra axioms are a theorem of the
    construction; sample graded comodules and let the internal assertions
    plus an external recheck confirm it."""
    c = grouplike_coalgebra(F5, 2)
    x = grading_comodule(c, assignment)
    ce = coend(x)
    assert check_coalgebra(ce.coalgebra).ok
    assert dual_anti_iso_check(x)


class TestRingGates:

    def test_everything_rejects_the_integers(self):
        dz = grouplike_coalgebra(ZZ, 2)
        reg = regular_comodule(dz)
        bi = regular_bicomodule(dz)
        with pytest.raises(UnsupportedRing):
            cohom(reg, reg)
        with pytest.raises(UnsupportedRing):
            coend(reg)
        with pytest.raises(UnsupportedRing):
            lambda_check(reg, reg, free_module(ZZ, 1))
        with pytest.raises(UnsupportedRing):
            dual_anti_iso_check(reg)
        with pytest.raises(UnsupportedRing):
            delta_check(bi, reg)
        with pytest.raises(UnsupportedRing):
            injector_and_exactness_probe(bi)
