import threading
from fractions import Fraction

import pytest

from sl2wiggle.exact.laurent import LaurentPoly
from sl2wiggle.exact.mat2 import identity_q, mat2_q, xi_of
from sl2wiggle.exact.tpoly import TPoly
from sl2wiggle.wiggle import (
    CancelledError,
    assoc_polys,
    eval_direct,
    eval_normal_form,
    gamma_of,
    specialized_assoc,
    trace_poly,
    transfer_matrix,
    verify_identities,
    word_value,
)
from sl2wiggle.words import Word, cyclic_reduce, parse_word

from conftest import (
    random_commutator_subgroup_word,
    random_nonzero_fraction,
    random_sl2,
    random_word,
)

T = TPoly.t()
ONE = TPoly.one()


def xbar() -> LaurentPoly:
    return LaurentPoly.lam(1) - LaurentPoly.lam(-1)


def ybar() -> LaurentPoly:
    return LaurentPoly.mu(1) - LaurentPoly.mu(-1)


class TestAssocPolys:
    def test_trivial_word(self):
        ap = assoc_polys(Word.identity())
        assert ap.alpha == ONE and ap.beta == TPoly.zero()

    def test_xy(self):
        ap = assoc_polys(parse_word("x y"))
        assert ap.alpha == TPoly.const(LaurentPoly.lam(1) * LaurentPoly.mu(1))
        assert ap.beta == TPoly.const(ybar() * LaurentPoly.lam(1))

    def test_commutator_trace(self):
        ap = assoc_polys(parse_word("[x,y]"))
        ref = TPoly.const(xbar() ** 2 * ybar() ** 2) * T * (T + ONE) + ONE * 2
        assert trace_poly(ap) == ref

    def test_accepts_cyclic_form_and_pairs(self):
        w = parse_word("x^2 y x^-1 y^3")
        # the cyclic form is a canonical rotation, i.e. a specific conjugate
        cf = cyclic_reduce(w)
        assert assoc_polys(cf).alpha == assoc_polys(cf.to_word()).alpha
        assert assoc_polys([(2, 1), (-1, 3)]).alpha == assoc_polys(w).alpha
        # trace is a conjugacy invariant, so either representative gives it
        assert trace_poly(assoc_polys(cf)) == trace_poly(assoc_polys(w))

    def test_independent_of_run_decomposition(self):
        # splitting a run into pieces with zero partners changes nothing
        a = assoc_polys([(2, 1)])
        b = assoc_polys([(1, 0), (1, 1)])
        assert (a.alpha, a.beta) == (b.alpha, b.beta)

    def test_recursion_step_formula(self, rng):
        # appending x^a y^b acts by the displayed one-run recursion
        for _ in range(25):
            w = random_word(rng, max_syllables=4)
            a = rng.randint(-3, 3)
            b = rng.randint(-3, 3)
            base = assoc_polys(w)
            lam_a = LaurentPoly.lam(a)
            mu_b = LaurentPoly.mu(b)
            xbar_a = LaurentPoly.lam(a) - LaurentPoly.lam(-a)
            ybar_b = LaurentPoly.mu(b) - LaurentPoly.mu(-b)
            alpha_next = base.alpha.scale(lam_a * mu_b) + base.beta.scale(
                xbar_a * mu_b
            ) * T
            beta_next = base.alpha.scale(ybar_b * lam_a) + base.beta * (
                TPoly.const(lam_a.unit_inverse() * mu_b.unit_inverse())
                + TPoly.const(xbar_a * ybar_b) * T
            )
            extended = assoc_polys(tuple(base.pairs) + ((a, b),))
            assert extended.alpha == alpha_next
            assert extended.beta == beta_next

    def test_cancellation(self):
        cancelled = threading.Event()
        cancelled.set()
        with pytest.raises(CancelledError):
            assoc_polys(parse_word("[x,y]"), cancel=cancelled.is_set)

    def test_json_round_trip(self):
        from sl2wiggle.wiggle import AssocPolys

        ap = assoc_polys(parse_word("x y^-2"))
        data = ap.to_json()
        back = AssocPolys.from_json(data)
        assert back.alpha == ap.alpha and back.beta == ap.beta
        assert back.pairs == ap.pairs


class TestGammaAndTrace:
    def test_trivial(self):
        ap = assoc_polys(Word.identity())
        assert gamma_of(ap) == ONE
        assert trace_poly(ap) == ONE * 2

    def test_commutator_gamma_at_zero(self):
        gamma = gamma_of(assoc_polys(parse_word("[x,y]")))
        assert gamma.coeff(0) == LaurentPoly.one()

    def test_trace_sigma_invariant(self, rng):
        for _ in range(20):
            tr = trace_poly(assoc_polys(random_word(rng)))
            assert tr.sigma() == tr

    def test_commutator_subgroup_trace_divisibility(self, rng):
        # for words with zero exponent sums, trace - 2 vanishes at t = 0, -1
        t_t1 = T * (T + ONE)
        for _ in range(50):
            w = random_commutator_subgroup_word(rng)
            tr = trace_poly(assoc_polys(w))
            (tr - ONE * 2).exact_div(t_t1)  # raises if not divisible

    def test_general_word_no_divisibility(self):
        tr = trace_poly(assoc_polys(Word.x_pow(1)))
        assert tr == TPoly.const(LaurentPoly.lam(1) + LaurentPoly.lam(-1))


class TestEvaluation:
    def test_direct_trivial(self):
        assert eval_direct(Word.identity(), 2, 3, mat2_q(1, 1, 0, 1)) == identity_q()

    def test_identity_g(self):
        w = parse_word("x^2 y^-1")
        ap = assoc_polys(w)
        nf = eval_normal_form(ap, 2, 3, identity_q())
        assert nf.t_value == 0
        assert nf.matrix == eval_direct(w, 2, 3, identity_q())

    def test_intro_unipotent(self):
        w = parse_word("[x,y]")
        ap = assoc_polys(w)
        g = mat2_q(0, 1, -1, 1)
        value = eval_normal_form(ap, 2, 2, g)
        assert value.matrix.trace() == 2
        assert value.matrix != identity_q()
        assert value.matrix.det() == 1
        assert value.matrix == eval_direct(w, 2, 2, g)

    def test_random_agreement(self, rng):
        for _ in range(80):
            w = random_word(rng)
            ap = assoc_polys(w)
            lam0 = random_nonzero_fraction(rng)
            mu0 = random_nonzero_fraction(rng)
            g = random_sl2(rng)
            nf = eval_normal_form(ap, lam0, mu0, g)
            assert nf.matrix == eval_direct(w, lam0, mu0, g)
            assert nf.t_value == xi_of(g).det()

    def test_specialized_assoc_matches_symbolic(self, rng):
        for _ in range(25):
            w = random_word(rng)
            ap = assoc_polys(w)
            lam0 = random_nonzero_fraction(rng)
            mu0 = random_nonzero_fraction(rng)
            sa = specialized_assoc(w, lam0, mu0)
            assert sa.alpha == ap.alpha.specialize(lam0, mu0)
            assert sa.beta == ap.beta.specialize(lam0, mu0)
            assert sa.alpha_sigma == ap.alpha.sigma().specialize(lam0, mu0)
            assert sa.beta_sigma == ap.beta.sigma().specialize(lam0, mu0)

    def test_word_value_on_upper_triangular(self):
        # [x^a, y^b] with non-diagonal upper-triangular x is unipotent
        y = mat2_q(2, 0, 0, Fraction(1, 2))
        for x in (mat2_q(1, 1, 0, 1), mat2_q(2, 3, 0, Fraction(1, 2))):
            for a in (1, 2, 3):
                for b in (1, 2, 3):
                    w = parse_word(f"[x^{a},y^{b}]")
                    u = word_value(w, x, y, identity_q())
                    assert u.trace() == 2
                    assert u != identity_q()
                    # value equals 1 + (mu^-b - mu^b) xi_{x^a} y^b
                    xi = xi_of(x.pow_det1(a, identity_q()))
                    bar = Fraction(1, 2) ** b - Fraction(2) ** b
                    assert u == identity_q() + (xi * y.pow_det1(b, identity_q())).scale(bar)


class TestIdentities:
    def test_commutator_passes(self):
        assert verify_identities(assoc_polys(parse_word("[x,y]"))).ok

    def test_trivial_passes(self):
        report = verify_identities(assoc_polys(Word.identity()))
        assert report.ok and report.failures == ()

    def test_random_words_pass(self, rng):
        for _ in range(30):
            assert verify_identities(assoc_polys(random_word(rng, max_syllables=5))).ok

    def test_transfer_matrix_det(self, rng):
        for _ in range(10):
            m = transfer_matrix(random_word(rng, max_syllables=5))
            assert m.det() == ONE

    def test_report_names_failures(self):
        from sl2wiggle.wiggle import IdentityReport

        report = IdentityReport(False, True, False)
        assert not report.ok
        assert len(report.failures) == 2
