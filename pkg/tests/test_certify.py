from fractions import Fraction

import pytest

from sl2wiggle.certify import (
    Certificate,
    CertStatus,
    DCParams,
    build_witness,
    certify,
    check_certificate,
    core_polys,
    specialized_core,
    sweep_box,
)
from sl2wiggle.errors import TrivialWordError
from sl2wiggle.exact.laurent import LaurentPoly
from sl2wiggle.exact.mat2 import identity_q, mat2_q
from sl2wiggle.exact.qpoly import QPoly
from sl2wiggle.exact.tpoly import TPoly, resultant
from sl2wiggle.wiggle import gamma_of, trace_poly

from dc_reference import (
    alpha_core_coeffs,
    resultant_closed_form,
    tau_coeffs,
    tau_equal_inner_x_exponents,
    tau_opposite_exponents_cleared,
)


def padded(p: TPoly, size: int) -> list:
    return [p.coeff(i) for i in range(size)]


class TestCorePolys:
    def test_trivial_raises(self):
        with pytest.raises(TrivialWordError):
            core_polys(DCParams(1, 1, 1, 1))
        with pytest.raises(TrivialWordError):
            core_polys(DCParams(0, 5, 2, 3))

    def test_generic_degrees(self):
        cp = core_polys(DCParams(1, 1, 2, 3))
        assert cp.tau.degree == 3
        assert cp.gamma_inner.degree == 5
        assert cp.alpha_core.degree == 4

    def test_alpha_constant_term_spot_value(self):
        cp = core_polys(DCParams(1, 1, 2, 3))
        expected = LaurentPoly.lam(10) * LaurentPoly.mu(14) - LaurentPoly.lam(
            8
        ) * LaurentPoly.mu(10)
        assert cp.alpha_core.coeff(0) == expected

    @pytest.mark.parametrize("params", [(1, 1, 2, 3), (2, 1, 1, 3), (1, 2, 3, 1)])
    def test_coefficient_tables(self, params):
        cp = core_polys(DCParams(*params))
        assert padded(cp.tau, 4) == tau_coeffs(*params)
        assert padded(cp.alpha_core, 5) == alpha_core_coeffs(*params)

    def test_equal_inner_x_exponents_factorization(self):
        cp = core_polys(DCParams(1, 1, 1, 3))
        assert cp.tau.degree == 2
        assert cp.tau == TPoly(tau_equal_inner_x_exponents(1, 1, 3))

    def test_opposite_exponents_factorization(self):
        cp = core_polys(DCParams(1, 1, -1, -1))
        clear, coeffs = tau_opposite_exponents_cleared(1, 1)
        assert cp.tau.scale(clear) == TPoly(coeffs)

    def test_factored_forms_reassemble(self):
        for params in [(1, 1, 2, 3), (1, 1, 1, 3), (1, 1, -1, -1), (2, -1, 1, 2)]:
            p = DCParams(*params)
            cp = core_polys(p)
            ap = cp.assoc
            t_t1 = TPoly.t() * (TPoly.t() + TPoly.one())
            den2 = cp.prefactor_den * cp.prefactor_den
            pref = TPoly.const(cp.prefactor_num)
            trace = trace_poly(ap)
            assert (trace - TPoly.one() * 2).scale(den2) == pref * pref * t_t1 * t_t1 * cp.tau
            gamma = gamma_of(ap)
            assert (gamma - TPoly.one()).scale(den2) == pref * t_t1 * cp.gamma_inner
            assert (ap.alpha - TPoly.one()).scale(den2) == pref * t_t1 * cp.alpha_core

    def test_specialized_matches_symbolic_route(self):
        for params in [(1, 1, 2, 3), (1, 1, -1, -1), (2, 1, 1, 3)]:
            p = DCParams(*params)
            cp = core_polys(p)
            for lam0, mu0 in [(Fraction(2), Fraction(3)), (Fraction(3, 2), Fraction(5, 7))]:
                sc = specialized_core(p, lam0, mu0)
                assert sc.tau == cp.tau.specialize(lam0, mu0)
                assert sc.gamma_inner == cp.gamma_inner.specialize(lam0, mu0)

    def test_degenerate_specialization_returns_none(self):
        assert specialized_core(DCParams(1, 1, 2, 3), Fraction(1), Fraction(2)) is None


class TestResultantFormula:
    @pytest.mark.parametrize("params", [(1, 1, 2, 3), (1, 2, 2, 1)])
    def test_closed_form(self, params):
        cp = core_polys(DCParams(*params))
        # matches the closed form exactly; the sign convention is
        # res(f, g) = lc(f)^deg(g) * prod g(roots of f), global sign +1
        assert resultant(cp.tau, cp.gamma_inner) == resultant_closed_form(*params)

    def test_resultant_zero_in_swap_family(self):
        # inner y-exponents equal: tau divides gamma_inner, resultant vanishes
        cp = core_polys(DCParams(1, 1, 2, 1))
        assert resultant(cp.tau, cp.gamma_inner) == LaurentPoly.zero()
        assert cp.tau.divides_over_fractions(cp.gamma_inner)


class TestCertify:
    def test_generic_certifies_first_attempt(self):
        cert = certify(DCParams(1, 1, 2, 3), seed=7)
        assert cert.status is CertStatus.CERTIFIED
        assert cert.hpoly.degree == 3
        assert cert.checks.all_ok
        assert check_certificate(cert).valid

    def test_seed_determinism(self):
        a = certify(DCParams(1, 1, 2, 3), seed=42)
        b = certify(DCParams(1, 1, 2, 3), seed=42)
        assert a == b

    def test_swap_family_needs_swap(self):
        cert = certify(DCParams(1, 1, 2, 1), seed=3)
        assert cert.status is CertStatus.SWAPPED_CERTIFIED
        assert cert.attempts > 5
        assert cert.effective_params() == DCParams(1, 1, 1, 2)
        assert check_certificate(cert).valid

    def test_trivial_word(self):
        cert = certify(DCParams(1, 1, 1, 1))
        assert cert.status is CertStatus.TRIVIAL_WORD
        assert check_certificate(cert).valid

    def test_opposite_exponents_exact_root(self):
        cert = certify(
            DCParams(1, 1, -1, -1), seed=1, initial=(Fraction(2), Fraction(3))
        )
        assert cert.status is CertStatus.CERTIFIED
        assert cert.attempts == 1
        assert cert.hpoly == QPoly([49, 48])
        assert cert.hpoly.rational_roots() == [Fraction(-49, 48)]

    def test_degenerate_specialization_resampled(self):
        # at lam = mu = 2 the emerging root collides with -1 and must be rejected
        cert = certify(
            DCParams(1, 1, -1, -1), seed=5, initial=(Fraction(2), Fraction(2))
        )
        assert cert.certified
        assert cert.attempts > 1

    def test_certificate_json_round_trip(self):
        cert = certify(DCParams(1, 1, 2, 3), seed=9)
        assert Certificate.from_json(cert.to_json()) == cert

    def test_checker_rejects_tampered_h(self):
        cert = certify(DCParams(1, 1, 2, 3), seed=11)
        tampered = Certificate(
            params=cert.params,
            status=cert.status,
            lam0=cert.lam0,
            mu0=cert.mu0,
            hpoly=cert.hpoly * QPoly([1, 1]),
            checks=cert.checks,
            attempts=cert.attempts,
        )
        assert not check_certificate(tampered).valid

    def test_resultant_consistency_at_specialization(self):
        # generic case: nonzero specialized resultant pins h to the stripped
        # squarefree part of tau
        from sl2wiggle.exact.qpoly import resultant_q, squarefree_without

        cert = certify(DCParams(1, 1, 2, 3), seed=7)
        sc = specialized_core(cert.params, cert.lam0, cert.mu0)
        assert resultant_q(sc.tau, sc.gamma_inner) != 0
        stripped = squarefree_without(sc.tau, [Fraction(0), Fraction(-1)])
        assert cert.hpoly == stripped.clear_denominators()

    def test_tau_vanishing_at_zero_is_logged(self, caplog):
        import logging

        # lam = mu = 2 makes tau(0) vanish for these exponents
        with caplog.at_level(logging.INFO, logger="sl2wiggle.certify"):
            cert = certify(
                DCParams(2, 1, 1, 2), seed=4, initial=(Fraction(2), Fraction(2))
            )
        assert cert.certified
        assert any("tau vanishes" in r.message for r in caplog.records)

    def test_checker_rejects_wrong_status(self):
        cert = certify(DCParams(1, 1, 1, 1))
        wrong = Certificate(
            params=DCParams(1, 1, 2, 3),
            status=CertStatus.TRIVIAL_WORD,
            lam0=None,
            mu0=None,
            hpoly=None,
            checks=None,
            attempts=0,
        )
        assert check_certificate(cert).valid
        assert not check_certificate(wrong).valid


class TestWitness:
    def test_exact_witness(self):
        cert = certify(
            DCParams(1, 1, -1, -1), seed=1, initial=(Fraction(2), Fraction(3))
        )
        w = build_witness(cert)
        assert w.exact
        assert w.t0 == Fraction(-49, 48)
        assert w.g == mat2_q(1, 1, Fraction(-49, 48), Fraction(-1, 48))
        assert w.u.trace() == 2
        assert w.u.det() == 1
        assert w.u != identity_q()
        assert w.residual == 0
        assert w.modular.all_ok

    def test_numeric_witness(self):
        cert = certify(DCParams(1, 1, 2, 3), seed=7)
        w = build_witness(cert, precision_digits=64)
        assert not w.exact
        assert w.minimal_poly.degree >= 2
        assert w.residual <= Fraction(1, 10**50)
        assert w.modular.all_ok
        assert not ((cert.hpoly % w.minimal_poly))

    def test_numeric_witness_at_fixed_specialization(self):
        cert = certify(
            DCParams(1, 1, 2, 3), seed=0, initial=(Fraction(2), Fraction(2))
        )
        assert cert.certified and (cert.lam0, cert.mu0) == (2, 2)
        w = build_witness(cert, precision_digits=64)
        assert w.residual <= Fraction(1, 10**50)
        assert w.modular.all_ok

    def test_witness_from_swapped_certificate(self):
        # the swap family's degree-2 h splits into rational linear factors
        cert = certify(DCParams(1, 1, 2, 1), seed=3)
        assert cert.status is CertStatus.SWAPPED_CERTIFIED
        w = build_witness(cert)
        assert w.exact
        assert w.u.trace() == 2 and w.u.det() == 1 and w.u != identity_q()

    def test_trivial_certificate_rejected(self):
        cert = certify(DCParams(1, 1, 1, 1))
        with pytest.raises(ValueError):
            build_witness(cert)

    def test_witness_json(self):
        cert = certify(
            DCParams(1, 1, -1, -1), seed=1, initial=(Fraction(2), Fraction(3))
        )
        data = build_witness(cert).to_json()
        assert data["exact"] is True
        assert data["t0"] == "-49/48"
        assert data["g"][1][0] == "-49/48"


class TestSweep:
    def test_small_box_all_certified(self):
        certs = sweep_box(max_abs=1, seed=2)
        assert len(certs) == 16
        for cert in certs:
            if cert.params.is_trivial():
                assert cert.status is CertStatus.TRIVIAL_WORD
            else:
                assert cert.certified
            assert check_certificate(cert).valid
