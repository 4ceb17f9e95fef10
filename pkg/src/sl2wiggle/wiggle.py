"""Normal form of the wiggle map g -> w(x, y^g) for diagonal x, y.

For every word w there are unique polynomials alpha(t), beta(t) over the
Laurent ring such that the value of the wiggle at g equals

    ((gamma(t),            beta(t) * p),
     (-sigma(beta)(t) * q, sigma(gamma)(t)))    at t = det(xi_g),

where gamma = alpha + beta*t and xi_g = ((t, p), (q, -t)).  The pair
(alpha, beta) is the first column of a product of elementary transfer
matrices, one per x-run or y-run of the word, which is how everything
here is computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .errors import NotUnimodularError, ZeroParameterError
from .exact.laurent import LaurentPoly
from .exact.mat2 import Mat2, identity_q, xi_of
from .exact.qpoly import QPoly
from .exact.tpoly import TPoly
from .words import (
    CyclicForm,
    Gen,
    GeneratorPower,
    ReducedCyclic,
    Trivial,
    Word,
    word_to_pairs,
)

Pairs = tuple[tuple[int, int], ...]
WordLike = Union[Word, CyclicForm, Sequence[tuple[int, int]]]


class CancelledError(RuntimeError):
    """Raised when a caller-supplied cancellation callback fires."""


@dataclass(frozen=True)
class AssocPolys:
    """Associated polynomials of a word, plus the run decomposition that
    produced them (kept so the structural identities can be re-derived)."""

    alpha: TPoly
    beta: TPoly
    pairs: Pairs

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "pairs": [list(p) for p in self.pairs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AssocPolys":
        return cls(
            alpha=TPoly.from_json(data["alpha"]),
            beta=TPoly.from_json(data["beta"]),
            pairs=tuple((int(a), int(b)) for a, b in data.get("pairs", [])),
        )


@dataclass(frozen=True)
class WiggleValue:
    matrix: Mat2[Fraction]
    t_value: Fraction


@dataclass(frozen=True)
class IdentityReport:
    det_identity_ok: bool
    sigma_symmetry_ok: bool
    bezout_ok: bool

    @property
    def ok(self) -> bool:
        return self.det_identity_ok and self.sigma_symmetry_ok and self.bezout_ok

    @property
    def failures(self) -> tuple[str, ...]:
        names = []
        if not self.det_identity_ok:
            names.append("determinant identity gamma*sigma(gamma) - beta*sigma(beta)*t(t+1) = 1")
        if not self.sigma_symmetry_ok:
            names.append("sigma symmetry of (alpha, beta) under parameter inversion")
        if not self.bezout_ok:
            names.append("transfer-matrix determinant 1 (Bezout witness)")
        return tuple(names)


# ----------------------------------------------------------------------
# transfer matrices


def _x_step(invert_params: bool) -> Mat2[TPoly]:
    lam = LaurentPoly.lam(-1 if invert_params else 1)
    lam_inv = lam.unit_inverse()
    xbar_t = TPoly([LaurentPoly.zero(), lam - lam_inv])
    return Mat2(TPoly.const(lam), xbar_t, TPoly.zero(), TPoly.const(lam_inv))


def _y_step(invert_params: bool) -> Mat2[TPoly]:
    mu = LaurentPoly.mu(-1 if invert_params else 1)
    mu_inv = mu.unit_inverse()
    return Mat2(
        TPoly.const(mu),
        TPoly.zero(),
        TPoly.const(mu - mu_inv),
        TPoly.const(mu_inv),
    )


_T_IDENTITY = Mat2(TPoly.one(), TPoly.zero(), TPoly.zero(), TPoly.one())


def as_pairs(w: WordLike) -> Pairs:
    if isinstance(w, Word):
        return word_to_pairs(w)
    if isinstance(w, Trivial):
        return ()
    if isinstance(w, GeneratorPower):
        return ((w.exp, 0),) if w.gen is Gen.X else ((0, w.exp),)
    if isinstance(w, ReducedCyclic):
        return w.pairs
    return tuple((int(a), int(b)) for a, b in w)


def transfer_matrix(
    w: WordLike,
    invert_params: bool = False,
    cancel: Callable[[], bool] | None = None,
) -> Mat2[TPoly]:
    """Product of per-run transfer matrices, applied rightmost run first."""
    x_step = _x_step(invert_params)
    y_step = _y_step(invert_params)
    m = _T_IDENTITY
    for a, b in as_pairs(w):
        if cancel is not None and cancel():
            raise CancelledError("symbolic computation cancelled")
        m = y_step.pow_det1(b, _T_IDENTITY) * x_step.pow_det1(a, _T_IDENTITY) * m
    return m


def assoc_polys(w: WordLike, cancel: Callable[[], bool] | None = None) -> AssocPolys:
    """Compute (alpha, beta) for a word, cyclic form or explicit run list."""
    pairs = as_pairs(w)
    m = transfer_matrix(pairs, cancel=cancel)
    return AssocPolys(alpha=m.e11, beta=m.e21, pairs=pairs)


def gamma_of(ap: AssocPolys) -> TPoly:
    """gamma = alpha + beta * t, the (1,1) entry of the wiggle value."""
    return ap.alpha + ap.beta * TPoly.t()


def trace_poly(ap: AssocPolys) -> TPoly:
    """Trace of the wiggle value as a polynomial in t: gamma + sigma(gamma)."""
    g = gamma_of(ap)
    return g + g.sigma()


# ----------------------------------------------------------------------
# evaluation


def word_value(w: Word, xm: Mat2, ym: Mat2, identity: Mat2) -> Mat2:
    """Substitute matrices for the generators and multiply out the word."""
    gens = {Gen.X: xm, Gen.Y: ym}
    value = identity
    for s in w.syllables:
        value = value * gens[s.gen].pow_det1(s.exp, identity)
    return value


def _check_specialization(lam0: Fraction, mu0: Fraction):
    if lam0 == 0 or mu0 == 0:
        raise ZeroParameterError("torus parameters must be nonzero")


def _check_unimodular(g: Mat2[Fraction]):
    if g.det() != 1:
        raise NotUnimodularError("g must have determinant 1")


def eval_direct(w: Word, lam0, mu0, g: Mat2[Fraction]) -> Mat2[Fraction]:
    """Brute-force value w(x, g^-1 y g) with x, y the diagonal matrices."""
    lam0, mu0 = Fraction(lam0), Fraction(mu0)
    _check_specialization(lam0, mu0)
    _check_unimodular(g)
    xm = Mat2(lam0, Fraction(0), Fraction(0), 1 / lam0)
    ym = Mat2(mu0, Fraction(0), Fraction(0), 1 / mu0)
    y_conj = g.inv_det1() * ym * g
    return word_value(w, xm, y_conj, identity_q())


def eval_normal_form(ap: AssocPolys, lam0, mu0, g: Mat2[Fraction]) -> WiggleValue:
    """Assemble the wiggle value from (alpha, beta) at t = det(xi_g)."""
    lam0, mu0 = Fraction(lam0), Fraction(mu0)
    _check_specialization(lam0, mu0)
    _check_unimodular(g)
    xi = xi_of(g)
    t0 = xi.det()
    p, q = xi.e12, xi.e21
    gamma = gamma_of(ap)
    beta = ap.beta
    g11 = gamma.specialize(lam0, mu0).evaluate(t0)
    g22 = gamma.sigma().specialize(lam0, mu0).evaluate(t0)
    b12 = beta.specialize(lam0, mu0).evaluate(t0) * p
    b21 = -beta.sigma().specialize(lam0, mu0).evaluate(t0) * q
    matrix = Mat2(g11, b12, b21, g22)
    if matrix.det() != 1:
        raise AssertionError("normal-form value must have determinant 1")
    return WiggleValue(matrix=matrix, t_value=t0)


@dataclass(frozen=True)
class SpecializedAssoc:
    """(alpha, beta) and their sigma-partners at a fixed rational (lam, mu)."""

    lam0: Fraction
    mu0: Fraction
    alpha: QPoly
    beta: QPoly
    alpha_sigma: QPoly
    beta_sigma: QPoly

    @property
    def gamma(self) -> QPoly:
        return self.alpha + self.beta * QPoly.t()

    @property
    def gamma_sigma(self) -> QPoly:
        return self.alpha_sigma + self.beta_sigma * QPoly.t()

    @property
    def trace(self) -> QPoly:
        return self.gamma + self.gamma_sigma


def _spec_steps(lam0: Fraction, mu0: Fraction) -> tuple[Mat2[QPoly], Mat2[QPoly]]:
    zero, t = QPoly.zero(), QPoly.t()
    x_step = Mat2(
        QPoly.const(lam0),
        t * (lam0 - 1 / lam0),
        zero,
        QPoly.const(1 / lam0),
    )
    y_step = Mat2(
        QPoly.const(mu0),
        zero,
        QPoly.const(mu0 - 1 / mu0),
        QPoly.const(1 / mu0),
    )
    return x_step, y_step


_Q_IDENTITY = Mat2(QPoly.one(), QPoly.zero(), QPoly.zero(), QPoly.one())


def specialized_assoc(w: WordLike, lam0, mu0) -> SpecializedAssoc:
    """Run the transfer recursion directly over Q[t] at (lam0, mu0).

    The sigma-partners come from a second run at the inverted parameters:
    substituting the inverted values into the recursion is the same as
    evaluating the sigma-substituted polynomials at the original ones.
    """
    lam0, mu0 = Fraction(lam0), Fraction(mu0)
    _check_specialization(lam0, mu0)
    pairs = as_pairs(w)
    results = []
    for a0, b0 in ((lam0, mu0), (1 / lam0, 1 / mu0)):
        x_step, y_step = _spec_steps(a0, b0)
        m = _Q_IDENTITY
        for a, b in pairs:
            m = y_step.pow_det1(b, _Q_IDENTITY) * x_step.pow_det1(a, _Q_IDENTITY) * m
        results.append((m.e11, m.e21))
    (alpha, beta), (alpha_inv, beta_inv) = results
    return SpecializedAssoc(
        lam0=lam0,
        mu0=mu0,
        alpha=alpha,
        beta=beta,
        alpha_sigma=alpha_inv,
        beta_sigma=beta_inv,
    )


# ----------------------------------------------------------------------
# structural identities


def verify_identities(ap: AssocPolys) -> IdentityReport:
    """Check the three structural identities of the normal form symbolically.

    Failures indicate an implementation bug, never bad input, so the
    report names the violated identity instead of raising.
    """
    gamma = gamma_of(ap)
    t_t1 = TPoly.t() * (TPoly.t() + TPoly.one())
    det_ok = gamma * gamma.sigma() - ap.beta * ap.beta.sigma() * t_t1 == TPoly.one()

    # At the scalar level the parameter-inverted system computes exactly
    # the sigma-substituted pair (sigma applied to each coefficient).
    m_inv = transfer_matrix(ap.pairs, invert_params=True)
    sigma_ok = m_inv.e11 == ap.alpha.sigma() and m_inv.e21 == ap.beta.sigma()

    m = transfer_matrix(ap.pairs)
    bezout_ok = m.det() == TPoly.one()

    return IdentityReport(
        det_identity_ok=det_ok,
        sigma_symmetry_ok=sigma_ok,
        bezout_ok=bezout_ok,
    )
