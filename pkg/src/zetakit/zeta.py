"""The zeta family: Hurwitz zeta, Riemann zeta, Dirichlet eta, the
Hurwitz-Lerch transcendent, polylogarithms, and the functional-equation
factor chi(s).

Continuation backbone: Euler-Maclaurin for the Hurwitz zeta,

    zeta(s, a) = sum_{n=0}^{N-1} (n+a)^{-s}
               + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
               + sum_{k=1}^{M} [B_{2k}/(2k)!] (s)_{2k-1} (N+a)^{-s-2k+1},

valid for all s != 1 with Re(a) > 0.  The shift N adapts to s: for
Re(s) >= 0 it grows like |s|; for Re(s) < 0 it *shrinks* so the huge
power-law direct terms cannot cancel catastrophically against the integral
term, while the correction sum is extended adaptively (terms are added
while they keep decreasing) far enough to reach the asymptotic floor.
Every path reports a rounding-aware error estimate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from . import faults
from .errors import ConvergenceError, DomainError, PoleError
from .numeric_core import (
    MAX_POLY_DEGREE,
    alternating_sum_cvz,
    bernoulli_number,
    compensated_sum,
    euler_transform_tail,
    ln_gamma,
    monotone_onset,
    require_finite,
)
from .result import EvalResult

__all__ = [
    "SeriesConfig",
    "LerchParams",
    "hurwitz_zeta",
    "hurwitz_diff",
    "riemann_zeta",
    "dirichlet_eta",
    "lerch_phi",
    "polylog",
    "chi_ratio",
    "digamma",
]

_PI = math.pi
_LN_PI = math.log(math.pi)
_LN2 = math.log(2.0)


@dataclass(frozen=True)
class SeriesConfig:
    """Tolerances and budgets shared by the series/continuation routines."""

    rel_tol: float = 1e-13
    max_terms: int = 500_000
    em_shift: int = 10   # baseline N in the Euler-Maclaurin formula
    em_order: int = 12   # baseline number of correction terms, 2M

    def __post_init__(self) -> None:
        if self.rel_tol <= 0:
            raise DomainError("rel_tol must be positive")
        if self.max_terms <= 0 or self.em_shift <= 0 or self.em_order <= 0:
            raise DomainError("budgets must be positive")
        if self.em_order % 2 != 0:
            raise DomainError("em_order must be even")
        if self.em_order + 2 > MAX_POLY_DEGREE:
            raise DomainError(
                f"em_order {self.em_order} needs Bernoulli numbers beyond "
                f"the degree-{MAX_POLY_DEGREE} table"
            )


DEFAULT_SERIES = SeriesConfig()


@dataclass(frozen=True)
class LerchParams:
    """Arguments (z, s, a) of the transcendent sum_{n>=0} z^n (n+a)^{-s}."""

    z: complex
    s: complex
    a: complex

    def __post_init__(self) -> None:
        require_finite(self.z, "z")
        require_finite(self.s, "s")
        a = require_finite(self.a, "a")
        if a.imag == 0.0 and a.real <= 0.0 and a.real == math.floor(a.real):
            raise DomainError("a must avoid the non-positive integers")
        if abs(self.z) > 1.0 + 1e-14:
            raise DomainError("require |z| <= 1")
        z = complex(self.z)
        s = complex(self.s)
        if abs(abs(z) - 1.0) <= 1e-14 and abs(z - 1.0) > 1e-12 and s.real <= 0.0:
            raise DomainError("|z| = 1 with z != 1 needs Re(s) > 0")


def _cpow(base: complex, expo: complex) -> complex:
    """Principal-branch base**expo via exp(expo * log(base))."""
    return cmath.exp(expo * cmath.log(base))


def _cexpm1(u: complex) -> complex:
    """exp(u) - 1 without cancellation for small |u|."""
    if abs(u) < 1e-4:
        return u * (1.0 + u * (0.5 + u * (1.0 / 6.0 + u / 24.0)))
    return cmath.exp(u) - 1.0


def _hurwitz_reflection(s: complex, a: float, cfg: SeriesConfig) -> EvalResult:
    """zeta(s, a) for Re(s) < 0 and real a > 0 by the Fourier reflection

        zeta(s, a0) = 2 Gamma(1-s) (2 pi)^{s-1}
                      * sum_{n>=1} sin(pi s / 2 + 2 pi n a0) / n^{1-s},

    valid for a0 in (0, 1]; larger a is first reduced by the recurrence
    zeta(s, a) = zeta(s, a - m) - sum_{j<m} (a - m + j)^{-s}.  The series
    gains accuracy as Re(s) decreases — the regime where Euler-Maclaurin
    loses it — so it serves as the deep-left-half-plane route.
    """
    sigma = s.real
    m = max(0, math.ceil(a) - 1)
    a0 = a - m
    reduction: list[complex] = [
        -_cpow(a0 + j, -s) for j in range(m)
    ]

    amp = cmath.exp(ln_gamma(1.0 - s)) * 2.0 * _cpow(2.0 * _PI, s - 1.0)
    half_arg = 0.5 * _PI * s
    n_terms = max(8, math.ceil((cfg.rel_tol * (-sigma)) ** (1.0 / sigma)))
    n_terms = min(n_terms, cfg.max_terms)
    series_terms = [
        cmath.sin(half_arg + 2.0 * _PI * n * a0) * _cpow(n, s - 1.0)
        for n in range(1, n_terms + 1)
    ]
    series = compensated_sum(series_terms)
    tail = (n_terms ** sigma) / (-sigma) * math.cosh(0.5 * _PI * s.imag)
    reflected = amp * series
    value = reflected + compensated_sum(reduction)
    peak = max(
        (abs(t) for t in reduction), default=0.0
    )
    peak = max(peak, abs(reflected))
    err = abs(amp) * tail + 3e-16 * peak + 5e-15 * abs(value)
    return EvalResult(value, err, "hurwitz/reflection",
                      n_terms + len(reduction))


def hurwitz_zeta(
    s: complex, a: complex, cfg: SeriesConfig | None = None
) -> EvalResult:
    """Hurwitz zeta zeta(s, a) for complex s != 1, Re(a) > 0.

    Euler-Maclaurin continuation on both sides of the critical strip; for
    deeply negative non-integer Re(s) with real a the Fourier reflection
    series takes over.  See the module docstring for the parameter policy.
    """
    cfg = cfg or DEFAULT_SERIES
    s = require_finite(s, "s")
    a = require_finite(a, "a")
    if abs(s - 1.0) < 1e-12:
        raise PoleError("pole at s=1")
    if a.real <= 0.0:
        raise DomainError(f"hurwitz_zeta needs Re(a) > 0, got a={a!r}")

    sigma = s.real
    terminating = (
        sigma < 0.0
        and s.imag == 0.0
        and s.real == round(s.real)
        and 1 - round(s.real) <= MAX_POLY_DEGREE
    )
    if sigma <= -4.0 and not terminating and a.imag == 0.0:
        out = _hurwitz_reflection(s, a.real, cfg)
        return EvalResult(faults.perturb("hurwitz_zeta", out.value),
                          out.err_estimate, out.strategy, out.work)
    if sigma >= 0.0:
        n_shift = max(cfg.em_shift, math.ceil(abs(s)) + 10)
    elif terminating:
        # Negative integer order: the correction series terminates exactly
        # (the Pochhammer factor vanishes), so the smallest shift minimises
        # the power-law term growth and with it the cancellation error.
        n_shift = 1
    else:
        # Moderately negative order (the reflection route owns the deep
        # range): a generous shift keeps the asymptotic correction ratio
        # ((|s|+2k)/(2 pi q))^2 well under 1, while the direct terms grow
        # only like (n+a)^{|sigma|} <= q^4, a cancellation the peak-based
        # error term tracks.  The 0.8|Im s| part covers tau-driven growth.
        n_shift = max(
            cfg.em_shift,
            math.ceil(abs(s)) + 10,
            round(2.5 + 0.8 * abs(s.imag) - a.real),
        )

    direct = [_cpow(k + a, -s) for k in range(n_shift)]
    head = compensated_sum(direct)
    q = n_shift + a
    q_pow_ms = _cpow(q, -s)  # q^{-s}
    integral = _cpow(q, 1.0 - s) / (s - 1.0)
    half = q_pow_ms / 2.0

    # Correction terms T_k = B_{2k}/(2k)! * (s)_{2k-1} * q^{-s-2k+1};
    # extend beyond the configured baseline while they keep shrinking
    # (asymptotic series: stop at the smallest term).
    base_pairs = cfg.em_order // 2
    max_pairs = (MAX_POLY_DEGREE - 2) // 2
    poch = s                     # (s)_{2k-1}, starting at (s)_1
    qfac = q_pow_ms / q          # q^{-s-2k+1}, starting at q^{-s-1}
    corrections: list[complex] = []
    peak = max(
        (abs(t) for t in direct), default=0.0
    )
    peak = max(peak, abs(integral), abs(half))
    body = abs(head + integral + half)
    trunc_err = 0.0
    k = 1
    while k <= max_pairs:
        if terminating and poch == 0.0:
            trunc_err = 0.0  # finite exact formula fully summed
            break
        b_over_fact = bernoulli_number(2 * k) / math.factorial(2 * k)
        term = float(b_over_fact) * poch * qfac
        mag = abs(term)
        if corrections and mag > abs(corrections[-1]) and not terminating:
            if k > base_pairs:
                trunc_err = abs(corrections[-1])  # asymptotic floor reached
                break
        corrections.append(term)
        peak = max(peak, mag)
        if (
            not terminating
            and mag <= 1e-18 * max(body, 1e-300)
            and k >= base_pairs
        ):
            trunc_err = mag
            k += 1
            break
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        qfac /= q * q
        k += 1
    else:
        # Ran out of table; charge the next (uncomputed) term via the last.
        trunc_err = abs(corrections[-1]) if corrections else 0.0

    value = head + integral + half + compensated_sum(corrections)
    err = trunc_err + 3e-16 * peak + 1e-16 * abs(value)
    value = faults.perturb("hurwitz_zeta", value)
    return EvalResult(
        value, err, "hurwitz/euler-maclaurin", n_shift + 2 * len(corrections)
    )


def riemann_zeta(
    s: complex, cfg: SeriesConfig | None = None, via: str = "auto"
) -> EvalResult:
    """Riemann zeta through either continuation route.

    via="em" (default for "auto") evaluates zeta(s, 1) by Euler-Maclaurin;
    via="functional" uses zeta(s) = chi(s) zeta(1-s), which is the
    independent cross-check route for Re(s) < 0.
    """
    cfg = cfg or DEFAULT_SERIES
    s = require_finite(s, "s")
    if abs(s - 1.0) < 1e-12:
        raise PoleError("pole at s=1")
    if via not in ("auto", "em", "functional"):
        raise DomainError(f"unknown route {via!r}")
    if via == "functional":
        chi = chi_ratio(s)
        if chi.value == 0.0:
            return EvalResult(0.0, chi.err_estimate, "riemann/functional-equation",
                              chi.work)
        other = hurwitz_zeta(1.0 - s, 1.0, cfg)
        value = chi.value * other.value
        err = (
            abs(chi.value) * other.err_estimate
            + abs(other.value) * chi.err_estimate
        )
        return EvalResult(value, err, "riemann/functional-equation",
                          chi.work + other.work)
    if s.real >= 30.0:
        # Fast, fully converged direct sum; the tail is below 4^{-30}.
        terms = [_cpow(n, -s) for n in range(1, 33)]
        value = compensated_sum(terms)
        return EvalResult(value, abs(terms[-1]) + 1e-16 * abs(value),
                          "riemann/direct-sum", len(terms))
    inner = hurwitz_zeta(s, 1.0, cfg)
    return EvalResult(inner.value, inner.err_estimate,
                      "riemann/euler-maclaurin", inner.work)


def dirichlet_eta(s: complex, cfg: SeriesConfig | None = None) -> EvalResult:
    """Alternating zeta eta(s) = (1 - 2^{1-s}) zeta(s); entire in s.

    The removable point s = 1 returns the limit value log 2 whenever
    |s - 1| < 1e-8; elsewhere the prefactor is computed via a
    cancellation-free expm1 so the zeta pole divides out cleanly.
    """
    cfg = cfg or DEFAULT_SERIES
    s = require_finite(s, "s")
    if abs(s - 1.0) < 1e-8:
        return EvalResult(complex(_LN2), 2e-9, "eta/limit-ln2", 1)
    factor = -_cexpm1((1.0 - s) * _LN2)  # 1 - 2^{1-s}
    z = riemann_zeta(s, cfg)
    value = factor * z.value
    err = abs(factor) * z.err_estimate + 1e-15 * abs(value)
    return EvalResult(value, err, "eta/zeta-scaled", z.work + 1)


def digamma(a: complex) -> complex:
    """psi(a) = Gamma'(a)/Gamma(a) by shifted asymptotic expansion.

    Used for the pole-cancelled Hurwitz difference at s = 1.
    """
    a = require_finite(a, "a")
    if a.imag == 0.0 and a.real <= 0.0 and a.real == math.floor(a.real):
        raise PoleError(f"pole at a={a.real:g}")
    acc = complex(0.0)
    w = complex(a)
    while w.real < 12.0:
        acc -= 1.0 / w
        w += 1.0
    inv2 = 1.0 / (w * w)
    # - sum B_{2k}/(2k) w^{-2k}, k = 1..7
    series = complex(0.0)
    coeff = [
        1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    ]
    p = inv2
    for c in coeff:
        series += c * p
        p *= inv2
    return acc + cmath.log(w) - 0.5 / w - series


def hurwitz_diff(
    s: complex, a: complex, b: complex, cfg: SeriesConfig | None = None
) -> EvalResult:
    """zeta(s, a) - zeta(s, b) with the s = 1 pole cancelled.

    At s = 1 the simple poles cancel and the finite limit is
    psi(b) - psi(a); elsewhere this is a plain difference of two
    Euler-Maclaurin evaluations.
    """
    s = require_finite(s, "s")
    if abs(s - 1.0) < 1e-12:
        value = digamma(b) - digamma(a)
        return EvalResult(value, 1e-13 * (1.0 + abs(value)),
                          "hurwitz/pole-cancelled-digamma", 2)
    za = hurwitz_zeta(s, a, cfg)
    zb = hurwitz_zeta(s, b, cfg)
    value = za.value - zb.value
    return EvalResult(value, za.err_estimate + zb.err_estimate,
                      "hurwitz/euler-maclaurin-diff", za.work + zb.work)


def lerch_phi(p: LerchParams, cfg: SeriesConfig | None = None) -> EvalResult:
    """Hurwitz-Lerch transcendent Phi(z, s, a) = sum z^n (n+a)^{-s}.

    Dispatch: z = 0 -> single term; z = 1 -> Hurwitz-zeta continuation;
    |z| < 1 -> direct geometric-tail summation; z = -1 -> Chebyshev-
    accelerated alternating sum; other unimodular z -> Euler transform of
    the tail once the term moduli are monotone.
    """
    cfg = cfg or DEFAULT_SERIES
    z, s, a = complex(p.z), complex(p.s), complex(p.a)

    if z == 0.0:
        value = _cpow(a, -s)
        value = faults.perturb("lerch_phi", value)
        return EvalResult(value, 1e-16 * abs(value), "lerch/single-term", 1)

    if abs(z - 1.0) < 1e-12:
        inner = hurwitz_zeta(s, a, cfg)
        value = faults.perturb("lerch_phi", inner.value)
        return EvalResult(value, inner.err_estimate, "lerch/hurwitz-delegate",
                          inner.work)

    r = abs(z)
    if r < 1.0 - 1e-14:
        total = complex(0.0)
        comp_terms: list[complex] = []
        zpow = complex(1.0)
        sigma = s.real
        n = 0
        while n < cfg.max_terms:
            term = zpow * _cpow(n + a, -s)
            comp_terms.append(term)
            total += term
            zpow *= z
            n += 1
            # Geometric tail bound with a crude polynomial-growth guard.
            nxt = abs(zpow) * abs(_cpow(n + a, -s))
            bound = nxt / (1.0 - r)
            if sigma < 0.0:
                bound *= (1.0 + 2.0 / (n * (1.0 - r))) ** (-sigma)
            if bound <= cfg.rel_tol * max(abs(total), 1e-300) and n >= 4:
                value = compensated_sum(comp_terms)
                value = faults.perturb("lerch_phi", value)
                return EvalResult(value, bound + 1e-16 * abs(value),
                                  "lerch/direct-sum", n + 1)
        raise ConvergenceError(
            f"direct Lerch sum not converged in {cfg.max_terms} terms"
        )

    # |z| = 1, z != 1: acceleration territory (Re(s) > 0 by precondition).
    if abs(z + 1.0) < 1e-12:
        val32 = alternating_sum_cvz(lambda k: _cpow(k + a, -s), 32)
        val24 = alternating_sum_cvz(lambda k: _cpow(k + a, -s), 24)
        err = abs(val32 - val24) + 1e-15 * abs(val32)
        value = faults.perturb("lerch_phi", val32)
        return EvalResult(value, err, "lerch/cvz-alternating", 56)

    onset = monotone_onset(lambda k: abs(_cpow(k + a, -s)))
    n0 = max(onset, 24)
    prefix = [ _cpow(k + a, -s) * z**k for k in range(n0) ]
    tail, tail_err, tail_work = euler_transform_tail(
        lambda k: _cpow(n0 + k + a, -s), z, cfg.rel_tol
    )
    value = compensated_sum(prefix) + z**n0 * tail
    value = faults.perturb("lerch_phi", value)
    return EvalResult(value, tail_err + 1e-15 * abs(value),
                      "lerch/euler-transform", n0 + tail_work)


def polylog(z: complex, s: complex, cfg: SeriesConfig | None = None) -> EvalResult:
    """Polylogarithm Li_s(z) = z * Phi(z, s, 1) on the closed unit disk."""
    z = require_finite(z, "z")
    if z == 0.0:
        return EvalResult(0.0, 0.0, "polylog/zero", 0)
    inner = lerch_phi(LerchParams(z, s, 1.0), cfg)
    value = z * inner.value
    return EvalResult(value, abs(z) * inner.err_estimate,
                      "polylog/" + inner.strategy.split("/", 1)[1], inner.work)


def chi_ratio(s: complex) -> EvalResult:
    """Functional-equation factor chi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2).

    zeta(s) = chi(s) zeta(1-s).  Returns an exact 0 where Gamma(s/2) has a
    pole (s = 0, -2, -4, ...) and raises PoleError where Gamma((1-s)/2)
    does (s = 1, 3, 5, ...).
    """
    s = require_finite(s, "s")
    half_one_minus = (1.0 - s) / 2.0
    half_s = s / 2.0

    def _is_nonpos_int(z: complex) -> bool:
        return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)

    if _is_nonpos_int(half_one_minus):
        raise PoleError(f"pole at s={s.real:g} (Gamma((1-s)/2) pole)")
    if _is_nonpos_int(half_s):
        return EvalResult(0.0, 0.0, "chi/gamma-pole-zero", 0)
    log_chi = (s - 0.5) * _LN_PI + ln_gamma(half_one_minus) - ln_gamma(half_s)
    value = cmath.exp(log_chi)
    return EvalResult(value, 5e-14 * abs(value) * (1.0 + abs(log_chi)),
                      "chi/log-gamma", 2)
