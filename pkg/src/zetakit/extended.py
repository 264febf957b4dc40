"""Extended Fermi-Dirac and Bose-Einstein functions.

The pair under study, for Re(nu) >= 0 and Re(x) >= 0:

    fd(nu, s, x) = sum_{n>=0} (-1)^n exp(-(n+nu+1) x) / (n+nu+1)^s
    be(nu, s, x) = sum_{n>=0}        exp(-(n+nu+1) x) / (n+nu+1)^s

Both reduce to Hurwitz-Lerch transcendents,
fd = e^{-(nu+1)x} Phi(-e^{-x}, s, nu+1) and
be = e^{-(nu+1)x} Phi(+e^{-x}, s, nu+1), which supplies the series family
of evaluation routes.  Independent routes — quadrature of the fractional
integral, the Taylor expansion in x with shifted-order coefficients at
x = 0, the expansion in nu with classical (nu = 0) coefficients, and exact
Bernoulli/Euler polynomial values at non-positive integer orders — exist so
results can be cross-audited; the identity suite exercises every pairing.

Route selection is explicit through :class:`Strategy`; ``Strategy.AUTO``
picks by region:

* x = 0: continuation values (alternating-accelerated or Hurwitz-based for
  fd; Hurwitz zeta for be, with its order-1 pole surfaced as PoleError).
* Re(x) >= 0.05: the defining series, geometric ratio <= 0.99.
* tiny real x: Chebyshev-accelerated alternating sum (fd) or the Taylor
  series in x (be), both immune to the slow geometric decay.
* complex x on/near the unit circle in z = -+e^{-x}: accelerated or
  Hurwitz-delegated summation, supporting the reflection x -> x + i pi
  that exchanges the two functions.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import faults
from .errors import ConvergenceError, DomainError, PoleError
from .numeric_core import (
    MAX_POLY_DEGREE,
    alternating_sum_cvz,
    bernoulli_poly_coeffs,
    compensated_sum,
    euler_poly_coeffs,
    ln_gamma,
    require_finite,
)
from .result import EvalResult
from .weyl import (
    DEFAULT_QUADRATURE,
    KernelSpec,
    QuadratureConfig,
    weyl_negative_order,
    weyl_transform,
)
from .zeta import (
    DEFAULT_SERIES,
    LerchParams,
    SeriesConfig,
    digamma,
    dirichlet_eta,
    hurwitz_zeta,
    lerch_phi,
    riemann_zeta,
)

__all__ = [
    "Strategy",
    "ExtParams",
    "ext_fd",
    "ext_be",
    "fd_classical",
    "be_classical",
    "fd_zero_hurwitz_route",
    "ext_fd_negint_exact",
    "ext_be_negint_exact",
    "fd_kernel",
    "be_kernel",
]

_PI = math.pi


class Strategy(enum.Enum):
    """Evaluation routes for the extended pair."""

    XSERIES = "XSeries"            # defining series in powers of e^{-x}
    WEYL_QUAD = "WeylQuad"         # fractional-integral quadrature
    POWER_SERIES_X = "PowerSeriesX"  # Taylor in x, shifted-order coefficients
    NU_SERIES = "NuSeries"         # expansion in nu about the classical case
    NEG_INT_BERNOULLI = "NegIntBernoulli"  # exact polynomial values
    AUTO = "Auto"


@dataclass(frozen=True)
class ExtParams:
    """Point (nu, s, x) with Re(nu) >= 0 and Re(x) >= 0."""

    nu: complex
    s: complex
    x: complex

    def __post_init__(self) -> None:
        nu = require_finite(self.nu, "nu")
        require_finite(self.s, "s")
        x = require_finite(self.x, "x")
        if nu.real < 0.0:
            raise DomainError(f"require Re(nu) >= 0, got nu={nu!r}")
        if x.real < 0.0:
            raise DomainError(f"require Re(x) >= 0, got x={x!r}")


def _cpow(base: complex, expo: complex) -> complex:
    return cmath.exp(expo * cmath.log(base))


def _near_nonpos_int(s: complex) -> bool:
    return (
        s.imag == 0.0
        and abs(s.real - round(s.real)) <= 1e-12
        and round(s.real) <= 0
        and 1 - round(s.real) <= MAX_POLY_DEGREE
    )


# ---------------------------------------------------------------------------
# x = 0 continuation values
# ---------------------------------------------------------------------------

def fd_zero_hurwitz_route(
    nu: complex, s: complex, cfg: SeriesConfig | None = None
) -> EvalResult:
    """fd(nu, s, 0) through the bisected Hurwitz difference.

    2^{-s} [zeta(s, (nu+1)/2) - zeta(s, (nu+2)/2)] — the continuation route
    that stays valid for every s (the two order-1 poles cancel; at s = 1
    the digamma limit is used).  Kept public as the independent second
    route for the alternating-sum path at x = 0.
    """
    cfg = cfg or DEFAULT_SERIES
    nu = require_finite(nu, "nu")
    s = require_finite(s, "s")
    two_ms = _cpow(2.0, -s)
    if abs(s - 1.0) < 1e-12:
        value = 0.5 * (digamma((nu + 2.0) / 2.0) - digamma((nu + 1.0) / 2.0))
        return EvalResult(value, 1e-14 * (1.0 + abs(value)),
                          "fd/zero-digamma-limit", 2)
    za = hurwitz_zeta(s, (nu + 1.0) / 2.0, cfg)
    zb = hurwitz_zeta(s, (nu + 2.0) / 2.0, cfg)
    value = two_ms * (za.value - zb.value)
    err = abs(two_ms) * (za.err_estimate + zb.err_estimate) + 1e-16 * abs(value)
    return EvalResult(value, err, "fd/zero-hurwitz-diff", za.work + zb.work)


def _fd_zero(nu: complex, s: complex, cfg: SeriesConfig) -> EvalResult:
    if abs(s - 1.0) < 1e-12 or s.real <= 0.0:
        return fd_zero_hurwitz_route(nu, s, cfg)
    a = nu + 1.0
    v32 = alternating_sum_cvz(lambda k: _cpow(k + a, -s), 32)
    v24 = alternating_sum_cvz(lambda k: _cpow(k + a, -s), 24)
    err = abs(v32 - v24) + 1e-15 * abs(v32)
    return EvalResult(v32, err, "fd/zero-alternating-cvz", 56)


def _be_zero(nu: complex, s: complex, cfg: SeriesConfig) -> EvalResult:
    inner = hurwitz_zeta(s, nu + 1.0, cfg)  # PoleError surfaces at s = 1
    return EvalResult(inner.value, inner.err_estimate, "be/zero-hurwitz",
                      inner.work)


# ---------------------------------------------------------------------------
# Defining series in z = -+e^{-x} (shared with the Lerch machinery)
# ---------------------------------------------------------------------------

_LERCH_TAG_MAP = {
    "hurwitz-delegate": "xseries-hurwitz-delegate",
    "direct-sum": "xseries-direct",
    "cvz-alternating": "xseries-cvz",
    "euler-transform": "xseries-euler-w",
    "single-term": "xseries-direct",
}


def _series_route(
    kind: str, nu: complex, s: complex, x: complex, cfg: SeriesConfig
) -> EvalResult:
    sign = -1.0 if kind == "fd" else 1.0
    z = sign * cmath.exp(-x)
    pre = cmath.exp(-(nu + 1.0) * x)
    inner = lerch_phi(LerchParams(z, s, nu + 1.0), cfg)
    suffix = inner.strategy.split("/", 1)[1]
    tag = f"{kind}/{_LERCH_TAG_MAP.get(suffix, 'xseries-direct')}"
    value = pre * inner.value
    err = abs(pre) * inner.err_estimate + 2e-16 * abs(value)
    return EvalResult(value, err, tag, inner.work)


def _fd_tiny_x_cvz(
    nu: complex, s: complex, x: float, cfg: SeriesConfig
) -> EvalResult:
    """Alternating acceleration for small positive real x, Re(s) > 0.

    The geometric ratio e^{-x} is too close to 1 for plain summation, but
    the terms stay totally monotone, so the Chebyshev weights apply.
    """
    a = nu + 1.0

    def term(k: int) -> complex:
        return math.exp(-k * x) * _cpow(k + a, -s)

    pre = cmath.exp(-(nu + 1.0) * x)
    v32 = alternating_sum_cvz(term, 32)
    v24 = alternating_sum_cvz(term, 24)
    value = pre * v32
    err = abs(pre) * abs(v32 - v24) + 1e-15 * abs(value)
    return EvalResult(value, err, "fd/xseries-cvz", 56)


# ---------------------------------------------------------------------------
# Taylor series in x with shifted-order coefficients
# ---------------------------------------------------------------------------

_POWER_CAP = 40


def _power_series_x(
    kind: str, nu: complex, s: complex, x: complex, cfg: SeriesConfig
) -> EvalResult:
    if kind == "fd":
        radius = _PI
        if abs(x) >= 0.999 * radius:
            raise DomainError(
                f"Taylor-in-x route needs |x| < pi, got |x|={abs(x):.4g}"
            )
    else:
        radius = 2.0 * _PI
        if abs(x) >= 0.999 * radius:
            raise DomainError(
                f"Taylor-in-x route needs |x| < 2 pi, got |x|={abs(x):.4g}"
            )
        if (
            s.imag == 0.0
            and abs(s.real - round(s.real)) <= 1e-12
            and round(s.real) >= 1
        ):
            raise DomainError(
                "Taylor-in-x route degenerates at positive integer order; "
                "use the series or quadrature routes"
            )

    # Singular part: only the be-function carries one (the order-1 pole of
    # the Hurwitz coefficient at k = s-1 turns into Gamma(1-s) x^{s-1}).
    singular = complex(0.0)
    sing_err = 0.0
    work = 0
    if kind == "be":
        if x == 0.0:
            if s.real <= 1.0:
                raise DomainError(
                    "divergent at x = 0 for Re(s) <= 1; the x = 0 value is "
                    "the continuation route"
                )
        else:
            singular = cmath.exp(ln_gamma(1.0 - s)) * _cpow(x, s - 1.0)
            sing_err = 5e-15 * abs(singular)
            work += 1

    # Consecutive term magnitudes zigzag hard at integer s (odd-order
    # coefficients are tiny next to even ones), so both the stopping rule
    # and the divergence detector work on maxima of adjacent pairs.
    total = complex(0.0)
    terms: list[complex] = []
    coeff_err = 0.0
    xpow = complex(1.0)   # (-x)^k / k!
    prev_mag = math.inf
    pair_prev = math.inf
    pair_cur = 0.0
    grow_streak = 0
    for k in range(_POWER_CAP):
        if kind == "fd":
            c = _fd_zero(nu, s - k, cfg)
        else:
            c = hurwitz_zeta(s - k, nu + 1.0, cfg)
        work += c.work
        term = c.value * xpow
        terms.append(term)
        total += term
        coeff_err += c.err_estimate * abs(xpow)
        mag = abs(term)
        scale = max(abs(total + singular), abs(total), 1e-300)
        if max(mag, prev_mag) <= cfg.rel_tol * scale:
            break
        pair_cur = max(pair_cur, mag)
        if k % 2 == 1:
            if (
                pair_cur > pair_prev
                and pair_cur > 1e3 * cfg.rel_tol * scale
                and k > _POWER_CAP // 2
            ):
                grow_streak += 1
                if grow_streak >= 2:
                    raise ConvergenceError(
                        f"Taylor-in-x terms stopped decreasing at k={k} "
                        f"(|x| too close to the radius)"
                    )
            else:
                grow_streak = 0
            pair_prev = pair_cur
            pair_cur = 0.0
        prev_mag = mag
        xpow *= -x / (k + 1)
    else:
        tail_mag = max(abs(t) for t in terms[-2:]) if terms else 0.0
        if tail_mag > cfg.rel_tol * 1e3 * max(abs(total + singular), 1e-300):
            raise ConvergenceError(
                f"Taylor-in-x route not converged within {_POWER_CAP} terms"
            )

    value = singular + compensated_sum(terms)
    trunc = max((abs(t) for t in terms[-2:]), default=0.0)
    err = trunc + coeff_err + sing_err + 1e-16 * abs(value)
    return EvalResult(value, err, f"{kind}/power-series-x", work)


# ---------------------------------------------------------------------------
# Expansion in nu around the classical (nu = 0) functions
# ---------------------------------------------------------------------------

_NU_CAP = 600


def _nu_series(
    kind: str, nu: complex, s: complex, x: complex, cfg: SeriesConfig
) -> EvalResult:
    if not (0.0 <= nu.real and abs(nu) < 1.0):
        raise DomainError(
            f"nu-expansion route needs 0 <= Re(nu) and |nu| < 1, got {nu!r}"
        )
    pre = cmath.exp(-nu * x)

    def classical(order: complex) -> EvalResult:
        if x == 0.0:
            if kind == "fd":
                return dirichlet_eta(order, cfg)
            return riemann_zeta(order, cfg)  # PoleError at order 1
        return _series_route(kind, 0.0, order, x, cfg)

    if nu == 0.0:
        inner = classical(s)
        value = pre * inner.value
        return EvalResult(value, abs(pre) * inner.err_estimate + 1e-16 * abs(value),
                          f"{kind}/nu-series", inner.work + 1)

    total = complex(0.0)
    terms: list[complex] = []
    inner_err = 0.0
    work = 0
    poch = complex(1.0)   # (s)_k
    nupow = complex(1.0)  # (-nu)^k / k!
    r = abs(nu)
    small_streak = 0
    for k in range(_NU_CAP):
        c = classical(s + k)
        work += c.work
        weight = poch * nupow
        term = weight * c.value
        terms.append(term)
        total += term
        inner_err += abs(weight) * c.err_estimate
        # |(s)_{k+1}/(s)_k * nu/(k+1)| -> r as k grows; bound the tail
        # geometrically once the effective ratio drops below 1.
        ratio = r * abs(s + k) / (k + 1)
        mag = abs(term)
        if ratio < 0.999 and mag * ratio / (1.0 - ratio) <= cfg.rel_tol * max(
            abs(total), 1e-300
        ):
            small_streak += 1
            if small_streak >= 2:
                break
        else:
            small_streak = 0
        poch *= s + k
        nupow *= -nu / (k + 1)
    else:
        raise ConvergenceError(
            f"nu-expansion not converged within {_NU_CAP} terms"
        )

    tail = abs(terms[-1]) * r / (1.0 - r) if r < 1.0 else abs(terms[-1])
    value = pre * compensated_sum(terms)
    err = abs(pre) * (inner_err + tail) + 1e-16 * abs(value)
    return EvalResult(value, err, f"{kind}/nu-series", work + len(terms))


# ---------------------------------------------------------------------------
# Quadrature route (fractional integral of the generating kernels)
# ---------------------------------------------------------------------------

def _logistic_like(u: float, kind: str) -> complex:
    """g(u) = 1/(1+e^{-u}) for fd, h(u) = 1/(1-e^{-u}) for be.

    Both satisfy f' = f - f^2, the fact the derivative supplier leans on.
    """
    eu = math.exp(-u)
    return 1.0 / (1.0 + eu) if kind == "fd" else 1.0 / (1.0 - eu)


def _kernel_for(kind: str, nu: complex) -> KernelSpec:
    c = nu + 1.0

    def value(u: float) -> complex:
        return cmath.exp(-c * u) * _logistic_like(u, kind)

    # m-th derivative: maintain P_m with  d/du [e^{-cu} P(f)] =
    # e^{-cu} [ -c P(f) + P'(f) (f - f^2) ],  f' = f - f^2.
    def derivative(m: int, u: float) -> complex:
        coeffs: list[complex] = [0.0, 1.0]  # P_0(f) = f
        for _ in range(m):
            # -c * P
            nxt: list[complex] = [-c * a for a in coeffs] + [0.0, 0.0]
            # + P'(f) * (f - f^2)
            for j in range(1, len(coeffs)):
                d = j * coeffs[j]
                nxt[j] += d        # * f^{j-1} * f
                nxt[j + 1] -= d    # * f^{j-1} * (-f^2)
            while len(nxt) > 1 and nxt[-1] == 0.0:
                nxt.pop()
            coeffs = nxt
        f = _logistic_like(u, kind)
        acc = complex(0.0)
        for a in reversed(coeffs):
            acc = acc * f + a
        return cmath.exp(-c * u) * acc

    return KernelSpec(value=value, derivative=derivative, decay_b=math.inf)


def fd_kernel(nu: complex) -> KernelSpec:
    """Generating kernel e^{-(nu+1)u} / (1 + e^{-u}) with derivatives."""
    nu = require_finite(nu, "nu")
    return _kernel_for("fd", nu)


def be_kernel(nu: complex) -> KernelSpec:
    """Generating kernel e^{-(nu+1)u} / (1 - e^{-u}) with derivatives.

    Singular at u = 0; quadrature use requires a strictly positive shift.
    """
    nu = require_finite(nu, "nu")
    return _kernel_for("be", nu)


def _weyl_route(
    kind: str, nu: complex, s: complex, x: complex, quad: QuadratureConfig
) -> EvalResult:
    if x.imag != 0.0 or x.real < 0.0:
        raise DomainError("quadrature route needs real x >= 0")
    xr = x.real
    if kind == "be" and xr <= 0.0:
        raise DomainError(
            "quadrature route for the be-function needs x > 0 "
            "(kernel pole at the origin)"
        )
    kernel = _kernel_for(kind, nu)
    if s.real > 0.0:
        inner = weyl_transform(kernel, s, xr, quad)
    else:
        inner = weyl_negative_order(kernel, s, xr, quad)
    suffix = inner.strategy.split("/", 1)[1]
    return EvalResult(inner.value, inner.err_estimate,
                      f"{kind}/weyl-{suffix}", inner.work)


# ---------------------------------------------------------------------------
# Exact values at non-positive integer orders
# ---------------------------------------------------------------------------

def ext_fd_negint_exact(nu: Union[int, Fraction], n: int) -> Fraction:
    """Exact rational fd(nu, -n, 0) = E_n(nu+1) / 2 for rational nu."""
    if n < 0 or n + 1 > MAX_POLY_DEGREE:
        raise DomainError(f"need 0 <= n <= {MAX_POLY_DEGREE - 1}, got {n}")
    nu_f = Fraction(nu)
    if nu_f < 0:
        raise DomainError("require nu >= 0")
    return euler_poly_coeffs(n).evaluate(nu_f + 1) / 2


def ext_be_negint_exact(nu: Union[int, Fraction], n: int) -> Fraction:
    """Exact rational be(nu, -n, 0) = -B_{n+1}(nu+1) / (n+1)."""
    if n < 0 or n + 1 > MAX_POLY_DEGREE:
        raise DomainError(f"need 0 <= n <= {MAX_POLY_DEGREE - 1}, got {n}")
    nu_f = Fraction(nu)
    if nu_f < 0:
        raise DomainError("require nu >= 0")
    return -bernoulli_poly_coeffs(n + 1).evaluate(nu_f + 1) / (n + 1)


def _negint_route(kind: str, nu: complex, s: complex, x: complex) -> EvalResult:
    if not _near_nonpos_int(s):
        raise DomainError(
            "exact-polynomial route needs a non-positive integer order"
        )
    n = -round(s.real)
    if kind == "be":
        if abs(x) > 1e-12:
            raise DomainError("exact be values exist at x = 0 only")
        value = -bernoulli_poly_coeffs(n + 1).evaluate(nu + 1.0) / (n + 1)
        return EvalResult(complex(value), 5e-15 * (1.0 + abs(value)),
                          "be/negint-bernoulli", n + 2)
    if abs(x) <= 1e-12:
        value = euler_poly_coeffs(n).evaluate(nu + 1.0) / 2
        return EvalResult(complex(value), 5e-15 * (1.0 + abs(value)),
                          "fd/negint-euler-exact", n + 2)
    if abs(x - 1j * _PI) <= 1e-12:
        base = bernoulli_poly_coeffs(n + 1).evaluate(nu + 1.0) / (n + 1)
        value = cmath.exp(-1j * _PI * nu) * base
        return EvalResult(value, 5e-15 * (1.0 + abs(value)),
                          "fd/negint-bernoulli-pi", n + 2)
    raise DomainError(
        "exact fd values exist at x = 0 and x = i pi only"
    )


# ---------------------------------------------------------------------------
# AUTO dispatch and the public pair
# ---------------------------------------------------------------------------

def _auto(
    kind: str,
    nu: complex,
    s: complex,
    x: complex,
    cfg: SeriesConfig,
    quad: QuadratureConfig,
) -> EvalResult:
    if x == 0.0:
        return _fd_zero(nu, s, cfg) if kind == "fd" else _be_zero(nu, s, cfg)
    if kind == "fd" and _near_nonpos_int(s) and abs(x - 1j * _PI) <= 1e-12:
        return _negint_route("fd", nu, s, x)

    sign = -1.0 if kind == "fd" else 1.0
    z = sign * cmath.exp(-x)
    if s.real > 0.0:
        if x.imag == 0.0 and 0.0 < x.real < 0.05:
            if kind == "fd":
                return _fd_tiny_x_cvz(nu, s, x.real, cfg)
            if not (
                s.imag == 0.0
                and abs(s.real - round(s.real)) <= 1e-12
                and round(s.real) >= 1
            ):
                return _power_series_x("be", nu, s, x, cfg)
            # positive integer order: grind the slow geometric series
        return _series_route(kind, nu, s, x, cfg)

    # Re(s) <= 0: acceleration on the unit circle is unavailable.
    if abs(z - 1.0) <= 1e-12 or abs(z) < 1.0 - 1e-14:
        return _series_route(kind, nu, s, x, cfg)
    radius = _PI if kind == "fd" else 2.0 * _PI
    if abs(x) < 0.999 * radius:
        return _power_series_x(kind, nu, s, x, cfg)
    raise DomainError(
        f"no route for Re(s) <= 0 with |z| = 1 and |x| = {abs(x):.4g} "
        f"beyond the Taylor radius"
    )


def _dispatch(
    kind: str,
    p: ExtParams,
    strategy: Strategy,
    cfg: SeriesConfig | None,
    quad: QuadratureConfig | None,
) -> EvalResult:
    cfg = cfg or DEFAULT_SERIES
    quad = quad or DEFAULT_QUADRATURE
    nu, s, x = complex(p.nu), complex(p.s), complex(p.x)
    if strategy is Strategy.AUTO:
        out = _auto(kind, nu, s, x, cfg, quad)
    elif strategy is Strategy.XSERIES:
        if x == 0.0:
            # z = -+1 exactly: the alternating sum accelerates (fd) and the
            # Lerch machinery delegates (be, z = 1).
            out = (
                _fd_zero(nu, s, cfg)
                if kind == "fd" and s.real > 0.0 and abs(s - 1.0) > 1e-12
                else _series_route(kind, nu, s, x, cfg)
            )
        else:
            out = _series_route(kind, nu, s, x, cfg)
    elif strategy is Strategy.WEYL_QUAD:
        out = _weyl_route(kind, nu, s, x, quad)
    elif strategy is Strategy.POWER_SERIES_X:
        out = _power_series_x(kind, nu, s, x, cfg)
    elif strategy is Strategy.NU_SERIES:
        out = _nu_series(kind, nu, s, x, cfg)
    elif strategy is Strategy.NEG_INT_BERNOULLI:
        out = _negint_route(kind, nu, s, x)
    else:  # pragma: no cover - enum is closed
        raise DomainError(f"unknown strategy {strategy!r}")
    return EvalResult(faults.perturb("ext_" + kind, out.value),
                      out.err_estimate, out.strategy, out.work)


def ext_fd(
    p: ExtParams,
    strategy: Strategy = Strategy.AUTO,
    cfg: SeriesConfig | None = None,
    quad: QuadratureConfig | None = None,
) -> EvalResult:
    """Extended alternating (fd) function at p = (nu, s, x)."""
    return _dispatch("fd", p, strategy, cfg, quad)


def ext_be(
    p: ExtParams,
    strategy: Strategy = Strategy.AUTO,
    cfg: SeriesConfig | None = None,
    quad: QuadratureConfig | None = None,
) -> EvalResult:
    """Extended one-signed (be) function at p = (nu, s, x)."""
    return _dispatch("be", p, strategy, cfg, quad)


# ---------------------------------------------------------------------------
# Classical (nu = 0, fugacity form) wrappers
# ---------------------------------------------------------------------------

def fd_classical(
    s: complex,
    x: float,
    cfg: SeriesConfig | None = None,
    quad: QuadratureConfig | None = None,
) -> EvalResult:
    """Classical alternating integral (1/Gamma(s)) I[t^{s-1}/(e^{t-x}+1)].

    Equals -Li_s(-e^x).  For x <= 0 this is the extended function at
    (0, s, -x); for x > 0 a quadrature with the overflow-safe occupation
    kernel is used (Re(s) > 0 there).
    """
    s = require_finite(s, "s")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("x must be finite")
    if x <= 0.0:
        inner = ext_fd(ExtParams(0.0, s, -x), Strategy.AUTO, cfg, quad)
        return EvalResult(inner.value, inner.err_estimate,
                          "fd-classical/" + inner.strategy.split("/", 1)[1],
                          inner.work)
    if s.real <= 0.0:
        raise DomainError("quadrature route for x > 0 needs Re(s) > 0")

    def occupation(t: float) -> complex:
        u = t - x
        if u >= 0.0:
            eu = math.exp(-u)
            return eu / (1.0 + eu)
        return 1.0 / (1.0 + math.exp(u))

    kernel = KernelSpec(value=occupation, decay_b=math.inf)
    inner = weyl_transform(kernel, s, 0.0, quad or DEFAULT_QUADRATURE)
    return EvalResult(inner.value, inner.err_estimate,
                      "fd-classical/weyl-gk-adaptive", inner.work)


def be_classical(
    s: complex,
    x: float,
    cfg: SeriesConfig | None = None,
) -> EvalResult:
    """Classical one-signed integral; equals Li_s(e^x) for x <= 0.

    Divergent for x > 0 (DomainError) and, at x = 0, finite only for
    Re(s) > 1 where it equals the order-s zeta value.
    """
    s = require_finite(s, "s")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("x must be finite")
    if x > 0.0:
        raise DomainError("divergent for x > 0")
    if x == 0.0:
        if s.real <= 1.0:
            raise DomainError(
                "divergent at x = 0 for Re(s) <= 1; the extended function "
                "carries the continuation"
            )
        inner = riemann_zeta(s, cfg)
        return EvalResult(inner.value, inner.err_estimate,
                          "be-classical/zeta", inner.work)
    inner = ext_be(ExtParams(0.0, s, -x), Strategy.AUTO, cfg)
    return EvalResult(inner.value, inner.err_estimate,
                      "be-classical/" + inner.strategy.split("/", 1)[1],
                      inner.work)
