"""Frozen reference values and exact-arithmetic helpers for the test suite.

Every float constant here was computed independently of the package, with
40-digit ``decimal`` arithmetic (alternating series with Chebyshev-polynomial
acceleration for the eta route, plain geometric series for the polylogarithm
values), then rounded to the nearest double.  Closed forms in pi, log 2, and
rationals are built from ``math`` at import time so nothing is retyped by
hand.  The exact-rational helpers mirror textbook closed forms and exist so
tests can cross-check the package's exact layer without calling it.
"""

from __future__ import annotations

import math
from fractions import Fraction

PI2 = math.pi * math.pi

# --- classical constants (closed forms) -----------------------------------
ZETA_2 = PI2 / 6.0
ZETA_0 = -0.5
ZETA_M1 = -1.0 / 12.0
ETA_1 = math.log(2.0)
ETA_2 = PI2 / 12.0
HURWITZ_2_HALF = PI2 / 2.0          # zeta(2, 1/2) = pi^2/2
FD_ZERO_S2 = PI2 / 12.0             # extended FD at nu=0, s=2, x=0
BE_ZERO_S2 = PI2 / 6.0              # extended BE at nu=0, s=2, x=0
BE_ZERO_SM1 = -1.0 / 12.0           # extended BE at nu=0, s=-1, x=0

# --- frozen high-precision values (40-digit decimal arithmetic) ------------
ZETA_3 = 1.2020569031595942
ZETA_HALF = -1.4603545088095868
ZETA_2P5 = 1.341487257250917
ZETA_1P5 = 2.612375348685488
ETA_HALF = 0.6048986434216304
LI2_INV_E = 0.4087542873488963      # polylog order 2 at z = e^{-1}
LI_1P5_HALF = 0.6248370208199139    # polylog order 1.5 at z = 1/2

# Golden table used by the acceptance suite: (label, reference, rel tol).
# Callables are bound in the tests so this module stays import-light.
GOLDEN_REFERENCES = [
    ("zeta(2)", ZETA_2),
    ("zeta(0)", ZETA_0),
    ("zeta(-1)", ZETA_M1),
    ("eta(1)", ETA_1),
    ("eta(2)", ETA_2),
    ("hurwitz(2, 0.5)", HURWITZ_2_HALF),
    ("ext_fd(0, 2, 0)", FD_ZERO_S2),
    ("ext_be(0, 2, 0)", BE_ZERO_S2),
    ("ext_be(0, -1, 0)", BE_ZERO_SM1),
    ("polylog(exp(-1), 2)", LI2_INV_E),
]

# --- exact-rational reference layer ----------------------------------------

# Bernoulli numbers B_0..B_12 as printed in standard tables (B_1 = -1/2).
BERNOULLI_TABLE = [
    Fraction(1),
    Fraction(-1, 2),
    Fraction(1, 6),
    Fraction(0),
    Fraction(-1, 30),
    Fraction(0),
    Fraction(1, 42),
    Fraction(0),
    Fraction(-1, 30),
    Fraction(0),
    Fraction(5, 66),
    Fraction(0),
    Fraction(-691, 2730),
]

# Euler numbers E_0, E_2, ..., E_8 (odd-index entries vanish).
EULER_NUMBER_TABLE = {0: 1, 2: -1, 4: 5, 6: -61, 8: 1385}


def bernoulli_poly_reference(n: int, x: Fraction) -> Fraction:
    """B_n(x) from the explicit sum over the frozen number table."""
    return sum(
        Fraction(math.comb(n, k)) * BERNOULLI_TABLE[k] * x ** (n - k)
        for k in range(n + 1)
    )


def hurwitz_negint_reference(n: int, a: Fraction) -> Fraction:
    """zeta(-n, a) = -B_{n+1}(a)/(n+1), exact."""
    return -bernoulli_poly_reference(n + 1, a) / (n + 1)


def fd_negint_reference(n: int, nu: Fraction) -> Fraction:
    """Extended FD at (nu, s=-n, x=0) through the Bernoulli bisection route.

    Uses 2^n [zeta(-n, (nu+1)/2) - zeta(-n, (nu+2)/2)], which equals
    E_n(nu+1)/2 without touching Euler polynomials, so it stays independent
    of the package's Euler-recursion layer.
    """
    two_n = Fraction(2) ** n
    return two_n * (
        hurwitz_negint_reference(n, (nu + 1) / 2)
        - hurwitz_negint_reference(n, (nu + 2) / 2)
    )
