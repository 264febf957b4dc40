"""Tour of the zeta family: Riemann/Hurwitz zeta, eta, Lerch, polylog.

Run:  python3 demos/01_zeta_family_tour.py
"""

import math

from zetakit import (
    LerchParams,
    PoleError,
    chi_ratio,
    dirichlet_eta,
    hurwitz_zeta,
    lerch_phi,
    polylog,
    riemann_zeta,
)


def show(label: str, res) -> None:
    print(f"  {label:34s} = {res.value:.15g}   (err~{res.err_estimate:.1e}, {res.strategy})")


print("Classical special values")
show("zeta(2)", riemann_zeta(2.0))
print(f"  {'pi^2/6':34s} = {math.pi**2 / 6:.15g}   (reference)")
show("zeta(-1)", riemann_zeta(-1.0))
show("eta(1)", dirichlet_eta(1.0))
print(f"  {'log 2':34s} = {math.log(2):.15g}   (reference)")

print("\nThe pole is a refusal, not a number")
try:
    riemann_zeta(1.0)
except PoleError as exc:
    print(f"  riemann_zeta(1.0) raised PoleError: {exc}")

print("\nTwo genuinely different routes to the same continuation")
s = -0.5 + 2.0j
em = riemann_zeta(s, via="em")
fe = riemann_zeta(s, via="functional")
print(f"  s = {s}")
show("summation route", em)
show("reflection route", fe)
print(f"  agreement: {abs(em.value - fe.value) / abs(em.value):.2e} relative")

print("\nHurwitz zeta interpolates shifted lattices")
for a in (0.5, 1.0, 2.3):
    show(f"hurwitz_zeta(2.5, a={a})", hurwitz_zeta(2.5, a))

print("\nLerch transcendent ties the family together")
p = LerchParams(-math.exp(-1.0), 2.0, 1.5)
show("lerch_phi(-e^-1, 2, 1.5)", lerch_phi(p))
show("polylog(1/2, s=1.5)", polylog(0.5, 1.5))
print(f"  {'Li_1(z) check: -log(1-z), z=0.5':34s} = {-math.log(0.5):.15g}")
show("polylog(0.5, s=1)", polylog(0.5, 1.0))

print("\nFunctional-equation ratio")
show("chi(2) (= zeta(2)/zeta(-1))", chi_ratio(2.0))
print(f"  {'-2 pi^2':34s} = {-2 * math.pi**2:.15g}   (reference)")
