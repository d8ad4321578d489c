"""Interpolate the counting families into exact polynomials and relate them
to the Tutte and rank generating polynomials.

Run:  python3 demos/03_polynomials.py
"""

from ctfpolys import (
    build_graph,
    counting_polynomial,
    polynomial_report,
    rank_generating,
    tutte,
)

g = build_graph(3, [(0, 2), (0, 1), (1, 2), (0, 1), (1, 2)])

t = tutte(g)
r = rank_generating(g)
print("T =", t.to_text())
print("R =", r.to_text())
print("R(x,y) == T(x+1,y+1):", r == t.substitute(1, 1, 1, 1))

kappa = counting_polynomial(g, "kappa_mod")
kappa_bar = counting_polynomial(g, "kappa_bar_mod")
print("\nkappa     =", kappa.to_text())
print("kappa_bar =", kappa_bar.to_text())
print("kappa_bar == R:", kappa_bar == r)

# Integral families are integer-valued but need rational coefficients.
kappa_int = counting_polynomial(g, "kappa_int")
print("\nkappa_int =", kappa_int.to_text())
print("kappa_int(2,2) =", kappa_int.evaluate(2, 2))

# Specializations recover the tension and flow polynomials.
tau = counting_polynomial(g, "tau_mod")
phi = counting_polynomial(g, "phi_mod")
print("\nkappa(x,1) == tau:", kappa.set_y(1) == tau)
print("kappa(1,y) == phi:", kappa.set_x(1) == phi)

# Census values straight off the Tutte polynomial.
for (x, y), label in [
    ((2, 2), "orientations"),
    ((1, 1), "cut-Eulerian classes"),
    ((2, 0), "acyclic orientations"),
    ((0, 2), "totally cyclic orientations"),
]:
    print(f"T({x},{y}) = {t.evaluate(x, y)}  ({label})")

report = polynomial_report(build_graph(2, [(0, 1), (0, 1)]))
print("\ndigon report:")
for name, poly in sorted(report.named().items()):
    print(f"  {name:15s} {poly.to_text()}")
