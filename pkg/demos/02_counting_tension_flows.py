"""Count tensions, flows, and complementary tension-flow pairs, modular and
integral, and watch the decomposition over orientations come out exact.

Run:  python3 demos/02_counting_tension_flows.py
"""

from ctfpolys import (
    Orientation,
    build_graph,
    count,
    enum_integer_tensions_box,
    enum_modular_flows,
    enum_modular_tensions,
    enumerate_orientations,
    mod_map,
)

g = build_graph(3, [(0, 2), (0, 1), (1, 2), (0, 1), (1, 2)])
ref = Orientation.reference(g)

print("mod-2 tensions:", sorted(enum_modular_tensions(ref, [2])))
print("mod-2 flow count:", len(enum_modular_flows(ref, [2])))
print("integer tensions in [0,1]^E:", sorted(enum_integer_tensions_box(ref, 0, 1)))

# A complementary pair puts a nonzero tension value or a nonzero flow value
# (never both) on every edge. kappa counts them.
print("\nkappa_mod(3,3) =", count(g, "kappa_mod", p=3, q=3))
print("kappa_int(2,2) =", count(g, "kappa_int", p=2, q=2))

# The integral count decomposes exactly over all 2^|E| orientations.
total = 0
for o in enumerate_orientations(g):
    total += count(g, "kappa_local", p=2, q=2, orientation=o)
print("sum of kappa_local over orientations =", total)

# Group structure does not matter, only the order: Z4 vs Z2 x Z2.
for q in (2, 3, 4):
    a = count(g, "kappa_mod", p=4, q=q, group_a=(4,))
    b = count(g, "kappa_mod", p=4, q=q, group_a=(2, 2))
    print(f"kappa over groups of order 4 x {q}: Z4 -> {a}, Z2xZ2 -> {b}")

# Reduction mod (p, q) sends integral complementary pairs onto modular ones.
pair = mod_map(ref, (2, 1, 1, 1, 1), (0, 0, 0, 0, 0), 2, 2)
print("\nmod-(2,2) image of ((2,1,1,1,1), 0):", pair.tension, pair.flow)
print("complementary:", pair.is_complementary())
