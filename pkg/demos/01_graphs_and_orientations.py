"""Walk through the core objects: a multigraph, its minors, orientations,
and the bond/circuit partition.

Run:  python3 demos/01_graphs_and_orientations.py
"""

from ctfpolys import (
    Orientation,
    boundary,
    build_graph,
    classify,
    enumerate_orientations,
    is_flow,
    is_tension,
    minty_partition,
    spanning_structure,
)

# The running example everywhere in this repo: a triangle on u, v, w with the
# u-v and v-w edges doubled. Edge pair order is the reference direction.
g = build_graph(3, [(0, 2), (0, 1), (1, 2), (0, 1), (1, 2)])
stats = g.stats()
print(f"graph: {g.vertex_count} vertices, {g.edge_count} edges")
print(f"components={stats.components} rank={stats.rank} nullity={stats.nullity}")

# Minors keep the original edge labels, so vectors and orientations carry over.
sub = g.restrict({1, 3})
print("\nrestrict to {e2, e4}:", sub.edges, "labels", sub.edge_ids)
merged = g.contract({1, 3})
print("contract {e2, e4}:  ", merged.edges, "labels", merged.edge_ids)

forest = spanning_structure(g)
print("\nspanning forest:", sorted(forest.forest_edges))
for eid, circuit in forest.fundamental_circuits:
    print(f"  circuit of e{eid + 1}:", circuit)

# Orientations are flip vectors against the reference direction.
ref = Orientation.reference(g)
print("\nreference orientation:", ref.flip_string(), "arrows", ref.arrows())

f = (2, 1, 1, 1, 1)
print(f"{f} is a tension:", is_tension(ref, f))
gvec = (-1, 1, 1, 0, 0)
print(f"{gvec} is a flow:", is_flow(ref, gvec), "boundary:", boundary(ref, gvec))

# The Minty partition: every edge is either on a directed circuit or in the
# union of directed bonds, never both.
for bits in ("00000", "00010", "10011"):
    o = Orientation.from_string(g, bits)
    part = minty_partition(o)
    kind = classify(o)
    print(
        f"\nflips {bits}: bond part {sorted(part.bond_part)}, "
        f"circuit part {sorted(part.circuit_part)}"
    )
    print(f"  acyclic={kind.is_acyclic} totally_cyclic={kind.is_totally_cyclic}")

total = sum(1 for _ in enumerate_orientations(g))
acyclic = sum(1 for o in enumerate_orientations(g) if classify(o).is_acyclic)
strong = sum(1 for o in enumerate_orientations(g) if classify(o).is_totally_cyclic)
print(f"\norientations: {total} total, {acyclic} acyclic, {strong} totally cyclic")
