"""Independent brute-force oracles, straight from the definitions.

Nothing here uses the library's spanning-forest parametrizations: tensions
come from explicit potential sweeps, flows from full-box sweeps filtered by
the boundary condition at every vertex.
"""

from itertools import product


def arrows_of(graph, flips):
    out = []
    for pos, (u, v) in enumerate(graph.edges):
        if u != v and flips[pos]:
            out.append((v, u))
        else:
            out.append((u, v))
    return out


def components_of(graph):
    comp = list(range(graph.vertex_count))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for u, v in graph.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            comp[max(ru, rv)] = min(ru, rv)
    return [find(v) for v in range(graph.vertex_count)]


def integer_flows(graph, flips, low, high):
    """All integer flows with low <= g(e) <= high, by exhaustive box sweep."""
    arrows = arrows_of(graph, flips)
    found = []
    for vec in product(range(low, high + 1), repeat=graph.edge_count):
        net = [0] * graph.vertex_count
        for (tail, head), value in zip(arrows, vec):
            if tail != head:
                net[tail] += value
                net[head] -= value
        if all(x == 0 for x in net):
            found.append(vec)
    return found


def integer_tensions(graph, flips, low, high):
    """All integer tensions in a box, by sweeping vertex potentials."""
    arrows = arrows_of(graph, flips)
    comp = components_of(graph)
    roots = set(comp)
    free = [v for v in range(graph.vertex_count) if v not in roots]
    # potentials on non-root vertices; bound covers any in-box tension
    bound = max(abs(low), abs(high)) * max(1, graph.vertex_count - 1)
    found = set()
    potential = [0] * graph.vertex_count
    for values in product(range(-bound, bound + 1), repeat=len(free)):
        for v, value in zip(free, values):
            potential[v] = value
        vec = tuple(potential[t] - potential[h] for t, h in arrows)
        if all(low <= x <= high for x in vec):
            found.add(vec)
    return sorted(found)


def _mixed_radix_encode(parts, moduli):
    value, place = 0, 1
    for part, m in zip(parts, moduli):
        value += (part % m) * place
        place *= m
    return value


def modular_tensions(graph, flips, moduli):
    """Distinct coboundaries of all potentials over the product group."""
    arrows = arrows_of(graph, flips)
    elements = list(product(*(range(m) for m in moduli)))
    found = set()
    for potentials in product(elements, repeat=graph.vertex_count):
        vec = tuple(
            _mixed_radix_encode(
                [a - b for a, b in zip(potentials[t], potentials[h])], moduli
            )
            for t, h in arrows
        )
        found.add(vec)
    return sorted(found)


def modular_flows(graph, flips, moduli):
    """All group-valued edge vectors with vanishing boundary."""
    arrows = arrows_of(graph, flips)
    elements = list(product(*(range(m) for m in moduli)))
    found = []
    width = len(moduli)
    for vec in product(elements, repeat=graph.edge_count):
        net = [[0] * width for _ in range(graph.vertex_count)]
        for (tail, head), value in zip(arrows, vec):
            if tail == head:
                continue
            for k in range(width):
                net[tail][k] += value[k]
                net[head][k] -= value[k]
        if all(x % m == 0 for row in net for x, m in zip(row, moduli)):
            found.append(tuple(_mixed_radix_encode(value, moduli) for value in vec))
    return sorted(found)


def complementary_pairs_int(graph, flips, p, q):
    """Integral complementary (p,q)-pairs: |f|<p, |g|<q, per edge exactly one
    of f(e), g(e) nonzero."""
    tensions = integer_tensions(graph, flips, -(p - 1), p - 1)
    flows = integer_flows(graph, flips, -(q - 1), q - 1)
    pairs = []
    for f in tensions:
        for g in flows:
            if all((a == 0) != (b == 0) for a, b in zip(f, g)):
                pairs.append((f, g))
    return pairs


def complementary_pairs_mod(graph, flips, p, q):
    """Modular complementary pairs over (Z_p, Z_q)."""
    tensions = modular_tensions(graph, flips, (p,))
    flows = modular_flows(graph, flips, (q,))
    pairs = []
    for f in tensions:
        for g in flows:
            if all((a == 0) != (b == 0) for a, b in zip(f, g)):
                pairs.append((f, g))
    return pairs


def nowhere_zero(vectors):
    return [v for v in vectors if all(x != 0 for x in v)]
