from itertools import product

import pytest

import oracles
from ctfpolys import (
    BudgetExceededError,
    CountQuery,
    CyclicProduct,
    Orientation,
    build_graph,
    count,
    enum_integer_flows_box,
    enum_integer_tensions_box,
    enum_modular_flows,
    enum_modular_tensions,
    enumerate_classes,
    enumerate_orientations,
    is_flow,
    is_tension,
    mod_map,
    reorient_p,
    reorient_q,
)


def test_cyclic_product_arithmetic():
    grp = CyclicProduct((2, 3))
    assert grp.order == 6
    assert grp.encode((1, 2)) == 5
    assert grp.decode(5) == (1, 2)
    for a, b in product(grp.elements(), repeat=2):
        assert grp.sub(grp.add(a, b), b) == a
    assert grp.add(grp.encode((1, 2)), grp.encode((1, 1))) == grp.encode((0, 0))


def test_modular_tension_examples(k2, l1, p8):
    assert sorted(enum_modular_tensions(Orientation.reference(k2), [3])) == [(0,), (1,), (2,)]
    assert enum_modular_tensions(Orientation.reference(l1), [5]) == [(0,)]
    got = sorted(enum_modular_tensions(Orientation.reference(p8), [2]))
    assert got == [(0, 0, 0, 0, 0), (0, 1, 1, 1, 1), (1, 0, 1, 0, 1), (1, 1, 0, 1, 0)]


def test_modular_flow_examples(k2, l1, p8):
    assert enum_modular_flows(Orientation.reference(k2), [4]) == [(0,)]
    assert sorted(enum_modular_flows(Orientation.reference(l1), [3])) == [(0,), (1,), (2,)]
    ref = Orientation.reference(p8)
    flows = enum_modular_flows(ref, [2])
    assert len(flows) == 8
    assert (1, 1, 1, 0, 0) in flows
    for g in flows:
        assert is_flow(ref, g, modulus=2)


def test_modular_enumeration_sizes(small_corpus):
    for g in small_corpus:
        stats = g.stats()
        for moduli in ((1,), (2,), (3,), (2, 2)):
            order = 1
            for m in moduli:
                order *= m
            for o in (Orientation.reference(g), Orientation.reference(g).reversed()):
                tensions = enum_modular_tensions(o, moduli)
                flows = enum_modular_flows(o, moduli)
                assert len(tensions) == order ** stats.rank
                assert len(set(tensions)) == len(tensions)
                assert len(flows) == order ** stats.nullity
                assert len(set(flows)) == len(flows)


def test_modular_enumeration_matches_oracle(small_corpus):
    for g in small_corpus:
        if g.edge_count > 3 or g.vertex_count > 3:
            continue
        for moduli in ((2,), (3,), (2, 2)):
            for o in enumerate_orientations(g):
                assert sorted(enum_modular_tensions(o, moduli)) == oracles.modular_tensions(
                    g, o.flips, moduli
                )
                assert sorted(enum_modular_flows(o, moduli)) == oracles.modular_flows(
                    g, o.flips, moduli
                )


def test_integer_boxes_match_oracle(small_corpus):
    for g in small_corpus:
        if g.edge_count > 4:
            continue
        ref = Orientation.reference(g)
        for low, high in ((-2, 2), (0, 1), (-1, 3)):
            assert sorted(enum_integer_tensions_box(ref, low, high)) == oracles.integer_tensions(
                g, ref.flips, low, high
            )
            assert sorted(enum_integer_flows_box(ref, low, high)) == sorted(
                oracles.integer_flows(g, ref.flips, low, high)
            )


def test_integer_box_examples(k2, l1, p8):
    k2_ref = Orientation.reference(k2)
    assert sorted(enum_integer_tensions_box(k2_ref, -1, 1)) == [(-1,), (0,), (1,)]
    l1_ref = Orientation.reference(l1)
    assert enum_integer_tensions_box(l1_ref, -4, 4) == [(0,)]
    assert sorted(enum_integer_flows_box(l1_ref, 0, 3)) == [(0,), (1,), (2,), (3,)]
    assert enum_integer_flows_box(k2_ref, -9, 9) == [(0,)]

    ref = Orientation.reference(p8)
    box = sorted(enum_integer_tensions_box(ref, 0, 1))
    # (0,1,1,1,1) is a mod-2 tension but no integer tension: 0 != 1 + 1
    assert box == [(0, 0, 0, 0, 0), (1, 0, 1, 0, 1), (1, 1, 0, 1, 0)]
    assert box == oracles.integer_tensions(p8, ref.flips, 0, 1)

    # the reference orientation is acyclic, so the only nonnegative integer
    # flow is zero; (1,1,1,0,0) is a flow mod 2 only
    flow_box = sorted(enum_integer_flows_box(ref, 0, 1))
    assert flow_box == [(0, 0, 0, 0, 0)]
    assert flow_box == sorted(oracles.integer_flows(p8, ref.flips, 0, 1))
    strong = ref.with_flipped([0, 3, 4])  # totally cyclic: nonzero flows exist
    strong_box = sorted(enum_integer_flows_box(strong, 0, 1))
    assert strong_box == sorted(oracles.integer_flows(p8, strong.flips, 0, 1))
    assert len(strong_box) > 1


def test_strict_bounds(p8):
    ref = Orientation.reference(p8)
    open_box = enum_integer_tensions_box(
        ref, -2, 2, strict_lower=True, strict_upper=True
    )
    assert sorted(open_box) == sorted(enum_integer_tensions_box(ref, -1, 1))


def test_orthogonality(small_corpus):
    # every integer tension is orthogonal to every integer flow
    for g in small_corpus:
        if g.edge_count > 3:
            continue
        for o in enumerate_orientations(g):
            tensions = enum_integer_tensions_box(o, -2, 2)
            flows = enum_integer_flows_box(o, -2, 2)
            for f in tensions:
                for h in flows:
                    assert sum(a * b for a, b in zip(f, h)) == 0


def test_nonnegative_vectors_vanish_off_support(small_corpus):
    # tensions >= 0 vanish on the circuit part, flows >= 0 on the bond part
    from ctfpolys import minty_partition

    for g in small_corpus:
        if g.edge_count > 3:
            continue
        for o in enumerate_orientations(g):
            part = minty_partition(o)
            circuit = {g.position_of(i) for i in part.circuit_part}
            bond = {g.position_of(i) for i in part.bond_part}
            for f in enum_integer_tensions_box(o, 0, 3):
                assert all(f[pos] == 0 for pos in circuit)
            for h in enum_integer_flows_box(o, 0, 3):
                assert all(h[pos] == 0 for pos in bond)


def test_counts_match_oracles(small_corpus):
    for g in small_corpus:
        if g.edge_count > 3:
            continue
        flips = Orientation.reference(g).flips
        for a in (1, 2, 3):
            assert count(g, "tau_mod", p=a) == len(
                oracles.nowhere_zero(oracles.modular_tensions(g, flips, (a,)))
            )
            assert count(g, "phi_mod", q=a) == len(
                oracles.nowhere_zero(oracles.modular_flows(g, flips, (a,)))
            )
            assert count(g, "tau_int", p=a) == len(
                oracles.nowhere_zero(oracles.integer_tensions(g, flips, -(a - 1), a - 1))
            )
            assert count(g, "phi_int", q=a) == len(
                oracles.nowhere_zero(oracles.integer_flows(g, flips, -(a - 1), a - 1))
            )
        for a, b in product((1, 2, 3), repeat=2):
            assert count(g, "kappa_mod", p=a, q=b) == len(
                oracles.complementary_pairs_mod(g, flips, a, b)
            )
            assert count(g, "kappa_int", p=a, q=b) == len(
                oracles.complementary_pairs_int(g, flips, a, b)
            )


def test_local_counts_match_oracles(c3, digon_loop):
    for g in (c3, digon_loop):
        for o in enumerate_orientations(g):
            for a in (1, 2, 3):
                want_t = [
                    f
                    for f in oracles.integer_tensions(g, o.flips, 0, a)
                    if all(0 < x < a for x in f)
                ]
                assert count(g, "tau_local", p=a, orientation=o) == len(want_t)
                want_f = [
                    h
                    for h in oracles.integer_flows(g, o.flips, 0, a)
                    if all(0 < x < a for x in h)
                ]
                assert count(g, "phi_local", q=a, orientation=o) == len(want_f)
                assert count(g, "tau_bar_local", p=a, orientation=o) == len(
                    oracles.integer_tensions(g, o.flips, 0, a)
                )
                assert count(g, "phi_bar_local", q=a, orientation=o) == len(
                    oracles.integer_flows(g, o.flips, 0, a)
                )


def _sign_pattern(graph, pair):
    # orientation whose arrows follow the signs of f + g
    f, g = pair
    flips = tuple(1 if f[pos] + g[pos] < 0 else 0 for pos in range(graph.edge_count))
    return flips


def test_kappa_local_decomposes_kappa_int(c3, digon_loop, p8):
    # complementary pairs grouped by sign pattern reproduce the local counts
    for g in (c3, digon_loop, p8):
        pairs = oracles.complementary_pairs_int(g, Orientation.reference(g).flips, 2, 2)
        by_pattern = {}
        for pair in pairs:
            by_pattern.setdefault(_sign_pattern(g, pair), []).append(pair)
        total = 0
        for o in enumerate_orientations(g):
            local = count(g, "kappa_local", p=2, q=2, orientation=o)
            assert local == len(by_pattern.get(o.flips, []))
            total += local
        assert total == len(pairs) == count(g, "kappa_int", p=2, q=2)


def test_kappa_bar_local_examples(p8, small_corpus):
    ref = Orientation.reference(p8)
    assert count(p8, "kappa_bar_local", p=0, q=0, orientation=ref) == 1
    for g in small_corpus:
        o = Orientation.reference(g)
        assert count(g, "kappa_bar_local", p=0, q=0, orientation=o) == 1
    assert count(p8, "kappa_bar_int", p=0, q=0) == 32


def test_kappa_mod_group_shape_independence(c3, digon_loop):
    for g in (c3, digon_loop):
        for q in (1, 2, 3):
            assert count(
                g, "kappa_mod", p=4, q=q, group_a=(4,)
            ) == count(g, "kappa_mod", p=4, q=q, group_a=(2, 2))
        for p in (1, 2, 3):
            assert count(
                g, "kappa_mod", p=p, q=4, group_b=(4,)
            ) == count(g, "kappa_mod", p=p, q=4, group_b=(2, 2))


def test_worked_example_counts(p8):
    assert count(p8, "kappa_mod", p=3, q=3) == 12
    assert count(p8, "kappa_mod", p=2, q=2) == 2
    assert count(p8, "kappa_int", p=2, q=2) == 8
    assert count(p8, "phi_mod", q=3) == 2


def test_tau_mod_triangle(c3):
    assert count(c3, "tau_mod", p=3) == 2


def test_mod_map(p8):
    ref = Orientation.reference(p8)
    pair = mod_map(ref, (2, 1, 1, 1, 1), (0, 0, 0, 0, 0), 2, 2)
    assert pair.tension == (0, 1, 1, 1, 1)
    assert pair.flow == (0, 0, 0, 0, 0)
    zero = mod_map(ref, (0,) * 5, (0,) * 5, 3, 3)
    assert zero.tension == (0,) * 5 and zero.flow == (0,) * 5
    with pytest.raises(ValueError):
        mod_map(ref, (1, 0, 0, 0, 0), (0,) * 5, 2, 2)


def test_mod_map_hits_modular_pairs(p8):
    # every integral complementary (2,2)-pair reduces to a modular one
    ref = Orientation.reference(p8)
    for f, g in oracles.complementary_pairs_int(p8, ref.flips, 2, 2):
        pair = mod_map(ref, f, g, 2, 2)
        assert is_tension(ref, pair.tension, modulus=2)
        assert is_flow(ref, pair.flow, modulus=2)
        assert pair.is_complementary()


def test_mod_map_surjective_with_ce_fibers(small_corpus, p8):
    # image = all modular complementary pairs; each fiber size = CE class size
    for g in list(small_corpus) + [p8]:
        if g.edge_count > 3 and g is not p8:
            continue
        ref = Orientation.reference(g)
        integral = oracles.complementary_pairs_int(g, ref.flips, 2, 2)
        fibers = {}
        for f, h in integral:
            pair = mod_map(ref, f, h, 2, 2)
            fibers.setdefault((pair.tension, pair.flow), []).append((f, h))
        modular = set(
            map(tuple, oracles.complementary_pairs_mod(g, ref.flips, 2, 2))
        )
        assert set(fibers) == modular

        partition = enumerate_classes(g, "cut_eulerian", "all")
        size_of = {}
        for cls in partition.classes:
            for o in cls:
                size_of[o.flips] = len(cls)
        for members in fibers.values():
            pattern = _sign_pattern(g, members[0])
            assert len(members) == size_of[pattern]


def test_reorient_p(c3):
    orients = list(enumerate_orientations(c3))
    for r in orients:
        f = (1, 2, 3)
        assert reorient_p(r, r, f) == f
    for r, s in product(orients, repeat=2):
        f = (1, -2, 3)
        assert reorient_p(r, s, reorient_p(r, s, f)) == f
        for tension in enum_integer_tensions_box(s, -2, 2):
            assert is_tension(r, reorient_p(r, s, tension))


def test_reorient_q(p8):
    ref = Orientation.reference(p8)
    values = (0, 1, 2, 3, 1)
    assert reorient_q(ref, ref, set(p8.edge_ids), 3, values) == values
    other = ref.with_flipped([0, 3])
    once = reorient_q(ref, other, set(p8.edge_ids), 3, values)
    assert reorient_q(ref, other, set(p8.edge_ids), 3, once) == values
    with pytest.raises(ValueError):
        reorient_q(ref, other, set(p8.edge_ids), 2, values)


def test_reorient_q_transports_boxes(p8):
    # within a CE class, Q maps the closed-box pairs of one orientation
    # bijectively onto those of another
    from ctfpolys import minty_partition

    p, q = 2, 2
    partition = enumerate_classes(p8, "cut_eulerian", "all")
    cls = max(partition.classes, key=len)
    rho, sigma = cls[0], cls[1]
    part_sigma = minty_partition(sigma)
    tensions_sigma = enum_integer_tensions_box(sigma, 0, p)
    flows_sigma = enum_integer_flows_box(sigma, 0, q)
    moved_t = {
        reorient_q(rho, sigma, part_sigma.bond_part, p, f) for f in tensions_sigma
    }
    moved_f = {
        reorient_q(rho, sigma, part_sigma.circuit_part, q, g) for g in flows_sigma
    }
    assert moved_t == set(enum_integer_tensions_box(rho, 0, p))
    assert moved_f == set(enum_integer_flows_box(rho, 0, q))
    assert len(moved_t) == len(tensions_sigma)
    assert len(moved_f) == len(flows_sigma)


def test_count_validation(p8):
    ref = Orientation.reference(p8)
    with pytest.raises(ValueError):
        CountQuery("unknown_family")
    with pytest.raises(ValueError):
        count(p8, "tau_local", p=2)  # missing orientation
    with pytest.raises(ValueError):
        count(p8, "kappa_mod", p=0, q=2)  # open family at 0
    with pytest.raises(ValueError):
        count(p8, "tau_mod", p=3, group_a=(2, 2))  # wrong group order
    assert count(p8, "kappa_bar_local", p=0, q=0, orientation=ref) == 1


def test_budget_guard():
    big = build_graph(2, [(0, 1)] * 10)
    ref = Orientation.reference(big)
    with pytest.raises(BudgetExceededError):
        enum_integer_flows_box(ref, -50, 50, budget=1000)
    with pytest.raises(BudgetExceededError):
        count(big, "phi_int", q=50, budget=1000)
