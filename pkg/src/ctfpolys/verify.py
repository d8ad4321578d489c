"""Mechanical verification of the tension-flow polynomial identities on one
graph, plus a corpus sweep over all small multigraphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Callable, Iterator, Sequence

from .counting import (
    BudgetExceededError,
    CountQuery,
    _count_flows,
    _count_tensions,
    _zero_mask,
    count,
    enum_modular_flows,
    enum_modular_tensions,
)
from .multigraph import MultiGraph, build_graph
from .orientations import (
    EnumerationLimitError,
    Orientation,
    _circuit_part_positions,
    enumerate_classes,
    enumerate_orientations,
    induced_orientation,
    is_flow,
    is_tension,
)
from .polynomials import (
    BivariatePolynomial,
    counting_polynomial,
    interpolate_checked,
    local_polynomial,
    rank_generating,
    tutte,
)

#: Default cap on non-loop edges for a full verification run.
DEFAULT_VERIFY_LIMIT = 12

IDENTITY_TAGS = (
    ("T1b", "integral decomposition over orientations"),
    ("T1c", "integral reciprocity"),
    ("T1d", "integral specializations to tension/flow polynomials"),
    ("T1e", "integral convolution over edge subsets"),
    ("T2b", "modular decomposition over class representatives"),
    ("T2c", "modular reciprocity"),
    ("T2d", "modular specializations to tension/flow polynomials"),
    ("T2e", "modular convolution over edge subsets"),
    ("PL", "per-orientation product decomposition, reciprocity, specializations"),
    ("PE", "class cardinality product rule"),
    ("T3", "dual modular polynomial equals the rank generating polynomial"),
    ("RPQ", "rank generating polynomial as sums over modular pairs"),
    ("IM", "integral-modular relations"),
    ("CS", "special-value census identities"),
    ("TC", "Tutte convolution over edge subsets"),
    ("IND", "independence of base orientation and representative choice"),
)


@dataclass(frozen=True)
class IdentityCheck:
    identity: str
    tag: str
    status: str  # "pass" | "fail"
    witness: str | None = None


@dataclass(frozen=True)
class IdentityReport:
    graph: MultiGraph
    checks: tuple[IdentityCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def failures(self) -> tuple[IdentityCheck, ...]:
        return tuple(c for c in self.checks if c.status != "pass")

    def to_json_list(self) -> list[dict]:
        return [
            {"id": c.identity, "tag": c.tag, "status": c.status, "witness": c.witness}
            for c in self.checks
        ]

    def to_text(self) -> str:
        width = max(len(c.identity) for c in self.checks)
        lines = []
        for c in self.checks:
            line = f"{c.identity:<{width}}  {c.status:<4}  {c.tag}"
            if c.witness:
                line += f"  [{c.witness}]"
            lines.append(line)
        return "\n".join(lines)


class _Collector:
    def __init__(self):
        self.problems: list[str] = []

    def expect(self, ok: bool, witness: str) -> None:
        if not ok:
            self.problems.append(witness)

    def equal(self, label: str, left, right) -> None:
        if left != right:
            self.problems.append(f"{label}: {left} != {right}")


@dataclass
class _OrientationData:
    orientation: Orientation
    circuit_positions: frozenset[int]
    kappa: BivariatePolynomial
    kappa_bar: BivariatePolynomial
    tau_whole: BivariatePolynomial  # open box on every edge
    phi_whole: BivariatePolynomial
    closed_t: BivariatePolynomial
    closed_f: BivariatePolynomial
    closed_t_counts: list[int]  # index p = 0..r+2
    closed_f_counts: list[int]  # index q = 0..n+2
    sign: int  # (-1)^(r + |circuit part|)


def _univariate(counts: Sequence[int], points: Sequence[int], var: str) -> BivariatePolynomial:
    """Interpolate counts sampled at `points` (last two held out) into a
    polynomial in x or y."""
    grid_points = list(points[:-2])
    held = list(points[-2:])
    if var == "x":
        sampler = lambda a, b: counts[points.index(a)]
        return interpolate_checked(sampler, grid_points, [0], [(h, 0) for h in held])
    sampler = lambda a, b: counts[points.index(b)]
    return interpolate_checked(sampler, [0], grid_points, [(0, h) for h in held])


def _orientation_data(graph: MultiGraph, o: Orientation, rank: int, nullity: int,
                      budget: int | None) -> _OrientationData:
    m = graph.edge_count
    circuit = _circuit_part_positions(o)

    open_points = None  # p values sampled for open boxes
    xs = list(range(1, rank + 4))
    ys = list(range(1, nullity + 4))
    bar_xs = list(range(0, rank + 3))
    bar_ys = list(range(0, nullity + 3))

    def supp_t_ranges(p):
        return [(0, 0) if pos in circuit else (1, p - 1) for pos in range(m)]

    def supp_f_ranges(q):
        return [(1, q - 1) if pos in circuit else (0, 0) for pos in range(m)]

    open_t = [_count_tensions(o, supp_t_ranges(p), budget) for p in xs]
    open_f = [_count_flows(o, supp_f_ranges(q), budget) for q in ys]
    whole_t = [_count_tensions(o, [(1, p - 1)] * m, budget) for p in xs]
    whole_f = [_count_flows(o, [(1, q - 1)] * m, budget) for q in ys]
    closed_t_counts = [_count_tensions(o, [(0, p)] * m, budget) for p in bar_xs]
    closed_f_counts = [_count_flows(o, [(0, q)] * m, budget) for q in bar_ys]

    open_t_poly = _univariate(open_t, xs, "x")
    open_f_poly = _univariate(open_f, ys, "y")
    closed_t_poly = _univariate(closed_t_counts, bar_xs, "x")
    closed_f_poly = _univariate(closed_f_counts, bar_ys, "y")

    return _OrientationData(
        orientation=o,
        circuit_positions=circuit,
        kappa=open_t_poly * open_f_poly,
        kappa_bar=closed_t_poly * closed_f_poly,
        tau_whole=_univariate(whole_t, xs, "x"),
        phi_whole=_univariate(whole_f, ys, "y"),
        closed_t=closed_t_poly,
        closed_f=closed_f_poly,
        closed_t_counts=closed_t_counts,
        closed_f_counts=closed_f_counts,
        sign=-1 if (rank + len(circuit)) % 2 else 1,
    )


def _poly_sum(polys) -> BivariatePolynomial:
    total = BivariatePolynomial()
    for p in polys:
        total = total + p
    return total


def _neg_vars(poly: BivariatePolynomial) -> BivariatePolynomial:
    return poly.substitute(-1, 0, -1, 0)


def _modular_mask_counts(graph, o, p, q, budget):
    tensions: dict[int, int] = {}
    for v in enum_modular_tensions(o, (p,), budget):
        k = _zero_mask(v)
        tensions[k] = tensions.get(k, 0) + 1
    flows: dict[int, int] = {}
    for v in enum_modular_flows(o, (q,), budget):
        k = _zero_mask(v)
        flows[k] = flows.get(k, 0) + 1
    return tensions, flows


def verify_graph(
    graph: MultiGraph,
    limit: int = DEFAULT_VERIFY_LIMIT,
    budget: int | None = None,
) -> IdentityReport:
    """Check every identity in the ledger on one graph; exact polynomial or
    integer equalities throughout."""
    nonloop = len(graph.nonloop_positions)
    if nonloop > limit:
        raise EnumerationLimitError(
            f"{nonloop} non-loop edges exceeds the verification limit {limit}"
        )
    stats = graph.stats()
    r, n, m = stats.rank, stats.nullity, graph.edge_count

    orientations = list(enumerate_orientations(graph))
    data = {
        o.flips: _orientation_data(graph, o, r, n, budget) for o in orientations
    }

    part_ce = enumerate_classes(graph, "cut_eulerian", "all")
    part_cu = enumerate_classes(graph, "cut", "all")
    part_eu = enumerate_classes(graph, "eulerian", "all")

    def class_sizes(partition):
        sizes = {}
        for cls in partition.classes:
            for o in cls:
                sizes[o.flips] = len(cls)
        return sizes

    ce_size = class_sizes(part_ce)
    cu_size = class_sizes(part_cu)
    eu_size = class_sizes(part_eu)

    # memberships
    ones = (1,) * m
    acyclic = {o.flips: not data[o.flips].circuit_positions for o in orientations}
    totally_cyclic = {
        o.flips: len(data[o.flips].circuit_positions) == m for o in orientations
    }
    is_cut_orient = {o.flips: is_tension(o, ones, 0) for o in orientations}
    is_eul_orient = {o.flips: is_flow(o, ones, 0) for o in orientations}

    def is_ce_orient(o):
        circ = data[o.flips].circuit_positions
        bond_vec = tuple(0 if p in circ else 1 for p in range(m))
        circ_vec = tuple(1 if p in circ else 0 for p in range(m))
        return is_tension(o, bond_vec, 0) and is_flow(o, circ_vec, 0)

    is_ce = {o.flips: is_ce_orient(o) for o in orientations}

    # graph-level polynomials
    kappa_int = counting_polynomial(graph, "kappa_int", budget)
    kappa_mod = counting_polynomial(graph, "kappa_mod", budget)
    tau_int = counting_polynomial(graph, "tau_int", budget)
    phi_int = counting_polynomial(graph, "phi_int", budget)
    tau_mod = counting_polynomial(graph, "tau_mod", budget)
    phi_mod = counting_polynomial(graph, "phi_mod", budget)

    bar_xs = list(range(0, r + 3))
    bar_ys = list(range(0, n + 3))

    def swept_bar(members) -> BivariatePolynomial:
        """Interpolate sum over the given orientations of the closed-box
        product counts (tension side x flow side)."""
        rows = []
        for p in bar_xs:
            row = []
            for q in bar_ys:
                row.append(
                    sum(
                        data[f].closed_t_counts[p] * data[f].closed_f_counts[q]
                        for f in members
                    )
                )
            rows.append(row)
        sampler = lambda a, b: rows[bar_xs.index(a)][bar_ys.index(b)]
        return interpolate_checked(
            sampler,
            bar_xs[:-2],
            bar_ys[:-2],
            [(bar_xs[-2], bar_ys[-2]), (bar_xs[-1], bar_ys[-1])],
        )

    all_flips = [o.flips for o in orientations]
    rep_flips = [rep.flips for rep in part_ce.representatives]
    kappa_bar_int = swept_bar(all_flips)
    kappa_bar_mod = swept_bar(rep_flips)

    def swept_univariate(members, side: str) -> BivariatePolynomial:
        if side == "tau":
            counts = [
                sum(data[f].closed_t_counts[p] for f in members) for p in bar_xs
            ]
            return _univariate(counts, bar_xs, "x")
        counts = [sum(data[f].closed_f_counts[q] for f in members) for q in bar_ys]
        return _univariate(counts, bar_ys, "y")

    acyclic_flips = [f for f in all_flips if acyclic[f]]
    tc_flips = [f for f in all_flips if totally_cyclic[f]]
    acyclic_reps = [f for f in rep_flips if acyclic[f]]
    tc_reps = [f for f in rep_flips if totally_cyclic[f]]

    tau_bar_int = swept_univariate(acyclic_flips, "tau")
    phi_bar_int = swept_univariate(tc_flips, "phi")
    tau_bar_mod = swept_univariate(acyclic_reps, "tau")
    phi_bar_mod = swept_univariate(tc_reps, "phi")

    tutte_poly = tutte(graph)
    rank_poly = rank_generating(graph)

    checks: list[IdentityCheck] = []
    tags = dict(IDENTITY_TAGS)

    def run(identity: str, body: Callable[[_Collector], None]) -> None:
        col = _Collector()
        try:
            body(col)
        except (BudgetExceededError, EnumerationLimitError) as exc:
            col.problems.append(f"skipped (budget): {exc}")
        if col.problems:
            checks.append(IdentityCheck(identity, tags[identity], "fail", col.problems[0]))
        else:
            checks.append(IdentityCheck(identity, tags[identity], "pass"))

    # ---- Theorem 1 (integral families) ----
    def t1b(col):
        col.equal("kappa_int = sum of local", kappa_int,
                  _poly_sum(data[f].kappa for f in all_flips))
        col.equal("kappa_bar_int = sum of local", kappa_bar_int,
                  _poly_sum(data[f].kappa_bar for f in all_flips))

    def t1c(col):
        col.equal(
            "kappa_int(-x,-y)",
            _neg_vars(kappa_int),
            _poly_sum(data[f].sign * data[f].kappa_bar for f in all_flips),
        )
        col.equal(
            "kappa_bar_int(-x,-y)",
            _neg_vars(kappa_bar_int),
            _poly_sum(data[f].sign * data[f].kappa for f in all_flips),
        )

    def t1d(col):
        col.equal("kappa_int(x,1)", kappa_int.set_y(1), tau_int)
        col.equal("kappa_int(1,y)", kappa_int.set_x(1), phi_int)
        col.equal("kappa_bar_int(x,-1)", kappa_bar_int.set_y(-1), tau_bar_int)
        col.equal("kappa_bar_int(-1,y)", kappa_bar_int.set_x(-1), phi_bar_int)

    def _convolution(tau_family, phi_family):
        total = BivariatePolynomial()
        for mask in range(1 << m):
            ids = [graph.edge_ids[pos] for pos in range(m) if mask >> pos & 1]
            quotient = graph.contract(ids)
            restriction = graph.restrict(ids)
            total = total + counting_polynomial(quotient, tau_family, budget) * \
                counting_polynomial(restriction, phi_family, budget)
        return total

    def t1e(col):
        col.equal("kappa_int convolution", kappa_int, _convolution("tau_int", "phi_int"))
        col.equal("kappa_bar_int convolution", kappa_bar_int,
                  _convolution("tau_bar_int", "phi_bar_int"))

    # ---- Theorem 2 (modular families) ----
    def t2b(col):
        col.equal("kappa_mod = sum over reps", kappa_mod,
                  _poly_sum(data[f].kappa for f in rep_flips))
        col.equal("kappa_bar_mod = sum over reps", kappa_bar_mod,
                  _poly_sum(data[f].kappa_bar for f in rep_flips))

    def t2c(col):
        col.equal(
            "kappa_mod(-x,-y)",
            _neg_vars(kappa_mod),
            _poly_sum(data[f].sign * data[f].kappa_bar for f in rep_flips),
        )
        col.equal(
            "kappa_bar_mod(-x,-y)",
            _neg_vars(kappa_bar_mod),
            _poly_sum(data[f].sign * data[f].kappa for f in rep_flips),
        )

    def t2d(col):
        col.equal("kappa_mod(x,1)", kappa_mod.set_y(1), tau_mod)
        col.equal("kappa_mod(1,y)", kappa_mod.set_x(1), phi_mod)
        col.equal("kappa_bar_mod(x,-1)", kappa_bar_mod.set_y(-1), tau_bar_mod)
        col.equal("kappa_bar_mod(-1,y)", kappa_bar_mod.set_x(-1), phi_bar_mod)

    def t2e(col):
        col.equal("kappa_mod convolution", kappa_mod, _convolution("tau_mod", "phi_mod"))
        col.equal("kappa_bar_mod convolution", kappa_bar_mod,
                  _convolution("tau_bar_mod", "phi_bar_mod"))

    # ---- per-orientation identities ----
    def pl(col):
        for o in orientations:
            d = data[o.flips]
            circuit_ids = frozenset(
                graph.edge_ids[pos] for pos in d.circuit_positions
            )
            quotient = graph.contract(circuit_ids)
            restriction = graph.restrict(circuit_ids)
            o_quot = induced_orientation(o, quotient)
            o_rest = induced_orientation(o, restriction)
            label = f"orientation {o.flip_string() or '-'}"
            col.equal(
                f"{label} product decomposition",
                d.kappa,
                local_polynomial(quotient, o_quot, "tau_local", budget)
                * local_polynomial(restriction, o_rest, "phi_local", budget),
            )
            col.equal(
                f"{label} closed product decomposition",
                d.kappa_bar,
                local_polynomial(quotient, o_quot, "tau_bar_local", budget)
                * local_polynomial(restriction, o_rest, "phi_bar_local", budget),
            )
            col.equal(
                f"{label} reciprocity",
                _neg_vars(d.kappa),
                d.sign * d.kappa_bar,
            )
            col.equal(f"{label} kappa(x,1)", d.kappa.set_y(1), d.tau_whole)
            col.equal(f"{label} kappa(1,y)", d.kappa.set_x(1), d.phi_whole)
            # the closed-box specializations survive only where the matching
            # open polytope is nonempty: the tension one needs an empty
            # circuit part, the flow one an empty bond part
            zero = BivariatePolynomial()
            col.equal(
                f"{label} kappa_bar(x,-1)",
                d.kappa_bar.set_y(-1),
                d.closed_t if not d.circuit_positions else zero,
            )
            col.equal(
                f"{label} kappa_bar(-1,y)",
                d.kappa_bar.set_x(-1),
                d.closed_f if len(d.circuit_positions) == m else zero,
            )

    def pe(col):
        for o in orientations:
            f = o.flips
            col.equal(
                f"class sizes at {o.flip_string() or '-'}",
                ce_size[f],
                cu_size[f] * eu_size[f],
            )
            col.equal(
                f"0-1 pair count at {o.flip_string() or '-'}",
                Fraction(ce_size[f]),
                data[f].kappa_bar.evaluate(1, 1),
            )

    def t3(col):
        col.equal("kappa_bar_mod = rank generating", kappa_bar_mod, rank_poly)
        for p, q in product((1, 2, 3), repeat=2):
            triples = sum(
                data[f].closed_t_counts[p - 1] * data[f].closed_f_counts[q - 1]
                for f in rep_flips
            )
            col.equal(f"T({p},{q}) as triples", tutte_poly.evaluate(p, q), Fraction(triples))

    def rpq(col):
        full = (1 << m) - 1
        ref = Orientation.reference(graph)
        for p, q in product((1, 2, 3), repeat=2):
            tensions, flows = _modular_mask_counts(graph, ref, p, q, budget)
            positive = 0
            alternating = 0
            for kmask, tcount in tensions.items():
                for fzmask, fcount in flows.items():
                    smask = full ^ fzmask
                    if smask & ~kmask:
                        continue
                    positive += tcount * fcount * (1 << (kmask & ~smask & full).bit_count())
                    if smask == kmask:
                        alternating += tcount * fcount * (-1 if smask.bit_count() % 2 else 1)
            col.equal(f"R({p},{q}) pair sum", rank_poly.evaluate(p, q), Fraction(positive))
            r_sign = -1 if r % 2 else 1
            col.equal(
                f"R(-{p},-{q}) signed pair sum",
                rank_poly.evaluate(-p, -q),
                Fraction(r_sign * alternating),
            )

    def im(col):
        col.equal(
            "kappa_int = weighted class sum",
            kappa_int,
            _poly_sum(ce_size[f] * data[f].kappa for f in rep_flips),
        )
        col.equal(
            "kappa_bar_int = weighted class sum",
            kappa_bar_int,
            _poly_sum(ce_size[f] * data[f].kappa_bar for f in rep_flips),
        )
        col.equal(
            "tau_int = weighted acyclic class sum",
            tau_int,
            _poly_sum(ce_size[f] * data[f].tau_whole for f in acyclic_reps),
        )
        col.equal(
            "phi_int = weighted totally cyclic class sum",
            phi_int,
            _poly_sum(ce_size[f] * data[f].phi_whole for f in tc_reps),
        )

    def cs(col):
        n_or = len(orientations)
        n_ac = sum(1 for f in all_flips if acyclic[f])
        n_tc = sum(1 for f in all_flips if totally_cyclic[f])
        n_cu = sum(1 for f in all_flips if is_cut_orient[f])
        n_eu = sum(1 for f in all_flips if is_eul_orient[f])
        n_ce = sum(1 for f in all_flips if is_ce[f])
        kz, kbz = kappa_int, kappa_bar_int
        col.equal("kappa_bar_int(0,0)", kbz.evaluate(0, 0), Fraction(n_or))
        col.equal("|kappa_int(1,0)|", abs(kz.evaluate(1, 0)), Fraction(n_tc))
        col.equal("kappa_bar_int(-1,0)", kbz.evaluate(-1, 0), Fraction(n_tc))
        col.equal("|kappa_int(0,1)|", abs(kz.evaluate(0, 1)), Fraction(n_ac))
        col.equal("kappa_bar_int(0,-1)", kbz.evaluate(0, -1), Fraction(n_ac))
        col.equal("kappa_int(1,1)", kz.evaluate(1, 1), kbz.evaluate(-1, -1))
        if m:
            col.equal("kappa_int(1,1) = 0", kz.evaluate(1, 1), Fraction(0))
        col.equal("kappa_int(2,1)", kz.evaluate(2, 1), Fraction(n_cu))
        col.equal("|kappa_bar_int(-2,-1)|", abs(kbz.evaluate(-2, -1)), Fraction(n_cu))
        col.equal("kappa_int(1,2)", kz.evaluate(1, 2), Fraction(n_eu))
        col.equal("|kappa_bar_int(-1,-2)|", abs(kbz.evaluate(-1, -2)), Fraction(n_eu))
        col.equal("kappa_int(2,2)", kz.evaluate(2, 2), Fraction(n_ce))
        col.equal(
            "kappa_bar_int(1,0)",
            kbz.evaluate(1, 0),
            Fraction(sum(cu_size[f] for f in all_flips)),
        )
        col.equal(
            "kappa_bar_int(0,1)",
            kbz.evaluate(0, 1),
            Fraction(sum(eu_size[f] for f in all_flips)),
        )
        col.equal(
            "kappa_bar_int(1,1)",
            kbz.evaluate(1, 1),
            Fraction(sum(ce_size[f] for f in all_flips)),
        )

        k, kb, t = kappa_mod, kappa_bar_mod, tutte_poly
        classes_in = lambda member: sum(1 for f in rep_flips if member[f])
        col.equal("T(0,0) chain", t.evaluate(0, 0), kb.evaluate(-1, -1))
        col.equal("kappa_mod(1,1) chain", k.evaluate(1, 1), kb.evaluate(-1, -1))
        if m:
            col.equal("kappa_mod(1,1) = 0", k.evaluate(1, 1), Fraction(0))
        col.equal("T(1,1) = class count", t.evaluate(1, 1), Fraction(len(rep_flips)))
        col.equal("kappa_bar_mod(0,0)", kb.evaluate(0, 0), Fraction(len(rep_flips)))
        col.equal("T(2,2) = orientation count", t.evaluate(2, 2), Fraction(n_or))
        col.equal("kappa_bar_mod(1,1)", kb.evaluate(1, 1), Fraction(n_or))
        col.equal("kappa_mod(2,2)", k.evaluate(2, 2), Fraction(classes_in(is_ce)))
        col.equal("|T(0,-1)|", abs(t.evaluate(0, -1)), Fraction(classes_in(is_eul_orient)))
        col.equal("|kappa_bar_mod(-1,-2)|", abs(kb.evaluate(-1, -2)),
                  Fraction(classes_in(is_eul_orient)))
        col.equal("kappa_mod(1,2)", k.evaluate(1, 2), Fraction(classes_in(is_eul_orient)))
        col.equal("|T(-1,0)|", abs(t.evaluate(-1, 0)), Fraction(classes_in(is_cut_orient)))
        col.equal("|kappa_bar_mod(-2,-1)|", abs(kb.evaluate(-2, -1)),
                  Fraction(classes_in(is_cut_orient)))
        col.equal("kappa_mod(2,1)", k.evaluate(2, 1), Fraction(classes_in(is_cut_orient)))
        col.equal("T(1,0)", t.evaluate(1, 0), Fraction(len(acyclic_reps)))
        col.equal("kappa_bar_mod(0,-1)", kb.evaluate(0, -1), Fraction(len(acyclic_reps)))
        col.equal("|kappa_mod(0,1)|", abs(k.evaluate(0, 1)), Fraction(len(acyclic_reps)))
        col.equal("T(0,1)", t.evaluate(0, 1), Fraction(len(tc_reps)))
        col.equal("kappa_bar_mod(-1,0)", kb.evaluate(-1, 0), Fraction(len(tc_reps)))
        col.equal("|kappa_mod(1,0)|", abs(k.evaluate(1, 0)), Fraction(len(tc_reps)))
        col.equal("T(1,2) = cut classes", t.evaluate(1, 2), Fraction(len(part_cu.classes)))
        col.equal("kappa_bar_mod(0,1)", kb.evaluate(0, 1), Fraction(len(part_cu.classes)))
        col.equal("T(2,1) = Eulerian classes", t.evaluate(2, 1), Fraction(len(part_eu.classes)))
        col.equal("kappa_bar_mod(1,0)", kb.evaluate(1, 0), Fraction(len(part_eu.classes)))

    def tc(col):
        total = BivariatePolynomial()
        for mask in range(1 << m):
            ids = [graph.edge_ids[pos] for pos in range(m) if mask >> pos & 1]
            total = total + tutte(graph.contract(ids)).set_y(0) * tutte(
                graph.restrict(ids)
            ).set_x(0)
        col.equal("Tutte convolution", tutte_poly, total)

    def ind(col):
        alternate = Orientation.reference(graph).reversed()
        xs = list(range(1, r + 2))
        ys = list(range(1, n + 2))
        sampler = lambda a, b: count(
            graph, CountQuery("kappa_int", p=a, q=b, orientation=alternate), budget
        )
        recomputed = interpolate_checked(
            sampler, xs, ys, [(r + 2, n + 2), (r + 3, n + 3)]
        )
        col.equal("kappa_int from reversed orientation", kappa_int, recomputed)
        lex_largest = [cls[-1].flips for cls in part_ce.classes]
        col.equal(
            "kappa_bar_mod from largest representatives",
            kappa_bar_mod,
            swept_bar(lex_largest),
        )

    run("T1b", t1b)
    run("T1c", t1c)
    run("T1d", t1d)
    run("T1e", t1e)
    run("T2b", t2b)
    run("T2c", t2c)
    run("T2d", t2d)
    run("T2e", t2e)
    run("PL", pl)
    run("PE", pe)
    run("T3", t3)
    run("RPQ", rpq)
    run("IM", im)
    run("CS", cs)
    run("TC", tc)
    run("IND", ind)

    return IdentityReport(graph, tuple(checks))


def _canonical_form(edges: Sequence[tuple[int, int]], vertex_count: int):
    best = None
    for perm in permutations(range(vertex_count)):
        candidate = tuple(
            sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges)
        )
        if best is None or candidate < best:
            best = candidate
    return best


def small_multigraphs(max_edges: int, include_loops: bool) -> Iterator[MultiGraph]:
    """All multigraphs with up to ``max_edges`` edges on up to
    ``max_edges + 1`` vertices: the edgeless graphs on each vertex count plus
    one representative per isomorphism class of graphs without isolated
    vertices (isolated vertices change no verified identity)."""
    max_vertices = max_edges + 1
    for k in range(1, max_vertices + 1):
        yield build_graph(k, [])

    seen: set = set()
    stack: list[tuple[tuple[tuple[int, int], ...], int]] = [((), 0)]
    while stack:
        edges, used = stack.pop()
        if edges:
            key = (used, _canonical_form(edges, used))
            if key not in seen:
                seen.add(key)
                yield build_graph(used, list(edges))
        if len(edges) == max_edges:
            continue
        last = edges[-1] if edges else None
        # next edge must not precede the last one, and a new vertex label must
        # always be the next unused integer (canonical-by-first-appearance)
        for u in range(min(used, max_vertices - 1) + 1):
            used_u = max(used, u + 1)
            v_lo = u if include_loops else u + 1
            for v in range(v_lo, min(used_u, max_vertices - 1) + 1):
                if last is not None and (u, v) < last:
                    continue
                stack.append((edges + ((u, v),), max(used_u, v + 1)))


def verify_corpus(
    max_edges: int,
    include_loops: bool = True,
    limit: int = DEFAULT_VERIFY_LIMIT,
    budget: int | None = None,
) -> Iterator[tuple[MultiGraph, IdentityReport]]:
    for graph in small_multigraphs(max_edges, include_loops):
        yield graph, verify_graph(graph, limit, budget)
