"""Enumeration and counting of tensions, flows, and complementary
tension-flow pairs, modular and integral.

Edge vectors are plain tuples indexed by edge position. Modular values live
in a finite abelian group given as a product of cyclic moduli, encoded in
mixed radix as integers in [0, order).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod
from typing import Iterator, Sequence

from .multigraph import MultiGraph, _UnionFind
from .orientations import (
    DEFAULT_SWEEP_LIMIT,
    Orientation,
    _circuit_table,
    _circuit_part_positions,
    _flip_signs,
    enumerate_classes,
    enumerate_orientations,
    induced_orientation,
    is_flow,
    is_tension,
)

#: Cap on candidate assignments per box/group enumeration.
DEFAULT_CANDIDATE_BUDGET = 1 << 22

FAMILIES = frozenset(
    {
        "tau_mod", "phi_mod", "tau_int", "phi_int",
        "tau_local", "phi_local", "tau_bar_local", "phi_bar_local",
        "tau_bar_int", "phi_bar_int", "tau_bar_mod", "phi_bar_mod",
        "kappa_mod", "kappa_int", "kappa_local", "kappa_bar_local",
        "kappa_bar_int", "kappa_bar_mod",
    }
)

#: Families whose counts need an orientation argument.
LOCAL_FAMILIES = frozenset(
    {"tau_local", "phi_local", "tau_bar_local", "phi_bar_local",
     "kappa_local", "kappa_bar_local"}
)

#: Families defined on closed boxes; they accept p = 0 / q = 0.
BAR_FAMILIES = frozenset(
    {"tau_bar_local", "phi_bar_local", "tau_bar_int", "phi_bar_int",
     "tau_bar_mod", "phi_bar_mod", "kappa_bar_local", "kappa_bar_int",
     "kappa_bar_mod"}
)

_X_ONLY = frozenset({"tau_mod", "tau_int", "tau_local", "tau_bar_local",
                     "tau_bar_int", "tau_bar_mod"})
_Y_ONLY = frozenset({"phi_mod", "phi_int", "phi_local", "phi_bar_local",
                     "phi_bar_int", "phi_bar_mod"})


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would exceed its candidate budget."""


class InternalCheckError(AssertionError):
    """A built-in cross-check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class CyclicProduct:
    """Finite abelian group Z_m1 x ... x Z_mk with mixed-radix encoding."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        if not all(isinstance(m, int) and m >= 1 for m in self.moduli):
            raise ValueError("moduli must be integers >= 1")

    @property
    def order(self) -> int:
        return prod(self.moduli)

    def encode(self, parts: Sequence[int]) -> int:
        value, place = 0, 1
        for part, m in zip(parts, self.moduli):
            value += (part % m) * place
            place *= m
        return value

    def decode(self, value: int) -> tuple[int, ...]:
        parts = []
        for m in self.moduli:
            parts.append(value % m)
            value //= m
        return tuple(parts)

    def add(self, a: int, b: int) -> int:
        return self.encode([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def sub(self, a: int, b: int) -> int:
        return self.encode([x - y for x, y in zip(self.decode(a), self.decode(b))])

    def neg(self, a: int) -> int:
        return self.encode([-x for x in self.decode(a)])

    def elements(self) -> range:
        return range(self.order)


@dataclass(frozen=True)
class TensionFlowPair:
    """A tension and a flow on the same digraph."""

    orientation: Orientation
    tension: tuple[int, ...]
    flow: tuple[int, ...]

    def is_complementary(self) -> bool:
        """ker f = supp g: exactly one of f(e), g(e) is nonzero per edge."""
        return all((f == 0) != (g == 0) for f, g in zip(self.tension, self.flow))


@dataclass(frozen=True)
class CountQuery:
    family: str
    p: int | None = None
    q: int | None = None
    orientation: Orientation | None = None
    group_a: tuple[int, ...] | None = None
    group_b: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")


@lru_cache(maxsize=None)
def _structure(graph: MultiGraph):
    """(forest positions, cotree circuit table, flow coefficient table,
    component roots)."""
    cotree = _circuit_table(graph)
    cotree_pos = {e for e, _ in cotree}
    forest_pos = tuple(p for p in range(graph.edge_count) if p not in cotree_pos)
    flow_coeffs: dict[int, list[tuple[int, int]]] = {t: [] for t in forest_pos}
    for e_pos, rest in cotree:
        for t_pos, d in rest:
            flow_coeffs[t_pos].append((e_pos, d))
    uf = _UnionFind(graph.vertex_count)
    for u, v in graph.edges:
        uf.union(u, v)
    roots = frozenset(uf.find(v) for v in range(graph.vertex_count))
    return (
        forest_pos,
        cotree,
        tuple((t, tuple(flow_coeffs[t])) for t in forest_pos),
        roots,
    )


def _check_budget(candidates: int, budget: int | None) -> None:
    cap = DEFAULT_CANDIDATE_BUDGET if budget is None else budget
    if candidates > cap:
        raise BudgetExceededError(
            f"enumeration needs {candidates} candidates, budget is {cap}"
        )


def _normalize_ranges(
    graph: MultiGraph,
    lower,
    upper,
    strict_lower=None,
    strict_upper=None,
) -> list[tuple[int, int]]:
    m = graph.edge_count
    lows = [lower] * m if isinstance(lower, int) else list(lower)
    highs = [upper] * m if isinstance(upper, int) else list(upper)
    if len(lows) != m or len(highs) != m:
        raise ValueError("bounds must cover every edge")
    slo = [strict_lower] * m if not isinstance(strict_lower, (list, tuple)) else list(strict_lower)
    shi = [strict_upper] * m if not isinstance(strict_upper, (list, tuple)) else list(strict_upper)
    out = []
    for lo, hi, s_lo, s_hi in zip(lows, highs, slo, shi):
        out.append((lo + 1 if s_lo else lo, hi - 1 if s_hi else hi))
    return out


def _tension_coeffs(orientation: Orientation):
    """Per cotree edge: (e_pos, ((t_pos, c), ...)) with f(e) = sum c*f(t)."""
    signs = _flip_signs(orientation)
    _, cotree, _, _ = _structure(orientation.graph)
    return tuple(
        (e, tuple((t, -signs[e] * d * signs[t]) for t, d in rest))
        for e, rest in cotree
    )


def _flow_coeffs(orientation: Orientation):
    """Per forest edge: (t_pos, ((e_pos, c), ...)) with g(t) = sum c*g(e)."""
    signs = _flip_signs(orientation)
    _, _, flow_tab, _ = _structure(orientation.graph)
    return tuple(
        (t, tuple((e, d * signs[t] * signs[e]) for e, d in coeffs))
        for t, coeffs in flow_tab
    )


def _iter_tensions(orientation, ranges, budget=None) -> Iterator[tuple[int, ...]]:
    """Integer tensions of the digraph with per-position inclusive bounds,
    parametrized by spanning-forest values."""
    graph = orientation.graph
    forest_pos, _, _, _ = _structure(graph)
    dependent = _tension_coeffs(orientation)
    spans = [range(ranges[t][0], ranges[t][1] + 1) for t in forest_pos]
    _check_budget(prod(len(s) for s in spans), budget)
    vec = [0] * graph.edge_count
    for assignment in product(*spans):
        for t, value in zip(forest_pos, assignment):
            vec[t] = value
        ok = True
        for e, coeffs in dependent:
            value = 0
            for t, c in coeffs:
                value += c * vec[t]
            if not ranges[e][0] <= value <= ranges[e][1]:
                ok = False
                break
            vec[e] = value
        if ok:
            yield tuple(vec)


def _iter_flows(orientation, ranges, budget=None) -> Iterator[tuple[int, ...]]:
    """Integer flows with per-position inclusive bounds, parametrized by
    cotree values."""
    graph = orientation.graph
    _, cotree, _, _ = _structure(graph)
    cotree_pos = [e for e, _ in cotree]
    dependent = _flow_coeffs(orientation)
    spans = [range(ranges[e][0], ranges[e][1] + 1) for e in cotree_pos]
    _check_budget(prod(len(s) for s in spans), budget)
    vec = [0] * graph.edge_count
    for assignment in product(*spans):
        for e, value in zip(cotree_pos, assignment):
            vec[e] = value
        ok = True
        for t, coeffs in dependent:
            value = 0
            for e, c in coeffs:
                value += c * vec[e]
            if not ranges[t][0] <= value <= ranges[t][1]:
                ok = False
                break
            vec[t] = value
        if ok:
            yield tuple(vec)


def _count_tensions(orientation, ranges, budget=None) -> int:
    return sum(1 for _ in _iter_tensions(orientation, ranges, budget))


def _count_flows(orientation, ranges, budget=None) -> int:
    return sum(1 for _ in _iter_flows(orientation, ranges, budget))


def enum_integer_tensions_box(
    orientation: Orientation,
    lower,
    upper,
    strict_lower=None,
    strict_upper=None,
    budget: int | None = None,
) -> list[tuple[int, ...]]:
    """All integer tensions with lower <= f(e) <= upper per edge (strict
    flags tighten either side). Bounds may be scalars or per-edge sequences."""
    ranges = _normalize_ranges(orientation.graph, lower, upper, strict_lower, strict_upper)
    return list(_iter_tensions(orientation, ranges, budget))


def enum_integer_flows_box(
    orientation: Orientation,
    lower,
    upper,
    strict_lower=None,
    strict_upper=None,
    budget: int | None = None,
) -> list[tuple[int, ...]]:
    """Integer flows in a box; dual to the tension enumerator."""
    ranges = _normalize_ranges(orientation.graph, lower, upper, strict_lower, strict_upper)
    return list(_iter_flows(orientation, ranges, budget))


def enum_modular_tensions(
    orientation: Orientation,
    group: Sequence[int],
    budget: int | None = None,
) -> list[tuple[int, ...]]:
    """The tension group over the given product of cyclic moduli: one vector
    per potential with the smallest vertex of each component pinned to 0."""
    grp = CyclicProduct(tuple(group))
    graph = orientation.graph
    _, _, _, roots = _structure(graph)
    free = [v for v in range(graph.vertex_count) if v not in roots]
    _check_budget(grp.order ** len(free), budget)
    arrows = orientation.arrows()
    out = []
    potential = [0] * graph.vertex_count
    for values in product(grp.elements(), repeat=len(free)):
        for v, value in zip(free, values):
            potential[v] = value
        out.append(
            tuple(grp.sub(potential[t], potential[h]) for t, h in arrows)
        )
    return out


def enum_modular_flows(
    orientation: Orientation,
    group: Sequence[int],
    budget: int | None = None,
) -> list[tuple[int, ...]]:
    """The flow group over the given product of cyclic moduli: free cotree
    values extended through the fundamental circuits."""
    grp = CyclicProduct(tuple(group))
    graph = orientation.graph
    _, cotree, _, _ = _structure(graph)
    cotree_pos = [e for e, _ in cotree]
    dependent = _flow_coeffs(orientation)
    _check_budget(grp.order ** len(cotree_pos), budget)
    out = []
    vec = [0] * graph.edge_count
    for values in product(grp.elements(), repeat=len(cotree_pos)):
        for e, value in zip(cotree_pos, values):
            vec[e] = value
        for t, coeffs in dependent:
            value = 0
            for e, c in coeffs:
                value = grp.add(value, vec[e] if c > 0 else grp.neg(vec[e]))
            vec[t] = value
        out.append(tuple(vec))
    return out


def _zero_mask(vec: Sequence[int]) -> int:
    mask = 0
    for i, x in enumerate(vec):
        if x == 0:
            mask |= 1 << i
    return mask


def _matched_pairs(tension_masks: dict[int, int], flow_masks: dict[int, int], full: int) -> int:
    # pair (f, g) is complementary iff ker f == supp g
    total = 0
    for kmask, tcount in tension_masks.items():
        fcount = flow_masks.get(full ^ kmask)
        if fcount:
            total += tcount * fcount
    return total


def _open_support_ranges(graph, circuit_positions, p, q):
    m = graph.edge_count
    t_ranges = [(1, p - 1)] * m
    f_ranges = [(0, 0)] * m
    for pos in circuit_positions:
        t_ranges[pos] = (0, 0)
        f_ranges[pos] = (1, q - 1)
    return t_ranges, f_ranges


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def count(graph: MultiGraph, query, budget: int | None = None,
          sweep_limit: int = DEFAULT_SWEEP_LIMIT, **kwargs) -> int:
    """Exact value of one counting family at one argument point.

    ``query`` is a CountQuery or a family name (extra arguments then come
    from keyword arguments p, q, orientation, group_a, group_b).
    """
    if isinstance(query, str):
        query = CountQuery(query, **kwargs)
    elif kwargs:
        raise ValueError("pass arguments inside the CountQuery")
    family, p, q = query.family, query.p, query.q

    if family in LOCAL_FAMILIES:
        _require(query.orientation is not None, f"{family} needs an orientation")
    orientation = query.orientation or Orientation.reference(graph)
    _require(
        orientation.graph == graph,
        "orientation belongs to a different graph",
    )

    bar = family in BAR_FAMILIES
    lowest = 0 if bar else 1
    if family not in _Y_ONLY:
        _require(p is not None and p >= lowest, f"{family} needs p >= {lowest}")
    if family not in _X_ONLY:
        _require(q is not None and q >= lowest, f"{family} needs q >= {lowest}")

    m = graph.edge_count

    if family == "tau_mod" or family == "phi_mod":
        order = p if family == "tau_mod" else q
        group = (query.group_a if family == "tau_mod" else query.group_b) or (order,)
        _require(prod(group) == order, "group order must match the argument")
        if family == "tau_mod":
            vectors = enum_modular_tensions(orientation, group, budget)
        else:
            vectors = enum_modular_flows(orientation, group, budget)
        return sum(1 for v in vectors if all(x != 0 for x in v))

    if family == "tau_int":
        ranges = [(-(p - 1), p - 1)] * m
        return sum(
            1
            for v in _iter_tensions(orientation, ranges, budget)
            if all(x != 0 for x in v)
        )
    if family == "phi_int":
        ranges = [(-(q - 1), q - 1)] * m
        return sum(
            1
            for v in _iter_flows(orientation, ranges, budget)
            if all(x != 0 for x in v)
        )

    if family == "tau_local":
        return _count_tensions(orientation, [(1, p - 1)] * m, budget)
    if family == "phi_local":
        return _count_flows(orientation, [(1, q - 1)] * m, budget)
    if family == "tau_bar_local":
        return _count_tensions(orientation, [(0, p)] * m, budget)
    if family == "phi_bar_local":
        return _count_flows(orientation, [(0, q)] * m, budget)

    if family == "tau_bar_int":
        return sum(
            _count_tensions(o, [(0, p)] * m, budget)
            for o in enumerate_orientations(graph, sweep_limit)
            if not _circuit_part_positions(o)
        )
    if family == "phi_bar_int":
        every = frozenset(range(m))
        return sum(
            _count_flows(o, [(0, q)] * m, budget)
            for o in enumerate_orientations(graph, sweep_limit)
            if _circuit_part_positions(o) == every
        )
    if family == "tau_bar_mod":
        part = enumerate_classes(graph, "cut_eulerian", "acyclic", sweep_limit)
        return sum(
            _count_tensions(rep, [(0, p)] * m, budget) for rep in part.representatives
        )
    if family == "phi_bar_mod":
        part = enumerate_classes(graph, "cut_eulerian", "totally_cyclic", sweep_limit)
        return sum(
            _count_flows(rep, [(0, q)] * m, budget) for rep in part.representatives
        )

    if family == "kappa_mod":
        group_a = query.group_a or (p,)
        group_b = query.group_b or (q,)
        _require(prod(group_a) == p and prod(group_b) == q,
                 "group orders must match p and q")
        tensions: dict[int, int] = {}
        for v in enum_modular_tensions(orientation, group_a, budget):
            mask = _zero_mask(v)
            tensions[mask] = tensions.get(mask, 0) + 1
        flows: dict[int, int] = {}
        for v in enum_modular_flows(orientation, group_b, budget):
            mask = _zero_mask(v)
            flows[mask] = flows.get(mask, 0) + 1
        return _matched_pairs(tensions, flows, (1 << m) - 1)

    if family == "kappa_int":
        tensions = {}
        for v in _iter_tensions(orientation, [(-(p - 1), p - 1)] * m, budget):
            mask = _zero_mask(v)
            tensions[mask] = tensions.get(mask, 0) + 1
        flows = {}
        for v in _iter_flows(orientation, [(-(q - 1), q - 1)] * m, budget):
            mask = _zero_mask(v)
            flows[mask] = flows.get(mask, 0) + 1
        return _matched_pairs(tensions, flows, (1 << m) - 1)

    if family == "kappa_local":
        circuit = _circuit_part_positions(orientation)
        t_ranges, f_ranges = _open_support_ranges(graph, circuit, p, q)
        direct = _count_tensions(orientation, t_ranges, budget) * _count_flows(
            orientation, f_ranges, budget
        )
        circuit_ids = frozenset(graph.edge_ids[pos] for pos in circuit)
        quotient = graph.contract(circuit_ids)
        restriction = graph.restrict(circuit_ids)
        via_minors = count(
            quotient,
            CountQuery("tau_local", p=p, orientation=induced_orientation(orientation, quotient)),
            budget,
        ) * count(
            restriction,
            CountQuery("phi_local", q=q, orientation=induced_orientation(orientation, restriction)),
            budget,
        )
        if direct != via_minors:
            raise InternalCheckError(
                f"kappa_local mismatch: direct {direct} != minor product {via_minors}"
            )
        return direct

    if family == "kappa_bar_local":
        return _count_tensions(orientation, [(0, p)] * m, budget) * _count_flows(
            orientation, [(0, q)] * m, budget
        )

    if family == "kappa_bar_int":
        return sum(
            count(graph, CountQuery("kappa_bar_local", p=p, q=q, orientation=o), budget)
            for o in enumerate_orientations(graph, sweep_limit)
        )
    if family == "kappa_bar_mod":
        part = enumerate_classes(graph, "cut_eulerian", "all", sweep_limit)
        return sum(
            count(graph, CountQuery("kappa_bar_local", p=p, q=q, orientation=rep), budget)
            for rep in part.representatives
        )

    raise AssertionError(f"unhandled family {family}")


def mod_map(
    orientation: Orientation,
    tension: Sequence[int],
    flow: Sequence[int],
    p: int,
    q: int,
) -> TensionFlowPair:
    """Reduce an integer tension-flow pair componentwise mod (p, q)."""
    _require(p >= 1 and q >= 1, "moduli must be >= 1")
    if not is_tension(orientation, tension, 0):
        raise ValueError("first vector is not an integer tension")
    if not is_flow(orientation, flow, 0):
        raise ValueError("second vector is not an integer flow")
    return TensionFlowPair(
        orientation,
        tuple(x % p for x in tension),
        tuple(x % q for x in flow),
    )


def reorient_p(
    first: Orientation, second: Orientation, values: Sequence[int]
) -> tuple[int, ...]:
    """Edgewise product with the coupling of the two orientations; an
    involution carrying tensions/flows of one digraph to the other."""
    from .orientations import coupling

    return tuple(c * x for c, x in zip(coupling(first, second), values))


def reorient_q(
    first: Orientation,
    second: Orientation,
    subset: Sequence[int],
    bound: int,
    values: Sequence[int],
) -> tuple[int, ...]:
    """Replace v(e) by bound - v(e) on the labelled edges where the two
    orientations disagree; identity elsewhere. Involution on [0, bound]^E."""
    graph = first.graph
    if graph != second.graph:
        raise ValueError("orientations live on different graphs")
    if any(not 0 <= x <= bound for x in values):
        raise ValueError("values must lie in [0, bound]")
    ids = graph._check_ids(subset)
    from .orientations import indicator

    disagree = indicator(first, second)
    return tuple(
        bound - x if disagree[pos] and graph.edge_ids[pos] in ids else x
        for pos, x in enumerate(values)
    )
