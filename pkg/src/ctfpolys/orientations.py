"""Orientations, the bond/circuit partition, and the cut / Eulerian /
cut-Eulerian equivalence relations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .multigraph import MultiGraph, _UnionFind, spanning_structure

RELATIONS = ("cut", "eulerian", "cut_eulerian")

#: Largest number of non-loop edges for which a full orientation sweep is run.
DEFAULT_SWEEP_LIMIT = 20


class EnumerationLimitError(RuntimeError):
    """Raised when an orientation sweep would exceed its limit."""


@dataclass(frozen=True)
class Orientation:
    """An orientation of a multigraph: one flip bit per edge, relative to the
    reference direction.

    Loops carry a bit too: a loop admits the two ordered incidence-sign pairs
    (+1, -1) and (-1, +1), and the orientation count 2^|E| is what the
    decomposition and census identities require (T(2,2) = 2 on the one-loop
    graph). Flipping a loop changes no tension or flow space, only which
    orientation a sign pattern belongs to.
    """

    graph: MultiGraph
    flips: tuple[int, ...]

    def __post_init__(self):
        if len(self.flips) != self.graph.edge_count:
            raise ValueError("flip vector length must match edge count")
        if any(b not in (0, 1) for b in self.flips):
            raise ValueError("flip bits must be 0 or 1")

    @classmethod
    def reference(cls, graph: MultiGraph) -> "Orientation":
        return cls(graph, (0,) * graph.edge_count)

    @classmethod
    def from_string(cls, graph: MultiGraph, bits: str) -> "Orientation":
        return cls(graph, tuple(int(c) for c in bits))

    def flip_string(self) -> str:
        return "".join(str(b) for b in self.flips)

    def is_flipped(self, position: int) -> bool:
        return self.flips[position] == 1

    def arrow(self, position: int) -> tuple[int, int]:
        """(tail, head) of the edge at ``position``; loops give (v, v)."""
        u, v = self.graph.edges[position]
        if u != v and self.flips[position]:
            return (v, u)
        return (u, v)

    def arrows(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.arrow(p) for p in range(self.graph.edge_count))

    def with_flipped(self, positions: Sequence[int]) -> "Orientation":
        bits = list(self.flips)
        for p in positions:
            bits[p] ^= 1
        return Orientation(self.graph, tuple(bits))

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, tuple(1 - b for b in self.flips))


@dataclass(frozen=True)
class MintyPartition:
    """Edge labels split into the directed-bond part and directed-circuit
    part; the two sets always partition the edge set."""

    bond_part: frozenset[int]
    circuit_part: frozenset[int]


@dataclass(frozen=True)
class OrientationClassification:
    is_acyclic: bool
    is_totally_cyclic: bool
    partition: MintyPartition


@dataclass(frozen=True)
class ClassPartition:
    """Equivalence classes of a set of orientations under one relation.

    Classes are ordered by their representative (the lexicographically
    smallest flip vector in the class); members inside a class are in lex
    order as well.
    """

    relation: str
    classes: tuple[tuple[Orientation, ...], ...]
    representatives: tuple[Orientation, ...]


@lru_cache(maxsize=None)
def _circuit_table(graph: MultiGraph) -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    """Fundamental circuits converted to edge positions.

    Entry (e_pos, ((t_pos, sign), ...)) lists the circuit of the non-forest
    edge at e_pos with reference-direction signs, e_pos itself excluded (its
    sign is +1 by construction).
    """
    forest = spanning_structure(graph)
    table = []
    for eid, circ in forest.fundamental_circuits:
        e_pos = graph.position_of(eid)
        rest = tuple(
            (graph.position_of(tid), sign) for tid, sign in circ if tid != eid
        )
        table.append((e_pos, rest))
    return tuple(table)


@lru_cache(maxsize=None)
def _flip_signs(orientation: Orientation) -> tuple[int, ...]:
    """Per-position sign: -1 on flipped edges, +1 elsewhere."""
    return tuple(-1 if b else 1 for b in orientation.flips)


def incidence_sign(orientation: Orientation, vertex: int, position: int):
    """+1 if the arrow leaves ``vertex``, -1 if it enters, 0 if not incident;
    a loop at the vertex reports the pair (+1, -1)."""
    u, v = orientation.graph.edges[position]
    if u == v:
        return (1, -1) if vertex == u else 0
    tail, head = orientation.arrow(position)
    if vertex == tail:
        return 1
    if vertex == head:
        return -1
    return 0


def boundary(orientation: Orientation, values: Sequence[int]) -> tuple[int, ...]:
    """Net outflow at every vertex; loops contribute +g(e)-g(e) = 0."""
    graph = orientation.graph
    if len(values) != graph.edge_count:
        raise ValueError("edge vector length mismatch")
    out = [0] * graph.vertex_count
    for pos in range(graph.edge_count):
        tail, head = orientation.arrow(pos)
        if tail == head:
            continue
        out[tail] += values[pos]
        out[head] -= values[pos]
    return tuple(out)


def is_flow(orientation: Orientation, values: Sequence[int], modulus: int = 0) -> bool:
    """True iff the boundary vanishes (exactly, or mod ``modulus``)."""
    for x in boundary(orientation, values):
        if (x % modulus if modulus else x) != 0:
            return False
    return True


def is_tension(orientation: Orientation, values: Sequence[int], modulus: int = 0) -> bool:
    """True iff the signed sum around every fundamental circuit vanishes
    (exactly, or mod ``modulus``); forces 0 on loops."""
    graph = orientation.graph
    if len(values) != graph.edge_count:
        raise ValueError("edge vector length mismatch")
    signs = _flip_signs(orientation)
    for e_pos, rest in _circuit_table(graph):
        total = signs[e_pos] * values[e_pos]
        for t_pos, ref_sign in rest:
            total += ref_sign * signs[t_pos] * values[t_pos]
        if (total % modulus if modulus else total) != 0:
            return False
    return True


def _strong_components(orientation: Orientation) -> list[int]:
    """Iterative Tarjan; returns a component id per vertex."""
    graph = orientation.graph
    succ: dict[int, list[int]] = {v: [] for v in range(graph.vertex_count)}
    for pos in graph.nonloop_positions:
        tail, head = orientation.arrow(pos)
        succ[tail].append(head)

    index = [-1] * graph.vertex_count
    low = [0] * graph.vertex_count
    on_stack = [False] * graph.vertex_count
    comp = [-1] * graph.vertex_count
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(graph.vertex_count):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(succ[v])):
                w = succ[v][k]
                if index[w] < 0:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            work.pop()
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    return comp


def minty_partition(orientation: Orientation) -> MintyPartition:
    """Split the edges into the directed-bond part and the directed-circuit
    part. A non-loop edge lies on a directed circuit iff its endpoints share
    a strongly connected component; loops always do."""
    graph = orientation.graph
    comp = _strong_components(orientation)
    circuit = set()
    for pos, (u, v) in enumerate(graph.edges):
        if u == v or comp[u] == comp[v]:
            circuit.add(graph.edge_ids[pos])
    bond = set(graph.edge_ids) - circuit
    return MintyPartition(frozenset(bond), frozenset(circuit))


def classify(orientation: Orientation) -> OrientationClassification:
    part = minty_partition(orientation)
    return OrientationClassification(
        is_acyclic=not part.circuit_part,
        is_totally_cyclic=not part.bond_part,
        partition=part,
    )


def coupling(first: Orientation, second: Orientation) -> tuple[int, ...]:
    """+1 where the orientations agree, -1 where they differ; loops agree."""
    if first.graph is not second.graph and first.graph != second.graph:
        raise ValueError("orientations live on different graphs")
    a, b = _flip_signs(first), _flip_signs(second)
    return tuple(x * y for x, y in zip(a, b))


def indicator(first: Orientation, second: Orientation) -> tuple[int, ...]:
    """0-1 disagreement vector: (1 - coupling) / 2 per edge."""
    return tuple((1 - c) // 2 for c in coupling(first, second))


@lru_cache(maxsize=None)
def _circuit_part_positions(orientation: Orientation) -> frozenset[int]:
    graph = orientation.graph
    comp = _strong_components(orientation)
    return frozenset(
        pos
        for pos, (u, v) in enumerate(graph.edges)
        if u == v or comp[u] == comp[v]
    )


def equivalent(first: Orientation, second: Orientation, relation: str) -> bool:
    """Test cut / Eulerian / cut-Eulerian equivalence of two orientations.

    The disagreement set is a locally directed cut iff its 0-1 indicator is a
    tension, and a directed Eulerian subgraph iff the indicator is a flow;
    the cut-Eulerian test splits the indicator along the bond/circuit
    partition of ``first``.
    """
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    ind = indicator(first, second)
    if relation == "cut":
        return is_tension(first, ind, 0)
    if relation == "eulerian":
        return is_flow(first, ind, 0)
    circuit = _circuit_part_positions(first)
    bond_vec = tuple(0 if p in circuit else ind[p] for p in range(len(ind)))
    circ_vec = tuple(ind[p] if p in circuit else 0 for p in range(len(ind)))
    return is_tension(first, bond_vec, 0) and is_flow(first, circ_vec, 0)


def induced_orientation(orientation: Orientation, minor: MultiGraph) -> Orientation:
    """Carry an orientation onto a minor through the shared edge labels."""
    graph = orientation.graph
    flip_by_id = {
        graph.edge_ids[p]: orientation.flips[p] for p in range(graph.edge_count)
    }
    return Orientation(minor, tuple(flip_by_id[i] for i in minor.edge_ids))


def enumerate_orientations(graph: MultiGraph, limit: int = DEFAULT_SWEEP_LIMIT) -> Iterator[Orientation]:
    """All 2^|E| orientations in lexicographic flip order."""
    k = graph.edge_count
    if k > limit:
        raise EnumerationLimitError(
            f"{k} edges exceeds the orientation sweep limit {limit}"
        )
    for bits in product((0, 1), repeat=k):
        yield Orientation(graph, bits)


@lru_cache(maxsize=None)
def enumerate_classes(
    graph: MultiGraph,
    relation: str,
    filter: str = "all",
    limit: int = DEFAULT_SWEEP_LIMIT,
) -> ClassPartition:
    """Partition the (optionally filtered) orientation set into equivalence
    classes by pairwise-equivalence closure."""
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    if filter not in ("all", "acyclic", "totally_cyclic"):
        raise ValueError(f"unknown filter {filter!r}")

    members = []
    for o in enumerate_orientations(graph, limit):
        if filter == "acyclic" and _circuit_part_positions(o):
            continue
        if filter == "totally_cyclic" and _circuit_part_positions(o) != frozenset(
            range(graph.edge_count)
        ):
            continue
        members.append(o)

    uf = _UnionFind(len(members))
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if uf.find(i) == uf.find(j):
                continue
            if equivalent(members[i], members[j], relation):
                uf.union(i, j)

    grouped: dict[int, list[Orientation]] = {}
    for i, o in enumerate(members):
        grouped.setdefault(uf.find(i), []).append(o)
    classes = sorted(
        (tuple(sorted(cls, key=lambda o: o.flips)) for cls in grouped.values()),
        key=lambda cls: cls[0].flips,
    )
    return ClassPartition(
        relation=relation,
        classes=tuple(classes),
        representatives=tuple(cls[0] for cls in classes),
    )
