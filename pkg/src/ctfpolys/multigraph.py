"""Multigraphs with stable edge labels, minors, and spanning-forest data."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed graph text input."""


@dataclass(frozen=True)
class GraphStats:
    components: int
    rank: int
    nullity: int


@dataclass(frozen=True)
class ForestData:
    """A spanning forest plus the fundamental circuit of every non-forest edge.

    ``forest_edges`` holds edge labels. Each circuit is a tuple of
    ``(edge_label, sign)`` pairs; the circuit of non-forest edge e starts with
    (e, +1) and the sign of a forest edge is +1 exactly when the circuit
    traversal crosses it along its reference direction. A loop's circuit is
    the loop alone.
    """

    forest_edges: frozenset[int]
    fundamental_circuits: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]

    def circuit(self, edge_id: int) -> tuple[tuple[int, int], ...]:
        for eid, circ in self.fundamental_circuits:
            if eid == edge_id:
                return circ
        raise KeyError(edge_id)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # smallest index wins so representatives are deterministic
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class MultiGraph:
    """Vertices 0..vertex_count-1 plus an ordered tuple of (tail, head) edges.

    Loops and parallel edges are allowed; the pair order of an edge is its
    reference direction. Every edge carries a stable integer label: fresh
    graphs label edges by position, and restriction/contraction keep the
    surviving labels, so edge vectors and orientations transfer between a
    graph and its minors without translation tables.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    edge_ids: tuple[int, ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge endpoint out of range: ({u}, {v})")
        if len(self.edge_ids) != len(self.edges):
            raise ValueError("edge_ids and edges must have equal length")
        if len(set(self.edge_ids)) != len(self.edge_ids):
            raise ValueError("edge labels must be distinct")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def endpoints(self, position: int) -> tuple[int, int]:
        return self.edges[position]

    def is_loop(self, position: int) -> bool:
        u, v = self.edges[position]
        return u == v

    @property
    def loop_positions(self) -> tuple[int, ...]:
        return tuple(i for i, (u, v) in enumerate(self.edges) if u == v)

    @property
    def nonloop_positions(self) -> tuple[int, ...]:
        return tuple(i for i, (u, v) in enumerate(self.edges) if u != v)

    def position_of(self, edge_id: int) -> int:
        try:
            return self.edge_ids.index(edge_id)
        except ValueError:
            raise KeyError(f"unknown edge label {edge_id}") from None

    def _check_ids(self, ids: Iterable[int]) -> frozenset[int]:
        ids = frozenset(ids)
        unknown = ids - set(self.edge_ids)
        if unknown:
            raise KeyError(f"unknown edge labels {sorted(unknown)}")
        return ids

    def stats(self) -> GraphStats:
        uf = _UnionFind(self.vertex_count)
        for u, v in self.edges:
            uf.union(u, v)
        components = len({uf.find(v) for v in range(self.vertex_count)})
        rank = self.vertex_count - components
        return GraphStats(components, rank, len(self.edges) - rank)

    def restrict(self, ids: Iterable[int]) -> "MultiGraph":
        """Subgraph on the same vertex set keeping only the labelled edges."""
        keep = self._check_ids(ids)
        kept = [(e, i) for e, i in zip(self.edges, self.edge_ids) if i in keep]
        return MultiGraph(
            self.vertex_count,
            tuple(e for e, _ in kept),
            tuple(i for _, i in kept),
        )

    def contract(self, ids: Iterable[int]) -> "MultiGraph":
        """Contract the labelled edges; surviving edges keep their labels.

        Vertices joined by contracted edges merge into one vertex; merged
        classes are renumbered 0..k-1 in order of their smallest member. An
        edge whose endpoints merge becomes a loop.
        """
        gone = self._check_ids(ids)
        uf = _UnionFind(self.vertex_count)
        for (u, v), i in zip(self.edges, self.edge_ids):
            if i in gone:
                uf.union(u, v)
        reps = sorted({uf.find(v) for v in range(self.vertex_count)})
        relabel = {rep: k for k, rep in enumerate(reps)}
        kept = [
            ((relabel[uf.find(u)], relabel[uf.find(v)]), i)
            for (u, v), i in zip(self.edges, self.edge_ids)
            if i not in gone
        ]
        return MultiGraph(
            len(reps),
            tuple(e for e, _ in kept),
            tuple(i for _, i in kept),
        )

    def delete(self, edge_id: int) -> "MultiGraph":
        self._check_ids([edge_id])
        return self.restrict(set(self.edge_ids) - {edge_id})

    def is_bridge(self, position: int) -> bool:
        u, v = self.edges[position]
        if u == v:
            return False
        uf = _UnionFind(self.vertex_count)
        for j, (a, b) in enumerate(self.edges):
            if j != position:
                uf.union(a, b)
        return uf.find(u) != uf.find(v)


def build_graph(vertex_count: int, edge_pairs: Sequence[tuple[int, int]]) -> MultiGraph:
    """Build a fresh multigraph; edge labels are positions, pair order is the
    reference direction."""
    return MultiGraph(
        vertex_count,
        tuple((int(u), int(v)) for u, v in edge_pairs),
        tuple(range(len(edge_pairs))),
    )


@lru_cache(maxsize=None)
def spanning_structure(graph: MultiGraph) -> ForestData:
    """Deterministic spanning forest (first acyclic edge in label-scan order
    wins) and the fundamental circuits of the remaining edges."""
    uf = _UnionFind(graph.vertex_count)
    forest_pos: list[int] = []
    for pos, (u, v) in enumerate(graph.edges):
        if u != v and uf.union(u, v):
            forest_pos.append(pos)

    # adjacency of the forest for path lookups: vertex -> [(neighbor, pos, dir)]
    adj: dict[int, list[tuple[int, int, int]]] = {v: [] for v in range(graph.vertex_count)}
    for pos in forest_pos:
        u, v = graph.edges[pos]
        adj[u].append((v, pos, 1))
        adj[v].append((u, pos, -1))

    def forest_path(start: int, goal: int) -> list[tuple[int, int]]:
        # BFS; returns [(pos, sign)] for the walk start -> goal
        if start == goal:
            return []
        prev: dict[int, tuple[int, int, int]] = {start: (-1, -1, 0)}
        frontier = [start]
        while frontier:
            nxt = []
            for x in frontier:
                for y, pos, sign in adj[x]:
                    if y not in prev:
                        prev[y] = (x, pos, sign)
                        if y == goal:
                            path = []
                            while y != start:
                                x, pos, sign = prev[y]
                                path.append((pos, sign))
                                y = x
                            path.reverse()
                            return path
                        nxt.append(y)
            frontier = nxt
        raise AssertionError("forest path lookup failed")

    circuits: list[tuple[int, tuple[tuple[int, int], ...]]] = []
    forest_set = set(forest_pos)
    for pos, (u, v) in enumerate(graph.edges):
        if pos in forest_set:
            continue
        walk = [(graph.edge_ids[pos], 1)]
        for fpos, sign in forest_path(v, u):
            walk.append((graph.edge_ids[fpos], sign))
        circuits.append((graph.edge_ids[pos], tuple(walk)))

    return ForestData(
        frozenset(graph.edge_ids[p] for p in forest_pos),
        tuple(circuits),
    )


def parse_graph_text(text: str) -> MultiGraph:
    """Parse the graph text format: optional ``#`` comments, one ``v <count>``
    line, then ``e <u> <v>`` lines; edge labels follow file order."""
    vertex_count = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v":
            if vertex_count is not None:
                raise GraphFormatError(f"line {lineno}: duplicate vertex line")
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'v <count>'")
            try:
                vertex_count = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count") from None
        elif parts[0] == "e":
            if vertex_count is None:
                raise GraphFormatError(f"line {lineno}: edge before vertex line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                edges.append((int(parts[1]), int(parts[2])))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad endpoint") from None
        else:
            raise GraphFormatError(f"line {lineno}: unknown directive {parts[0]!r}")
    if vertex_count is None:
        raise GraphFormatError("missing 'v <count>' line")
    try:
        return build_graph(vertex_count, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_graph_text(graph: MultiGraph) -> str:
    lines = [f"v {graph.vertex_count}"]
    lines.extend(f"e {u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"
