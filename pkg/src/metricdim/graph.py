"""Immutable simple graphs, BFS distance matrices and the edge-list format.

Vertices are the integers ``0 .. n-1``. Every vertex also carries a display
label; when none is supplied the label of vertex ``i`` is ``x{i+1}``, which
matches the 1-based naming used for cycles, paths and layered products.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    DisconnectedGraph,
    DuplicateEdge,
    DuplicateLabel,
    ParseError,
    SelfLoop,
    VertexIndexError,
)

Edge = tuple[int, int]


def default_label(v: int) -> str:
    return f"x{v + 1}"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with unique vertex labels.

    Build instances with :meth:`from_edges`, which validates and
    canonicalizes; the raw constructor trusts its arguments.
    """

    n_vertices: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] = field(compare=True)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        labels: Sequence[str] | Mapping[int, str] | None = None,
    ) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexIndexError(f"endpoint {w} out of range for {n} vertices")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"duplicate edge {key[0]} {key[1]}")
            seen.add(key)

        names = [default_label(i) for i in range(n)]
        if isinstance(labels, Mapping):
            for v, name in labels.items():
                if not 0 <= v < n:
                    raise VertexIndexError(f"label for vertex {v} out of range")
                names[v] = str(name)
        elif labels is not None:
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
            names = [str(x) for x in labels]
        if len(set(names)) != n:
            dup = next(x for x in names if names.count(x) > 1)
            raise DuplicateLabel(f"label {dup!r} used more than once")
        return cls(n, tuple(sorted(seen)), tuple(names))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.labels)}

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def label(self, v: int) -> str:
        return self.labels[v]

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def is_connected(self) -> bool:
        if self.n_vertices == 0:
            return True
        return len(_bfs(self.adjacency, 0)) == self.n_vertices

    def relabel(self, labels: Sequence[str]) -> "Graph":
        return Graph.from_edges(self.n_vertices, self.edges, labels)


def _bfs(adj: Sequence[Sequence[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if w not in dist:
                dist[w] = du
                queue.append(w)
    return dist


class DistanceMatrix:
    """All-pairs hop distances of a connected graph, stored read-only as uint8."""

    __slots__ = ("d",)

    def __init__(self, d: np.ndarray):
        arr = np.array(d, dtype=np.uint8, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("distance matrix must be square")
        arr.flags.writeable = False
        self.d = arr

    @property
    def n(self) -> int:
        return self.d.shape[0]

    @property
    def diameter(self) -> int:
        return int(self.d.max()) if self.n else 0

    def __getitem__(self, key):
        return self.d[key]

    def __eq__(self, other) -> bool:
        return isinstance(other, DistanceMatrix) and np.array_equal(self.d, other.d)

    def __hash__(self) -> int:
        return hash(self.d.tobytes())

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n}, diameter={self.diameter})"


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Exact hop distances between every ordered pair, one BFS per source."""
    n = g.n_vertices
    if n > 0 and not g.is_connected():
        raise DisconnectedGraph("distances are undefined on a disconnected graph")
    d = np.zeros((n, n), dtype=np.int64)
    adj = g.adjacency
    for s in range(n):
        for v, k in _bfs(adj, s).items():
            d[s, v] = k
    if n and d.max() > 255:
        raise ValueError("diameter does not fit in 8 bits")
    return DistanceMatrix(d)


def write_edge_list(g: Graph, with_labels: bool | None = None) -> str:
    """Serialize as ``n m``, then sorted ``u v`` lines, then ``u <label>`` lines.

    Labels are written only when they differ from the defaults, unless
    ``with_labels`` forces the choice.
    """
    lines = [f"{g.n_vertices} {g.n_edges}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    if with_labels is None:
        with_labels = any(name != default_label(i) for i, name in enumerate(g.labels))
    if with_labels:
        lines += [f"{i} {name}" for i, name in enumerate(g.labels)]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    rows = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), 1)]
    rows = [(no, ln) for no, ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise ParseError("empty edge list")
    head_no, head = rows[0]
    try:
        n, m = (int(x) for x in head.split())
    except ValueError:
        raise ParseError(f"line {head_no}: expected header 'n m', got {head!r}") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {head_no}: negative count")
    body = rows[1:]
    if len(body) < m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}")

    edges = []
    for no, ln in body[:m]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {no}: non-integer endpoint in {ln!r}") from None

    labels: dict[int, str] = {}
    for no, ln in body[m:]:
        parts = ln.split(None, 1)
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected 'u <label>', got {ln!r}")
        try:
            v = int(parts[0])
        except ValueError:
            raise ParseError(f"line {no}: non-integer vertex in {ln!r}") from None
        if v in labels:
            raise ParseError(f"line {no}: vertex {v} labelled twice")
        labels[v] = parts[1].strip()
    return Graph.from_edges(n, edges, labels or None)
