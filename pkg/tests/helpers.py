"""Independent oracles and random graph generators shared by the tests."""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from metricdim.graph import Graph


def floyd_warshall(g: Graph) -> list[list[int]]:
    n = g.n_vertices
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def nx_distances(g: Graph) -> list[list[int]]:
    h = nx.Graph()
    h.add_nodes_from(range(g.n_vertices))
    h.add_edges_from(g.edges)
    lengths = dict(nx.all_pairs_shortest_path_length(h))
    return [[lengths[u][v] for v in range(g.n_vertices)] for u in range(g.n_vertices)]


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n_vertices))
    h.add_edges_from(g.edges)
    return h


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


# literal definitions, written directly from the glossary wording


def literal_resolving(q, d) -> bool:
    reps = [tuple(d[v][x] for x in q) for v in range(len(d))]
    return len(set(reps)) == len(reps)


def literal_doubly(q, d) -> bool:
    """Every pair x != y has u, v in q with d(u,x) - d(u,y) != d(v,x) - d(v,y)."""
    n = len(d)
    for x, y in combinations(range(n), 2):
        if not any(d[u][x] - d[u][y] != d[v][x] - d[v][y] for u in q for v in q):
            return False
    return True


def literal_strong(q, d) -> bool:
    """Every pair is split by some w in q lying on a shortest path through one of them."""
    n = len(d)
    for u, v in combinations(range(n), 2):
        if not any(d[w][u] == d[w][v] + d[v][u] or d[w][v] == d[w][u] + d[u][v] for w in q):
            return False
    return True


LITERAL = {"resolving": literal_resolving, "doubly": literal_doubly, "strong": literal_strong}


def naive_minimum(kind: str, d) -> tuple[int, tuple[int, ...]]:
    """Smallest size and lexicographically first witness by plain subset enumeration."""
    n = len(d)
    pred = LITERAL[kind]
    for s in range(1, n + 1):
        for q in combinations(range(n), s):
            if pred(q, d):
                return s, q
    raise AssertionError("no set found")
