"""Graph families with their conventional vertex labelings.

Layered products ``(C_n x P_k) x P_m`` number vertex ``x_t`` of copy ``r``
as ``(r-1)*n*k + (t-1)``; layer ``p`` of a copy holds
``x_{(p-1)n+1} .. x_{pn}``. H(n) stores the points ``v_1..v_n`` first and the
pairs ``v_iv_j`` after them in lexicographic order. L(n) stores vertex
``{v_r, v_rv_s}`` at ``(r-1)(n-1) + rank of s in [n] - {r}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Mapping, Sequence

from .errors import BadCliqueIndex, BadParameter, DifferentCopies, NotABijection
from .graph import Graph


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def build_path(k: int) -> Graph:
    if k < 2:
        raise BadParameter(f"path needs k >= 2, got {k}")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(a, b)`` of the product is numbered ``a * |V(h)| + b``."""
    nh = h.n_vertices
    edges = []
    for a in range(g.n_vertices):
        for b1, b2 in h.edges:
            edges.append((a * nh + b1, a * nh + b2))
    for a1, a2 in g.edges:
        for b in range(nh):
            edges.append((a1 * nh + b, a2 * nh + b))
    labels = [f"({la},{lb})" for la in g.labels for lb in h.labels]
    return Graph.from_edges(g.n_vertices * nh, edges, labels)


def line_graph(g: Graph) -> Graph:
    """One vertex per edge of ``g`` (canonical edge order), labelled ``{a, b}``."""
    incident: list[list[int]] = [[] for _ in range(g.n_vertices)]
    for idx, (u, v) in enumerate(g.edges):
        incident[u].append(idx)
        incident[v].append(idx)
    edges = set()
    for inc in incident:
        for e, f in combinations(inc, 2):
            edges.add((e, f) if e < f else (f, e))
    labels = [f"{{{g.labels[u]}, {g.labels[v]}}}" for u, v in g.edges]
    return Graph.from_edges(g.n_edges, edges, labels)


def verify_isomorphism(g: Graph, h: Graph, bijection: Mapping[int, int] | Sequence[int]) -> bool:
    """True iff ``bijection`` maps edges to edges and non-edges to non-edges."""
    n = g.n_vertices
    if h.n_vertices != n:
        raise NotABijection(f"vertex counts differ: {n} vs {h.n_vertices}")
    if isinstance(bijection, Mapping):
        if set(bijection) != set(range(n)):
            raise NotABijection("map is not total on V(g)")
        image = [bijection[v] for v in range(n)]
    else:
        image = list(bijection)
        if len(image) != n:
            raise NotABijection("map is not total on V(g)")
    if sorted(image) != list(range(n)):
        raise NotABijection("map is not injective into V(h)")
    if g.n_edges != h.n_edges:
        return False
    # injective + equal edge counts: edges->edges implies non-edges->non-edges
    return all(h.has_edge(image[u], image[v]) for u, v in g.edges)


@dataclass(frozen=True)
class LayeredProductGraph:
    graph: Graph
    n: int
    k: int
    m: int

    @property
    def copy_size(self) -> int:
        return self.n * self.k

    def vertex(self, t: int, r: int = 1) -> int:
        """Index of ``x_t`` in copy ``r`` (both 1-based)."""
        if not 1 <= t <= self.copy_size or not 1 <= r <= self.m:
            raise BadParameter(f"no vertex x_{t}^({r}) in ({self.n},{self.k},{self.m})")
        return (r - 1) * self.copy_size + (t - 1)

    def indices_of(self, v: int) -> tuple[int, int]:
        """``(t, r)`` for vertex index ``v``."""
        r, t = divmod(v, self.copy_size)
        return t + 1, r + 1

    @cached_property
    def layer_of(self) -> tuple[tuple[int, int, int], ...]:
        """Per vertex: (copy r, layer p, position q), all 1-based."""
        out = []
        for v in range(self.graph.n_vertices):
            t, r = self.indices_of(v)
            p, q = divmod(t - 1, self.n)
            out.append((r, p + 1, q + 1))
        return tuple(out)

    def layer(self, p: int, r: int = 1) -> list[int]:
        return [self.vertex((p - 1) * self.n + q, r) for q in range(1, self.n + 1)]

    def product_bijection(self) -> list[int]:
        """Images of each vertex in the matching generic product.

        For ``m == 1`` the target is ``cartesian_product(C_n, P_k)`` with
        ``x_{(p-1)n+q}`` sent to (cycle vertex q, path vertex p). For ``m > 1``
        it is ``cartesian_product(build_layered(n, k, 1).graph, P_m)``.
        """
        image = []
        for v in range(self.graph.n_vertices):
            r, p, q = self.layer_of[v]
            if self.m == 1:
                image.append((q - 1) * self.k + (p - 1))
            else:
                t = (p - 1) * self.n + q
                image.append((t - 1) * self.m + (r - 1))
        return image


def build_layered(n: int, k: int, m: int = 1) -> LayeredProductGraph:
    """Explicit layered labeling of ``C_n x P_k`` (``m == 1``) or ``(C_n x P_k) x P_m``."""
    if n < 3 or k < 3 or m < 1:
        raise BadParameter(f"layered product needs n>=3, k>=3, m>=1; got ({n},{k},{m})")
    nk = n * k
    copy_edges = []
    for i in range(1, nk + 1):
        for j in range(i + 1, nk + 1):
            pi, pj = (i - 1) // n, (j - 1) // n
            if pi == pj and (j - i == 1 or j - i == n - 1):
                copy_edges.append((i - 1, j - 1))
            elif pj == pi + 1 and j - i == n:
                copy_edges.append((i - 1, j - 1))
    edges = []
    for r in range(m):
        off = r * nk
        edges += [(u + off, v + off) for u, v in copy_edges]
        if r + 1 < m:
            edges += [(off + t, off + nk + t) for t in range(nk)]
    if m == 1:
        labels = [f"x{t}" for t in range(1, nk + 1)]
    else:
        labels = [f"x{t}^{r}" for r in range(1, m + 1) for t in range(1, nk + 1)]
    return LayeredProductGraph(Graph.from_edges(nk * m, edges, labels), n, k, m)


def compatible(e: int, d: int, ctx: LayeredProductGraph) -> bool:
    """Distinct vertices of one copy whose indices differ by a multiple of n."""
    te, re = ctx.indices_of(e)
    td, rd = ctx.indices_of(d)
    if re != rd:
        raise DifferentCopies(f"x_{te}^({re}) and x_{td}^({rd}) lie in different copies")
    return te != td and (td - te) % ctx.n == 0


@dataclass(frozen=True)
class HGraph:
    graph: Graph
    n: int
    v1: tuple[int, ...]
    v2: Mapping[tuple[int, int], int]

    def point(self, r: int) -> int:
        return self.v1[r - 1]

    def pair(self, i: int, j: int) -> int:
        return self.v2[(min(i, j), max(i, j))]


def build_h(n: int) -> HGraph:
    if n < 5:
        raise BadParameter(f"H(n) is defined here for n >= 5, got {n}")
    v2 = {}
    for i, j in combinations(range(1, n + 1), 2):
        v2[(i, j)] = n + len(v2)
    edges = []
    for (i, j), p in v2.items():
        edges += [(i - 1, p), (j - 1, p)]
    labels = [f"v{r}" for r in range(1, n + 1)] + [f"v{i}v{j}" for i, j in v2]
    g = Graph.from_edges(n + len(v2), edges, labels)
    return HGraph(g, n, tuple(range(n)), v2)


@dataclass(frozen=True)
class LGraph:
    graph: Graph
    n: int
    clique_of: tuple[int, ...]
    edge_of: tuple[tuple[int, tuple[int, int]], ...]

    def vertex(self, r: int, s: int) -> int:
        """Index of ``{v_r, v_rv_s}``."""
        if r == s or not (1 <= r <= self.n and 1 <= s <= self.n):
            raise BadParameter(f"no vertex {{v{r}, v{r}v{s}}} in L({self.n})")
        return (r - 1) * (self.n - 1) + (s - 1 if s < r else s - 2)

    def clique(self, r: int) -> list[int]:
        if not 1 <= r <= self.n:
            raise BadCliqueIndex(f"clique index {r} outside 1..{self.n}")
        return [v for v, c in enumerate(self.clique_of) if c == r]


def build_l(n: int) -> LGraph:
    if n < 5:
        raise BadParameter(f"L(n) is defined here for n >= 5, got {n}")
    verts = [(r, s) for r in range(1, n + 1) for s in range(1, n + 1) if s != r]
    index = {rs: i for i, rs in enumerate(verts)}
    edges = []
    for (r, s), i in index.items():
        for s2 in range(s + 1, n + 1):
            if s2 != r:
                edges.append((i, index[(r, s2)]))
        if r < s:
            edges.append((i, index[(s, r)]))
    labels = [f"{{v{r}, v{min(r, s)}v{max(r, s)}}}" for r, s in verts]
    g = Graph.from_edges(len(verts), edges, labels)
    clique_of = tuple(r for r, _ in verts)
    edge_of = tuple((r, (min(r, s), max(r, s))) for r, s in verts)
    return LGraph(g, n, clique_of, edge_of)


def neighborhood_of_clique(lg: LGraph, r: int) -> tuple[int, ...]:
    """``y_k = {v_k, v_rv_k}`` for every ``k != r``, ordered by ``k``."""
    if not 1 <= r <= lg.n:
        raise BadCliqueIndex(f"clique index {r} outside 1..{lg.n}")
    return tuple(lg.vertex(k, r) for k in range(1, lg.n + 1) if k != r)
