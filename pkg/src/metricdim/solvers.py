"""Exact minimum resolving, doubly resolving and strong resolving sets.

Search is by increasing cardinality over lexicographic combinations, so the
first valid set found is the lexicographically smallest optimum. Each size
level is partitioned by first element; partitions are independent, which is
what ``jobs > 1`` distributes over worker processes. Results (including
``nodes_explored``) are identical for any ``jobs`` value.

Candidates are evaluated in numpy batches. A set resolves the graph iff the
integer encodings of all ``n`` representations are distinct, which a sort
along the vertex axis decides for a whole batch at once.
"""

from __future__ import annotations

import multiprocessing
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded
from .graph import DistanceMatrix, Graph, all_pairs_distances
from .kernel import (
    is_doubly_resolving,
    is_resolving,
    is_strong_resolving,
    mmd_pairs,
    strong_cover_matrix,
)

KINDS = ("resolving", "doubly", "strong")
DEFAULT_BUDGET = 10**8
BUDGET_ENV = "METRICDIM_BUDGET"

_PREDICATES = {
    "resolving": is_resolving,
    "doubly": is_doubly_resolving,
    "strong": is_strong_resolving,
}

# cells per evaluated batch (vertices x candidates, or pairs x candidates)
_BATCH_CELLS = 1 << 22


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class SolveResult:
    kind: str
    size: int
    witness: tuple[int, ...]
    certificate_checked: bool
    optimal: bool = True
    method: str = "enumeration"
    nodes_explored: int = 0
    elapsed_ms: float = field(default=0.0, compare=False)

    def as_dict(self, labels: Sequence[str] | None = None, timing: bool = True) -> dict:
        out = {
            "kind": self.kind,
            "size": self.size,
            "witness": [labels[v] for v in self.witness] if labels else list(self.witness),
            "certificate_checked": self.certificate_checked,
            "optimal": self.optimal,
            "method": self.method,
            "nodes_explored": self.nodes_explored,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


@dataclass(frozen=True)
class SRGraph:
    """Graph on the same vertices whose edges are the mutually maximally distant pairs."""

    graph: Graph


def _distances(g: Graph, d: DistanceMatrix | None) -> DistanceMatrix:
    return d if d is not None else all_pairs_distances(g)


class _Problem:
    """Batch evaluator for one predicate over one distance matrix (picklable)."""

    def __init__(self, kind: str, dm: np.ndarray):
        self.kind = kind
        self.D = dm.astype(np.int64)
        self.n = dm.shape[0]
        self.diam = int(dm.max()) if self.n else 0
        self.base = self.diam + 1
        if kind == "strong":
            _, cover = strong_cover_matrix(dm)
            rows = np.unique(cover, axis=0) if len(cover) else cover
            self.cover = rows
            if self.n <= 64:
                weights = np.left_shift(np.uint64(1), np.arange(self.n, dtype=np.uint64))
                self.cover_bits = np.bitwise_or.reduce(
                    np.where(rows, weights, np.uint64(0)), axis=1
                ) if len(rows) else np.zeros(0, dtype=np.uint64)
            else:
                self.cover_bits = None
        # largest class size of vertices by distance to a single landmark
        self.class_max = [int(np.bincount(self.D[f]).max()) for f in range(self.n)] if self.n else []

    def batch_size(self, s: int) -> int:
        rows = len(self.cover) if self.kind == "strong" else self.n
        per = max(rows, 1) * (s if self.kind == "strong" and self.cover_bits is None else 1)
        return max(256, _BATCH_CELLS // per)

    def evaluate(self, cand: np.ndarray) -> np.ndarray:
        if self.kind == "resolving":
            return self._unique_keys(cand, shifted=False)
        if self.kind == "doubly":
            ok = self._unique_keys(cand, shifted=False)
            if ok.any():
                idx = np.flatnonzero(ok)
                ok[idx] = self._unique_keys(cand[idx], shifted=True)
            return ok
        return self._strong(cand)

    def _unique_keys(self, cand: np.ndarray, shifted: bool) -> np.ndarray:
        s = cand.shape[1]
        D = self.D
        if shifted:
            base, cols = 2 * self.diam + 1, range(1, s)
        else:
            base, cols = self.base, range(s)
        width = len(cols)
        if width == 0:
            return np.full(len(cand), self.n <= 1)
        if base ** width < 2**62:
            keys = np.zeros((self.n, len(cand)), dtype=np.int64)
            first = D[:, cand[:, 0]] if shifted else 0
            for i in cols:
                col = D[:, cand[:, i]]
                if shifted:
                    col = col - first + self.diam
                keys *= base
                keys += col
            keys.sort(axis=0)
            return ~(keys[1:] == keys[:-1]).any(axis=0)
        out = np.empty(len(cand), dtype=bool)
        for c, q in enumerate(cand):
            reps = D[:, q]
            if shifted:
                reps = reps - reps[:, :1]
            out[c] = len(np.unique(reps, axis=0)) == self.n
        return out

    def _strong(self, cand: np.ndarray) -> np.ndarray:
        if len(self.cover) == 0:
            return np.ones(len(cand), dtype=bool)
        if self.cover_bits is not None:
            bits = np.bitwise_or.reduce(
                np.left_shift(np.uint64(1), cand.astype(np.uint64)), axis=1
            )
            return ((self.cover_bits[:, None] & bits[None, :]) != 0).all(axis=0)
        return self.cover[:, cand].any(axis=2).all(axis=0)

    def prefix_feasible(self, f: int, s: int) -> bool:
        """Sound test: can ``s - 1`` more landmarks split every class of ``{f}``?"""
        if self.kind == "strong":
            return True
        return self.base ** (s - 1) >= self.class_max[f]


class _BudgetHit(Exception):
    pass


def _scan_partition(problem: _Problem, f: int, s: int, limit: int):
    """Scan sets of size ``s`` starting with ``f`` in lexicographic order.

    Returns ``(witness or None, candidates evaluated)``; evaluation counts stop
    at the first hit so they do not depend on batch boundaries.
    """
    it = combinations(range(f + 1, problem.n), s - 1)
    chunk_len = problem.batch_size(s)
    count = 0
    while True:
        chunk = list(islice(it, chunk_len))
        if not chunk:
            return None, count
        cand = np.empty((len(chunk), s), dtype=np.int64)
        cand[:, 0] = f
        if s > 1:
            cand[:, 1:] = chunk
        ok = problem.evaluate(cand)
        hits = np.flatnonzero(ok)
        if hits.size:
            h = int(hits[0])
            return tuple(int(x) for x in cand[h]), count + h + 1
        count += len(chunk)
        if count > limit:
            raise _BudgetHit


def _scan_partition_job(args):
    problem, f, s, limit = args
    try:
        return _scan_partition(problem, f, s, limit)
    except _BudgetHit:
        return "budget", limit + 1


def _pool(jobs: int) -> ProcessPoolExecutor:
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:  # platforms without fork
        ctx = None
    return ProcessPoolExecutor(max_workers=jobs, mp_context=ctx)


def _search_level(problem: _Problem, s: int, prune: bool, budget_left: int, jobs: int):
    """Lexicographically first valid set of size ``s``, plus nodes explored."""
    firsts = [f for f in range(problem.n - s + 1) if not prune or problem.prefix_feasible(f, s)]
    if jobs <= 1 or len(firsts) <= 1:
        used = 0
        for f in firsts:
            hit, c = _scan_partition(problem, f, s, budget_left - used)
            used += c
            if hit is not None:
                return hit, used
        return None, used

    with _pool(jobs) as ex:
        outcomes = list(ex.map(_scan_partition_job, [(problem, f, s, budget_left) for f in firsts]))
    used = 0
    for hit, c in outcomes:
        if hit == "budget":
            raise _BudgetHit
        used += c
        if used > budget_left:
            raise _BudgetHit
        if hit is not None:
            return hit, used
    return None, used


def _enumerate_min(
    kind: str,
    g: Graph,
    d: DistanceMatrix,
    start: int,
    budget: int,
    prune: bool,
    jobs: int,
    nodes_before: int = 0,
    t0: float | None = None,
) -> SolveResult:
    t0 = time.perf_counter() if t0 is None else t0
    n = g.n_vertices
    problem = _Problem(kind, d.d)
    nodes = nodes_before
    try:
        for s in range(max(start, 1), n + 1):
            hit, used = _search_level(problem, s, prune, budget - nodes, jobs)
            nodes += used
            if hit is not None:
                return SolveResult(
                    kind, s, hit, certificate_checked=True, optimal=True,
                    method="enumeration", nodes_explored=nodes,
                    elapsed_ms=(time.perf_counter() - t0) * 1e3,
                )
    except _BudgetHit:
        best = greedy_upper_bound(g, kind, d)
        fallback = SolveResult(
            kind, len(best), best, certificate_checked=False, optimal=False,
            method="greedy", nodes_explored=budget,
            elapsed_ms=(time.perf_counter() - t0) * 1e3,
        )
        raise BudgetExceeded(
            f"{kind} search exceeded {budget} candidate evaluations; "
            f"best known upper bound {len(best)}",
            best=fallback,
        ) from None
    raise AssertionError("the full vertex set always qualifies")


def resolving_lower_bound(d: DistanceMatrix) -> int:
    """Smallest ``s`` with ``(diam + 1) ** s >= n``; representations must all differ."""
    n, base = d.n, d.diameter + 1
    if n <= 1:
        return 1
    s = 1
    while base**s < n:
        s += 1
    return s


def min_resolving(
    g: Graph,
    budget: int | None = None,
    *,
    d: DistanceMatrix | None = None,
    jobs: int = 1,
    prune: bool = True,
) -> SolveResult:
    """Metric dimension with the lexicographically smallest basis.

    ``prune=False`` is the reference mode: plain lexicographic exhaustion
    from size 1 with no bounds.
    """
    d = _distances(g, d)
    budget = default_budget() if budget is None else budget
    start = resolving_lower_bound(d) if prune else 1
    return _enumerate_min("resolving", g, d, start, budget, prune, jobs)


def min_doubly_resolving(
    g: Graph,
    budget: int | None = None,
    *,
    d: DistanceMatrix | None = None,
    jobs: int = 1,
    prune: bool = True,
) -> SolveResult:
    """Minimum doubly resolving set; in pruned mode the search starts at ``max(2, beta)``."""
    t0 = time.perf_counter()
    d = _distances(g, d)
    budget = default_budget() if budget is None else budget
    if g.n_vertices < 2:
        raise ValueError("doubly resolving sets need at least two vertices")
    if not prune:
        return _enumerate_min("doubly", g, d, 2, budget, False, jobs, t0=t0)
    beta = min_resolving(g, budget, d=d, jobs=jobs)
    return _enumerate_min(
        "doubly", g, d, max(2, beta.size), budget, True, jobs,
        nodes_before=beta.nodes_explored, t0=t0,
    )


def build_sr_graph(g: Graph, d: DistanceMatrix | None = None) -> SRGraph:
    d = _distances(g, d)
    return SRGraph(Graph.from_edges(g.n_vertices, mmd_pairs(g, d), g.labels))


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetHit


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _min_cover(adj: list[int], alive: int, ub: int, counter: _Counter) -> int:
    """``min(vc(G[alive]), ub)`` by branch and bound on the max-degree vertex."""
    counter.tick()
    best_v, best_deg, twice_edges = -1, 0, 0
    for v in _bits(alive):
        deg = (adj[v] & alive).bit_count()
        twice_edges += deg
        if deg > best_deg:
            best_v, best_deg = v, deg
    if best_deg == 0:
        return 0
    edges = twice_edges // 2
    if -(-edges // best_deg) >= ub:
        return ub
    if best_deg == 1:
        # matching: every edge needs its own vertex
        return min(edges, ub)
    # take v
    sub = _min_cover(adj, alive & ~(1 << best_v), ub - 1, counter)
    ub = min(ub, sub + 1)
    # leave v out: all of its neighbours are taken
    nbrs = adj[best_v] & alive
    k = nbrs.bit_count()
    if k < ub:
        sub = _min_cover(adj, alive & ~nbrs & ~(1 << best_v), ub - k, counter)
        ub = min(ub, sub + k)
    return ub


def min_vertex_cover(g: Graph, budget: int | None = None) -> tuple[int, ...]:
    """Exact minimum vertex cover, lexicographically smallest among the minimum ones."""
    return _vertex_cover(g, budget)[0]


def _vertex_cover(g: Graph, budget: int | None) -> tuple[tuple[int, ...], int]:
    budget = default_budget() if budget is None else budget
    n = g.n_vertices
    adj = [sum(1 << w for w in g.neighbors(v)) for v in range(n)]
    counter = _Counter(budget)
    alive = (1 << n) - 1
    try:
        remaining = _min_cover(adj, alive, n + 1, counter)
        chosen: list[int] = []
        for i in range(n):
            if not (alive >> i) & 1:
                continue
            nbrs = adj[i] & alive
            if not nbrs:
                alive &= ~(1 << i)
                continue
            rest = alive & ~(1 << i)
            if _min_cover(adj, rest, remaining, counter) <= remaining - 1:
                chosen.append(i)
                alive = rest
                remaining -= 1
            else:
                chosen.extend(_bits(nbrs))
                remaining -= nbrs.bit_count()
                alive &= ~nbrs & ~(1 << i)
    except _BudgetHit:
        raise BudgetExceeded(f"vertex cover search exceeded {budget} nodes") from None
    return tuple(sorted(chosen)), counter.nodes


def min_strong_resolving(
    g: Graph,
    budget: int | None = None,
    *,
    d: DistanceMatrix | None = None,
    jobs: int = 1,
    method: str = "vertex-cover",
) -> SolveResult:
    """Strong metric dimension.

    Every strong resolving set covers every mutually maximally distant pair,
    so a minimum vertex cover of the SR-graph is a lower bound. The cover is
    then checked directly; if it fails, exact enumeration resumes from its
    size. ``method="enumeration"`` skips the cover entirely.
    """
    t0 = time.perf_counter()
    d = _distances(g, d)
    budget = default_budget() if budget is None else budget
    if method == "enumeration":
        return _enumerate_min("strong", g, d, 1, budget, False, jobs, t0=t0)
    if method != "vertex-cover":
        raise ValueError(f"unknown method {method!r}")
    sr = build_sr_graph(g, d)
    cover, nodes = _vertex_cover(sr.graph, budget)
    cover = cover or (0,)
    if is_strong_resolving(cover, d):
        return SolveResult(
            "strong", len(cover), cover, certificate_checked=True, optimal=True,
            method="vertex-cover", nodes_explored=nodes,
            elapsed_ms=(time.perf_counter() - t0) * 1e3,
        )
    return _enumerate_min("strong", g, d, len(cover), budget, False, jobs, nodes_before=nodes, t0=t0)


def solve(kind: str, g: Graph, budget: int | None = None, **kwargs) -> SolveResult:
    if kind == "resolving":
        return min_resolving(g, budget, **kwargs)
    if kind == "doubly":
        return min_doubly_resolving(g, budget, **kwargs)
    if kind == "strong":
        return min_strong_resolving(g, budget, **kwargs)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def _pair_count(labels: np.ndarray) -> int:
    _, counts = np.unique(labels, return_counts=True)
    return int((counts * (counts - 1) // 2).sum())


def _refine(labels: np.ndarray, values: np.ndarray) -> np.ndarray:
    _, out = np.unique(np.stack([labels, values], axis=1), axis=0, return_inverse=True)
    return out.ravel()


def greedy_upper_bound(g: Graph, kind: str, d: DistanceMatrix | None = None) -> tuple[int, ...]:
    """Greedy set of the requested kind: repeatedly add the vertex separating most pairs."""
    d = _distances(g, d)
    D = d.d.astype(np.int64)
    n = g.n_vertices
    chosen: list[int] = []
    if kind == "strong":
        _, cover = strong_cover_matrix(D)
        open_rows = np.ones(len(cover), dtype=bool)
        while open_rows.any() or not chosen:
            gains = cover[open_rows].sum(axis=0)
            w = int(np.argmax(gains))
            chosen.append(w)
            open_rows &= ~cover[:, w]
    elif kind in ("resolving", "doubly"):
        labels = np.zeros(n, dtype=np.int64)
        anchor = None
        while _pair_count(labels) > 0 or (kind == "doubly" and len(chosen) < 2):
            best, best_left = -1, None
            for w in range(n):
                if w in chosen:
                    continue
                vals = D[:, w] if anchor is None or kind == "resolving" else D[:, w] - D[:, anchor]
                left = _pair_count(_refine(labels, vals))
                if best_left is None or left < best_left:
                    best, best_left = w, left
            vals = D[:, best] if anchor is None or kind == "resolving" else D[:, best] - D[:, anchor]
            if kind == "doubly" and anchor is None:
                anchor = best
                # shifted representations of a single landmark are all empty
                labels = np.zeros(n, dtype=np.int64)
            else:
                labels = _refine(labels, vals)
            chosen.append(best)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    chosen.sort()
    if not _PREDICATES[kind](chosen, d):
        raise AssertionError(f"greedy produced an invalid {kind} set")
    return tuple(chosen)
