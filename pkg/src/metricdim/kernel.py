"""Representations and the resolving / doubly resolving / strong resolving predicates.

Each predicate has a ``*_violation`` companion that returns the first
offending pair (scanning vertices in index order) instead of a bool, so
callers can report a concrete witness of failure.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import EmptySet, SetTooSmall, VertexIndexError
from .graph import DistanceMatrix, Graph


def _matrix(d) -> np.ndarray:
    return d.d if isinstance(d, DistanceMatrix) else np.asarray(d)


def _checked(q: Sequence[int], n: int, minimum: int = 1) -> list[int]:
    members = [int(x) for x in q]
    if not members:
        raise EmptySet("vertex set is empty")
    if len(members) < minimum:
        raise SetTooSmall(f"need at least {minimum} vertices, got {len(members)}")
    if len(set(members)) != len(members):
        raise ValueError(f"vertex set has duplicates: {members}")
    for x in members:
        if not 0 <= x < n:
            raise VertexIndexError(f"vertex {x} out of range for {n} vertices")
    return members


def representation(v: int, q: Sequence[int], d) -> tuple[int, ...]:
    dm = _matrix(d)
    members = _checked(q, dm.shape[0])
    return tuple(int(dm[v, x]) for x in members)


def representations(q: Sequence[int], d) -> np.ndarray:
    """Row ``v`` is ``r(v|q)``."""
    dm = _matrix(d)
    return dm[:, _checked(q, dm.shape[0])].astype(np.int64)


def _first_collision(rows: np.ndarray) -> tuple[int, int] | None:
    seen: dict[bytes, int] = {}
    for v, row in enumerate(rows):
        key = row.tobytes()
        if key in seen:
            return seen[key], v
        seen[key] = v
    return None


def resolving_violation(q: Sequence[int], d) -> tuple[int, int] | None:
    return _first_collision(representations(q, d))


def is_resolving(q: Sequence[int], d) -> bool:
    return resolving_violation(q, d) is None


def doubly_violation(q: Sequence[int], d) -> tuple[int, int, int] | None:
    """First ``(x, y, lam)`` with ``r(x|q) - r(y|q) == lam * (1, .., 1)``.

    Two difference vectors differ by a constant iff they agree after
    subtracting their first coordinate, so this is a collision search on the
    shifted representations.
    """
    dm = _matrix(d)
    _checked(q, dm.shape[0], minimum=2)
    reps = representations(q, d)
    hit = _first_collision(reps - reps[:, :1])
    if hit is None:
        return None
    x, y = hit
    return x, y, int(reps[x, 0] - reps[y, 0])


def is_doubly_resolving(q: Sequence[int], d) -> bool:
    return doubly_violation(q, d) is None


def strongly_resolves(w: int, u: int, v: int, d) -> bool:
    """u lies on a shortest v-w path, or v lies on a shortest u-w path."""
    dm = _matrix(d)
    if u == v:
        raise ValueError("strongly_resolves needs two distinct vertices")
    duw, dvw, duv = int(dm[u, w]), int(dm[v, w]), int(dm[u, v])
    return dvw == duv + duw or duw == duv + dvw


def strong_cover_matrix(d) -> tuple[np.ndarray, np.ndarray]:
    """``(pairs, cover)``: ``cover[p, w]`` iff ``w`` strongly resolves ``pairs[p]``."""
    dm = _matrix(d).astype(np.int64)
    n = dm.shape[0]
    iu, iv = np.triu_indices(n, 1)
    duv = dm[iu, iv][:, None]
    du, dv = dm[iu], dm[iv]
    cover = (dv == duv + du) | (du == duv + dv)
    return np.stack([iu, iv], axis=1), cover


def strong_violation(q: Sequence[int], d) -> tuple[int, int] | None:
    dm = _matrix(d)
    members = _checked(q, dm.shape[0])
    pairs, cover = strong_cover_matrix(dm)
    ok = cover[:, members].any(axis=1)
    bad = np.flatnonzero(~ok)
    if bad.size == 0:
        return None
    u, v = pairs[bad[0]]
    return int(u), int(v)


def is_strong_resolving(q: Sequence[int], d) -> bool:
    return strong_violation(q, d) is None


def maximally_distant_from(u: int, v: int, g: Graph, d) -> bool:
    """No neighbour of ``u`` is farther from ``v`` than ``u`` is."""
    dm = _matrix(d)
    if u == v:
        raise ValueError("maximal distance is defined for distinct vertices")
    return all(dm[v, w] <= dm[v, u] for w in g.neighbors(u))


def maximal_distance_matrix(g: Graph, d) -> np.ndarray:
    """``M[u, v]`` iff ``u`` is maximally distant from ``v`` (diagonal False)."""
    dm = _matrix(d)
    n = g.n_vertices
    out = np.zeros((n, n), dtype=bool)
    for u in range(n):
        nb = list(g.neighbors(u))
        if nb:
            out[u] = dm[nb].max(axis=0) <= dm[u]
        else:
            out[u] = True
    np.fill_diagonal(out, False)
    return out


def mmd_pairs(g: Graph, d) -> frozenset[tuple[int, int]]:
    """Unordered pairs ``(u, v)``, ``u < v``, that are mutually maximally distant."""
    md = maximal_distance_matrix(g, d)
    both = np.triu(md & md.T, 1)
    return frozenset((int(u), int(v)) for u, v in zip(*np.nonzero(both)))
