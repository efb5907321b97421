"""Registry of machine-checkable assertions about the graph families, and their verifier.

Every claim is checked at fixed desk-scale parameter cases. Value claims
(``beta``, ``psi``, ``sdim``) go through the exact solvers; set claims build
a named witness set and run the matching kernel predicate; negative claims
report the concrete pair that breaks the predicate. The two representation
tables are compared line by line against frozen golden files.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations
from math import ceil
from typing import Callable, Iterable, Sequence

from .constructors import LayeredProductGraph
from .errors import BudgetExceeded
from .families import Built, FamilySpec, build_family
from .graph import DistanceMatrix, all_pairs_distances
from .kernel import (
    doubly_violation,
    is_resolving,
    representation,
    resolving_violation,
    strong_violation,
    strongly_resolves,
)
from .namedsets import build_named_set
from .solvers import SolveResult, min_doubly_resolving, min_resolving, min_strong_resolving

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass(frozen=True)
class Claim:
    id: str
    family: str
    quantity: str
    cases: tuple[dict, ...]
    statement: str
    check: Callable[["_Env", dict], tuple] = field(repr=False, compare=False)
    expected: Callable[[dict], object] = field(repr=False, compare=False)
    set_name: str | None = None
    note: str = ""
    slow_cases: tuple[dict, ...] = ()

    def expected_for(self, params: dict):
        return self.expected(params)


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    params: dict
    verdict: str
    expected: object
    computed: object
    detail: dict = field(default_factory=dict)
    elapsed_ms: float = field(default=0.0, compare=False)
    note: str = ""

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "id": self.claim_id,
            "params": self.params,
            "verdict": self.verdict,
            "expected": self.expected,
            "computed": self.computed,
            "detail": self.detail,
        }
        if self.note:
            out["note"] = self.note
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing), sort_keys=False)


class _Env:
    """Per-run cache of built graphs, distance matrices and solver results."""

    def __init__(self, budget: int | None, jobs: int):
        self.budget = budget
        self.jobs = jobs
        self._built: dict[str, Built] = {}
        self._dist: dict[str, DistanceMatrix] = {}
        self._solved: dict[tuple[str, str], SolveResult] = {}

    def built(self, family: str, params: dict) -> Built:
        spec = _spec(family, params)
        key = str(spec)
        if key not in self._built:
            self._built[key] = build_family(spec)
        return self._built[key]

    def dist(self, family: str, params: dict) -> DistanceMatrix:
        key = str(_spec(family, params))
        if key not in self._dist:
            self._dist[key] = all_pairs_distances(self.built(family, params).graph)
        return self._dist[key]

    def solve(self, kind: str, family: str, params: dict) -> SolveResult:
        key = (str(_spec(family, params)), kind)
        if key not in self._solved:
            g = self.built(family, params).graph
            d = self.dist(family, params)
            fn = {"beta": min_resolving, "psi": min_doubly_resolving, "sdim": min_strong_resolving}[kind]
            self._solved[key] = fn(g, self.budget, d=d, jobs=self.jobs)
        return self._solved[key]

    def labels(self, family: str, params: dict, verts: Iterable[int]) -> list[str]:
        g = self.built(family, params).graph
        return [g.labels[v] for v in verts]


_FAMILY_KEYS = {"cycle": ("n",), "path": ("k",), "cp": ("n", "k"), "cpm": ("n", "k", "m"), "h": ("n",), "l": ("n",)}


def _spec(family: str, params: dict) -> FamilySpec:
    return FamilySpec(family, {k: params[k] for k in _FAMILY_KEYS[family]})


# ---- check builders -------------------------------------------------------


def _value_check(kind: str, family: str):
    def check(env: _Env, p: dict):
        res = env.solve(kind, family, p)
        return res.size, {"witness": env.labels(family, p, res.witness)}

    return check


def _pair_violates(base: str, q: Sequence[int], d: DistanceMatrix, x: int, y: int) -> bool:
    rx, ry = representation(x, q, d), representation(y, q, d)
    if base == "resolving":
        return rx == ry
    if base == "doubly":
        return len({a - b for a, b in zip(rx, ry)}) == 1
    return not any(strongly_resolves(w, x, y, d) for w in q)


def _set_check(
    family: str,
    predicate: str,
    requests: Callable[[dict], Sequence[tuple[str, dict]]],
    pair: Callable[[Built, str, dict], tuple[int, int]] | None = None,
):
    """Check ``predicate`` on every requested set; computed is True iff all hold.

    For negative predicates (``not-*``), the first violating pair of each set
    is recorded. ``pair`` names a specific pair that must also violate it.
    """
    viol = {"resolving": resolving_violation, "doubly": doubly_violation, "strong": strong_violation}
    negative = predicate.startswith("not-")
    base = predicate[4:] if negative else predicate

    def check(env: _Env, p: dict):
        built = env.built(family, p)
        d = env.dist(family, p)
        detail: dict = {"sets": []}
        all_hold = True
        for name, sp in requests(p):
            q = build_named_set(name, sp, built.context)
            v = viol[base](q, d)
            holds = (v is not None) if negative else (v is None)
            entry = {"set": _set_title(name, sp), "members": env.labels(family, p, q), "holds": holds}
            if v is not None:
                entry["violating_pair"] = env.labels(family, p, v[:2])
                if base == "doubly":
                    entry["lambda"] = v[2]
                if base == "resolving":
                    entry["representation"] = list(representation(v[0], q, d))
                if base == "doubly" and not negative:
                    entry["holds_on_pairs_outside_set"] = _doubly_outside(q, d)
            if pair is not None:
                x, y = pair(built, name, sp)
                named = _pair_violates(base, q, d, x, y)
                entry["named_pair"] = env.labels(family, p, (x, y))
                entry["named_pair_violates"] = named
                entry["named_pair_representations"] = [list(representation(x, q, d)), list(representation(y, q, d))]
                holds = holds and named
                entry["holds"] = holds
            detail["sets"].append(entry)
            all_hold &= holds
        return all_hold, detail

    return check


def _set_title(name: str, params: dict) -> str:
    if not params:
        return name
    return name + ":" + ",".join(f"{k}={v}" for k, v in params.items())


def _doubly_outside(q: Sequence[int], d: DistanceMatrix) -> bool:
    """Doubly resolving test restricted to pairs with both vertices outside ``q``."""
    inside = set(q)
    seen: dict[tuple, int] = {}
    for v in range(d.n):
        if v in inside:
            continue
        r = [int(d[v, x]) for x in q]
        key = tuple(x - r[0] for x in r)
        if key in seen:
            return False
        seen[key] = v
    return True


def _basis_classification(env: _Env, p: dict):
    """Every minimum resolving set of C_n x P_k lies in V_1 or V_k with the M/N shape."""
    built = env.built("cp", p)
    lp: LayeredProductGraph = built.context
    d = env.dist("cp", p)
    beta = env.solve("beta", "cp", p).size
    found = {
        q for q in combinations(range(built.graph.n_vertices), beta) if is_resolving(q, d)
    }
    n, k = lp.n, lp.k
    h = (n + 1) // 2
    shapes = [(i, h + i - 1) for i in range(1, h + 1)] + [(j, h + j) for j in range(1, n // 2 + 1)]
    allowed = set()
    for a, b in shapes:
        for off in (0, (k - 1) * n):
            allowed.add(tuple(sorted((lp.vertex(a + off), lp.vertex(b + off)))))
    ok = beta == 2 and found == allowed
    detail = {
        "minimum_resolving_sets": len(found),
        "unexpected": [env.labels("cp", p, q) for q in sorted(found - allowed)],
        "missing": [env.labels("cp", p, q) for q in sorted(allowed - found)],
    }
    return ok, detail


def _no_resolving_pair(env: _Env, p: dict):
    built = env.built("cp", p)
    d = env.dist("cp", p)
    hits = [q for q in combinations(range(built.graph.n_vertices), 2) if is_resolving(q, d)]
    return len(hits), {"pairs_checked": built.graph.n_vertices * (built.graph.n_vertices - 1) // 2,
                       "resolving_pairs": [env.labels("cp", p, q) for q in hits[:5]]}


def _psi_greater(bound: int):
    def check(env: _Env, p: dict):
        res = env.solve("psi", "cpm", p)
        return res.size > bound, {"psi": res.size, "witness": env.labels("cpm", p, res.witness)}

    return check


def _corollary_chain(env: _Env, p: dict):
    n = p["n"]
    k = n // 3
    b1 = env.solve("beta", "h", {"n": n + 1}).size
    b2 = env.solve("beta", "h", {"n": n + 2}).size
    ok = 2 * k < b1 < b2 <= 2 * (k + 1)
    return ok, {f"beta(H({n + 1}))": b1, f"beta(H({n + 2}))": b2, "k": k}


def _minimal_resolving(name: str):
    def check(env: _Env, p: dict):
        built = env.built("h", p)
        d = env.dist("h", p)
        q = build_named_set(name, {}, built.context)
        resolving = is_resolving(q, d)
        removable = [env.labels("h", p, [x])[0] for x in q if is_resolving([y for y in q if y != x], d)]
        return resolving and not removable, {
            "members": env.labels("h", p, q),
            "resolving": resolving,
            "redundant_members": removable,
        }

    return check


def _all_v1_subsets(p: dict):
    return [("R1", {"omit": r}) for r in range(1, p["n"] + 1)]


def _golden_path(fname: str):
    return resources.files("metricdim").joinpath("data").joinpath(fname)


def golden_table(fname: str) -> list[str]:
    return _golden_path(fname).read_text(encoding="utf-8").splitlines()


def _table_check(set_name: str, golden: str):
    def check(env: _Env, p: dict):
        built = env.built("cpm", p)
        lines = emit_table(built, set_name, d=env.dist("cpm", p)).splitlines()
        gold = golden_table(golden)
        diffs = [
            {"printed": a, "computed": b} for a, b in zip(gold, lines) if a != b
        ]
        if len(gold) != len(lines):
            diffs.append({"printed": f"{len(gold)} rows", "computed": f"{len(lines)} rows"})
        return len(gold) - len(diffs), {"rows": len(gold), "mismatches": diffs}

    return check


# ---- table rendering ------------------------------------------------------


def emit_table(built: Built, set_name: str, params: dict | None = None, d: DistanceMatrix | None = None) -> str:
    """One ``r(<vertex>|<set>) = (..)`` line per vertex.

    Layered products list ``x_t`` copies in order of ``t``, then copy ``r``;
    other graphs list vertices by index.
    """
    ctx = built.context
    q = build_named_set(set_name, params or {}, ctx)
    d = d if d is not None else all_pairs_distances(built.graph)
    if isinstance(ctx, LayeredProductGraph):
        order = [ctx.vertex(t, r) for t in range(1, ctx.copy_size + 1) for r in range(1, ctx.m + 1)]
    else:
        order = list(range(built.graph.n_vertices))
    title = set_name
    rows = []
    for v in order:
        rep = ", ".join(str(int(d[v, x])) for x in q)
        rows.append(f"r({built.graph.labels[v]}|{title}) = ({rep})")
    return "\n".join(rows) + "\n"


# ---- registry -------------------------------------------------------------


def _cases(*items: dict) -> tuple[dict, ...]:
    return tuple(items)


def _grid(**axes) -> tuple[dict, ...]:
    keys = list(axes)
    out = [{}]
    for k in keys:
        out = [dict(o, **{k: v}) for o in out for v in axes[k]]
    return tuple(out)


def _value(cid, family, kind, cases, expected, statement, note="", slow=()):
    return Claim(cid, family, {"beta": "beta", "psi": "psi", "sdim": "sdim"}[kind], cases, statement,
                 _value_check(kind, family), expected, note=note, slow_cases=slow)


def _sets(cid, family, predicate, cases, requests, statement, set_name=None, note="", pair=None):
    quantity = {
        "resolving": "set-is-resolving", "doubly": "set-is-doubly", "strong": "set-is-strong",
        "not-resolving": "set-is-NOT-resolving", "not-doubly": "set-is-NOT-doubly",
        "not-strong": "set-is-NOT-strong",
    }[predicate]
    return Claim(cid, family, quantity, cases, statement, _set_check(family, predicate, requests, pair),
                 lambda p: True, set_name=set_name, note=note)


def _one(name: str, **sp):
    return lambda p: [(name, dict(sp))]


def _odd_a_b(p):
    n = p["n"]
    return [("A", {"i": i}) for i in range(1, (n + 1) // 2 + 1)] + [("B", {"j": j}) for j in range(1, n // 2 + 1)]


def _odd_m_n(p):
    n = p["n"]
    return [("M", {"i": i}) for i in range(1, (n + 1) // 2 + 1)] + [("N", {"j": j}) for j in range(1, n // 2 + 1)]


def _compatible_pair(built: Built, name: str, sp: dict) -> tuple[int, int]:
    lp = built.context
    i = sp.get("i", sp.get("j", 1))
    return lp.vertex(i + lp.n), lp.vertex(i + 2 * lp.n)


def _first_last_points(built: Built, name: str, sp: dict) -> tuple[int, int]:
    hg = built.context
    return hg.point(1), hg.point(hg.n)


def _last_two_of_clique(built: Built, name: str, sp: dict) -> tuple[int, int]:
    lg = built.context
    return lg.vertex(1, lg.n - 1), lg.vertex(1, lg.n)


def _indexed(name: str, key: str):
    return lambda p: [(name, {key: i}) for i in range(1, (p["n"] + 1) // 2 + 1)]


def claim_registry() -> list[Claim]:
    odd_cp = _grid(n=(3, 5, 7), k=(3, 4))
    even_cp = _grid(n=(4, 6), k=(3,))
    return [
        _value("Rem2.1-beta", "cycle", "beta", _grid(n=(4, 6, 8)), lambda p: 2, "even cycles have metric dimension 2"),
        _value("Rem2.1-psi", "cycle", "psi", _grid(n=(4, 6, 8)), lambda p: 3, "even cycles need 3 vertices to doubly resolve"),
        _value("Rem2.1-sdim", "cycle", "sdim", _grid(n=(4, 6, 8)), lambda p: ceil(p["n"] / 2), "strong dimension of an even cycle is n/2"),
        _value("Rem2.2-beta", "cycle", "beta", _grid(n=(3, 5, 7)), lambda p: 2, "odd cycles have metric dimension 2"),
        _value("Rem2.2-psi", "cycle", "psi", _grid(n=(3, 5, 7)), lambda p: 2, "odd cycles are doubly resolved by 2 vertices"),
        _value("Rem2.2-sdim", "cycle", "sdim", _grid(n=(3, 5, 7)), lambda p: ceil(p["n"] / 2), "strong dimension of an odd cycle is ceil(n/2)"),
        _value("Rem2.3-beta", "path", "beta", _grid(k=(2, 3, 4, 6)), lambda p: 1, "paths have metric dimension 1"),
        _value("Rem2.3-psi", "path", "psi", _grid(k=(2, 3, 4, 6)), lambda p: 2, "paths are doubly resolved by 2 vertices"),
        _value("Thm2.1", "cp", "beta", odd_cp, lambda p: 2, "beta(C_n x P_k) = 2 for odd n"),
        _value("Thm2.2", "cp", "beta", even_cp, lambda p: 3, "beta(C_n x P_k) = 3 for even n"),
        _value("Thm2.3", "cp", "sdim", _grid(n=(3, 4, 5, 6), k=(3,)), lambda p: p["n"], "sdim(C_n x P_k) = n"),
        _value("Thm3.1", "cp", "psi", odd_cp, lambda p: 3, "psi(C_n x P_k) = 3 for odd n"),
        _sets("Thm3.1-AB", "cp", "doubly", odd_cp, _odd_a_b, "every A_i and B_j doubly resolves C_n x P_k (odd n)", "A/B"),
        _sets("Thm3.1-MN", "cp", "not-doubly", odd_cp, _odd_m_n, "no M_i or N_j doubly resolves C_n x P_k (odd n)", "M/N",
              pair=_compatible_pair),
        Claim("Thm3.1-basis", "cp", "inequality", _grid(n=(3, 5), k=(3,)),
              "minimum resolving sets of C_n x P_k (odd n) are exactly the M_i/N_j pairs of V_1 and their V_k images",
              _basis_classification, lambda p: True),
        _value("Thm3.2", "cpm", "beta", _grid(n=(3, 5), k=(3,), m=(2,)), lambda p: 3, "beta((C_n x P_k) x P_2) = 3 for odd n"),
        _sets("Thm3.2-A", "cpm", "resolving", _grid(n=(3, 5), k=(3,), m=(2,)), _odd_a_b,
              "copy-1 sets A_i, B_j resolve (C_n x P_k) x P_2", "A/B"),
        Claim("Lem3.1", "cpm", "inequality", _grid(n=(3, 5), k=(3,), m=(2,)),
              "psi((C_n x P_k) x P_2) > 3 for odd n", _psi_greater(3), lambda p: True),
        _sets("Lem3.1-A", "cpm", "not-doubly", _grid(n=(3, 5), k=(3,), m=(2,)), _odd_a_b,
              "copy-1 sets A_i, B_j do not doubly resolve (C_n x P_k) x P_2", "A/B"),
        _value("Thm3.3", "cpm", "psi", _grid(n=(3, 5), k=(3,), m=(2,)), lambda p: 4, "psi((C_n x P_k) x P_2) = 4 for odd n"),
        _sets("Thm3.3-C", "cpm", "doubly", _grid(n=(3, 5), k=(3,), m=(2,)), _indexed("C", "i"),
              "every C_i doubly resolves (C_n x P_k) x P_2", "C"),
        _value("Conc3.1", "cpm", "psi", _cases({"n": 3, "k": 3, "m": 3}, {"n": 3, "k": 3, "m": 4}, {"n": 5, "k": 3, "m": 3}),
               lambda p: 4, "psi((C_n x P_k) x P_m) = 4 for odd n",
               note="stated for every m >= 2; spot-checked at m in {3, 4}"),
        _sets("Conc3.1-D", "cpm", "doubly", _cases({"n": 3, "k": 3, "m": 3}, {"n": 3, "k": 3, "m": 4}, {"n": 5, "k": 3, "m": 3}),
              _indexed("D", "i"), "every D_i doubly resolves (C_n x P_k) x P_m", "D"),
        Claim("Rem3.1", "cp", "set-is-NOT-resolving", even_cp, "no pair of vertices resolves C_n x P_k for even n",
              _no_resolving_pair, lambda p: 0),
        _value("Lem3.2", "cp", "psi", even_cp, lambda p: 4, "psi(C_n x P_k) = 4 for even n"),
        _sets("Lem3.2-E12", "cp", "not-doubly", even_cp, lambda p: [("E1", {}), ("E2", {})],
              "E_1 and E_2 do not doubly resolve C_n x P_k (even n)", "E1/E2"),
        _sets("Lem3.2-E3", "cp", "doubly", even_cp, _one("E3"), "E_3 doubly resolves C_n x P_k (even n)", "E3"),
        _value("Thm3.4", "cpm", "beta", _cases({"n": 4, "k": 3, "m": 2}, {"n": 4, "k": 3, "m": 3}), lambda p: 4,
               "beta((C_n x P_k) x P_m) = 4 for even n", note="stated for every m >= 2; spot-checked at m in {2, 3}"),
        _sets("Thm3.4-E3", "cpm", "resolving", _cases({"n": 4, "k": 3, "m": 2}, {"n": 4, "k": 3, "m": 3}), _one("E3"),
              "copy-1 E_3 resolves (C_n x P_k) x P_m", "E3"),
        _value("Thm3.5", "cpm", "psi", _cases({"n": 4, "k": 3, "m": 2}, {"n": 4, "k": 3, "m": 3}), lambda p: 5,
               "psi((C_n x P_k) x P_m) = 5 for even n", note="stated for every m >= 2; spot-checked at m in {2, 3}"),
        _sets("Thm3.5-E4", "cpm", "doubly", _cases({"n": 4, "k": 3, "m": 2}, {"n": 4, "k": 3, "m": 3}), _one("E4"),
              "E_4 doubly resolves (C_n x P_k) x P_m", "E4"),
        _value("Thm3.6", "cpm", "sdim", _cases({"n": 3, "k": 3, "m": 2}, {"n": 4, "k": 3, "m": 2}, {"n": 3, "k": 3, "m": 3}),
               lambda p: 2 * p["n"], "sdim((C_n x P_k) x P_m) = 2n"),
        _sets("Thm3.6-T", "cpm", "strong", _cases({"n": 3, "k": 3, "m": 2}, {"n": 4, "k": 3, "m": 2}, {"n": 3, "k": 3, "m": 3}),
              _one("T"), "T strongly resolves (C_n x P_k) x P_m", "T"),
        _sets("Prop3.1", "h", "doubly", _grid(n=(5, 6)), _all_v1_subsets,
              "every (n-1)-subset of V_1 doubly resolves H(n)", "R1",
              note="checked over all vertex pairs; holds_on_pairs_outside_set records the weaker variant"),
        _sets("Prop3.2-res", "h", "resolving", _grid(n=(5, 6)), _one("R2"), "R_2 resolves H(n)", "R2"),
        _sets("Prop3.2", "h", "not-doubly", _grid(n=(5, 6)), _one("R2"), "R_2 does not doubly resolve H(n)", "R2",
              pair=_first_last_points),
        _value("Thm3.7", "h", "beta", _grid(n=(6,)), lambda p: p["n"] - p["n"] // 3, "beta(H(n)) = n - n/3 when 3 | n",
               slow=({"n": 9},)),
        _sets("Thm3.7-P", "h", "resolving", _grid(n=(6, 9, 12)), _one("P"), "P resolves H(n) when 3 | n", "P"),
        Claim("Cor3.1", "h", "inequality", _grid(n=(6,)),
              "2k < beta(H(n+1)) < beta(H(n+2)) <= 2(k+1) for n = 3k", _corollary_chain, lambda p: True),
        _sets("Lem3.3", "l", "resolving", _grid(n=(5, 6)), _one("C2"), "C_2 = N(W_1) - y_n resolves L(n)", "C2"),
        _sets("Lem3.3-C1", "l", "not-resolving", _grid(n=(5, 6)), _one("C1"),
              "C_1 = N(W_1) - {y_(n-1), y_n} does not resolve L(n)", "C1",
              pair=_last_two_of_clique),
        _value("Thm3.8", "l", "beta", _grid(n=(5,)), lambda p: p["n"] - 2, "beta(L(n)) = n - 2", slow=({"n": 6},)),
        _sets("Lem3.4", "l", "not-doubly", _grid(n=(5, 6)), _one("C2"), "C_2 does not doubly resolve L(n)", "C2"),
        _value("Thm3.9", "l", "psi", _grid(n=(5,)), lambda p: p["n"] - 1, "psi(L(n)) = n - 1", slow=({"n": 6},)),
        _sets("Thm3.9-C3", "l", "doubly", _grid(n=(5, 6)), _one("C3"), "C_3 = N(W_1) doubly resolves L(n)", "C3"),
        _sets("Prop3.3", "l", "not-strong", _grid(n=(5, 6)), _one("C3"), "N(W_1) does not strongly resolve L(n)", "C3"),
        _value("Thm3.10", "l", "sdim", _grid(n=(5, 6)), lambda p: p["n"] * (p["n"] - 2), "sdim(L(n)) = n(n-2)"),
        Claim("Ex3.1", "cpm", "table", _cases({"n": 5, "k": 4, "m": 4}),
              "all 80 representations w.r.t. D_1 on (C_5 x P_4) x P_4 match the printed table",
              _table_check("D1", "c5p4p4_D1.txt"), lambda p: 80, set_name="D1"),
        _value("Ex3.1-psi", "cpm", "psi", _cases({"n": 5, "k": 4, "m": 4}), lambda p: 4, "psi((C_5 x P_4) x P_4) = 4"),
        _sets("Ex3.1-D1", "cpm", "doubly", _cases({"n": 5, "k": 4, "m": 4}), _one("D1"), "D_1 doubly resolves (C_5 x P_4) x P_4", "D1"),
        Claim("Ex3.2", "cpm", "table", _cases({"n": 4, "k": 3, "m": 4}),
              "all 48 representations w.r.t. E on (C_4 x P_3) x P_4 match the printed table",
              _table_check("E", "c4p3p4_E.txt"), lambda p: 48, set_name="E"),
        _value("Ex3.2-psi", "cpm", "psi", _cases({"n": 4, "k": 3, "m": 4}), lambda p: 5, "psi((C_4 x P_3) x P_4) = 5",
               note="the example's text gives 4 while its set E has 5 members; 5 follows the general even-n formula"),
        _sets("Ex3.2-E", "cpm", "doubly", _cases({"n": 4, "k": 3, "m": 4}), _one("E"), "E doubly resolves (C_4 x P_3) x P_4", "E"),
        Claim("Ex3.3", "h", "set-is-resolving", _grid(n=(12,)), "P_1 + P_4 + P_7 + P_10 is a minimal resolving set of H(12)",
              _minimal_resolving("P"), lambda p: True, set_name="P"),
    ]


def find_claims(ids: Iterable[str] | None = None) -> list[Claim]:
    registry = claim_registry()
    if not ids:
        return registry
    wanted = list(ids)
    by_id = {c.id: c for c in registry}
    out = []
    for cid in wanted:
        if cid in by_id:
            out.append(by_id[cid])
            continue
        # a bare theorem id selects its sub-claims too
        group = [c for c in registry if c.id.startswith(cid + "-")]
        if not group:
            raise KeyError(f"unknown claim id {cid!r}")
        out.extend(group)
    return out


def verify_claims(
    ids: Iterable[str] | None = None,
    budget: int | None = None,
    *,
    params: dict | None = None,
    slow: bool = False,
    jobs: int = 1,
) -> list[ClaimReport]:
    """Check the selected claims; failures become verdicts, never exceptions.

    ``params`` overrides the default cases with a single case. ``slow`` adds
    each claim's slow cases.
    """
    env = _Env(budget, jobs)
    reports = []
    for claim in find_claims(ids):
        if params:
            cases = (dict(claim.cases[0], **params),)
        else:
            cases = claim.cases + (claim.slow_cases if slow else ())
        for case in cases:
            reports.append(_run_case(env, claim, case))
    return reports


def _run_case(env: _Env, claim: Claim, case: dict) -> ClaimReport:
    t0 = time.perf_counter()
    expected = claim.expected_for(case)
    try:
        computed, detail = claim.check(env, case)
    except BudgetExceeded as exc:
        best = exc.best.size if exc.best is not None else None
        return ClaimReport(claim.id, case, SKIPPED, expected, None,
                           {"reason": "budget", "upper_bound": best},
                           (time.perf_counter() - t0) * 1e3, claim.note)
    verdict = PASS if computed == expected else FAIL
    return ClaimReport(claim.id, case, verdict, expected, computed, detail,
                       (time.perf_counter() - t0) * 1e3, claim.note)


def summary_table(reports: Sequence[ClaimReport]) -> str:
    rows = [("claim", "params", "verdict", "expected", "computed")]
    for r in reports:
        params = ",".join(f"{k}={v}" for k, v in r.params.items())
        rows.append((r.claim_id, params, r.verdict, str(r.expected), str(r.computed)))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    counts = {v: sum(r.verdict == v for r in reports) for v in (PASS, FAIL, SKIPPED)}
    lines.append(f"{counts[PASS]} passed, {counts[FAIL]} failed, {counts[SKIPPED]} skipped")
    return "\n".join(lines) + "\n"
