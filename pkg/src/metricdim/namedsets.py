"""Named witness sets on the layered products, H(n) and L(n).

``build_named_set("D1", {}, ctx)`` and ``build_named_set("D", {"i": 1}, ctx)``
are the same request: trailing digits of a name fill the set's index
parameter unless it is given explicitly. Members come back in the arranged
order, which fixes the coordinate order of representations.

Layered products (``m == 1`` for C_n x P_k), with ``h = ceil(n/2)`` and
``c`` the layer-k vertex compatible with the first member:

    M_i = {x_i, x_{h+i-1}}             1 <= i <= h        odd n
    N_j = {x_j, x_{h+j}}               1 <= j <= n // 2   odd n
    A_i = M_i + x_c,  B_j = N_j + x_c  (copy ``r``, default 1)
    C_i = A_i^(1) + x_c^(2)            m >= 2
    D_i = A_i^(1) + x_c^(m)            m >= 2
    E1 = {x_1, x_2, x_c}, E2 = {x_1, x_{n/2}, x_{n/2+1}}, E3 = E2 + x_c   even n
    E4 = E = E3^(1) + x_c^(m)          m >= 2
    T = layer 1 of copy 1 + layer 1 of copy m

H(n): R1 = V1 - {v_omit} (omit defaults to n), R2 = {v1v2, .., v1v_{n-1}},
P_i = {v_iv_{i+1}, v_iv_{i+2}}, P = union of P_{3t-2} (3 | n),
T_i = {v_iv_j : j > i}.

L(n): W_r (clique), N_r = N(W_r), and with y_k ordered by k:
C3 = N(W_r), C2 = C3 minus its last member, C1 = C3 minus its last two.
"""

from __future__ import annotations

import re
from typing import Mapping

from .constructors import HGraph, LayeredProductGraph, LGraph, neighborhood_of_clique
from .errors import BadParams

_INDEX_KEY = {"M": "i", "N": "j", "A": "i", "B": "j", "C": "i", "D": "i", "P": "i", "T": "i", "W": "r"}


def _split_name(name: str, params: Mapping[str, int]) -> tuple[str, dict]:
    params = dict(params)
    m = re.fullmatch(r"([A-Za-z]+)(\d*)", name)
    if not m:
        raise BadParams(f"malformed set name {name!r}")
    base, digits = m.groups()
    return base, params, digits


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParams(msg)


def _layered(base: str, digits: str, p: dict, lp: LayeredProductGraph) -> tuple[int, ...]:
    n, k, m = lp.n, lp.k, lp.m
    h = (n + 1) // 2
    if base == "E" and digits in ("1", "2", "3", "4"):
        base, digits = f"E{digits}", ""
    if digits and base in _INDEX_KEY:
        p.setdefault(_INDEX_KEY[base], int(digits))
    elif digits:
        raise BadParams(f"set {base}{digits} is not defined on a layered product")
    r = p.get("r", 1)
    x = lp.vertex

    def comp(t: int) -> int:  # layer-k vertex compatible with x_t, t in layer 1
        return (k - 1) * n + t

    if base in ("M", "A", "C", "D"):
        _need(n % 2 == 1, f"{base}_i needs odd n, got n={n}")
        i = p.get("i", 1)
        _need(1 <= i <= h, f"{base}_i needs 1 <= i <= {h}, got {i}")
        pair = [i, h + i - 1]
        if base == "M":
            return tuple(x(t, r) for t in pair)
        if base == "A":
            return tuple(x(t, r) for t in pair + [comp(i)])
        _need(m >= 2, f"{base}_i needs m >= 2")
        last = 2 if base == "C" else m
        return tuple(x(t, 1) for t in pair + [comp(i)]) + (x(comp(i), last),)
    if base in ("N", "B"):
        _need(n % 2 == 1, f"{base}_j needs odd n, got n={n}")
        j = p.get("j", 1)
        _need(1 <= j <= n // 2, f"{base}_j needs 1 <= j <= {n // 2}, got {j}")
        pair = [j, h + j]
        if base == "N":
            return tuple(x(t, r) for t in pair)
        return tuple(x(t, r) for t in pair + [comp(j)])
    if base in ("E1", "E2", "E3", "E4", "E"):
        _need(n % 2 == 0, f"{base} needs even n, got n={n}")
        half = n // 2
        if base == "E1":
            return tuple(x(t, r) for t in (1, 2, comp(1)))
        e2 = [1, half, half + 1]
        if base == "E2":
            return tuple(x(t, r) for t in e2)
        if base == "E3":
            return tuple(x(t, r) for t in e2 + [comp(1)])
        _need(m >= 2, f"{base} needs m >= 2")
        return tuple(x(t, 1) for t in e2 + [comp(1)]) + (x(comp(1), m),)
    if base == "T":
        _need(m >= 2, "T needs m >= 2")
        return tuple(x(t, 1) for t in range(1, n + 1)) + tuple(x(t, m) for t in range(1, n + 1))
    raise BadParams(f"unknown set {base!r} on a layered product")


def _h(base: str, digits: str, p: dict, hg: HGraph) -> tuple[int, ...]:
    n = hg.n
    name = base + digits
    if name == "R1":
        omit = p.get("omit", n)
        _need(1 <= omit <= n, f"omit must be in 1..{n}")
        return tuple(hg.point(r) for r in range(1, n + 1) if r != omit)
    if name == "R2":
        return tuple(hg.pair(1, j) for j in range(2, n))
    if base == "P" and not digits and "i" not in p:
        _need(n % 3 == 0, f"P needs 3 | n, got n={n}")
        out: list[int] = []
        for t in range(1, n // 3 + 1):
            out += _h("P", str(3 * t - 2), {}, hg)
        return tuple(out)
    if base == "P":
        i = p.get("i", int(digits) if digits else 1)
        _need(1 <= i <= n - 2, f"P_i needs 1 <= i <= {n - 2}")
        return (hg.pair(i, i + 1), hg.pair(i, i + 2))
    if base == "T":
        i = p.get("i", int(digits) if digits else 1)
        _need(1 <= i <= n - 1, f"T_i needs 1 <= i <= {n - 1}")
        return tuple(hg.pair(i, j) for j in range(i + 1, n + 1))
    raise BadParams(f"unknown set {name!r} on H(n)")


def _l(base: str, digits: str, p: dict, lg: LGraph) -> tuple[int, ...]:
    name = base + digits
    r = p.get("r", 1)
    _need(1 <= r <= lg.n, f"clique index must be in 1..{lg.n}")
    if name in ("C1", "C2", "C3"):
        nbhd = neighborhood_of_clique(lg, r)
        drop = {"C1": 2, "C2": 1, "C3": 0}[name]
        return nbhd[: len(nbhd) - drop]
    if base in ("N", "W"):
        if digits:
            r = p.setdefault("r", int(digits))
            _need(1 <= r <= lg.n, f"clique index must be in 1..{lg.n}")
        if base == "N":
            return neighborhood_of_clique(lg, r)
        return tuple(lg.clique(r))
    raise BadParams(f"unknown set {name!r} on L(n)")


def build_named_set(name: str, params: Mapping[str, int] | None, ctx) -> tuple[int, ...]:
    base, p, digits = _split_name(name, params or {})
    if isinstance(ctx, LayeredProductGraph):
        return _layered(base, digits, p, ctx)
    if isinstance(ctx, HGraph):
        return _h(base, digits, p, ctx)
    if isinstance(ctx, LGraph):
        return _l(base, digits, p, ctx)
    raise BadParams(f"named sets need a layered product, H(n) or L(n); got {type(ctx).__name__}")


def parse_set_request(text: str) -> tuple[str, dict[str, int]]:
    """``"D1:i=1"`` -> ``("D1", {"i": 1})``."""
    from .families import parse_params

    name, _, rest = text.partition(":")
    return name.strip(), parse_params(rest) if rest else {}
