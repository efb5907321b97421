"""Family specs (``cpm:n=5,k=4,m=4``) and vertex-set literals (``x16:4``, ``v1v3``).

Family grammar::

    cycle:n=N | path:k=K | cp:n=N,k=K | cpm:n=N,k=K,m=M | h:n=N | l:n=N | file:PATH

Set-literal grammar (comma separated items)::

    xT      vertex x_T of a layered product (copy 1 when m > 1)
    xT:R    vertex x_T in copy R
    vR      point v_R of H(n)
    vIvJ    pair vertex v_Iv_J of H(n)
    w:R,S   vertex {v_R, v_Rv_S} of L(n)
    #I      raw 0-based vertex index
    LABEL   any exact vertex label, e.g. {v1, v1v2}
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from .constructors import (
    HGraph,
    LayeredProductGraph,
    LGraph,
    build_cycle,
    build_h,
    build_l,
    build_layered,
    build_path,
)
from .errors import BadParameter, ParseError
from .graph import Graph, read_edge_list

Context = Union[LayeredProductGraph, HGraph, LGraph, None]

_REQUIRED = {
    "cycle": ("n",),
    "path": ("k",),
    "cp": ("n", "k"),
    "cpm": ("n", "k", "m"),
    "h": ("n",),
    "l": ("n",),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)
    path: str | None = None

    def __str__(self) -> str:
        if self.family == "file":
            return f"file:{self.path}"
        body = ",".join(f"{k}={self.params[k]}" for k in _REQUIRED[self.family])
        return f"{self.family}:{body}"


@dataclass(frozen=True)
class Built:
    spec: FamilySpec
    graph: Graph
    context: Context = None


def parse_family(text: str) -> FamilySpec:
    family, sep, rest = text.strip().partition(":")
    family = family.lower()
    if family == "file":
        if not rest:
            raise ParseError("file: needs a path")
        return FamilySpec("file", {}, rest)
    if family not in _REQUIRED:
        raise ParseError(f"unknown family {family!r}; expected one of {sorted(_REQUIRED) + ['file']}")
    params = parse_params(rest) if sep else {}
    missing = [k for k in _REQUIRED[family] if k not in params]
    extra = [k for k in params if k not in _REQUIRED[family]]
    if missing or extra:
        raise ParseError(
            f"family {family!r} takes parameters {','.join(_REQUIRED[family])}; got {rest!r}"
        )
    return FamilySpec(family, params)


def parse_params(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for item in filter(None, (x.strip() for x in text.split(","))):
        key, eq, val = item.partition("=")
        if not eq:
            raise ParseError(f"expected key=value, got {item!r}")
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise ParseError(f"parameter {key!r} must be an integer, got {val!r}") from None
    return out


def build_family(spec: FamilySpec | str) -> Built:
    if isinstance(spec, str):
        spec = parse_family(spec)
    p = spec.params
    if spec.family == "cycle":
        return Built(spec, build_cycle(p["n"]))
    if spec.family == "path":
        return Built(spec, build_path(p["k"]))
    if spec.family in ("cp", "cpm"):
        lp = build_layered(p["n"], p["k"], p.get("m", 1))
        return Built(spec, lp.graph, lp)
    if spec.family == "h":
        hg = build_h(p["n"])
        return Built(spec, hg.graph, hg)
    if spec.family == "l":
        lg = build_l(p["n"])
        return Built(spec, lg.graph, lg)
    if spec.family == "file":
        return Built(spec, read_edge_list(Path(spec.path).read_text(encoding="utf-8")))
    raise BadParameter(f"unknown family {spec.family!r}")


def _split_items(text: str) -> list[str]:
    items, depth, cur = [], 0, []
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur).strip())
    merged: list[str] = []
    it = iter(items)
    for item in it:
        if re.fullmatch(r"w:\d+", item):
            nxt = next(it, None)
            if nxt is None:
                raise ParseError(f"{item!r} must be followed by ',S'")
            item = f"{item},{nxt}"
        merged.append(item)
    return [x for x in merged if x]


def parse_vertex(item: str, built: Built) -> int:
    g, ctx = built.graph, built.context
    m = re.fullmatch(r"#(\d+)", item)
    if m:
        v = int(m.group(1))
        if v >= g.n_vertices:
            raise ParseError(f"vertex index {v} out of range")
        return v
    m = re.fullmatch(r"x(\d+)(?::(\d+))?", item)
    if m and isinstance(ctx, LayeredProductGraph):
        try:
            return ctx.vertex(int(m.group(1)), int(m.group(2) or 1))
        except BadParameter as exc:
            raise ParseError(str(exc)) from None
    m = re.fullmatch(r"w:(\d+),(\d+)", item)
    if m and isinstance(ctx, LGraph):
        try:
            return ctx.vertex(int(m.group(1)), int(m.group(2)))
        except BadParameter as exc:
            raise ParseError(str(exc)) from None
    try:
        return g.index_of(item)
    except KeyError:
        raise ParseError(f"cannot resolve vertex {item!r} on {built.spec}") from None


def parse_vertex_set(text: str, built: Built) -> tuple[int, ...]:
    verts = tuple(parse_vertex(item, built) for item in _split_items(text))
    if not verts:
        raise ParseError("empty vertex set")
    if len(set(verts)) != len(verts):
        raise ParseError(f"vertex set {text!r} repeats a vertex")
    return verts
