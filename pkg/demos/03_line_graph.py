"""The line graph L(5) of H(5): cliques, the sets C1..C3 and the SR-graph.

    python demos/03_line_graph.py
"""

from __future__ import annotations

from metricdim import (
    all_pairs_distances,
    build_family,
    build_named_set,
    build_sr_graph,
    min_strong_resolving,
    representation,
)
from metricdim.kernel import doubly_violation, resolving_violation, strong_violation

built = build_family("l:n=5")
lg, g = built.context, built.graph
d = all_pairs_distances(g)
print(f"L(5): {g.n_vertices} vertices, degree {g.degree(0)}, diameter {d.diameter}")
print("W_1 =", [g.labels[v] for v in lg.clique(1)])

for name, check in (("C1", resolving_violation), ("C2", doubly_violation), ("C3", strong_violation)):
    q = build_named_set(name, {}, lg)
    v = check(q, d)
    print(f"\n{name} = {[g.labels[x] for x in q]}")
    if v is None:
        print(f"  passes {check.__name__.split('_')[0]}")
    else:
        x, y = v[0], v[1]
        print(f"  fails {check.__name__.split('_')[0]} at {g.labels[x]} / {g.labels[y]}: "
              f"{representation(x, q, d)} vs {representation(y, q, d)}")

sr = build_sr_graph(g, d)
res = min_strong_resolving(g, d=d)
print(f"\nSR-graph: {sr.graph.n_edges} mutually maximally distant pairs")
print(f"sdim = {res.size} via {res.method}, certified: {res.certificate_checked}")
