"""Cases where exhaustive search disagrees with the stated values.

Each disagreement is shown with an explicit witness, re-checked against the
plain definition (not the solver's own predicate).

    python demos/02_smaller_than_stated.py
"""

from __future__ import annotations

from itertools import combinations

from metricdim import all_pairs_distances, build_family, build_named_set, emit_table, min_doubly_resolving
from metricdim.claims import golden_table


def literally_doubly(q, d) -> bool:
    n = d.n
    for x, y in combinations(range(n), 2):
        diffs = {int(d[x, w]) - int(d[y, w]) for w in q}
        if len(diffs) == 1:
            return False
    return True


print("psi of small layered products (stated: 4 for odd n, 5 for even n)")
for spec in ("cpm:n=3,k=3,m=2", "cpm:n=3,k=3,m=3", "cpm:n=5,k=3,m=2", "cpm:n=4,k=3,m=2"):
    built = build_family(spec)
    d = all_pairs_distances(built.graph)
    res = min_doubly_resolving(built.graph, d=d)
    labels = [built.graph.labels[v] for v in res.witness]
    print(f"  {spec:18} psi = {res.size}  witness {labels}  definition holds: {literally_doubly(res.witness, d)}")

print("\n(n-1)-subsets of V_1 in H(5): the pair (v1, v1v5) has a constant difference")
h = build_family("h:n=5")
d = all_pairs_distances(h.graph)
q = build_named_set("R1", {"omit": 5}, h.context)
a, b = h.graph.index_of("v1"), h.graph.index_of("v1v5")
print("  set", [h.graph.labels[v] for v in q])
print("  r(v1)   =", tuple(int(d[a, w]) for w in q))
print("  r(v1v5) =", tuple(int(d[b, w]) for w in q))

print("\nprinted D1 table rows that differ from computed distances")
got = emit_table(build_family("cpm:n=5,k=4,m=4"), "D1").splitlines()
for want, have in zip(golden_table("c5p4p4_D1.txt"), got):
    if want != have:
        print(f"  printed {want}\n  actual  {have}")
