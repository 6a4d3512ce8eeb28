"""Compare the lcm-closed condition with a direct Groebner basis test.

Sweeps every pure 1-dimensional complex on 4 vertices (graphs) in a 2 x 4
matrix and counts how often each condition holds.
"""
from itertools import combinations

from dfilab import SimplicialComplex, build_rdfi, is_groebner, is_lcm_closed

edges = list(combinations(range(1, 5), 2))
counts = {}
for k in range(1, len(edges) + 1):
    for facets in combinations(edges, k):
        dfi = build_rdfi(SimplicialComplex(4, facets), 2)
        key = (is_lcm_closed(dfi).verdict, is_groebner(dfi.polynomials()).verdict)
        counts[key] = counts.get(key, 0) + 1

for (closed, gb), c in sorted(counts.items()):
    print(f"lcm-closed={closed!s:5}  Groebner={gb!s:5}  graphs: {c}")
