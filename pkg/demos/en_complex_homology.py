"""First homology of the Eagon-Northcott type complex attached to three graphs.

A 1-nonface of cardinality 4 shows up as a nonzero homology class in
homological degree 1 and internal degree 4.
"""
from dfilab import SimplicialComplex, X, clique_complex, i_nonfaces
from dfilab.encomplex import build_en_complex, is_nonbounding_cycle, strand_homology

graphs = {
    "A": [(3, 4), (2, 4), (1, 4), (1, 3), (1, 2)],
    "B": [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)],
    "C": [(1, 2), (1, 4), (2, 4), (2, 3), (3, 4)],
}
for name, edges in graphs.items():
    dec = clique_complex(SimplicialComplex(4, edges))
    C = build_en_complex(dec, 3)
    print(f"graph {name}: cliques {list(dec.cliques)}, ranks {C.ranks()}, "
          f"1-nonfaces of size 4 {i_nonfaces(dec, 1, 4)}, H_1 in degree 4 = {strand_homology(C, 1, 4)}")

C = build_en_complex(clique_complex(SimplicialComplex(4, graphs["A"])), 3)
z = C.element([(1, X(2, 2), ((0, 0, 0), (1, 3, 4))), (-1, X(2, 3), ((0, 0, 0), (1, 2, 4)))])
cycle, boundary = is_nonbounding_cycle(C, 1, z)
print(f"graph A witness: cycle={cycle}, boundary={boundary}")
