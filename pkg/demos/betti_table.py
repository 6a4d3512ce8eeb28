"""Betti table of the lead-term ideal of a two-interval 3-DFI in a 4 x 4 matrix.

The lead terms generate an ideal whose quotient has projective dimension 4
but height 3, so the lead-term quotient is not Cohen-Macaulay.
"""
from dfilab import SimplicialComplex, build_rdfi, gpw_betti
from dfilab.cm import pd_and_cm

delta = SimplicialComplex.from_intervals(4, [(1, 3), (2, 4)], 3)
dfi = build_rdfi(delta, 4)
print("facets:", list(delta.facets))
print("generators:", len(dfi.generators))

table = gpw_betti(dfi.lead_ideal())
print(table.render())

pd, ht, cm = pd_and_cm(dfi.lead_ideal(), betti=table)
print(f"pd = {pd}, height = {ht}, Cohen-Macaulay: {cm}")
