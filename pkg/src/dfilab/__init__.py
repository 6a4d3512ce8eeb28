"""Toolkit for r-determinantal facet ideals: cliques, Groebner bases, lcm lattices,
sparse Eagon-Northcott complexes and Cohen-Macaulay checks."""
from .algebra import QQ, PrimeField, X, Monomial, Polynomial, PolyRing, matrix_ring, minor, row_major_lex
from .cm import cor_cmness_check, height_monomial, pd_and_cm
from .dfi import RDfi, build_rdfi, is_closed_bei, is_closed_dfi, is_lcm_closed, is_unit_interval
from .encomplex import build_en_complex, index_set, linear_strand_rank_check, strand_homology
from .errors import CapExceeded, DfiLabError, HypothesisFailed, InputError
from .groebner import buchberger, conca_pair_check, intersect, is_groebner
from .lcmlattice import MonomialIdeal, gpw_betti, lcm_lattice, m_k_monomial, taylor_betti_oracle
from .simplicial import SimplicialComplex, clique_complex, f_vector, i_nonfaces

__version__ = "0.1.0"
