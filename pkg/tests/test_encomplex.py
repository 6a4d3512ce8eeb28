import random
from itertools import combinations
from math import comb

import pytest

from dfilab.algebra import X, QQ, PrimeField, lex
from dfilab.encomplex import (build_en_complex, compositions, index_set, is_nonbounding_cycle,
                              linear_strand_rank_check, one_nonface_homology_equiv, one_nonface_sides,
                              rank_formula, strand_homology)
from dfilab.errors import HypothesisFailed, InputError, ShapeMismatch
from dfilab.simplicial import CliqueDecomposition, SimplicialComplex, clique_complex, i_nonfaces

from conftest import random_pure_complex

GRAPH_A = clique_complex(SimplicialComplex(4, [(3, 4), (2, 4), (1, 4), (1, 3), (1, 2)]))
GRAPH_B = clique_complex(SimplicialComplex(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]))
GRAPH_C = clique_complex(SimplicialComplex(4, [(1, 2), (1, 4), (2, 4), (2, 3), (3, 4)]))


def test_index_sets():
    assert index_set((1, 1, 1), (1, 2, 3, 4, 5, 6)) == [(1, 1), (1, 2), (2, 3), (2, 4), (3, 5), (3, 6)]
    assert index_set((1, 0, 2), (1, 2, 3, 4, 5, 6)) == [(1, 1), (1, 2), (3, 4), (3, 5), (3, 6)]
    assert index_set((2, 1), (1, 2, 4, 5, 6)) == [(1, 1), (1, 2), (1, 4), (2, 5), (2, 6)]
    with pytest.raises(ShapeMismatch):
        index_set((1, 1), (1, 2, 3))


def test_compositions():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(compositions(3, 3))) == comb(5, 2)


def test_ranks_from_faces():
    C = build_en_complex(GRAPH_A, 3)
    assert C.ranks() == {0: 1, 1: 2}
    empty = CliqueDecomposition(5, 3, (), {})
    assert build_en_complex(empty, 3, 5).ranks() == {0: 1}


@pytest.mark.parametrize("m,n", [(5, 2), (6, 3), (5, 3)])
def test_complete_complex_ranks(m, n):
    C = build_en_complex(clique_complex(SimplicialComplex.complete(m, n)), n)
    for i, k in C.ranks().items():
        if i:
            assert k == comb(m, n + i - 1) * comb(n + i - 2, n - 1)
    assert C.is_linear()


def test_needs_diagonal_order():
    swapped = lex(12, [1, 0, 2, 3, 5, 4, 6, 7, 9, 8, 10, 11])  # x12 > x11 in every row
    with pytest.raises(InputError):
        build_en_complex(GRAPH_B, 3, 4, swapped)


def test_first_graph_has_h1():
    C = build_en_complex(GRAPH_A, 3)
    assert strand_homology(C, 1, 4) == 1
    z = C.element([(1, X(2, 2), ((0, 0, 0), (1, 3, 4))), (-1, X(2, 3), ((0, 0, 0), (1, 2, 4)))])
    assert is_nonbounding_cycle(C, 1, z) == (True, False)


def test_second_graph_has_none():
    assert strand_homology(build_en_complex(GRAPH_B, 3), 1, 4) == 0


def test_bottom_degree_is_acyclic():
    C = build_en_complex(clique_complex(SimplicialComplex.complete(5, 2)), 2)
    for i in (1, 2, 3):
        assert strand_homology(C, i, i + 1) == 0


def test_boundary_is_recognised():
    C = build_en_complex(clique_complex(SimplicialComplex.complete(3, 2)), 2)
    zero = (0,) * 6
    b = C.apply(2, {(zero, ((1, 0), (1, 2, 3))): 1})
    assert is_nonbounding_cycle(C, 1, b) == (True, True)


@pytest.mark.parametrize("g", [GRAPH_A, GRAPH_B, GRAPH_C])
def test_one_nonface_equivalence_on_graphs(g):
    assert one_nonface_homology_equiv(g, 3)


def test_one_nonface_equivalence_random(rng):
    for _ in range(10):
        m = rng.randint(4, 6)
        dec = clique_complex(random_pure_complex(rng, m, 3, 0.6))
        sides = one_nonface_sides(dec, 3)
        assert sides["agree"], sides


def test_one_nonface_over_gf2():
    assert one_nonface_homology_equiv(GRAPH_A, 3, PrimeField(2))


def test_rank_formula_matches_basis():
    for dec in (GRAPH_A, GRAPH_B, clique_complex(SimplicialComplex.complete(6, 3))):
        C = build_en_complex(dec, 3)
        for i, k in C.ranks().items():
            if i:
                assert rank_formula(dec, 3, i) == k


def test_linear_strand_single_clique():
    for n in (2, 3):
        dec = clique_complex(SimplicialComplex.complete(n + 1, n))
        rep = linear_strand_rank_check(dec, n)
        assert rep["ok"]
        assert [r["rank_C"] for r in rep["rows"]][:2] == [n + 1, n]


def test_linear_strand_two_cliques():
    rep = linear_strand_rank_check(GRAPH_B, 3)
    assert rep["ok"]


def test_linear_strand_hypothesis():
    with pytest.raises(HypothesisFailed):
        linear_strand_rank_check(GRAPH_A, 3)
