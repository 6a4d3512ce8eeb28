import random
from itertools import product

import numpy as np
from hypothesis import given, settings, strategies as st

from dfilab.algebra import QQ, PrimeField
from dfilab.linalg import Echelon, rank


def dense_to_rows(M):
    return [{j: v for j, v in enumerate(row) if v} for row in M]


def brute_rank_mod_p(M, p):
    """log_p of the size of the row space, by enumerating all combinations."""
    span = set()
    for coeffs in product(range(p), repeat=len(M)):
        span.add(tuple(sum(c * row[j] for c, row in zip(coeffs, M)) % p for j in range(len(M[0]))))
    return round(np.log(len(span)) / np.log(p))


matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rank_over_q_matches_numpy(M):
    assert rank(dense_to_rows(M), QQ) == np.linalg.matrix_rank(np.array(M, dtype=float))


@settings(max_examples=60, deadline=None)
@given(matrices, st.sampled_from([2, 3]))
def test_rank_mod_p_matches_enumeration(M, p):
    if len(M) > 4:
        M = M[:4]
    assert rank(dense_to_rows(M), PrimeField(p)) == brute_rank_mod_p(M, p)


def test_membership():
    E = Echelon(QQ)
    assert E.add({0: 1, 1: 2}) and E.add({1: 1, 2: 1})
    assert E.contains({0: 1, 1: 3, 2: 1})
    assert not E.contains({2: 1})
    assert not E.add({0: 2, 1: 5, 2: 1})
    assert E.rank == 2


def test_characteristic_matters():
    rows = [{0: 1, 1: 1}, {0: 1, 1: -1}]
    assert rank(rows, QQ) == 2
    assert rank(rows, PrimeField(2)) == 1
