import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from dfilab.algebra import (QQ, Monomial, PrimeField, X, diagonal_monomial, parse_field, grevlex,
                            is_diagonal, lex, matrix_ring, minor, parse_order, permuted_row_lex,
                            row_major_lex, weight_order)
from dfilab.errors import InputError, MinorTooLarge


def leibniz(ring, rows, cols):
    """Determinant as a signed sum over permutations."""
    total = ring.const(0)
    for perm in permutations(range(len(cols))):
        inv = sum(1 for a, b in combinations(perm, 2) if a > b)
        term = ring.const(-1 if inv % 2 else 1)
        for a, p in zip(rows, perm):
            term = term * ring.x(a, cols[p])
        total = total + term
    return total


def laplace_on_row(ring, rows, cols, k):
    """Cofactor expansion along row position ``k``."""
    if len(rows) == 1:
        return ring.x(rows[0], cols[0])
    out = ring.const(0)
    rest = rows[:k] + rows[k + 1:]
    for p, c in enumerate(cols):
        sign = -1 if (k + p) % 2 else 1
        out = out + ring.x(rows[k], c) * laplace_on_row(ring, rest, cols[:p] + cols[p + 1:], 0) * sign
    return out


def test_two_by_two():
    R = matrix_ring(2, 2)
    assert minor(R, (1, 2), (1, 2)) == R.x(1, 1) * R.x(2, 2) - R.x(1, 2) * R.x(2, 1)


def test_worked_lead_terms():
    R = matrix_ring(3, 5)
    assert minor(R, (1, 2, 3), (2, 3, 4)).lead_monomial() == Monomial.of((1, 2), (2, 3), (3, 4))
    assert minor(R, (1, 2, 3), (1, 3, 4)).lead_monomial() == Monomial.of((1, 1), (2, 3), (3, 4))


def test_minor_too_large():
    with pytest.raises(MinorTooLarge):
        minor(matrix_ring(2, 4), (1, 2, 3), (1, 2, 3))


@pytest.mark.parametrize("n,m", [(3, 4), (4, 5)])
def test_minors_against_leibniz(n, m):
    R = matrix_ring(n, m)
    for r in range(1, n + 1):
        for rows in combinations(range(1, n + 1), r):
            for cols in list(combinations(range(1, m + 1), r))[:6]:
                assert minor(R, rows, cols) == leibniz(R, rows, cols)


def test_laplace_along_any_row():
    R = matrix_ring(4, 5)
    for rows in [(1, 2, 3, 4), (1, 3, 4)]:
        for cols in [(1, 2, 4, 5)[: len(rows)], (2, 3, 5, 4)[: len(rows)]]:
            cols = tuple(sorted(cols))
            ref = minor(R, rows, cols)
            for k in range(len(rows)):
                assert laplace_on_row(R, list(rows), list(cols), k) == ref


def test_diagonal_orders():
    assert is_diagonal(row_major_lex(3, 5), 3, 5)
    swapped = lex(4, [1, 0, 3, 2])  # x12 > x11 > x22 > x21
    assert not is_diagonal(swapped, 2, 2)
    assert is_diagonal(lex(4, [3, 2, 1, 0]), 1, 4)
    assert not is_diagonal(permuted_row_lex(3, 3, (2, 1, 3)), 3, 3)


def test_diagonal_leads_are_monic_and_squarefree():
    R = matrix_ring(3, 4)
    for r in range(1, 4):
        for rows in combinations(range(1, 4), r):
            for cols in combinations(range(1, 5), r):
                p = minor(R, rows, cols)
                assert p.lead_coeff() == 1
                assert p.lead_monomial() == diagonal_monomial(rows, cols)
                assert p.lead_monomial().is_squarefree()


def test_monomial_lcm_gcd_divides():
    a = Monomial.of((1, 1), (2, 3), (3, 4))
    b = Monomial.of((1, 2), (2, 3), (3, 5))
    L = a.lcm(b)
    assert L == Monomial.of((1, 1), (1, 2), (2, 3), (3, 4), (3, 5))
    assert Monomial.of((1, 2), (2, 3), (3, 4)).divides(L)
    assert a.gcd(a) == a and a.lcm(Monomial()) == a
    assert (L / a) == Monomial.of((1, 2), (3, 5))
    assert str(X(1, 2) * X(1, 2)) == "x_{1,2}^2"


def test_fields():
    F = PrimeField(7)
    assert F.mul(3, F.inv(3)) == 1
    assert F(Fraction(1, 2)) == 4
    assert parse_field("fp:2").characteristic == 2
    assert parse_field({"type": "rationals"}) is QQ
    with pytest.raises(InputError):
        PrimeField(9)
    with pytest.raises(InputError):
        parse_field("reals")


def test_order_from_json():
    o = parse_order({"type": "lex", "variable_order": [[1, 2], [1, 1], [2, 1], [2, 2]]}, 2, 2)
    assert not is_diagonal(o, 2, 2)
    w = parse_order({"type": "weight", "weights": [4, 3, 2, 1]}, 2, 2)
    assert is_diagonal(w, 2, 2)
    with pytest.raises(InputError):
        parse_order({"type": "weight", "weights": [1]}, 2, 2)
    with pytest.raises(InputError):
        weight_order([1, -1])


def test_grevlex_tie_break():
    R = matrix_ring(1, 3, grevlex(3))
    x, y, z = R.x(1, 1), R.x(1, 2), R.x(1, 3)
    # grevlex: x*z < y^2
    assert (x * z + y * y).lead_monomial() == Monomial({(1, 2): 2})


def random_poly(R, rnd):
    terms = []
    for _ in range(rnd.randint(0, 4)):
        mono = Monomial({(rnd.randint(1, 2), rnd.randint(1, 2)): rnd.randint(1, 2)})
        terms.append((mono, rnd.randint(-3, 3)))
    return R.from_terms(terms)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(["q", "fp:2"]))
def test_ring_axioms(seed, fld):
    R = matrix_ring(2, 2, field=parse_field(fld))
    rnd = random.Random(seed)
    a, b, c = (random_poly(R, rnd) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert (a - a).is_zero()
