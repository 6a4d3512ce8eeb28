import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dfilab.algebra import QQ, Monomial, PolyRing, PrimeField, lex, grevlex, matrix_ring, minor, row_major_lex
from dfilab.dfi import build_rdfi
from dfilab.errors import BudgetExceeded
from dfilab.groebner import (buchberger, conca_pair_check, initial_ideal, intersect, is_groebner, is_reduced,
                             necessity_search)
from dfilab.lcmlattice import MonomialIdeal
from dfilab.simplicial import SimplicialComplex


def test_principal():
    R = matrix_ring(2, 2)
    f = minor(R, (1, 2), (1, 2))
    assert buchberger([f]).elements == [f]


def test_maximal_minors_2x4_are_a_basis():
    R = matrix_ring(2, 4)
    from itertools import combinations
    gens = [minor(R, (1, 2), c) for c in combinations(range(1, 5), 2)]
    assert is_groebner(gens).verdict
    gb = buchberger(gens)
    assert sorted(map(str, gb.elements)) == sorted(str(g.monic()) for g in gens)


def test_interval_2dfi_is_reduced_basis():
    d = build_rdfi(SimplicialComplex.from_intervals(3, [(1, 2), (2, 3)], 2), 3)
    gb = buchberger(d.polynomials())
    assert len(gb) == len(d.generators) == 6
    assert set(map(str, gb.elements)) == {str(p) for p in d.polynomials()}
    assert is_reduced(gb.elements)


def test_three_petals_fail():
    d = build_rdfi(SimplicialComplex(7, [(1, 2, 3), (1, 4, 5), (1, 6, 7)]), 3)
    chk = is_groebner(d.polynomials())
    assert not chk.verdict and chk.pair is not None and not chk.remainder.is_zero()


def test_intersections():
    R = matrix_ring(1, 2)
    a, b = R.x(1, 1), R.x(1, 2)
    assert [str(p) for p in intersect([a], [b])] == [str(a * b)]
    assert [str(p) for p in intersect([a], [a])] == [str(a)]
    d = build_rdfi(SimplicialComplex.from_intervals(3, [(1, 2), (2, 3)], 2), 3)
    R = d.ring
    I = [minor(R, rows, (1, 2)) for rows in [(1, 2), (1, 3), (2, 3)]]
    J = [minor(R, rows, (2, 3)) for rows in [(1, 2), (1, 3), (2, 3)]]
    cap = buchberger(intersect(I, J))
    assert cap.contains(minor(R, (1, 2, 3), (1, 2, 3)))


def test_conca_on_the_interval_pair():
    d = build_rdfi(SimplicialComplex.from_intervals(3, [(1, 2), (2, 3)], 2), 3)
    R = d.ring
    I = [minor(R, rows, (1, 2)) for rows in [(1, 2), (1, 3), (2, 3)]]
    J = [minor(R, rows, (2, 3)) for rows in [(1, 2), (1, 3), (2, 3)]]
    rep = conca_pair_check(I, J)
    assert rep["verdict"] and not rep["missing"]
    assert is_groebner(I + J).verdict


def test_budget():
    d = build_rdfi(SimplicialComplex(7, [(1, 2, 3), (1, 4, 5), (1, 6, 7)]), 3)
    with pytest.raises(BudgetExceeded):
        buchberger(d.polynomials(), budget=3)


def random_homogeneous(R, rnd, deg=2, terms=3):
    out = []
    for _ in range(terms):
        e = [0] * R.nvars
        for _ in range(deg):
            e[rnd.randrange(R.nvars)] += 1
        out.append((R.monomial_of(e), rnd.randint(-2, 2)))
    return R.from_terms(out)


def to_sympy(p, syms):
    return sum(sympy.Rational(c) * sympy.prod([s ** k for s, k in zip(syms, e)]) for e, c in p.terms.items())


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(["lex", "grevlex"]))
def test_buchberger_against_sympy(seed, kind):
    rnd = random.Random(seed)
    order = lex(3) if kind == "lex" else grevlex(3)
    R = PolyRing(["a", "b", "c"], order)
    gens = [g for g in (random_homogeneous(R, rnd) for _ in range(3)) if not g.is_zero()]
    if not gens:
        return
    gb = buchberger(gens, budget=5000)
    assert is_groebner(gb.elements).verdict and is_reduced(gb.elements)
    for g in gens:
        assert gb.contains(g)
        assert any(l.divides(g.lead_monomial()) for l in gb.lead_monomials())
    syms = sympy.symbols("a b c")
    ref = sympy.groebner([to_sympy(g, syms) for g in gens], *syms, order=kind, domain="QQ")
    mine = {sympy.expand(to_sympy(p, syms)) for p in gb.elements}
    assert mine == {sympy.expand(p) for p in ref.exprs}


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_initial_ideal_inclusions(seed):
    rnd = random.Random(seed)
    R = PolyRing(["a", "b", "c"], grevlex(3))
    I = [random_homogeneous(R, rnd) for _ in range(2)]
    J = [random_homogeneous(R, rnd) for _ in range(2)]
    I = [p for p in I if not p.is_zero()]
    J = [p for p in J if not p.is_zero()]
    if not I or not J:
        return
    inI, inJ = initial_ideal(I), initial_ideal(J)
    inSum = initial_ideal(I + J)
    assert all(inSum.contains(g) for g in inI.sum(inJ).generators)
    inCap = MonomialIdeal(p.lead_monomial() for p in intersect(I, J))
    meet = inI.intersection(inJ)
    assert all(meet.contains(g) for g in inCap.generators)


def test_gf2_coefficients():
    R = matrix_ring(2, 3, field=PrimeField(2))
    from itertools import combinations
    gens = [minor(R, (1, 2), c) for c in combinations(range(1, 4), 2)]
    assert is_groebner(gens).verdict


def test_search_small_graphs():
    rows = necessity_search(2, 2, 3)
    assert len(rows) == 7
    assert all(r["lcm_closed"] == r["gb"] for r in rows)
    assert all(r["lcm_closed"] and r["gb"] for r in rows if len(r["facets"]) == 1)


def test_search_intervals_no_counterexample():
    rows = necessity_search(3, 3, 5, intervals_only=True)
    assert rows and not any(r["counterexample"] for r in rows)
