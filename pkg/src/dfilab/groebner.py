"""Buchberger's algorithm, Groebner-basis verification and ideal intersection.

Polynomials are handled internally as ``{exponents: coeff}`` dicts; the
public functions accept and return :class:`~dfilab.algebra.Polynomial`.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .algebra import (Monomial, Polynomial, PolyRing, TermOrder, elimination_order)
from .config import get_caps
from .errors import BudgetExceeded, InputError


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class _Elt:
    """A basis element with its cached lead data."""

    __slots__ = ("terms", "lead", "lc")

    def __init__(self, terms, key):
        self.terms = terms
        self.lead = max(terms, key=key)
        self.lc = terms[self.lead]


def _axpy(F, f: dict, c, shift, g: dict):
    """f - c * x^shift * g, in place on f."""
    for e, v in g.items():
        e2 = tuple(a + b for a, b in zip(e, shift))
        s = F.sub(f.get(e2, F.zero), F.mul(c, v))
        if s == 0:
            f.pop(e2, None)
        else:
            f[e2] = s


def _reduce(f: dict, basis: Sequence[_Elt], key, F, full: bool = True) -> dict:
    """Normal form of ``f`` modulo ``basis``; ``full=False`` stops at the first irreducible lead."""
    f = dict(f)
    rem: dict = {}
    while f:
        lt = max(f, key=key)
        for g in basis:
            if _divides(g.lead, lt):
                _axpy(F, f, F.div(f[lt], g.lc), _sub(lt, g.lead), g.terms)
                break
        else:
            if not full:
                f.update(rem)
                return f
            rem[lt] = f.pop(lt)
    return rem


def _spoly(f: _Elt, g: _Elt, F) -> dict:
    L = _lcm(f.lead, g.lead)
    out = {}
    _axpy(F, out, F.neg(F.inv(f.lc)), _sub(L, f.lead), f.terms)
    _axpy(F, out, F.inv(g.lc), _sub(L, g.lead), g.terms)
    return out


def _coprime(a, b) -> bool:
    return not any(x and y for x, y in zip(a, b))


@dataclass
class GroebnerBasis:
    """Reduced, monic Groebner basis, sorted by descending lead term."""

    ring: PolyRing
    elements: list[Polynomial]
    stats: dict = field(default_factory=dict)

    @property
    def order(self) -> TermOrder:
        return self.ring.order

    def lead_monomials(self) -> list[Monomial]:
        return [p.lead_monomial() for p in self.elements]

    def reduce(self, f: Polynomial) -> Polynomial:
        key = self.ring.order.key
        basis = [_Elt(p.terms, key) for p in self.elements]
        return Polynomial(self.ring, _reduce(_recast(f, self.ring).terms, basis, key, self.ring.field))

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _recast(f: Polynomial, ring: PolyRing) -> Polynomial:
    if f.ring is ring:
        return f
    if f.ring.variables != ring.variables:
        raise InputError("polynomials live in different rings")
    return Polynomial(ring, {e: ring.field(c) for e, c in f.terms.items()} if ring.field != f.ring.field
                      else f.terms)


def _setup(gens: Sequence[Polynomial], order: TermOrder | None) -> PolyRing:
    gens = [g for g in gens]
    if not gens:
        raise InputError("need at least one generator")
    ring = gens[0].ring
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
    return ring


def _interreduce(elts: list[_Elt], key, F) -> list[dict]:
    # drop elements whose lead is divisible by another lead, then reduce tails
    elts = sorted(elts, key=lambda e: key(e.lead))
    minimal = []
    for k, e in enumerate(elts):
        if not any(_divides(o.lead, e.lead) and (o.lead != e.lead or j < k)
                   for j, o in enumerate(elts) if j != k):
            minimal.append(e)
    out = []
    for k, e in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = dict(e.terms)
        lead_c = tail.pop(e.lead)
        red = _reduce(tail, others, key, F)
        inv = F.inv(lead_c)
        poly = {t: F.mul(inv, c) for t, c in red.items()}
        poly[e.lead] = F.one
        out.append(poly)
    return out


def buchberger(gens: Sequence[Polynomial], order: TermOrder | None = None,
               budget: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are processed by the normal strategy (smallest lcm first, ties
    broken by the term order then by index), skipping pairs with coprime
    leads and pairs eliminated by the chain criterion.
    """
    ring = _setup(gens, order)
    key, F = ring.order.key, ring.field
    budget = get_caps().budget if budget is None else budget
    basis: list[_Elt] = []
    for g in gens:
        g = _recast(g, ring)
        if not g.is_zero():
            basis.append(_Elt(dict(g.terms), key))
    if not basis:
        raise InputError("all generators are zero")

    heap: list = []
    pending: set = set()

    def push(i, j):
        L = _lcm(basis[i].lead, basis[j].lead)
        heapq.heappush(heap, (sum(L), key(L), i, j))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    steps = skipped = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        fi, fj = basis[i], basis[j]
        if _coprime(fi.lead, fj.lead):
            skipped += 1
            continue
        L = _lcm(fi.lead, fj.lead)
        if any(k != i and k != j and _divides(basis[k].lead, L)
               and (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending
               for k in range(len(basis))):
            skipped += 1
            continue
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"Buchberger exceeded {budget} reductions")
        h = _reduce(_spoly(fi, fj, F), basis, key, F, full=False)
        if h:
            basis.append(_Elt(h, key))
            new = len(basis) - 1
            for k in range(new):
                push(k, new)
    polys = _interreduce(basis, key, F)
    elements = sorted((Polynomial(ring, p) for p in polys), key=lambda p: key(p.lead_exp()), reverse=True)
    return GroebnerBasis(ring, elements, {"reductions": steps, "skipped_pairs": skipped})


@dataclass
class SPairCheck:
    """Outcome of the Buchberger criterion on a fixed generating set."""

    verdict: bool
    pair: tuple[int, int] | None = None
    remainder: Polynomial | None = None
    pairs_checked: int = 0

    def __bool__(self):
        return self.verdict


def is_groebner(gens: Sequence[Polynomial], order: TermOrder | None = None) -> SPairCheck:
    """Whether every S-polynomial of ``gens`` reduces to zero modulo ``gens``.

    Pairs with coprime leads are skipped (they always reduce to zero). On
    failure the first offending pair (0-based indices) and its fully reduced
    remainder are returned.
    """
    ring = _setup(gens, order)
    key, F = ring.order.key, ring.field
    basis = [_Elt(dict(_recast(g, ring).terms), key) for g in gens]
    checked = 0
    for i, j in combinations(range(len(basis)), 2):
        if _coprime(basis[i].lead, basis[j].lead):
            continue
        checked += 1
        r = _reduce(_spoly(basis[i], basis[j], F), basis, key, F)
        if r:
            return SPairCheck(False, (i, j), Polynomial(ring, r), checked)
    return SPairCheck(True, None, None, checked)


def is_reduced(gb: Sequence[Polynomial]) -> bool:
    """Monic, no lead divides another, no term of any element divisible by another's lead."""
    leads = [p.lead_exp() for p in gb]
    for k, p in enumerate(gb):
        if p.lead_coeff() != 1:
            return False
        for j, lj in enumerate(leads):
            if j != k and any(_divides(lj, e) for e in p.terms):
                return False
    return True


def intersect(I_gens: Sequence[Polynomial], J_gens: Sequence[Polynomial],
              order: TermOrder | None = None, budget: int | None = None) -> list[Polynomial]:
    """Generators (in fact a reduced Groebner basis) of ``I cap J``.

    Eliminates ``t`` from ``t*I + (1 - t)*J`` under a block order with ``t``
    first and the active order on the original variables.
    """
    ring = _setup(list(I_gens) + list(J_gens), order)
    big = PolyRing(("t",) + ring.variables, elimination_order(1, ring.order), ring.field)
    F = ring.field

    def lift(p: Polynomial, t_power: int, c) -> dict:
        return {(t_power,) + e: F.mul(c, v) for e, v in _recast(p, ring).terms.items()}

    gens = [Polynomial(big, lift(f, 1, F.one)) for f in I_gens]
    for g in J_gens:
        terms = lift(g, 0, F.one)
        for e, v in lift(g, 1, F.neg(F.one)).items():
            terms[e] = v
        gens.append(Polynomial(big, terms))
    gb = buchberger(gens, budget=budget)
    out = [Polynomial(ring, {e[1:]: c for e, c in p.terms.items()})
           for p in gb.elements if all(e[0] == 0 for e in p.terms)]
    return sorted(out, key=lambda p: ring.order.key(p.lead_exp()), reverse=True)


def initial_ideal(gens: Sequence[Polynomial], order: TermOrder | None = None, budget=None):
    """Monomial ideal of lead terms of a Groebner basis of ``(gens)``."""
    from .lcmlattice import MonomialIdeal
    return MonomialIdeal(buchberger(gens, order, budget).lead_monomials())


def conca_pair_check(F_gens: Sequence[Polynomial], G_gens: Sequence[Polynomial],
                     order: TermOrder | None = None, budget: int | None = None) -> dict:
    """For all f in F, g in G, look for h in I cap J with lead lcm(in f, in g).

    ``F`` and ``G`` must be Groebner bases of ``I`` and ``J``. Then the
    verdict says whether ``F u G`` is a Groebner basis of ``I + J``. The
    search runs against a Groebner basis of the intersection: a suitable
    ``h`` exists iff some basis lead divides the lcm.
    """
    ring = _setup(list(F_gens) + list(G_gens), order)
    cap = intersect(F_gens, G_gens, ring.order, budget)
    caps_leads = [p.lead_exp() for p in cap]
    witnesses, missing = [], []
    for a, f in enumerate(F_gens):
        fl = _recast(f, ring).lead_exp()
        for b, g in enumerate(G_gens):
            gl = _recast(g, ring).lead_exp()
            L = _lcm(fl, gl)
            hit = next((k for k, le in enumerate(caps_leads) if _divides(le, L)), None)
            if hit is None:
                missing.append((a, b))
            else:
                h = cap[hit].scale(1, _sub(L, caps_leads[hit]))
                witnesses.append({"pair": (a, b), "lcm": str(ring.monomial_of(L)), "h_lead": str(h.lead_monomial()),
                                  "from": str(cap[hit].lead_monomial())})
    return {"verdict": not missing, "missing": missing, "witnesses": witnesses,
            "intersection_size": len(cap)}


def necessity_search(r: int, n: int, m_max: int, order: TermOrder | None = None,
                     intervals_only: bool = False, limit: int | None = None) -> list[dict]:
    """Tabulate lcm-closed vs. Groebner verdicts over pure complexes on ``[m_max]``.

    Every nonempty set of ``n``-subsets of ``[m_max]`` is tried (or, with
    ``intervals_only``, every set of pairwise incomparable intervals of
    length >= n). No relabelling dedup is done: diagonal orders are not
    symmetric under vertex permutations. Rows with ``lcm_closed=False`` and
    ``gb=True`` are flagged as counterexample candidates.
    """
    from .dfi import build_rdfi, is_lcm_closed
    from .simplicial import SimplicialComplex

    if r != n:
        raise InputError("the search is only defined for r = n")
    limit = get_caps().search if limit is None else limit
    if intervals_only:
        ivs = [(a, b) for a in range(1, m_max + 1) for b in range(a + n - 1, m_max + 1)]
        families = []
        for k in range(1, len(ivs) + 1):
            for fam in combinations(ivs, k):
                if all(not (a1 <= a2 and b2 <= b1) and not (a2 <= a1 and b1 <= b2)
                       for (a1, b1), (a2, b2) in combinations(fam, 2)):
                    families.append(SimplicialComplex.from_intervals(m_max, fam, n))
    else:
        faces = list(combinations(range(1, m_max + 1), n))
        families = (SimplicialComplex(m_max, [faces[b] for b in range(len(faces)) if mask >> b & 1])
                    for mask in range(1, 1 << len(faces)))
    rows = []
    for idx, delta in enumerate(families):
        if idx >= limit:
            raise BudgetExceeded(f"search exceeds {limit} complexes")
        dfi = build_rdfi(delta, n, r, order)
        closed = is_lcm_closed(dfi).verdict
        gb = is_groebner(dfi.polynomials()).verdict
        rows.append({"index": idx, "facets": [list(f) for f in delta.facets],
                     "cliques": [list(c) for c in dfi.decomposition.cliques],
                     "lcm_closed": closed, "gb": gb, "counterexample": (not closed) and gb})
    return rows
