"""r-determinantal facet ideals and their structural conditions."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .algebra import (QQ, Field, Monomial, Polynomial, PolyRing, TermOrder, matrix_ring, minor,
                      permuted_row_lex, is_diagonal)
from .errors import LozengeViolated, NotPure, RankTooLarge, WrongShape
from .simplicial import CliqueDecomposition, Face, SimplicialComplex, clique_complex


def bracket(rows, cols) -> str:
    """``[a|b]`` notation for a minor."""
    return "[" + ",".join(map(str, rows)) + "|" + ",".join(map(str, cols)) + "]"


@dataclass
class Generator:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    poly: Polynomial

    @property
    def lead(self) -> Monomial:
        return self.poly.lead_monomial()

    def __str__(self):
        return bracket(self.rows, self.cols)


@dataclass
class RDfi:
    """The r-DFI of ``delta`` inside the generic ``n x m`` matrix."""

    n: int
    m: int
    r: int
    delta: SimplicialComplex
    decomposition: CliqueDecomposition
    ring: PolyRing
    generators: list[Generator]

    @property
    def order(self) -> TermOrder:
        return self.ring.order

    def polynomials(self) -> list[Polynomial]:
        return [g.poly for g in self.generators]

    def lead_ideal(self):
        """Monomial ideal generated by the lead terms of the facet minors."""
        from .lcmlattice import MonomialIdeal
        return MonomialIdeal(g.lead for g in self.generators)

    def initial_ideal(self, budget=None):
        """``in_<(J)`` from a full Groebner basis computation."""
        from .groebner import initial_ideal
        return initial_ideal(self.polynomials(), budget=budget)

    def clique_generators(self, clique) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Index pairs ``(a, b)`` of all r-minors with columns inside ``clique``."""
        return [(a, b) for b in combinations(sorted(clique), self.r)
                for a in combinations(range(1, self.n + 1), self.r)]

    def minor(self, rows, cols) -> Polynomial:
        return minor(self.ring, rows, cols)

    def with_order(self, order: TermOrder) -> RDfi:
        return build_rdfi(self.delta, self.n, self.r, order, self.ring.field)


def build_rdfi(delta: SimplicialComplex, n: int, r: int | None = None,
               order: TermOrder | None = None, field: Field = QQ) -> RDfi:
    """Generators ``[a|b]`` for every r-subset ``a`` of rows and facet ``b``."""
    r = delta.r if r is None else r
    if delta.facets and delta.r != r:
        raise NotPure(f"facets have {delta.r} vertices, expected {r}")
    if r > n:
        raise RankTooLarge(f"r = {r} exceeds the {n} matrix rows")
    ring = matrix_ring(n, delta.m, order, field)
    gens = [Generator(a, b, minor(ring, a, b))
            for b in delta.facets for a in combinations(range(1, n + 1), r)]
    return RDfi(n, delta.m, r, delta, clique_complex(delta, r), ring, gens)


@dataclass
class ConditionReport:
    verdict: bool
    witnesses: list[dict] = field(default_factory=list)
    order: str = ""

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "order": self.order, "witnesses": self.witnesses}


def is_lcm_closed(dfi: RDfi) -> ConditionReport:
    """Cross-clique lcm condition for the order attached to ``dfi``.

    For generators from distinct maximal cliques with non-coprime leads
    (neither supported on the clique intersection) some r-minor on the
    intersection must have its lead dividing the lcm of the two leads.
    """
    ring = dfi.ring
    lead = {}

    def lead_of(a, b):
        if (a, b) not in lead:
            lead[(a, b)] = minor(ring, a, b).lead_monomial()
        return lead[(a, b)]

    cliques = dfi.decomposition.cliques
    witnesses, ok = [], True
    for i, j in combinations(range(len(cliques)), 2):
        common = set(cliques[i]) & set(cliques[j])
        shared = dfi.clique_generators(common) if len(common) >= dfi.r else []
        left = [(a, b) for a, b in dfi.clique_generators(cliques[i]) if not set(b) <= common]
        right = [(a, b) for a, b in dfi.clique_generators(cliques[j]) if not set(b) <= common]
        for p in left:
            lp = lead_of(*p)
            for q in right:
                lq = lead_of(*q)
                if lp.is_coprime(lq):
                    continue
                L = lp.lcm(lq)
                hit = next((c for c in shared if lead_of(*c).divides(L)), None)
                entry = {"cliques": [list(cliques[i]), list(cliques[j])],
                         "pair": [bracket(*p), bracket(*q)], "lcm": str(L)}
                if hit is None:
                    ok = False
                    entry["missing"] = "no minor on the clique intersection divides the lcm"
                else:
                    entry["resolved_by"] = bracket(*hit)
                witnesses.append(entry)
    if not ok:
        witnesses = [w for w in witnesses if "missing" in w]
    return ConditionReport(ok, witnesses, dfi.order.describe())


def lcm_closed_sweep(dfi: RDfi) -> list[dict]:
    """Re-check lcm-closedness under every row-permuted row-major lex order."""
    out = []
    for perm in permutations(range(1, dfi.n + 1)):
        order = permuted_row_lex(dfi.n, dfi.m, perm)
        rep = is_lcm_closed(dfi.with_order(order))
        out.append({"row_order": list(perm), "diagonal": is_diagonal(order, dfi.n, dfi.m),
                    "verdict": rep.verdict})
    return out


def is_unit_interval(dfi: RDfi) -> bool:
    return all(c[-1] - c[0] + 1 == len(c) for c in dfi.decomposition.cliques)


def is_closed_bei(dfi: RDfi) -> bool:
    """Closed-graph condition for binomial edge ideals (``r = n = 2``)."""
    if not (dfi.r == dfi.n == 2):
        raise WrongShape("closed-BEI check needs r = n = 2")
    edges = set(dfi.delta.facets)
    for (i, j), (k, l) in combinations(sorted(edges), 2):
        if i == k and tuple(sorted((j, l))) not in edges:
            return False
        if j == l and tuple(sorted((i, k))) not in edges:
            return False
    return True


def is_closed_dfi(dfi: RDfi) -> bool:
    """Pairwise coprime leads across maximal cliques, for ``r = n`` under the lozenge condition."""
    if dfi.r != dfi.n:
        raise WrongShape("closed-DFI check needs r = n")
    cliques = dfi.decomposition.cliques
    worst, _ = clique_intersection_profile(dfi)
    if worst > dfi.n - 1:
        raise LozengeViolated(f"two maximal cliques share {worst} > n - 1 vertices")
    rows = tuple(range(1, dfi.n + 1))
    leads = [[minor(dfi.ring, rows, b).lead_monomial() for b in combinations(c, dfi.n)] for c in cliques]
    return all(u.is_coprime(v) for i, j in combinations(range(len(cliques)), 2)
               for u in leads[i] for v in leads[j])


def clique_intersection_profile(dfi: RDfi | CliqueDecomposition) -> tuple[int, dict]:
    """Largest pairwise clique intersection and the full ``{(i, j): size}`` table."""
    dec = dfi.decomposition if isinstance(dfi, RDfi) else dfi
    cl = dec.cliques
    table = {(i, j): len(set(cl[i]) & set(cl[j])) for i, j in combinations(range(len(cl)), 2)}
    return max(table.values(), default=0), table


def cross_clique_coprime(dfi: RDfi) -> tuple[bool, list]:
    """Whether generators from distinct cliques always have coprime leads; offending pairs."""
    cl = dfi.decomposition.cliques
    bad = []
    leads = [{(a, b): minor(dfi.ring, a, b).lead_monomial() for a, b in dfi.clique_generators(c)} for c in cl]
    for i, j in combinations(range(len(cl)), 2):
        for p, u in leads[i].items():
            for q, v in leads[j].items():
                if p != q and not u.is_coprime(v):
                    bad.append((bracket(*p), bracket(*q)))
    return not bad, bad


def facet_key(face: Face) -> str:
    return "{" + ",".join(map(str, face)) + "}"
