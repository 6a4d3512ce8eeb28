"""Height, projective dimension and Cohen-Macaulay verdicts for monomial ideals."""
from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from .algebra import QQ, Field, Polynomial, TermOrder, is_diagonal
from .dfi import RDfi, clique_intersection_profile, cross_clique_coprime, is_lcm_closed, is_unit_interval
from .errors import HypothesisFailed
from .groebner import initial_ideal, intersect
from .lcmlattice import BettiTable, MonomialIdeal, gpw_betti

TRANSFER_NOTE = "initial ideal Cohen-Macaulay implies the ideal itself is Cohen-Macaulay; the converse can fail"


def _radical_supports(M: MonomialIdeal) -> list[frozenset]:
    sets = {frozenset(v for v, _ in g.items) for g in M.generators}
    return sorted((s for s in sets if not any(t < s for t in sets)), key=lambda s: (len(s), sorted(s)))


def height_monomial(M: MonomialIdeal) -> int:
    """Smallest set of variables meeting every generator's support (branch and bound)."""
    if not isinstance(M, MonomialIdeal):
        M = MonomialIdeal(M)
    edges = _radical_supports(M)
    if not edges:
        return 0
    if any(not e for e in edges):
        raise ValueError("the unit ideal has no height")
    # greedy cover gives the initial bound
    best = set()
    left = list(edges)
    while left:
        counts: dict = defaultdict(int)
        for e in left:
            for v in e:
                counts[v] += 1
        v = max(sorted(counts), key=lambda x: counts[x])
        best.add(v)
        left = [e for e in left if v not in e]
    bound = [len(best)]

    def search(chosen: frozenset, remaining: list):
        if len(chosen) >= bound[0]:
            return
        if not remaining:
            bound[0] = len(chosen)
            return
        # a lower bound: disjoint uncovered edges each need their own variable
        used, disjoint = set(), 0
        for e in remaining:
            if not (e & used):
                used |= e
                disjoint += 1
        if len(chosen) + disjoint >= bound[0]:
            return
        pick = min(remaining, key=len)
        for v in sorted(pick):
            search(chosen | {v}, [e for e in remaining if v not in e])

    search(frozenset(), edges)
    return bound[0]


def pd_and_cm(M: MonomialIdeal, field: Field = QQ, betti: BettiTable | None = None) -> tuple[int, int, bool]:
    """``(pd S/M, ht M, pd == ht)``."""
    if not isinstance(M, MonomialIdeal):
        M = MonomialIdeal(M)
    table = gpw_betti(M, field) if betti is None else betti
    pd, ht = table.pd, height_monomial(M)
    assert ht <= pd, f"height {ht} exceeds projective dimension {pd}"
    return pd, ht, pd == ht


def cm_report(M: MonomialIdeal, field: Field = QQ) -> dict:
    pd, ht, ok = pd_and_cm(M, field)
    return {"ht": ht, "pd": pd, "cm_initial": ok, "cm_transfer_note": TRANSFER_NOTE}


def cm_sum_criterion(I_gens: Sequence[Polynomial], J_gens: Sequence[Polynomial],
                     order: TermOrder | None = None, field: Field | None = None, budget=None) -> dict:
    """Check ``in(I cap J) = in(I) cap in(J) = in(I) in(J)`` and the CM conclusion for ``I + J``."""
    inI = initial_ideal(I_gens, order, budget=budget)
    inJ = initial_ideal(J_gens, order, budget=budget)
    gb = intersect(I_gens, J_gens, order, budget=budget)
    inIJ = MonomialIdeal(g.lead_monomial() for g in gb)
    meet, prod = inI.intersection(inJ), inI.product(inJ)
    report = {
        "in_intersection_eq_intersection": inIJ == meet,
        "intersection_eq_product": meet == prod,
    }
    report["hypotheses_hold"] = all(report.values())
    if report["hypotheses_hold"]:
        F = field if field is not None else (I_gens[0].ring.field if I_gens else QQ)
        cmI, cmJ = pd_and_cm(inI, F)[2], pd_and_cm(inJ, F)[2]
        report["cm_initial_I"], report["cm_initial_J"] = cmI, cmJ
        if cmI and cmJ:
            inSum = initial_ideal(list(I_gens) + list(J_gens), order, budget=budget)
            pd, ht, ok = pd_and_cm(inSum, F)
            report.update({"sum_pd": pd, "sum_ht": ht, "cm_initial_sum": ok,
                           "cm_transfer_note": TRANSFER_NOTE})
    return report


def tensor_betti(a: BettiTable, b: BettiTable) -> dict[tuple[int, int], int]:
    """Coarse Betti numbers of the tensor product of two resolutions."""
    out: dict = defaultdict(int)
    for (i, j), x in a.coarse.items():
        for (k, l), y in b.coarse.items():
            out[(i + k, j + l)] += x * y
    return dict(sorted(out.items()))


def cor_cmness_check(dfi: RDfi, field: Field | None = None) -> dict:
    """Check the small-intersection hypotheses, coprimality of cross-clique leads, and pd = ht."""
    F = dfi.ring.field if field is None else field
    worst, _ = clique_intersection_profile(dfi)
    case = None
    if worst <= dfi.r - 1 and is_lcm_closed(dfi).verdict:
        case = "lcm-closed"
    elif (is_unit_interval(dfi) and worst <= max(0, 2 * dfi.r - dfi.n - 1)
          and is_diagonal(dfi.order, dfi.n, dfi.m)):
        case = "unit-interval"
    if case is None:
        raise HypothesisFailed(
            f"largest clique intersection is {worst}; need lcm-closed with <= {dfi.r - 1} "
            f"or unit interval with <= {max(0, 2 * dfi.r - dfi.n - 1)}")
    coprime, bad = cross_clique_coprime(dfi)
    pd, ht, ok = pd_and_cm(dfi.lead_ideal(), F)
    return {"case": case, "coprime_leads": coprime, "offending_pairs": [list(p) for p in bad[:10]],
            "ht": ht, "pd": pd, "cm_initial": ok, "cm_transfer_note": TRANSFER_NOTE,
            "verdict": coprime and ok}
