"""Worked examples rerun as quick pass/fail checks (``dfilab selftest``)."""
from __future__ import annotations

from typing import Callable

from .algebra import X, Monomial, row_major_lex
from .simplicial import SimplicialComplex, clique_complex, i_nonfaces


def _index_sets():
    from .encomplex import index_set
    return (index_set((1, 1, 1), (1, 2, 3, 4, 5, 6)) == [(1, 1), (1, 2), (2, 3), (2, 4), (3, 5), (3, 6)]
            and index_set((1, 0, 2), (1, 2, 3, 4, 5, 6)) == [(1, 1), (1, 2), (3, 4), (3, 5), (3, 6)]
            and index_set((2, 1), (1, 2, 4, 5, 6)) == [(1, 1), (1, 2), (1, 4), (2, 5), (2, 6)])


def _m_k():
    from .lcmlattice import m_k_monomial
    return m_k_monomial((1, 2, 1), (1, 2, 3, 4)) == Monomial.of((1, 1), (2, 2), (2, 3), (3, 4))


def _lcm_closed_interval():
    from .dfi import build_rdfi, is_lcm_closed
    return is_lcm_closed(build_rdfi(SimplicialComplex.from_intervals(5, [(1, 4), (2, 5)], 3), 3)).verdict


def _gb_verdicts():
    from .dfi import build_rdfi, is_lcm_closed
    from .groebner import is_groebner
    a = build_rdfi(SimplicialComplex.from_intervals(5, [(1, 4), (2, 5)], 3), 3)
    b = build_rdfi(SimplicialComplex.from_intervals(3, [(1, 2), (2, 3)], 2), 3)
    c = build_rdfi(SimplicialComplex(7, [(1, 2, 3), (1, 4, 5), (1, 6, 7)]), 3)
    return (is_groebner(a.polynomials()).verdict and is_groebner(b.polynomials()).verdict
            and not is_lcm_closed(b).verdict and not is_groebner(c.polynomials()).verdict)


def _nonfaces():
    g1 = clique_complex(SimplicialComplex(4, [(3, 4), (2, 4), (1, 4), (1, 3), (1, 2)]))
    g2 = clique_complex(SimplicialComplex(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]))
    g3 = clique_complex(SimplicialComplex(4, [(1, 2), (1, 4), (2, 4), (2, 3), (3, 4)]))
    return (g1.cliques == ((1, 2, 4), (1, 3, 4)) and i_nonfaces(g1, 1, 4) == [(1, 2, 3, 4)]
            and not i_nonfaces(g2, 1, 4) and (1, 3, 4) in i_nonfaces(g3, 1, 3))


def _cycle():
    from .encomplex import build_en_complex, is_nonbounding_cycle
    g1 = clique_complex(SimplicialComplex(4, [(3, 4), (2, 4), (1, 4), (1, 3), (1, 2)]))
    C = build_en_complex(g1, 3)
    z = C.element([(1, X(2, 2), ((0, 0, 0), (1, 3, 4))), (-1, X(2, 3), ((0, 0, 0), (1, 2, 4)))])
    return is_nonbounding_cycle(C, 1, z) == (True, False)


def _betti_table():
    from .dfi import build_rdfi
    from .lcmlattice import gpw_betti
    t = gpw_betti(build_rdfi(SimplicialComplex.from_intervals(4, [(1, 3), (2, 4)], 3), 4).lead_ideal())
    rows = t.rows()
    return (t.totals == (1, 8, 17, 16, 6) and rows[2][1:3] == (8, 7) and rows[4][2:5] == (10, 16, 6)
            and set(rows) == {0, 2, 4})


def _cm():
    from .cm import cor_cmness_check, pd_and_cm
    from .dfi import build_rdfi
    ok = cor_cmness_check(build_rdfi(SimplicialComplex(5, [(1, 2, 3), (3, 4, 5)]), 3))["verdict"]
    bad = build_rdfi(SimplicialComplex.from_intervals(4, [(1, 3), (2, 4)], 3), 4)
    pd, ht, cm = pd_and_cm(bad.lead_ideal())
    return ok and pd == 4 and not cm


def _boolean_sphere():
    from .poset import boolean_lattice, proper_part, reduced_homology
    for k in range(2, 5):
        h = {d: v for d, v in reduced_homology(proper_part(boolean_lattice(range(k)))).items() if v}
        if h != {k - 2: 1}:
            return False
    return True


CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("index sets", _index_sets),
    ("m_k monomial", _m_k),
    ("lcm-closed interval complex", _lcm_closed_interval),
    ("Groebner verdicts", _gb_verdicts),
    ("1-nonfaces of the three graphs", _nonfaces),
    ("non-bounding cycle", _cycle),
    ("Betti table of the non-CM example", _betti_table),
    ("Cohen-Macaulay verdicts", _cm),
    ("Boolean lattice spheres", _boolean_sphere),
]


def run_all() -> list[tuple[str, bool, str]]:
    out = []
    for name, fn in CHECKS:
        try:
            out.append((name, bool(fn()), ""))
        except Exception as exc:  # report, keep going
            out.append((name, False, f"{type(exc).__name__}: {exc}"))
    return out
