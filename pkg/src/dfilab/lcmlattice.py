"""lcm-lattices of monomial ideals and multigraded Betti numbers of ``S/M``.

``gpw_betti`` reads Betti numbers off the reduced homology of open lattice
intervals ``(1, m)``; ``taylor_betti_oracle`` gets them independently from the
Taylor complex, one multidegree at a time.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .algebra import QQ, Field, Monomial
from .config import get_caps
from .errors import ComplexTooLarge, LatticeTooLarge, OracleTooLarge, ShapeMismatch
from .linalg import rank
from .poset import FinitePoset, reduced_homology
from .simplicial import Face


class MonomialIdeal:
    """Monomial ideal stored by its minimal generators, sorted by (degree, variables)."""

    def __init__(self, generators: Iterable[Monomial]):
        gens = sorted(set(generators))
        if any(g.degree == 0 for g in gens):
            raise ValueError("unit ideal is not supported")
        minimal = [g for g in gens if not any(h != g and h.divides(g) for h in gens)]
        self.generators: tuple[Monomial, ...] = tuple(minimal)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return "MonomialIdeal(" + ", ".join(map(str, self.generators)) + ")"

    def contains(self, mono: Monomial) -> bool:
        return any(g.divides(mono) for g in self.generators)

    def variables(self) -> list:
        return sorted({v for g in self.generators for v in g.support})

    def intersection(self, other: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(a.lcm(b) for a in self for b in other)

    def product(self, other: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(a * b for a in self for b in other)

    def sum(self, other: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(self.generators + other.generators)


# ---------------------------------------------------------------------------
# lattice


class LcmLattice:
    """Join-closure of the generators under lcm, plus the bottom element 1.

    Elements are sorted by (degree, sparse lex); index 0 is always 1 and the
    last index is the lcm of all generators.
    """

    def __init__(self, ideal: MonomialIdeal, cap: int | None = None):
        cap = get_caps().lattice if cap is None else cap
        self.ideal = ideal
        self.variables = ideal.variables()
        vidx = {v: k for k, v in enumerate(self.variables)}
        nv = len(self.variables)

        def dense(mono):
            e = [0] * nv
            for v, k in mono.items:
                e[vidx[v]] = k
            return tuple(e)

        atoms = [dense(g) for g in ideal.generators]
        seen = {(0,) * nv, *atoms}
        frontier = list(dict.fromkeys(atoms))
        while frontier:
            nxt = []
            for e in frontier:
                for a in atoms:
                    j = tuple(max(x, y) for x, y in zip(e, a))
                    if j not in seen:
                        seen.add(j)
                        nxt.append(j)
                        if len(seen) > cap:
                            raise LatticeTooLarge(f"lcm-lattice exceeds {cap} elements")
            frontier = nxt
        seen = list(seen)
        mons = [Monomial((self.variables[k], x) for k, x in enumerate(e) if x) for e in seen]
        order = sorted(range(len(mons)), key=lambda k: mons[k])
        self.monomials: list[Monomial] = [mons[k] for k in order]
        E = np.array([list(e) for e in seen], dtype=np.int64).reshape(len(seen), nv)[order]
        self.exponents = E
        # leq[a, b] <=> element a divides element b
        self.leq = np.all(E[:, None, :] <= E[None, :, :], axis=2)
        self.index = {mono: k for k, mono in enumerate(self.monomials)}
        self.atoms = [self.index[Monomial((self.variables[k], x) for k, x in enumerate(a) if x)]
                      for a in atoms]
        self._homology_cache: dict = {}

    def __len__(self):
        return len(self.monomials)

    @property
    def bottom(self) -> Monomial:
        return self.monomials[0]

    @property
    def top(self) -> Monomial:
        return self.monomials[-1]

    def join(self, a: Monomial, b: Monomial) -> Monomial:
        return a.lcm(b)

    def poset(self) -> FinitePoset:
        lt = self.leq & ~np.eye(len(self), dtype=bool)
        return FinitePoset(self.monomials, [np.flatnonzero(row).tolist() for row in lt])

    def covers(self) -> list[tuple[Monomial, Monomial]]:
        P = self.poset()
        return [(self.monomials[a], self.monomials[b]) for a, b in P.covers()]

    def open_interval(self, top: Monomial) -> FinitePoset:
        """``(1, top)``: non-unit lattice elements strictly dividing ``top``."""
        t = self.index[top]
        members = [k for k in np.flatnonzero(self.leq[:, t]) if k != 0 and k != t]
        sub = self.leq[np.ix_(members, members)] & ~np.eye(len(members), dtype=bool)
        return FinitePoset([self.monomials[k] for k in members],
                           [np.flatnonzero(row).tolist() for row in sub])

    def crosscut_faces(self, top: Monomial) -> list[tuple[int, ...]]:
        """Sets of generators below ``top`` whose lcm is a proper divisor of ``top``.

        By the crosscut theorem (atoms of ``[1, top]``) this complex has the
        homotopy type of the open interval, and it is usually far smaller
        than the order complex.
        """
        t = self.index[top]
        cap = get_caps().complex
        E = self.exponents
        target = E[t]
        below = [a for a in sorted(set(self.atoms)) if self.leq[a, t]]
        faces: list[tuple[int, ...]] = []

        def grow(face, lcm, start):
            for k in range(start, len(below)):
                nxt = np.maximum(lcm, E[below[k]])
                if np.array_equal(nxt, target):
                    continue
                f = face + (k,)
                faces.append(f)
                if len(faces) > cap:
                    raise ComplexTooLarge(f"crosscut complex exceeds {cap} faces")
                grow(f, nxt, k + 1)

        grow((), np.zeros_like(target), 0)
        return faces

    def interval_homology(self, top: Monomial, field: Field = QQ, model: str = "crosscut") -> dict[int, int]:
        """Reduced homology of ``(1, top)``, via the crosscut complex or the order complex."""
        key = (top, field, model)
        if key not in self._homology_cache:
            if model == "crosscut":
                h = reduced_homology(self.crosscut_faces(top), field)
            elif model == "order":
                h = reduced_homology(self.open_interval(top), field)
            else:
                raise ValueError(f"unknown model {model!r}")
            self._homology_cache[key] = h
        return self._homology_cache[key]

    def mobius(self) -> dict[Monomial, int]:
        """``mu(1, w)`` for every element ``w``."""
        mu = np.zeros(len(self), dtype=np.int64)
        mu[0] = 1
        for k in range(1, len(self)):
            below = np.flatnonzero(self.leq[:, k])
            mu[k] = -int(mu[below[below != k]].sum())
        return {m: int(mu[k]) for k, m in enumerate(self.monomials)}


def lcm_lattice(M: MonomialIdeal | Iterable[Monomial]) -> LcmLattice:
    if not isinstance(M, MonomialIdeal):
        M = MonomialIdeal(M)
    if not len(M):
        raise ValueError("need at least one generator")
    return LcmLattice(M)


# ---------------------------------------------------------------------------
# Betti tables


@dataclass
class BettiTable:
    """Multigraded Betti numbers of ``S/M``: ``{(i, multidegree): rank}``."""

    multigraded: dict = field(default_factory=dict)
    field_name: str = "QQ"

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.multigraded == other.multigraded

    def __getitem__(self, key):
        return self.multigraded.get(key, 0)

    @property
    def coarse(self) -> dict[tuple[int, int], int]:
        out: dict = defaultdict(int)
        for (i, mono), b in self.multigraded.items():
            out[(i, mono.degree)] += b
        return dict(sorted(out.items()))

    @property
    def totals(self) -> tuple[int, ...]:
        c = self.coarse
        top = max(i for i, _ in c)
        return tuple(sum(b for (i, _), b in c.items() if i == k) for k in range(top + 1))

    @property
    def pd(self) -> int:
        return max(i for (i, _), b in self.multigraded.items() if b)

    def rows(self) -> dict[int, tuple[int, ...]]:
        """Macaulay2 row layout: ``{j - i: (beta_{0,j}, beta_{1,j+1}, ...)}``."""
        c = self.coarse
        width = self.pd + 1
        out = {}
        for shift in sorted({j - i for i, j in c}):
            out[shift] = tuple(c.get((i, i + shift), 0) for i in range(width))
        return out

    def render(self) -> str:
        """Plain-text table in the Macaulay2 layout (``.`` for zero)."""
        rows = self.rows()
        width = self.pd + 1
        lo, hi = min(rows), max(rows)
        table = [[""] + [str(i) for i in range(width)],
                 ["total:"] + [str(t) for t in self.totals]]
        for s in range(lo, hi + 1):
            vals = rows.get(s, (0,) * width)
            table.append([f"{s}:"] + [str(v) if v else "." for v in vals])
        widths = [max(len(r[c]) for r in table) for c in range(width + 1)]
        return "\n".join(" ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in table)

    def to_json(self, multigraded: bool = False) -> list[dict]:
        if multigraded:
            return [{"i": i, "multidegree": str(m), "j": m.degree, "beta": b}
                    for (i, m), b in sorted(self.multigraded.items(), key=lambda t: (t[0][0], t[0][1]))]
        return [{"i": i, "j": j, "beta": b} for (i, j), b in self.coarse.items()]

    def __str__(self):
        return self.render()


def gpw_betti(M: MonomialIdeal | Iterable[Monomial], field: Field = QQ,
              lattice: LcmLattice | None = None, model: str = "crosscut") -> BettiTable:
    """``beta_{i,w}(S/M) = dim H~_{i-2}((1, w))`` for lattice elements ``w != 1``.

    ``model`` picks the complex used for the open interval: ``"order"`` is
    its order complex, ``"crosscut"`` the homotopy-equivalent atom complex.
    """
    L = lattice if lattice is not None else lcm_lattice(M)
    table = {(0, L.bottom): 1}
    for w in L.monomials[1:]:
        for d, h in L.interval_homology(w, field, model).items():
            if h:
                table[(d + 2, w)] = h
    return BettiTable(table, field.name)


def taylor_betti_oracle(M: MonomialIdeal | Iterable[Monomial], field: Field = QQ) -> BettiTable:
    """Betti numbers from the Taylor complex tensored with the field.

    In multidegree ``w`` the complex has a cell for each subset ``F`` of
    generators with ``lcm(F) = w``; the boundary keeps only faces whose lcm is
    still ``w`` (the others pick up a nonconstant monomial and vanish).
    """
    if not isinstance(M, MonomialIdeal):
        M = MonomialIdeal(M)
    gens = list(M.generators)
    g = len(gens)
    cap = get_caps().oracle
    if g > cap:
        raise OracleTooLarge(f"{g} generators exceeds the Taylor oracle cap {cap}")
    lcms = {0: Monomial()}
    for mask in range(1, 1 << g):
        low = mask & -mask
        lcms[mask] = lcms[mask ^ low].lcm(gens[low.bit_length() - 1])
    cells: dict = defaultdict(list)
    for mask, w in lcms.items():
        cells[w].append(mask)
    one, mone = field.one, field.neg(field.one)
    table = {}
    for w, masks in cells.items():
        bysize: dict = defaultdict(list)
        for mask in masks:
            bysize[bin(mask).count("1")].append(mask)
        index = {s: {mk: k for k, mk in enumerate(ms)} for s, ms in bysize.items()}
        ranks = {}
        for s, ms in bysize.items():
            if s == 0 or s - 1 not in index:
                ranks[s] = 0
                continue
            rows = []
            for mask in ms:
                row = {}
                bits = [b for b in range(g) if mask >> b & 1]
                for pos, b in enumerate(bits):
                    face = mask ^ (1 << b)
                    col = index[s - 1].get(face)
                    if col is not None:
                        row[col] = one if pos % 2 == 0 else mone
                rows.append(row)
            ranks[s] = rank(rows, field)
        for s, ms in bysize.items():
            b = len(ms) - ranks[s] - ranks.get(s + 1, 0)
            if b:
                table[(s, w)] = b
    return BettiTable(table, field.name)


# ---------------------------------------------------------------------------
# m_k(a; tau) monomials


def composition_pairs(a: Sequence[int], tau: Sequence[int]) -> list[tuple[int, int]]:
    """``A(a; tau)``: row ``i`` takes the block ``tau_j`` with ``|a_<=i-1| < j <= |a_<=i|``."""
    if any(x < 0 for x in a):
        raise ShapeMismatch("composition parts must be nonnegative")
    if sum(a) != len(tau):
        raise ShapeMismatch(f"|a| = {sum(a)} but |tau| = {len(tau)}")
    tau = sorted(tau)
    out, start = [], 0
    for i, part in enumerate(a, start=1):
        out.extend((i, tau[j]) for j in range(start, start + part))
        start += part
    return out


def m_k_monomial(a: Sequence[int], tau: Sequence[int]) -> Monomial:
    return Monomial({p: 1 for p in composition_pairs(a, tau)})


def as_m_k(w: Monomial, n: int) -> tuple[tuple[int, ...], Face] | None:
    """Recover ``(a, tau)`` with ``w = m_k(a; tau)`` and ``k >= n``, or None."""
    if not w.is_squarefree():
        return None
    pairs = sorted(w.support)
    cols = [j for _, j in pairs]
    if len(pairs) < n or any(b <= a for a, b in zip(cols, cols[1:])):
        return None
    if any(not 1 <= i <= n for i, _ in pairs):
        return None
    a = tuple(sum(1 for i, _ in pairs if i == row) for row in range(1, n + 1))
    return a, tuple(cols)


def single_clique_lead_ideal(n: int, clique: Sequence[int]) -> MonomialIdeal:
    """Diagonal lead terms of all maximal minors on the clique's columns."""
    return MonomialIdeal(Monomial({(i + 1, c): 1 for i, c in enumerate(cols)})
                         for cols in combinations(sorted(clique), n))


def verify_lin_strand_bettis(n: int, m_cols: int, clique: Sequence[int], field: Field = QQ) -> dict:
    """Check predicted Betti entries on lattice elements of the form ``m_k(a; tau)``.

    Elements of that form must have a single nonzero entry, equal to 1, at
    ``i = k - n + 1``. Nonzero entries on any other element are collected as
    anomalies (they would contradict the vanishing claim for the rest).
    """
    if any(not 1 <= c <= m_cols for c in clique):
        raise ShapeMismatch("clique outside [1, m]")
    L = lcm_lattice(single_clique_lead_ideal(n, clique))
    betti = gpw_betti(L.ideal, field, lattice=L)
    checked, failures, anomalies, others = 0, [], [], 0
    for w in L.monomials[1:]:
        entries = {i: b for (i, mono), b in betti.multigraded.items() if mono == w}
        form = as_m_k(w, n)
        if form is not None:
            checked += 1
            k = w.degree
            if entries != {k - n + 1: 1}:
                failures.append({"w": str(w), "a": form[0], "tau": form[1], "betti": entries})
        else:
            others += 1
            if entries:
                anomalies.append({"w": str(w), "betti": entries})
    return {
        "n": n, "clique": tuple(clique), "lattice_size": len(L),
        "mk_elements": checked, "other_elements": others,
        "failures": failures, "anomalies": anomalies,
        "ok": not failures,
    }


def betti_table_json(table: BettiTable, **extra) -> str:
    return json.dumps({**extra, "field": table.field_name, "totals": table.totals,
                       "entries": table.to_json()}, sort_keys=True)
