"""The sparse Eagon-Northcott complex of a clique complex and its strand homology.

Homological degree 0 is the ring itself (the complex is augmented, so it
models a resolution of ``S/I``). A basis element of ``C_i`` for ``i >= 1`` is
a pair ``(alpha, sigma)``: a composition ``alpha`` of ``i - 1`` into ``n``
parts and a face ``sigma`` of size ``n + i - 1``. It sits in standard degree
``n + i - 1`` and in multidegree ``(1 + alpha, e_sigma)`` in ``Z^n x Z^m``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

from .algebra import QQ, Field, Monomial, TermOrder, is_diagonal, row_major_lex
from .errors import DifferentialBroken, HypothesisFailed, InputError, ShapeMismatch
from .lcmlattice import MonomialIdeal, gpw_betti
from .linalg import Echelon, rank
from .simplicial import CliqueDecomposition, f_vector, i_nonfaces

ZERO_LABEL = ()


def compositions(total: int, parts: int):
    """Weak compositions of ``total`` into ``parts`` parts, in lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def index_set(alpha: Sequence[int], I: Sequence[int]) -> list[tuple[int, int]]:
    """Pairs ``(i, I_{i+j})`` with ``alpha_i > 0`` and ``|alpha_<=i-1| <= j <= |alpha_<=i|``.

    Positions are 1-based. The result is sorted.
    """
    n = len(alpha)
    if any(a < 0 for a in alpha):
        raise ShapeMismatch("composition parts must be nonnegative")
    if len(I) != n + sum(alpha):
        raise ShapeMismatch(f"|I| = {len(I)} but n + |alpha| = {n + sum(alpha)}")
    out = []
    prefix = 0
    for i, a in enumerate(alpha, start=1):
        if a > 0:
            for j in range(prefix, prefix + a + 1):
                out.append((i, I[i + j - 1]))
        prefix += a
    return sorted(out)


@dataclass
class ENComplex:
    """Bases and differentials of the sparse Eagon-Northcott complex.

    ``differential[i][label]`` is a list of ``(sign, exponent, target)``
    triples: ``d(label) = sum sign * x^exponent * target``. Exponents are
    dense tuples over the ``n*m`` variables in row-major position.
    """

    n: int
    m: int
    order: TermOrder
    dclique: CliqueDecomposition
    bases: dict[int, list] = field(default_factory=dict)
    differential: dict[int, dict] = field(default_factory=dict)

    def var(self, i: int, j: int) -> int:
        return (i - 1) * self.m + (j - 1)

    def ranks(self) -> dict[int, int]:
        return {i: len(b) for i, b in self.bases.items()}

    @property
    def length(self) -> int:
        return max(i for i, b in self.bases.items() if b)

    def multidegree(self, label) -> tuple[tuple[int, ...], tuple[int, ...]]:
        if label == ZERO_LABEL:
            return (0,) * self.n, (0,) * self.m
        alpha, sigma = label
        cols = [0] * self.m
        for c in sigma:
            cols[c - 1] = 1
        return tuple(1 + a for a in alpha), tuple(cols)

    def exp_multidegree(self, exp) -> tuple[tuple[int, ...], tuple[int, ...]]:
        n, m = self.n, self.m
        rows = tuple(sum(exp[(i) * m:(i + 1) * m]) for i in range(n))
        cols = tuple(sum(exp[i * m + j] for i in range(n)) for j in range(m))
        return rows, cols

    def apply(self, i: int, element: dict) -> dict:
        """Apply ``d_i`` to ``{(exponent, label): coeff}`` with integer coefficients."""
        out: dict = defaultdict(int)
        for (u, label), c in element.items():
            for sign, e, target in self.differential[i][label]:
                key = (tuple(a + b for a, b in zip(u, e)), target)
                out[key] += sign * c
        return {k: v for k, v in out.items() if v}

    def check_dd(self):
        zero = (0,) * (self.n * self.m)
        for i in range(2, self.length + 1):
            for label in self.bases[i]:
                if self.apply(i - 1, self.apply(i, {(zero, label): 1})):
                    raise DifferentialBroken(f"d_{i - 1} d_{i} != 0 on {label}")

    def is_linear(self) -> bool:
        return all(sum(e) == 1 for i in range(2, self.length + 1)
                   for terms in self.differential[i].values() for _, e, _ in terms)

    def element(self, terms) -> dict:
        """Build a chain from ``[(coeff, Monomial or None, label)]``; monomial labels are ``(i, j)``."""
        out: dict = defaultdict(int)
        for c, mono, label in terms:
            e = [0] * (self.n * self.m)
            for (i, j), k in (mono.items if mono is not None else ()):
                e[self.var(i, j)] += k
            out[(tuple(e), label)] += c
        return dict(out)


def build_en_complex(dclique: CliqueDecomposition, n: int, m: int | None = None,
                     order: TermOrder | None = None, check: bool = True) -> ENComplex:
    """Assemble ``C^<(dclique, M)``; ``d_1`` sends ``f_I`` to the diagonal lead term."""
    m = dclique.m if m is None else m
    order = row_major_lex(n, m) if order is None else order
    if not is_diagonal(order, n, m):
        raise InputError("the sparse Eagon-Northcott complex needs a diagonal term order")
    if dclique.cliques and dclique.r > n:
        raise InputError(f"clique complex of {dclique.r}-sets used with n = {n}")
    C = ENComplex(n, m, order, dclique)
    C.bases[0] = [ZERO_LABEL]
    nv = n * m
    i = 1
    while True:
        faces = dclique.faces(n + i - 1) if dclique.cliques else []
        if not faces:
            break
        C.bases[i] = [(alpha, sigma) for sigma in faces for alpha in compositions(i - 1, n)]
        i += 1
    for i, basis in C.bases.items():
        if i == 0:
            continue
        table = {}
        for alpha, sigma in basis:
            terms = []
            if i == 1:
                e = [0] * nv
                for k, c in enumerate(sigma, start=1):
                    e[C.var(k, c)] = 1
                terms.append((1, tuple(e), ZERO_LABEL))
            else:
                for row, col in index_set(alpha, sigma):
                    p = sigma.index(col) + 1
                    e = [0] * nv
                    e[C.var(row, col)] = 1
                    a2 = list(alpha)
                    a2[row - 1] -= 1
                    terms.append((1 if p % 2 == 1 else -1, tuple(e),
                                  (tuple(a2), sigma[:p - 1] + sigma[p:])))
            table[(alpha, sigma)] = terms
        C.differential[i] = table
    if check:
        C.check_dd()
    return C


def _monomials(nv: int, degree: int):
    for combo in combinations_with_replacement(range(nv), degree):
        e = [0] * nv
        for k in combo:
            e[k] += 1
        yield tuple(e)


def _graded_piece(C: ENComplex, i: int, degree: int) -> dict:
    """``{multidegree: [(u, label), ...]}`` spanning ``(C_i)_degree``."""
    groups: dict = defaultdict(list)
    if i not in C.bases or (i > 0 and not C.bases[i]):
        return groups
    base_deg = 0 if i == 0 else C.n + i - 1
    e = degree - base_deg
    if e < 0:
        return groups
    nv = C.n * C.m
    for u in _monomials(nv, e):
        ur, uc = C.exp_multidegree(u)
        for label in C.bases[i]:
            br, bc = C.multidegree(label)
            key = (tuple(a + b for a, b in zip(ur, br)), tuple(a + b for a, b in zip(uc, bc)))
            groups[key].append((u, label))
    return groups


def _image_rows(C: ENComplex, i: int, elements, field: Field, columns: dict) -> list[dict]:
    rows = []
    for el in elements:
        img = C.apply(i, {el: 1})
        row = {}
        for k, v in img.items():
            col = columns.setdefault(k, len(columns))
            row[col] = field(v)
        rows.append(row)
    return rows


def strand_homology(C: ENComplex, i: int, internal_degree: int, field: Field = QQ,
                    detail: bool = False):
    """``dim H_i(C)`` in standard degree ``internal_degree``, summed over multidegrees."""
    if i < 1:
        raise InputError("strand homology is reported for i >= 1")
    here = _graded_piece(C, i, internal_degree)
    above = _graded_piece(C, i + 1, internal_degree)
    total, per = 0, {}
    for mdeg, elements in here.items():
        ker = len(elements) - rank(_image_rows(C, i, elements, field, {}), field)
        if not ker:
            continue
        src = {el: k for k, el in enumerate(elements)}
        bnd_rows = []
        for el in above.get(mdeg, ()):
            img = C.apply(i + 1, {el: 1})
            bnd_rows.append({src[k]: field(v) for k, v in img.items()})
        h = ker - rank(bnd_rows, field)
        if h:
            per[mdeg] = h
            total += h
    return (total, per) if detail else total


def is_nonbounding_cycle(C: ENComplex, i: int, z: dict, field: Field = QQ) -> tuple[bool, bool]:
    """``(is_cycle, is_boundary)`` for a multihomogeneous chain ``z`` in ``C_i``."""
    if not z:
        return True, True
    is_cycle = not C.apply(i, z)
    mdegs = set()
    for (u, label) in z:
        ur, uc = C.exp_multidegree(u)
        br, bc = C.multidegree(label)
        mdegs.add((tuple(a + b for a, b in zip(ur, br)), tuple(a + b for a, b in zip(uc, bc))))
    if len(mdegs) != 1:
        raise InputError("chain is not multihomogeneous")
    mdeg = mdegs.pop()
    degree = sum(mdeg[1])
    cols: dict = {}
    ech = Echelon(field)
    for el in _graded_piece(C, i + 1, degree).get(mdeg, ()):
        img = C.apply(i + 1, {el: 1})
        ech.add({cols.setdefault(k, len(cols)): field(v) for k, v in img.items()})
    target = {}
    for k, v in z.items():
        if k not in cols:
            return is_cycle, False
        target[cols[k]] = field(v)
    return is_cycle, ech.contains(target)


def one_nonface_sides(dclique: CliqueDecomposition, n: int, field: Field = QQ) -> dict:
    C = build_en_complex(dclique, n)
    h1 = strand_homology(C, 1, n + 1, field)
    nonfaces = i_nonfaces(dclique, 1, n + 1)
    return {"H1": h1, "nonfaces": nonfaces, "agree": (h1 == 0) == (not nonfaces)}


def one_nonface_homology_equiv(dclique: CliqueDecomposition, n: int, field: Field = QQ) -> bool:
    """``H_1(C)_{n+1} = 0`` exactly when there is no 1-nonface of size ``n + 1``."""
    return one_nonface_sides(dclique, n, field)["agree"]


def rank_formula(dclique: CliqueDecomposition, n: int, i: int) -> int:
    """``f_{n+i-2} * C(n+i-2, n-1)``: faces of size ``n+i-1`` times compositions of ``i-1``."""
    fv = f_vector(dclique)
    size = n + i - 1
    faces = fv[size] if size < len(fv) else 0
    return faces * comb(n + i - 2, n - 1)


def lead_term_ideal(dclique: CliqueDecomposition, n: int) -> MonomialIdeal:
    return MonomialIdeal(Monomial({(k, c): 1 for k, c in enumerate(f, start=1)})
                         for f in dclique.faces(n))


def linear_strand_rank_check(dclique: CliqueDecomposition, n: int, field: Field = QQ) -> dict:
    """Compare ``rank C_i`` with ``beta_{i, n+i-1}(S / lead-term ideal)`` for every ``i >= 1``.

    In ideal indexing the same numbers are ``beta_{i-1, n+i-1}(I)``: quotient
    index ``i`` is ideal index ``i - 1``.
    """
    if i_nonfaces(dclique, 1, n + 1):
        raise HypothesisFailed(f"clique complex has 1-nonfaces of cardinality {n + 1}")
    betti = gpw_betti(lead_term_ideal(dclique, n), field)
    coarse = betti.coarse
    top = betti.pd
    while rank_formula(dclique, n, top + 1):
        top += 1
    rows = []
    for i in range(1, top + 1):
        rk = rank_formula(dclique, n, i)
        b = coarse.get((i, n + i - 1), 0)
        rows.append({"i": i, "rank_C": rk, "beta_quotient": b, "ideal_index": i - 1, "equal": rk == b})
    return {"n": n, "cliques": [list(c) for c in dclique.cliques], "rows": rows,
            "ok": all(r["equal"] for r in rows)}
