"""Finite posets, order complexes and exact reduced homology over a field."""
from __future__ import annotations

from itertools import combinations, product
from typing import Callable, Hashable, Iterable, Sequence

from .algebra import QQ, Field
from .config import get_caps
from .errors import ComplexTooLarge, DifferentialBroken, NotBounded
from .linalg import Echelon, rank


class FinitePoset:
    """A finite poset on an indexed list of elements.

    ``up[k]`` is the set of indices strictly above element ``k`` (the
    transitive closure); covers are derived from it.
    """

    def __init__(self, elements: Sequence[Hashable], up: Sequence[Iterable[int]]):
        self.elements = list(elements)
        self.up = [frozenset(u) for u in up]
        self.index = {e: k for k, e in enumerate(self.elements)}

    @classmethod
    def from_leq(cls, elements: Iterable[Hashable], leq: Callable) -> FinitePoset:
        els = list(elements)
        up = [{j for j, y in enumerate(els) if j != i and leq(x, y)} for i, x in enumerate(els)]
        for i in range(len(els)):
            for j in up[i]:
                if i in up[j]:
                    raise ValueError(f"relation not antisymmetric at {els[i]!r}, {els[j]!r}")
        return cls(els, up)

    def __len__(self):
        return len(self.elements)

    def leq(self, x, y) -> bool:
        i, j = self.index[x], self.index[y]
        return i == j or j in self.up[i]

    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` with ``j`` covering ``i``."""
        out = []
        for i, u in enumerate(self.up):
            for j in u:
                if not any(j in self.up[k] for k in u):
                    out.append((i, j))
        return sorted(out)

    def bottom(self):
        lows = [k for k in range(len(self)) if len(self.up[k]) == len(self) - 1]
        return self.elements[lows[0]] if lows else None

    def top(self):
        highs = [k for k in range(len(self)) if all(k in self.up[j] for j in range(len(self)) if j != k)]
        return self.elements[highs[0]] if highs else None

    def subposet(self, keep: Iterable[Hashable]) -> FinitePoset:
        wanted = set(keep)
        keep = [e for e in self.elements if e in wanted]
        old = [self.index[e] for e in keep]
        pos = {o: n for n, o in enumerate(old)}
        return FinitePoset(keep, [{pos[j] for j in self.up[o] if j in pos} for o in old])

    def without(self, *removed: Hashable) -> FinitePoset:
        drop = set(removed)
        return self.subposet(e for e in self.elements if e not in drop)

    def chains(self, cap: int | None = None) -> list[tuple[int, ...]]:
        """All nonempty chains as increasing index tuples (faces of the order complex)."""
        cap = get_caps().complex if cap is None else cap
        out: list[tuple[int, ...]] = []

        def grow(chain, cands):
            out.append(chain)
            if len(out) > cap:
                raise ComplexTooLarge(f"order complex exceeds {cap} faces")
            for j in sorted(cands):
                grow(chain + (j,), cands & self.up[j])

        for k in range(len(self)):
            grow((k,), self.up[k])
        return out


def proper_part(P: FinitePoset) -> FinitePoset:
    if len(P) <= 1:
        raise NotBounded("poset needs more than one element")
    lo, hi = P.bottom(), P.top()
    if lo is None or hi is None:
        raise NotBounded("poset lacks a unique bottom or top")
    return P.without(lo, hi)


def boolean_lattice(ground: Iterable[Hashable]) -> FinitePoset:
    """Subsets of ``ground`` ordered by inclusion."""
    ground = list(ground)
    subsets = [frozenset(c) for k in range(len(ground) + 1) for c in combinations(ground, k)]
    return FinitePoset.from_leq(subsets, lambda a, b: a <= b)


def chain_poset(length: int) -> FinitePoset:
    """Totally ordered ``0 < 1 < ... < length - 1``."""
    return FinitePoset(range(length), [range(k + 1, length) for k in range(length)])


def cartesian_product(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    els = list(product(P.elements, Q.elements))
    nq = len(Q)
    up = []
    for a in range(len(P)):
        for b in range(nq):
            ua = P.up[a] | {a}
            ub = Q.up[b] | {b}
            up.append({x * nq + y for x in ua for y in ub} - {a * nq + b})
    return FinitePoset(els, up)


class ChainComplexOverField:
    """Simplicial chain complex (augmented, so homology is reduced).

    ``faces[d]`` lists the ``d``-dimensional faces as sorted tuples;
    ``faces[-1]`` is the empty face whenever the complex is given any face
    list at all (including an empty one).
    """

    def __init__(self, faces: Iterable[Sequence], field: Field = QQ):
        self.field = field
        bydim: dict[int, list] = {-1: [()]}
        for f in faces:
            f = tuple(f)
            if f:
                bydim.setdefault(len(f) - 1, []).append(f)
        for d in bydim:
            bydim[d].sort()
        self.faces = bydim
        self.top_dim = max(bydim)
        self._index = {d: {f: k for k, f in enumerate(fs)} for d, fs in bydim.items()}

    def boundary(self, d: int) -> list[dict]:
        """Rows = d-faces, columns = (d-1)-faces."""
        F = self.field
        if d not in self.faces or d - 1 not in self.faces:
            return []
        idx = self._index[d - 1]
        rows = []
        for f in self.faces[d]:
            row = {}
            for k in range(len(f)):
                row[idx[f[:k] + f[k + 1:]]] = F.one if k % 2 == 0 else F.neg(F.one)
            rows.append(row)
        return rows

    def check_dd(self):
        F = self.field
        for d in range(1, self.top_dim + 1):
            lower = self.boundary(d - 1)
            for row in self.boundary(d):
                acc: dict = {}
                for c, v in row.items():
                    for c2, w in lower[c].items():
                        acc[c2] = F.add(acc.get(c2, F.zero), F.mul(v, w))
                if any(acc.values()):
                    raise DifferentialBroken(f"d^2 != 0 in dimension {d}")

    def ranks(self) -> dict[int, int]:
        return {d: rank(self.boundary(d), self.field) for d in range(0, self.top_dim + 1)}

    def reduced_homology(self) -> dict[int, int]:
        """``{i: dim H~_i}`` for ``i = -1 .. top_dim``."""
        rk = self.ranks()
        out = {}
        for d in range(-1, self.top_dim + 1):
            n = len(self.faces.get(d, ()))
            out[d] = n - rk.get(d, 0) - rk.get(d + 1, 0)
        return out

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic from face counts."""
        return sum((-1) ** d * len(fs) for d, fs in self.faces.items())


def reduced_homology(complex_or_poset, field: Field = QQ) -> dict[int, int]:
    """Reduced homology ranks of a simplicial complex (face list) or a poset's order complex."""
    if isinstance(complex_or_poset, FinitePoset):
        faces = complex_or_poset.chains()
    else:
        faces = complex_or_poset
    return ChainComplexOverField(faces, field).reduced_homology()


def order_complex(P: FinitePoset, field: Field = QQ) -> ChainComplexOverField:
    return ChainComplexOverField(P.chains(), field)


def unreduced(h: dict[int, int]) -> dict[int, int]:
    out = {d: v for d, v in h.items() if d >= 0}
    if h.get(-1, 0) == 0:
        out[0] = out.get(0, 0) + 1
    return out


def _convolve(hp: dict, hq: dict, shift: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, a in hp.items():
        for j, b in hq.items():
            if a and b:
                out[i + j + shift] = out.get(i + j + shift, 0) + a * b
    return out


def _nonzero(h: dict) -> dict:
    return {k: v for k, v in h.items() if v}


def kunneth_sides(P: FinitePoset, Q: FinitePoset, variant: int, field: Field = QQ):
    """Both sides of a poset Kunneth identity as ``{degree: rank}`` dicts.

    variant 1: ``H(PxQ) = H(P) (x) H(Q)``, unreduced homology.
    variant 2: bottoms removed, ``H~_r = sum H~_i (x) H~_{r-i-1}``.
    variant 3: proper parts, ``H~_r = sum H~_i (x) H~_{r-i-2}``.
    """
    PQ = cartesian_product(P, Q)
    if variant == 1:
        lhs = unreduced(reduced_homology(PQ, field))
        rhs = _convolve(unreduced(reduced_homology(P, field)), unreduced(reduced_homology(Q, field)), 0)
    elif variant == 2:
        p0, q0 = P.bottom(), Q.bottom()
        if p0 is None or q0 is None:
            raise NotBounded("variant 2 needs bottom elements")
        lhs = reduced_homology(PQ.without((p0, q0)), field)
        rhs = _convolve(reduced_homology(P.without(p0), field), reduced_homology(Q.without(q0), field), 1)
    elif variant == 3:
        lhs = reduced_homology(proper_part(PQ), field)
        rhs = _convolve(reduced_homology(proper_part(P), field), reduced_homology(proper_part(Q), field), 2)
    else:
        raise ValueError("variant must be 1, 2 or 3")
    return _nonzero(lhs), _nonzero(rhs)


def kunneth_check(P: FinitePoset, Q: FinitePoset, variant: int, field: Field = QQ) -> bool:
    lhs, rhs = kunneth_sides(P, Q, variant, field)
    return lhs == rhs
