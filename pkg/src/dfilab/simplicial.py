"""Pure simplicial complexes, maximal clique decompositions and i-nonfaces.

Faces are sorted tuples of positive integers. Vertex sets are always ``[1, m]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, NotPure

Face = tuple[int, ...]


def make_face(vertices: Iterable[int], m: int | None = None) -> Face:
    face = tuple(sorted(set(vertices)))
    if face and face[0] < 1:
        raise InputError(f"vertices must be positive: {face}")
    if m is not None and face and face[-1] > m:
        raise InputError(f"vertex {face[-1]} outside [1, {m}]")
    return face


@dataclass(frozen=True)
class SimplicialComplex:
    """A pure complex on ``[1, m]`` given by its facets.

    ``r`` is the common facet cardinality (dimension + 1); it is ``0`` only for
    the empty complex.
    """

    m: int
    facets: tuple[Face, ...]

    def __init__(self, m: int, facets: Iterable[Iterable[int]]):
        faces = sorted({make_face(f, m) for f in facets})
        sizes = {len(f) for f in faces}
        if len(sizes) > 1:
            raise NotPure(f"facets of several cardinalities {sorted(sizes)}")
        if 0 in sizes:
            raise InputError("empty facet")
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "facets", tuple(faces))

    @property
    def r(self) -> int:
        return len(self.facets[0]) if self.facets else 0

    @property
    def dim(self) -> int:
        return self.r - 1

    def __contains__(self, face) -> bool:
        return tuple(face) in self._facet_set

    @property
    def _facet_set(self) -> frozenset:
        cached = self.__dict__.get("_fs")
        if cached is None:
            cached = frozenset(self.facets)
            object.__setattr__(self, "_fs", cached)
        return cached

    @classmethod
    def from_intervals(cls, m: int, intervals: Iterable[Sequence[int]], r: int):
        """All ``r``-subsets of each interval ``[a, b]`` become facets."""
        facets = set()
        for a, b in intervals:
            if a > b:
                raise InputError(f"bad interval [{a}, {b}]")
            facets.update(combinations(range(a, b + 1), r))
        return cls(m, facets)

    @classmethod
    def complete(cls, m: int, r: int):
        return cls(m, combinations(range(1, m + 1), r))

    def skeleton_faces(self) -> set[Face]:
        """Every nonempty face of the complex (subsets of facets)."""
        out = set()
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(combinations(f, k))
        return out


@dataclass(frozen=True)
class CliqueDecomposition:
    """Maximal cliques of a pure complex together with the facet back-map."""

    m: int
    r: int
    cliques: tuple[Face, ...]
    facet_cliques: dict = field(compare=False, repr=False)

    def contains(self, face: Sequence[int]) -> bool:
        """Whether ``face`` is a face of the clique complex."""
        s = set(face)
        return any(s.issubset(c) for c in self.cliques)

    def faces(self, card: int | None = None) -> list[Face]:
        """Faces of the clique complex, optionally of one cardinality, in lex order."""
        out = set()
        for c in self.cliques:
            ks = range(len(c) + 1) if card is None else [card]
            for k in ks:
                if k <= len(c):
                    out.update(combinations(c, k))
        return sorted(out, key=lambda f: (len(f), f))

    @property
    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.m, [f for c in self.cliques for f in combinations(c, self.r)])

    @classmethod
    def from_cliques(cls, m: int, r: int, cliques: Iterable[Iterable[int]]):
        """Build directly from maximal cliques (validated by recomputation)."""
        faces = [f for c in cliques for f in combinations(make_face(c, m), r)]
        return clique_complex(SimplicialComplex(m, faces), r)


def _bron_kerbosch(R, P, X, is_face, out):
    if not P and not X:
        out.append(tuple(R))
        return
    for v in sorted(P):
        Rv = R + [v]
        Rv.sort()
        _bron_kerbosch(
            Rv,
            {u for u in P if u != v and is_face(Rv, u)},
            {u for u in X if is_face(Rv, u)},
            is_face,
            out,
        )
        P = P - {v}
        X = X | {v}


def clique_complex(delta: SimplicialComplex, r: int | None = None) -> CliqueDecomposition:
    """Maximal vertex sets all of whose ``r``-subsets are facets of ``delta``.

    Bron-Kerbosch over the r-uniform hypergraph of facets: ``u`` may join a
    clique ``R`` iff every r-subset of ``R + u`` containing ``u`` is a facet
    (or, while ``|R + u| <= r``, iff ``R + u`` lies in some facet).
    """
    if r is None:
        r = delta.r
    if delta.facets and delta.r != r:
        raise NotPure(f"complex has facets of size {delta.r}, expected {r}")
    facets = delta._facet_set
    small = delta.skeleton_faces()

    def is_face(R, u):
        if len(R) + 1 <= r:
            return tuple(sorted(R + [u])) in small
        for sub in combinations([w for w in R if w != u], r - 1):
            if tuple(sorted(sub + (u,))) not in facets:
                return False
        return True

    found: list[Face] = []
    verts = {v for f in delta.facets for v in f}
    _bron_kerbosch([], verts, set(), is_face, found)
    cliques = tuple(sorted((c for c in found if len(c) >= r), key=lambda c: (c[0], c)))
    back = {f: tuple(c for c in cliques if set(f) <= set(c)) for f in delta.facets}
    return CliqueDecomposition(delta.m, r, cliques, back)


def i_nonfaces(dclique: CliqueDecomposition, i: int, card: int) -> list[Face]:
    """Non-faces ``s`` of size ``card`` with ``s - s_{j+k}`` a face for ``k = 0..i``.

    Indices are 1-based positions in the sorted vertex list.
    """
    if i < 1 or card < 2:
        raise InputError("need i >= 1 and card >= 2")
    out = []
    for sigma in combinations(range(1, dclique.m + 1), card):
        if dclique.contains(sigma):
            continue
        dropped = [dclique.contains(sigma[:p] + sigma[p + 1:]) for p in range(card)]
        # run of i+1 consecutive deletable positions
        if any(all(dropped[j:j + i + 1]) for j in range(card - i)):
            out.append(sigma)
    return out


def f_vector(dclique: CliqueDecomposition) -> tuple[int, ...]:
    """``(f_-1, f_0, ..., f_dim)`` of the clique complex."""
    if not dclique.cliques:
        return (1,)
    top = max(len(c) for c in dclique.cliques)
    counts = [0] * (top + 1)
    for face in dclique.faces():
        counts[len(face)] += 1
    return tuple(counts)
