"""Exact polynomial arithmetic over the generic matrix variables ``x_{i,j}``.

Inside a :class:`PolyRing` monomials are dense exponent tuples and a
polynomial is a dict ``{exponents: coefficient}``. The sparse
:class:`Monomial` is the ring-free form used by the monomial-ideal code.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from operator import itemgetter
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import InputError, MinorTooLarge

# ---------------------------------------------------------------------------
# coefficient fields


class Field:
    name = "field"
    characteristic = 0

    def __call__(self, x):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash((type(self).__name__, self.characteristic))

    def __repr__(self):
        return self.name


class Rationals(Field):
    """Q, with :class:`fractions.Fraction` elements."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        return Fraction(x)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def div(a, b):
        return a / b


class PrimeField(Field):
    """GF(p) with elements stored as ints in ``[0, p)``."""

    zero = 0
    one = 1

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise InputError(f"{p} is not prime")
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.characteristic) % self.characteristic
        return int(x) % self.characteristic

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b % self.characteristic

    def neg(self, a):
        return -a % self.characteristic

    def inv(self, a):
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return a * pow(b, -1, self.characteristic) % self.characteristic


QQ = Rationals()


def parse_field(desc) -> Field:
    """``"q"``, ``"fp:P"``, or the JSON form ``{"type": "prime", "p": P}``."""
    if isinstance(desc, Field):
        return desc
    if desc is None:
        return QQ
    if isinstance(desc, Mapping):
        if desc.get("type") == "rationals":
            return QQ
        if desc.get("type") == "prime":
            return PrimeField(int(desc["p"]))
        raise InputError(f"unknown field {desc!r}")
    text = str(desc).lower()
    if text in ("q", "qq", "rationals"):
        return QQ
    if text.startswith("fp:"):
        return PrimeField(int(text[3:]))
    raise InputError(f"unknown field {desc!r}")


# ---------------------------------------------------------------------------
# sparse monomials


class Monomial:
    """Immutable sparse monomial: a sorted tuple of ``(variable, exponent)``.

    Variables can be any sortable hashable labels; matrix variables are
    ``(i, j)`` pairs and print as ``x_{i,j}``.
    """

    __slots__ = ("items", "_hash")

    def __init__(self, exponents: Mapping[Hashable, int] | Iterable = ()):
        pairs = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict = {}
        for v, e in pairs:
            if e < 0:
                raise InputError("negative exponent")
            if e:
                acc[v] = acc.get(v, 0) + e
        self.items = tuple(sorted(acc.items()))
        self._hash = hash(self.items)

    @classmethod
    def of(cls, *variables):
        """Product of the given variables (repeats allowed)."""
        return cls((v, 1) for v in variables)

    def as_dict(self) -> dict:
        return dict(self.items)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.items)

    @property
    def support(self) -> tuple:
        return tuple(v for v, _ in self.items)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.items)

    def lcm(self, other: Monomial) -> Monomial:
        d = self.as_dict()
        for v, e in other.items:
            if e > d.get(v, 0):
                d[v] = e
        return Monomial(d)

    def gcd(self, other: Monomial) -> Monomial:
        o = other.as_dict()
        return Monomial({v: min(e, o[v]) for v, e in self.items if v in o})

    def divides(self, other: Monomial) -> bool:
        o = other.as_dict()
        return all(o.get(v, 0) >= e for v, e in self.items)

    def is_coprime(self, other: Monomial) -> bool:
        return not set(self.support).intersection(other.support)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.items + other.items)

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        d = self.as_dict()
        for v, e in other.items:
            d[v] -= e
        return Monomial(d)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.items == other.items

    def __lt__(self, other):
        # deterministic (degree, sparse-lex) ordering for reports, not a term order
        return (self.degree, self.items) < (other.degree, other.items)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({self})"

    def __str__(self):
        if not self.items:
            return "1"
        return "*".join(_var_str(v) + (f"^{e}" if e > 1 else "") for v, e in self.items)


def _var_str(v) -> str:
    if isinstance(v, tuple) and len(v) == 2:
        return f"x_{{{v[0]},{v[1]}}}"
    return str(v)


def X(i: int, j: int) -> Monomial:
    """The matrix variable ``x_{i,j}`` as a monomial."""
    return Monomial({(i, j): 1})


# ---------------------------------------------------------------------------
# term orders


@dataclass(frozen=True)
class TermOrder:
    """A monomial order on exponent tuples.

    ``kind`` is ``lex``, ``grlex``, ``grevlex``, ``weight`` or ``block``.
    ``ranking`` lists variable indices from most to least significant.
    A ``block`` order compares the first ``block`` variables lexicographically
    and breaks ties with ``inner`` on the remaining ones (elimination order).
    """

    kind: str
    ranking: tuple[int, ...]
    weights: tuple[int, ...] = ()
    block: int = 0
    inner: TermOrder | None = None

    @cached_property
    def key(self):
        """Function sending an exponent tuple to a tuple; larger key = larger monomial."""
        rk = self.ranking
        pick = (lambda e: (e[rk[0]],)) if len(rk) == 1 else itemgetter(*rk)
        if self.kind == "lex":
            return pick
        if self.kind == "grlex":
            return lambda e: (sum(e), pick(e))
        if self.kind == "grevlex":
            rev = rk[::-1]
            return lambda e: (sum(e), tuple(-e[k] for k in rev))
        if self.kind == "weight":
            w = self.weights
            return lambda e: (sum(a * b for a, b in zip(w, e)), pick(e))
        if self.kind == "block":
            b = self.block
            inner = self.inner.key
            return lambda e: (e[:b], inner(e[b:]))
        raise InputError(f"unknown order kind {self.kind!r}")

    @property
    def nvars(self) -> int:
        return len(self.ranking) + self.block

    def describe(self) -> str:
        if self.kind == "block":
            return f"block({self.block}; {self.inner.describe()})"
        return f"{self.kind}{list(self.ranking)}"


def lex(nvars: int, ranking: Sequence[int] | None = None) -> TermOrder:
    return TermOrder("lex", tuple(range(nvars)) if ranking is None else tuple(ranking))


def grlex(nvars: int, ranking: Sequence[int] | None = None) -> TermOrder:
    return TermOrder("grlex", tuple(range(nvars)) if ranking is None else tuple(ranking))


def grevlex(nvars: int, ranking: Sequence[int] | None = None) -> TermOrder:
    return TermOrder("grevlex", tuple(range(nvars)) if ranking is None else tuple(ranking))


def weight_order(weights: Sequence[int], ranking: Sequence[int] | None = None) -> TermOrder:
    if any(w < 0 for w in weights):
        raise InputError("weights must be nonnegative")
    n = len(weights)
    return TermOrder("weight", tuple(range(n)) if ranking is None else tuple(ranking), tuple(weights))


def elimination_order(k: int, inner: TermOrder) -> TermOrder:
    """The first ``k`` variables dominate everything else."""
    return TermOrder("block", inner.ranking, block=k, inner=inner)


def matrix_variable_index(i: int, j: int, m: int) -> int:
    return (i - 1) * m + (j - 1)


def row_major_lex(n: int, m: int) -> TermOrder:
    """x11 > x12 > ... > x1m > x21 > ... > xnm."""
    return lex(n * m)


def permuted_row_lex(n: int, m: int, row_perm: Sequence[int]) -> TermOrder:
    """Row-major lex with the rows ranked in the order ``row_perm`` (1-based)."""
    rk = [matrix_variable_index(i, j, m) for i in row_perm for j in range(1, m + 1)]
    return lex(n * m, rk)


# ---------------------------------------------------------------------------
# rings and polynomials


class PolyRing:
    """Polynomial ring with labelled variables, a term order and a field.

    ``shape`` is ``(n, m)`` for generic matrix rings; then variable
    ``(i, j)`` sits at index ``(i-1)*m + (j-1)``.
    """

    def __init__(self, variables: Sequence[Hashable], order: TermOrder | None = None,
                 field: Field = QQ, shape: tuple[int, int] | None = None):
        self.variables = tuple(variables)
        self.nvars = len(self.variables)
        self.order = order if order is not None else lex(self.nvars)
        if self.order.nvars != self.nvars:
            raise InputError("term order and ring have different variable counts")
        self.field = field
        self.shape = shape
        self.index = {v: k for k, v in enumerate(self.variables)}
        self.zero_exp = (0,) * self.nvars

    def __repr__(self):
        return f"PolyRing({self.nvars} vars, {self.order.describe()}, {self.field})"

    def with_order(self, order: TermOrder) -> PolyRing:
        return PolyRing(self.variables, order, self.field, self.shape)

    def with_field(self, field: Field) -> PolyRing:
        return PolyRing(self.variables, self.order, field, self.shape)

    # conversions
    def exp_of(self, mono: Monomial) -> tuple[int, ...]:
        e = list(self.zero_exp)
        for v, k in mono.items:
            e[self.index[v]] = k
        return tuple(e)

    def monomial_of(self, exp: Sequence[int]) -> Monomial:
        return Monomial((self.variables[k], e) for k, e in enumerate(exp) if e)

    def var(self, label) -> Polynomial:
        e = list(self.zero_exp)
        e[self.index[label]] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def x(self, i: int, j: int) -> Polynomial:
        return self.var((i, j))

    def const(self, c) -> Polynomial:
        c = self.field(c)
        return Polynomial(self, {self.zero_exp: c} if c != 0 else {})

    def from_terms(self, terms: Iterable[tuple[Monomial, object]]) -> Polynomial:
        acc: dict = {}
        F = self.field
        for mono, c in terms:
            e = self.exp_of(mono)
            acc[e] = F.add(acc.get(e, F.zero), F(c))
        return Polynomial(self, {e: c for e, c in acc.items() if c != 0})

    def monomial_poly(self, mono: Monomial, c=1) -> Polynomial:
        return self.from_terms([(mono, c)])


def matrix_ring(n: int, m: int, order: TermOrder | None = None, field: Field = QQ) -> PolyRing:
    """Ring of the generic ``n x m`` matrix, row-major lex by default."""
    labels = [(i, j) for i in range(1, n + 1) for j in range(1, m + 1)]
    return PolyRing(labels, order if order is not None else row_major_lex(n, m), field, (n, m))


class Polynomial:
    """Immutable polynomial over a :class:`PolyRing`; no zero coefficients stored."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None

    def is_zero(self) -> bool:
        return not self.terms

    def lead_exp(self):
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no lead term")
            self._lead = max(self.terms, key=self.ring.order.key)
        return self._lead

    def lead_monomial(self) -> Monomial:
        return self.ring.monomial_of(self.lead_exp())

    def lead_coeff(self):
        return self.terms[self.lead_exp()]

    def sorted_terms(self) -> list:
        """``(exponents, coefficient)`` pairs, strictly descending in the ring order."""
        return sorted(self.terms.items(), key=lambda t: self.ring.order.key(t[0]), reverse=True)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(out.get(e, F.zero), c)
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = F.add(out.get(e, F.zero), F.mul(c1, c2))
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c, exp=None) -> Polynomial:
        """``c * x^exp * self``."""
        F = self.ring.field
        c = F(c)
        if exp is None:
            return Polynomial(self.ring, {e: F.mul(c, v) for e, v in self.terms.items()} if c != 0 else {})
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(e, exp)): F.mul(c, v)
                                      for e, v in self.terms.items()} if c != 0 else {})

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff()))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = self.ring.monomial_of(e)
            neg = isinstance(self.ring.field, Rationals) and c < 0
            mag = -c if neg else c
            body = str(mono) if mag == 1 and mono.items else (
                str(mag) if not mono.items else f"{mag}*{mono}")
            if k == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)


# ---------------------------------------------------------------------------
# minors


def _check_indices(seq, bound, what):
    seq = tuple(seq)
    if any(b <= a for a, b in zip(seq, seq[1:])):
        raise InputError(f"{what} indices must be strictly increasing: {seq}")
    if seq and (seq[0] < 1 or seq[-1] > bound):
        raise InputError(f"{what} indices {seq} outside [1, {bound}]")
    return seq


def minor(ring: PolyRing, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    """The minor ``[rows | cols]`` of the generic matrix of ``ring``.

    Cofactor expansion along the first row, memoized on column subsets.
    """
    if ring.shape is None:
        raise InputError("minor needs a generic matrix ring")
    n, m = ring.shape
    if len(rows) > n:
        raise MinorTooLarge(f"{len(rows)}-minor of a matrix with {n} rows")
    rows = _check_indices(rows, n, "row")
    cols = _check_indices(cols, m, "column")
    if len(rows) != len(cols):
        raise InputError("minor needs as many rows as columns")
    F = ring.field
    idx = ring.index
    r = len(rows)

    @lru_cache(maxsize=None)
    def expand(depth: int, colset: tuple[int, ...]) -> dict:
        # determinant of rows[depth:] x colset, exponent dict with int coefficients
        if depth == r:
            return {ring.zero_exp: 1}
        out: dict = {}
        i = rows[depth]
        for pos, j in enumerate(colset):
            sign = -1 if pos % 2 else 1
            k = idx[(i, j)]
            for e, c in expand(depth + 1, colset[:pos] + colset[pos + 1:]).items():
                e2 = list(e)
                e2[k] += 1
                e2 = tuple(e2)
                out[e2] = out.get(e2, 0) + sign * c
        return {e: c for e, c in out.items() if c}

    terms = {e: F(c) for e, c in expand(0, cols).items()}
    return Polynomial(ring, {e: c for e, c in terms.items() if c != 0})


def diagonal_monomial(rows: Sequence[int], cols: Sequence[int]) -> Monomial:
    return Monomial({(a, b): 1 for a, b in zip(rows, cols)})


_DIAGONAL_CACHE: dict = {}


def is_diagonal(order: TermOrder, n: int, m: int) -> bool:
    """Whether every minor of the generic n x m matrix leads with its main diagonal."""
    key = (order, n, m)
    if key in _DIAGONAL_CACHE:
        return _DIAGONAL_CACHE[key]
    ring = matrix_ring(n, m, order)
    ok = True
    for r in range(1, n + 1):
        for rows in combinations(range(1, n + 1), r):
            for cols in combinations(range(1, m + 1), r):
                p = minor(ring, rows, cols)
                if p.lead_monomial() != diagonal_monomial(rows, cols) or p.lead_coeff() != 1:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    _DIAGONAL_CACHE[key] = ok
    return ok


def parse_order(desc, n: int, m: int) -> TermOrder:
    """Term order from the JSON ``order`` object of an input file."""
    if desc is None:
        return row_major_lex(n, m)
    if isinstance(desc, TermOrder):
        return desc
    nv = n * m
    vo = desc.get("variable_order", "row_major")
    if vo == "row_major":
        ranking = list(range(nv))
    else:
        ranking = [matrix_variable_index(int(i), int(j), m) for i, j in vo]
        if sorted(ranking) != list(range(nv)):
            raise InputError("variable_order must list every x_{i,j} exactly once")
    kind = desc.get("type", "lex")
    if kind == "lex":
        return lex(nv, ranking)
    if kind == "grlex":
        return grlex(nv, ranking)
    if kind == "grevlex":
        return grevlex(nv, ranking)
    if kind == "weight":
        w = desc.get("weights")
        if w is None or len(w) != nv:
            raise InputError("weight order needs one weight per variable")
        return weight_order([int(a) for a in w], ranking)
    raise InputError(f"unknown order type {kind!r}")
