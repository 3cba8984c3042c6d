"""Extensor terms, their lexicographic total order, and the partial order ≺≺.

For two sets ``A, B`` of ``q`` distinct terms, ``A ≺≺ B`` means there is a
bijection ``w: A -> B`` with ``a <= w(a)`` for all ``a``.  Four equivalent tests
are provided; ``sorted`` is the default and the others act as cross-checks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .errors import DimensionError, PreconditionError
from .monomials import TermOrder, format_monomial, parse_monomial
from .stable import DegreeSlice, ek_expand, growth_vector

METHODS = ("sorted", "counting", "symmdiff", "matching")


class Relation(enum.Enum):
    LESS = "<<"
    GREATER = ">>"
    EQUAL = "=="
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ExtensorTerm:
    """``tau_1 ∧ ... ∧ tau_q`` in normal expression: ``tau_1 > ... > tau_q``."""

    terms: tuple
    order: TermOrder

    def __post_init__(self):
        terms = tuple(sorted((tuple(t) for t in self.terms), key=self.order.key, reverse=True))
        if len(set(terms)) != len(terms):
            raise ValueError("extensor term with repeated factors vanishes")
        if len({sum(t) for t in terms}) > 1:
            raise DimensionError("extensor factors must share one degree")
        if len({len(t) for t in terms}) > 1:
            raise DimensionError("extensor factors over different variable counts")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, terms, order=None):
        if isinstance(terms, DegreeSlice):
            terms = terms.terms
        return cls(tuple(terms), order or TermOrder("degrevlex"))

    @classmethod
    def parse(cls, text, order=None, nvars=None):
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        sep = "∧" if "∧" in body else ","
        mons = [parse_monomial(s, nvars) for s in body.split(sep) if s.strip()]
        if nvars is None and mons:
            width = max(len(m) for m in mons)
            mons = [m + (0,) * (width - len(m)) for m in mons]
        return cls.of(mons, order)

    @property
    def q(self):
        return len(self.terms)

    @property
    def m(self):
        return sum(self.terms[0]) if self.terms else 0

    @property
    def nvars(self):
        return len(self.terms[0]) if self.terms else 0

    def as_slice(self):
        return DegreeSlice(self.m, self.nvars, frozenset(self.terms))

    def is_borel(self):
        return self.as_slice().is_borel_closed()

    def __str__(self):
        return "[" + ", ".join(format_monomial(t) for t in self.terms) + "]"

    def wedge_str(self):
        return " ∧ ".join(format_monomial(t) for t in self.terms)


def _desc(order, x):
    if isinstance(x, ExtensorTerm) and x.order == order:
        return x.terms
    if isinstance(x, (ExtensorTerm, DegreeSlice)):
        x = x.terms
    return tuple(sorted(set(map(tuple, x)), key=order.key, reverse=True))


def _check_shape(a, b):
    if len(a) != len(b):
        raise DimensionError(f"extensor terms of step {len(a)} and {len(b)}")
    if a and (sum(a[0]) != sum(b[0]) or len(a[0]) != len(b[0])):
        raise DimensionError("extensor terms of different degree or variable count")


def eisenbud_compare(order, left, right):
    """Total order: compare the descending member lists lexicographically."""
    a, b = _desc(order, left), _desc(order, right)
    _check_shape(a, b)
    for x, y in zip(a, b):
        c = order.compare(x, y)
        if c:
            return c
    return 0


def _leq_sorted(order, a, b):
    k = order.key
    return all(k(x) <= k(y) for x, y in zip(a, b))


def _leq_counting(order, a, b):
    # for every threshold c: #{x in A : x >= c} <= #{y in B : y >= c}
    k = order.key
    events = sorted([(k(x), 0) for x in a] + [(k(y), 1) for y in b], reverse=True)
    count_a = count_b = 0
    i = 0
    while i < len(events):
        j = i
        while j < len(events) and events[j][0] == events[i][0]:
            if events[j][1]:
                count_b += 1
            else:
                count_a += 1
            j += 1
        if count_a > count_b:
            return False
        i = j
    return True


def _leq_symmdiff(order, a, b):
    sa, sb = set(a), set(b)
    only_a = [(order.key(x), 0) for x in sa - sb]
    only_b = [(order.key(y), 1) for y in sb - sa]
    # scan from the top: B's surplus over A must never go negative
    balance = 0
    for _, side in sorted(only_a + only_b, reverse=True):
        balance += 1 if side else -1
        if balance < 0:
            return False
    return True


def _leq_matching(order, a, b):
    """Perfect matching in the bipartite graph ``x -- y`` for ``x <= y``."""
    k = order.key
    universe = {t: i for i, t in enumerate(sorted(set(a) | set(b), key=k))}
    ra = np.array([universe[x] for x in a], dtype=np.int64)
    rb = np.sort(np.array([universe[y] for y in b], dtype=np.int64))
    # neighbours of x: the suffix of sorted B starting at the first y >= x
    starts = np.searchsorted(rb, ra, side="left")
    counts = len(rb) - starts
    indptr = np.concatenate(([0], np.cumsum(counts)))
    indices = np.arange(indptr[-1]) - np.repeat(indptr[:-1] - starts, counts)
    graph = csr_matrix((np.ones(indptr[-1], dtype=np.int8), indices, indptr),
                       shape=(len(ra), len(rb)))
    matched = maximum_bipartite_matching(graph, perm_type="column")
    return bool(np.all(matched >= 0))


_LEQ = {
    "sorted": _leq_sorted,
    "counting": _leq_counting,
    "symmdiff": _leq_symmdiff,
    "matching": _leq_matching,
}


def dd_leq(order, left, right, method="sorted"):
    """True iff ``left ≺≺ right``."""
    if method not in _LEQ:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    a, b = _desc(order, left), _desc(order, right)
    _check_shape(a, b)
    return _LEQ[method](order, a, b)


def dd_compare(order, left, right, method="sorted"):
    le = dd_leq(order, left, right, method)
    ge = dd_leq(order, right, left, method)
    if le and ge:
        return Relation.EQUAL
    if le:
        return Relation.LESS
    if ge:
        return Relation.GREATER
    return Relation.INCOMPARABLE


def rank_matrix(order, slices):
    """Row ``i``: ranks (position in the ascending order of all terms present)
    of slice ``i``'s members, descending.  ``A ≺≺ B`` iff row A <= row B."""
    desc = [_desc(order, s) for s in slices]
    for d in desc[1:]:
        _check_shape(desc[0], d)
    universe = sorted({t for d in desc for t in d}, key=order.key)
    rank = {t: i for i, t in enumerate(universe)}
    return np.array([[rank[t] for t in d] for d in desc], dtype=np.int64).reshape(len(desc), -1)


def leq_matrix(order, slices):
    """Boolean matrix ``M[i, j] = slices[i] ≺≺ slices[j]``."""
    ranks = rank_matrix(order, slices)
    return np.all(ranks[:, None, :] <= ranks[None, :, :], axis=2)


def maximal_indices(order, slices, method="sorted"):
    """Indices of members not strictly ≺≺-below another member, in input order."""
    if not slices:
        return []
    if method == "sorted":
        ranks = rank_matrix(order, slices)
        out = []
        for i, row in enumerate(ranks):
            above = np.all(row <= ranks, axis=1) & np.any(row != ranks, axis=1)
            if not above.any():
                out.append(i)
        return out
    desc = [_desc(order, s) for s in slices]
    out = []
    for i, a in enumerate(desc):
        if not any(i != j and a != b and dd_leq(order, a, b, method) for j, b in enumerate(desc)):
            out.append(i)
    return out


def maximal_elements(order, slices, method="sorted"):
    return [slices[i] for i in maximal_indices(order, slices, method)]


@dataclass(frozen=True)
class PersistenceReport:
    degree: int
    verdict: Relation
    verdict_next: Relation
    guaranteed: bool

    @property
    def persistent(self):
        return self.verdict == self.verdict_next


def check_persistence(order, left, right, p=None):
    """Compare ``left``, ``right`` at their degree and after one EK expansion.

    ``guaranteed`` marks the cases where agreement is a theorem: degrevlex, or
    any order with a constant Hilbert polynomial ``p``.
    """
    a = left.as_slice() if isinstance(left, ExtensorTerm) else left
    b = right.as_slice() if isinstance(right, ExtensorTerm) else right
    if a.m != b.m or len(a) != len(b) or a.nvars != b.nvars:
        raise PreconditionError("slices of different shape")
    if not (a.is_borel_closed() and b.is_borel_closed()):
        raise PreconditionError("persistence is only defined for Borel slices")
    if growth_vector(a) != growth_vector(b):
        raise PreconditionError("slices do not share a Hilbert polynomial (growth vectors differ)")
    guaranteed = order.kind == "degrevlex" or (p is not None and p.is_constant())
    return PersistenceReport(
        degree=a.m,
        verdict=dd_compare(order, a, b),
        verdict_next=dd_compare(order, ek_expand(a), ek_expand(b)),
        guaranteed=guaranteed,
    )
