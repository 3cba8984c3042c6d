"""Consequences of the ≺≺ order for Hilbert schemes: maximal Borel slices as
double-gin candidates, component lower bounds, Hilbert function extremes."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import monomials as mn
from .census import census_record, enumerate_borel
from .errors import DimensionError, PreconditionError, UnsupportedInputError
from .extensors import ExtensorTerm, Relation, dd_leq, leq_matrix, maximal_indices
from .hilbert import as_polynomial, gotzmann_number, lex_segment_ideal
from .stable import growth_vector, hilbert_function, truncate, x0x1_saturation


@dataclass
class CensusReport:
    p: str
    n: int
    order: mn.TermOrder
    r: int
    ideals: list
    slices: list
    maximal: list
    lex_index: int
    bound_basic: int
    bound_refined: int | None
    hilbert_functions: list
    x0x1_saturations: list = field(default_factory=list)
    growth_vector: tuple = ()

    @property
    def count(self):
        return len(self.ideals)

    @property
    def maximal_flags(self):
        marked = set(self.maximal)
        return [i in marked for i in range(self.count)]

    def to_json(self):
        records = []
        for i, ideal in enumerate(self.ideals):
            rec = census_record(ideal, self.r)
            rec["x0x1_sat"] = (self.x0x1_saturations[i].generator_strings()
                               if self.x0x1_saturations else None)
            records.append(rec)
        return {
            "p": self.p,
            "n": self.n,
            "order": str(self.order),
            "r": self.r,
            "count": self.count,
            "maximal": list(self.maximal),
            "lex_index": self.lex_index,
            "bound_basic": self.bound_basic,
            "bound_refined": self.bound_refined,
            "growth_vector": list(self.growth_vector),
            "ideals": records,
        }


def _census_slices(p, n, order, jobs=None):
    p = as_polynomial(p)
    r = gotzmann_number(p)
    ideals = enumerate_borel(p, n, jobs=jobs)
    slices = [ExtensorTerm.of(truncate(J, r).terms, order) for J in ideals]
    return p, r, ideals, slices


def _rigid_growth(slices):
    vectors = {growth_vector(s.as_slice()) for s in slices}
    if len(vectors) != 1:
        raise AssertionError(f"growth vectors differ across the census: {sorted(vectors)}")
    return vectors.pop()


def component_lower_bound(p, n, order, jobs=None):
    """Census report with the lower bounds on the number of components.

    ``bound_basic`` counts the ≺≺-maximal slices.  For ``n > 2`` the count
    grows by one when the lex slice is not maximal and every maximal slice has
    an x0,x1-saturation different from the lex one (then the lex component is
    not among those already counted).
    """
    p, r, ideals, slices = _census_slices(p, n, order, jobs)
    gv = _rigid_growth(slices)
    maximal = maximal_indices(order, slices)
    lex = lex_segment_ideal(p, n)
    lex_index = ideals.index(lex)
    sats = [x0x1_saturation(J) for J in ideals] if n > 2 else []
    refined = None
    if n > 2 and lex_index not in maximal:
        if all(sats[i] != sats[lex_index] for i in maximal):
            refined = len(maximal) + 1
    return CensusReport(
        p=str(p), n=n, order=order, r=r, ideals=ideals, slices=slices,
        maximal=maximal, lex_index=lex_index, bound_basic=len(maximal),
        bound_refined=refined,
        hilbert_functions=[[hilbert_function(J, t) for t in range(r + 1)] for J in ideals],
        x0x1_saturations=sats, growth_vector=gv,
    )


@dataclass(frozen=True)
class Partition:
    possible: tuple
    excluded: tuple


def necessary_condition_filter(slices, g_slice, order):
    """Split census indices by whether the slice lies ≺≺-below ``g_slice``.

    Slices not below ``g_slice`` cannot lie on a GL-stable set whose
    double-gin has degree-``r`` slice ``g_slice``.
    """
    possible, excluded = [], []
    for i, s in enumerate(slices):
        if len(s.terms) != len(g_slice.terms):
            raise DimensionError(f"slice {i} has {len(s.terms)} terms, expected {len(g_slice.terms)}")
        (possible if dd_leq(order, s, g_slice) else excluded).append(i)
    return Partition(tuple(possible), tuple(excluded))


@dataclass(frozen=True)
class HilbertComparison:
    smaller: int
    larger: int
    relation: str
    consistent: bool


@dataclass
class MaxHilbertResult:
    r: int
    ideals: list
    maximal: list
    hilbert_functions: list
    log: list

    @property
    def violations(self):
        return [c for c in self.log if not c.consistent]

    def maxima(self):
        return [(self.ideals[i], self.hilbert_functions[i]) for i in self.maximal]


def _dominated(h, k):
    return all(a <= b for a, b in zip(h, k))


def max_hilbert_function(p, n, order=None, jobs=None):
    """Census members of maximal Hilbert function under degrevlex.

    The log lists every ≺≺-comparable pair and whether the smaller slice has a
    pointwise smaller-or-equal ``H_{S/I}`` on ``0..r``.
    """
    order = order or mn.TermOrder("degrevlex")
    if order.kind != "degrevlex":
        raise UnsupportedInputError(f"maximal Hilbert functions need degrevlex, got {order}")
    p, r, ideals, slices = _census_slices(p, n, order, jobs)
    hf = [[hilbert_function(J, t) for t in range(r + 1)] for J in ideals]
    leq = leq_matrix(order, slices)
    log = []
    for i, j in zip(*np.nonzero(leq)):
        i, j = int(i), int(j)
        if i == j or (leq[j, i] and j < i):
            continue
        rel = Relation.EQUAL if leq[j, i] else Relation.LESS
        log.append(HilbertComparison(i, j, rel.value, _dominated(hf[i], hf[j])))
    maximal = maximal_indices(order, slices)
    return MaxHilbertResult(r, ideals, maximal, hf, log)


@dataclass
class ConjectureEvidence:
    r: int
    count: int
    lex_index: int
    consistent: bool
    counterexamples: list

    def verdict(self):
        return "consistent" if self.consistent else "counterexamples found"


def conjecture_min_deglex_check(p, n, jobs=None):
    """Evidence only: does the deglex ≺≺-maximum have pointwise minimal ``H_{S/I}``?"""
    order = mn.TermOrder("deglex")
    p, r, ideals, slices = _census_slices(p, n, order, jobs)
    maximal = maximal_indices(order, slices)
    if len(maximal) != 1:
        raise PreconditionError(f"expected a unique deglex maximum, found {len(maximal)}")
    top = maximal[0]
    hf = [[hilbert_function(J, t) for t in range(r + 1)] for J in ideals]
    bad = [i for i in range(len(ideals)) if not _dominated(hf[top], hf[i])]
    return ConjectureEvidence(r, len(ideals), top, not bad, bad)
