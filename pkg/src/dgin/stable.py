"""Monomial ideals, strongly stable (Borel-fixed in characteristic 0) ideals and
their degree slices."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb

from . import monomials as mn
from .errors import (
    DegenerateSaturationWarning,
    DimensionError,
    NotStabilizedError,
    PreconditionError,
    UndefinedMinError,
    UnsupportedInputError,
)
from .hilbert import HilbertPolynomial, binomial_polynomial


def generator_key(a):
    """Canonical generator order: by degree, then descending degrevlex."""
    return (sum(a),) + tuple(a)


def minimalize(gens):
    """Drop generators divisible by another generator (and duplicates)."""
    gens = sorted(set(gens), key=generator_key)
    out = []
    for g in gens:
        if not any(mn.divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal of ``K[x0..x_{nvars-1}]`` stored by its minimal generators."""

    gens: tuple
    nvars: int

    def __post_init__(self):
        gens = tuple(tuple(int(e) for e in g) for g in self.gens)
        for g in gens:
            if len(g) != self.nvars:
                raise DimensionError(f"generator {g} is not over {self.nvars} variables")
        object.__setattr__(self, "gens", minimalize(gens))

    @classmethod
    def parse(cls, text, nvars):
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        parts = [s for s in text.split(",") if s.strip()]
        return cls(tuple(mn.parse_monomial(s, nvars) for s in parts), nvars)

    @classmethod
    def unit(cls, nvars):
        return cls((mn.one(nvars),), nvars)

    @property
    def n(self):
        return self.nvars - 1

    def is_unit(self):
        return self.gens == (mn.one(self.nvars),)

    def contains(self, a):
        return any(mn.divides(g, a) for g in self.gens)

    __contains__ = contains

    def max_degree(self):
        return max((sum(g) for g in self.gens), default=0)

    def is_borel_fixed(self):
        return is_borel_fixed(self)

    def truncate(self, m):
        return truncate(self, m)

    def hilbert_function(self, t):
        return hilbert_function(self, t)

    def hilbert_polynomial(self):
        return hilbert_polynomial(self)

    def generator_strings(self):
        return [mn.format_monomial(g) for g in self.gens]

    def __str__(self):
        return "(" + ", ".join(self.generator_strings()) + ")"

    def sort_key(self):
        return tuple(generator_key(g) for g in self.gens)


@dataclass(frozen=True)
class DegreeSlice:
    """A finite set of distinct degree-``m`` monomials."""

    m: int
    nvars: int
    terms: frozenset

    def __post_init__(self):
        terms = frozenset(tuple(t) for t in self.terms)
        for t in terms:
            if len(t) != self.nvars or sum(t) != self.m:
                raise DimensionError(f"{t} is not a degree-{self.m} monomial in {self.nvars} variables")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, terms, nvars=None):
        terms = [tuple(t) for t in terms]
        if not terms:
            raise ValueError("empty slice needs explicit degree; use DegreeSlice(m, nvars, ())")
        return cls(sum(terms[0]), nvars or len(terms[0]), frozenset(terms))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __contains__(self, a):
        return a in self.terms

    def sorted(self, order=None):
        """Members in normal expression: strictly descending under ``order``."""
        order = order or mn.TermOrder("degrevlex")
        return tuple(sorted(self.terms, key=order.key, reverse=True))

    def is_borel_closed(self):
        return all(b in self.terms for a in self.terms for b in mn.elementary_borel_moves(a))

    def ideal(self):
        return MonomialIdeal(tuple(self.terms), self.nvars)

    def __str__(self):
        return "[" + ", ".join(mn.format_monomial(t) for t in self.sorted()) + "]"


def is_borel_fixed(ideal):
    """Strongly stable test on the minimal generators."""
    return all(ideal.contains(b) for g in ideal.gens for b in mn.elementary_borel_moves(g))


def truncate(ideal, m):
    """Degree-``m`` monomials of the ideal."""
    out = set()
    for g in ideal.gens:
        d = sum(g)
        if d > m:
            continue
        for u in mn.monomials_of_degree(ideal.nvars, m - d):
            out.add(mn.mul(g, u))
    return DegreeSlice(m, ideal.nvars, frozenset(out))


def plain_expand(slice_):
    """All products of slice members with a variable."""
    nv = slice_.nvars
    xs = [mn.variable(i, nv) for i in range(nv)]
    return DegreeSlice(slice_.m + 1, nv, frozenset(mn.mul(t, x) for t in slice_ for x in xs))


def _ek_limit(t):
    # the constant monomial behaves as if its minimal variable were the last one
    try:
        return mn.min_var(t)
    except UndefinedMinError:
        return len(t) - 1


def ek_expand(slice_):
    """Degree ``m+1`` part of the ideal generated by a Borel-closed slice, built
    from the unique decomposition ``tau * x_l`` with ``l <= min(tau)``."""
    if not slice_.is_borel_closed():
        raise PreconditionError("ek_expand needs a Borel-closed slice; use plain_expand")
    out = []
    for t in slice_:
        for l in range(_ek_limit(t) + 1):
            b = list(t)
            b[l] += 1
            out.append(tuple(b))
    result = DegreeSlice(slice_.m + 1, slice_.nvars, frozenset(out))
    assert len(result) == len(out)
    return result


def growth_vector(slice_):
    if not len(slice_):
        raise PreconditionError("growth vector of an empty slice")
    v = [0] * slice_.nvars
    for t in slice_:
        v[mn.min_var(t)] += 1
    return tuple(v)


def hilbert_function(ideal, t):
    """``H_{S/I}(t)`` by complement counting."""
    if t < 0:
        return 0
    return comb(ideal.n + t, ideal.n) - len(truncate(ideal, t))


def _scale(p, c):
    return HilbertPolynomial(tuple(a * c for a in p.coeffs))


def hilbert_polynomial(ideal, max_steps=200):
    n = ideal.n
    ambient = binomial_polynomial(n, n)
    if not ideal.gens:
        return ambient
    if ideal.is_unit():
        return HilbertPolynomial()
    if is_borel_fixed(ideal):
        m = ideal.max_degree()
        v = growth_vector(truncate(ideal, m))
        q = HilbertPolynomial()
        for i, vi in enumerate(v):
            if vi:
                q = q + _scale(binomial_polynomial(i - m, i), vi)
        return ambient - q
    return _interpolated_polynomial(ideal, max_steps)


def _interpolated_polynomial(ideal, max_steps):
    n = ideal.n
    t0 = ideal.max_degree()
    window = n + 2
    values = [hilbert_function(ideal, t) for t in range(t0, t0 + window)]
    for start in range(t0, t0 + max_steps):
        base = values[-window:]
        # Newton forward differences through the first n+1 points
        diffs, row = [], base[:-1]
        while row:
            diffs.append(row[0])
            row = [b - a for a, b in zip(row, row[1:])]
        p = HilbertPolynomial()
        for k, d in enumerate(diffs):
            if d:
                p = p + _scale(binomial_polynomial(-start, k), d)
        if p(start + window - 1) == base[-1]:
            return p
        values.append(hilbert_function(ideal, start + window))
    raise NotStabilizedError(f"Hilbert function of {ideal} did not stabilize")


def saturate(ideal):
    """Saturation of a Borel-fixed ideal: strip every power of x0."""
    if not is_borel_fixed(ideal):
        raise UnsupportedInputError(f"{ideal} is not Borel-fixed; only Borel ideals are saturated here")
    nv = ideal.nvars
    if any(all(e == 0 for e in g[1:]) for g in ideal.gens):
        if not ideal.is_unit():
            warnings.warn(f"{ideal} contains a pure power of x0; its saturation is (1)",
                          DegenerateSaturationWarning, stacklevel=2)
        return MonomialIdeal.unit(nv)
    return MonomialIdeal(tuple((0,) + g[1:] for g in ideal.gens), nv)


def is_saturated(ideal):
    return saturate(ideal) == ideal


def x0x1_saturation(ideal):
    """Evaluate the generators at ``(1, 1, x2, ..., xn)``."""
    if ideal.n <= 2:
        raise DimensionError("x0,x1-saturation needs n > 2")
    return MonomialIdeal(tuple((0, 0) + g[2:] for g in ideal.gens), ideal.nvars)


def regularity(ideal):
    """Castelnuovo-Mumford regularity of a Borel ideal (char 0): top generator degree."""
    if not is_borel_fixed(ideal):
        raise UnsupportedInputError(f"{ideal} is not Borel-fixed")
    return ideal.max_degree()
