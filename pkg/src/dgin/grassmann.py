"""Points of the Grassmannian of q-dimensional subspaces of ``S_m`` over Q.

All linear algebra is exact (``fractions.Fraction``).  Rows are sparse dicts
``column -> coefficient`` with column 0 the greatest monomial of the chosen
term order, so the pivot of an echelon row is its initial term.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from . import monomials as mn
from .errors import (
    DimensionError,
    GenericityError,
    ParseError,
    PreconditionError,
    ResourceError,
)
from .extensors import ExtensorTerm, eisenbud_compare
from .hilbert import as_polynomial, gotzmann_number
from .stable import MonomialIdeal, is_borel_fixed, truncate

COEFF_BOUND = 997
SUPPORT_BUDGET = 100_000


class HomogeneousPolynomial:
    """Finite map monomial -> nonzero Fraction, all monomials of one degree."""

    __slots__ = ("nvars", "m", "terms")

    def __init__(self, terms, nvars=None):
        clean = {}
        for a, c in dict(terms).items():
            c = Fraction(c)
            if c:
                clean[tuple(a)] = clean.get(tuple(a), 0) + c
        clean = {a: c for a, c in clean.items() if c}
        degs = {sum(a) for a in clean}
        if len(degs) > 1:
            raise DimensionError(f"polynomial is not homogeneous (degrees {sorted(degs)})")
        widths = {len(a) for a in clean}
        if nvars is None:
            if not widths:
                raise ValueError("zero polynomial needs nvars")
            nvars = widths.pop()
        elif widths and widths != {nvars}:
            raise DimensionError(f"terms not over {nvars} variables")
        self.nvars = nvars
        self.terms = clean
        self.m = degs.pop() if degs else 0

    @classmethod
    def monomial(cls, a, c=1):
        return cls({tuple(a): c}, len(a))

    @classmethod
    def parse(cls, text, nvars):
        return parse_polynomial(text, nvars)

    def is_zero(self):
        return not self.terms

    def support(self):
        return set(self.terms)

    def initial_term(self, order):
        return max(self.terms, key=order.key)

    def times_monomial(self, u):
        return HomogeneousPolynomial({mn.mul(a, u): c for a, c in self.terms.items()}, self.nvars)

    def __eq__(self, other):
        return isinstance(other, HomogeneousPolynomial) and self.terms == other.terms \
            and self.nvars == other.nvars

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return format_polynomial(self)

    __repr__ = __str__


_POLY_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)(?:\s*/\s*(\d+))?\s*\*?\s*)?(x\d+(?:\s*\^\s*\d+)?(?:\s*\*\s*x\d+(?:\s*\^\s*\d+)?)*)?\s*")


def parse_polynomial(text, nvars):
    """``c*<monomial>`` terms joined by ``+``/``-``; ``c`` an integer or ``p/q``."""
    terms = {}
    pos = 0
    first = True
    if not text.strip():
        raise ParseError("empty polynomial", text, 0)
    while pos < len(text):
        m = _POLY_TERM.match(text, pos)
        sign, num, den, mon = m.groups()
        if m.end() == pos or (num is None and mon is None):
            raise ParseError("expected a term c*monomial", text, pos)
        if sign is None and not first:
            raise ParseError("expected '+' or '-'", text, pos)
        c = Fraction(int(num), int(den) if den else 1) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        a = mn.parse_monomial(mon, nvars) if mon is not None else mn.one(nvars)
        terms[a] = terms.get(a, 0) + c
        pos = m.end()
        first = False
    return HomogeneousPolynomial(terms, nvars)


def _fmt_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(f, order=None):
    order = order or mn.TermOrder("degrevlex")
    if f.is_zero():
        return "0"
    out = ""
    for a in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[a]
        body = mn.format_monomial(a)
        if abs(c) != 1:
            body = _fmt_coeff(abs(c)) if body == "1" else f"{_fmt_coeff(abs(c))}*{body}"
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


# --- sparse exact row reduction -------------------------------------------------

def _sub_scaled(row, f, prow):
    """row -= f * prow, in place."""
    for c, v in prow.items():
        nv = row.get(c, 0) - f * v
        if nv:
            row[c] = nv
        else:
            row.pop(c, None)


class Echelon:
    """Incremental reduced row echelon form over Q.

    ``pivots[c]`` is the row with leading column ``c`` and coefficient 1; no pivot
    row has a nonzero entry in another pivot column.
    """

    def __init__(self):
        self.pivots = {}

    def reduce(self, row):
        r = {c: Fraction(v) for c, v in row.items() if v}
        for c in [c for c in r if c in self.pivots]:
            f = r.get(c)
            if f:
                _sub_scaled(r, f, self.pivots[c])
        return r

    def add(self, row):
        """Insert a row; returns True when the rank grew."""
        r = self.reduce(row)
        if not r:
            return False
        c0 = min(r)
        lead = r[c0]
        if lead != 1:
            r = {c: v / lead for c, v in r.items()}
        for prow in self.pivots.values():
            f = prow.get(c0)
            if f:
                _sub_scaled(prow, f, r)
        self.pivots[c0] = r
        return True

    @property
    def rank(self):
        return len(self.pivots)

    def rows(self):
        return [self.pivots[c] for c in sorted(self.pivots)]


class _Columns:
    """Degree-``m`` monomials indexed descending under a term order."""

    def __init__(self, nvars, m, order):
        self.mons = mn.all_monomials(nvars - 1, m, order)
        self.index = {a: i for i, a in enumerate(self.mons)}

    def row(self, f):
        return {self.index[a]: c for a, c in f.terms.items()}

    def poly(self, row, nvars):
        return HomogeneousPolynomial({self.mons[c]: v for c, v in row.items()}, nvars)


def determinant(matrix):
    a = [[Fraction(x) for x in row] for row in matrix]
    k = len(a)
    det = Fraction(1)
    for i in range(k):
        p = next((r for r in range(i, k) if a[r][i]), None)
        if p is None:
            return Fraction(0)
        if p != i:
            a[i], a[p] = a[p], a[i]
            det = -det
        det *= a[i][i]
        for r in range(i + 1, k):
            f = a[r][i] / a[i][i]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return det


# --- subspaces -----------------------------------------------------------------

class Subspace:
    """``V = <f_1, ..., f_q> ⊆ S_m`` with linearly independent ``f_i``."""

    def __init__(self, basis, nvars=None, m=None):
        basis = list(basis)
        if not basis:
            raise ValueError("empty subspace")
        nvars = nvars or basis[0].nvars
        ms = {f.m for f in basis if not f.is_zero()}
        if m is None:
            if len(ms) != 1:
                raise DimensionError("basis polynomials must share one degree")
            m = ms.pop()
        elif ms - {m}:
            raise DimensionError(f"basis polynomials not all of degree {m}")
        self.nvars, self.m, self.basis = nvars, m, tuple(basis)
        cols = _Columns(nvars, m, mn.TermOrder("degrevlex"))
        ech = Echelon()
        for f in basis:
            ech.add(cols.row(f))
        if ech.rank != len(basis):
            raise DimensionError(f"basis of {len(basis)} polynomials spans only rank {ech.rank}")

    @classmethod
    def from_monomials(cls, terms, nvars=None):
        terms = [tuple(t) for t in terms]
        return cls([HomogeneousPolynomial.monomial(t) for t in terms], nvars or len(terms[0]))

    @classmethod
    def parse(cls, text, nvars):
        """Semicolon-separated polynomials."""
        return cls([parse_polynomial(s, nvars) for s in text.split(";") if s.strip()], nvars)

    @property
    def q(self):
        return len(self.basis)

    def __str__(self):
        return "<" + "; ".join(map(str, self.basis)) + ">"


def rref_basis(space, order):
    """Reduced row echelon basis, columns descending under ``order``; members are
    sorted by strictly descending leading term, each with leading coefficient 1."""
    cols = _Columns(space.nvars, space.m, order)
    ech = Echelon()
    for f in space.basis:
        ech.add(cols.row(f))
    return Subspace([cols.poly(r, space.nvars) for r in ech.rows()], space.nvars, space.m)


def initial_extensor(space, order):
    """Leading terms of the reduced basis, as a normal expression."""
    cols = _Columns(space.nvars, space.m, order)
    ech = Echelon()
    for f in space.basis:
        ech.add(cols.row(f))
    return ExtensorTerm(tuple(cols.mons[c] for c in ech.pivots), order)


@dataclass(frozen=True)
class GLMatrix:
    """Invertible ``(n+1) x (n+1)`` matrix acting by ``x_i -> sum_j g_ij x_j``."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        k = len(rows)
        if any(len(r) != k for r in rows):
            raise DimensionError("GL matrix must be square")
        if determinant(rows) == 0:
            raise ValueError("singular matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, k):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)))

    @property
    def size(self):
        return len(self.entries)


def random_gl(rng, k, bound=COEFF_BOUND):
    """Uniform entries in ``{-bound..bound}``; singular draws are rejected."""
    while True:
        ent = rng.integers(-bound, bound + 1, size=(k, k)).tolist()
        if determinant(ent) != 0:
            return GLMatrix(tuple(map(tuple, ent)))


def _poly_mul(f, g):
    out = {}
    for a, c in f.items():
        for b, d in g.items():
            k = tuple(x + y for x, y in zip(a, b))
            out[k] = out.get(k, 0) + c * d
    return {k: v for k, v in out.items() if v}


def _exact(x):
    # plain ints keep the substitution arithmetic cheap
    return int(x) if x.denominator == 1 else x


class _Substitution:
    """Caches images of monomials under one matrix."""

    def __init__(self, g, nvars):
        if g.size != nvars:
            raise DimensionError(f"{g.size}x{g.size} matrix on {nvars} variables")
        self.nvars = nvars
        self.linear = []
        for i in range(nvars):
            self.linear.append({mn.variable(j, nvars): _exact(g.entries[i][j])
                                for j in range(nvars) if g.entries[i][j]})
        self.powers = {}
        self.images = {}

    def _power(self, i, e):
        key = (i, e)
        if key not in self.powers:
            if e == 0:
                self.powers[key] = {mn.one(self.nvars): 1}
            else:
                self.powers[key] = _poly_mul(self._power(i, e - 1), self.linear[i])
        return self.powers[key]

    def monomial(self, a):
        if a not in self.images:
            img = {mn.one(self.nvars): 1}
            for i, e in enumerate(a):
                if e:
                    img = _poly_mul(img, self._power(i, e))
            self.images[a] = img
        return self.images[a]

    def __call__(self, f):
        out = {}
        for a, c in f.terms.items():
            for b, d in self.monomial(a).items():
                out[b] = out.get(b, 0) + c * d
        return HomogeneousPolynomial(out, self.nvars)


def apply_gl(g, space):
    sub = _Substitution(g, space.nvars)
    return Subspace([sub(f) for f in space.basis], space.nvars, space.m)


def apply_gl_polynomial(g, f):
    return _Substitution(g, f.nvars)(f)


class _Draws:
    """Seeded stream of random GL matrices; draw ``i`` depends only on
    ``(seed, i)``, so serial and parallel consumers agree."""

    def __init__(self, seed, k, bound=COEFF_BOUND):
        self.seq = np.random.SeedSequence(seed)
        self.k, self.bound = k, bound
        self.drawn = []

    def take(self, count):
        while len(self.drawn) < count:
            child = self.seq.spawn(1)[0]
            self.drawn.append(random_gl(np.random.default_rng(child), self.k, self.bound))
        return self.drawn[:count]


def _best(order, cands):
    best = cands[0]
    for c in cands[1:]:
        if eisenbud_compare(order, c, best) > 0:
            best = c
    return best


def generic_initial_extensor(space, order, seed=0, trials=4, max_rounds=6):
    """Monte-Carlo generic initial extensor.

    The candidate is the maximum of ``in(g V)`` over random ``g``; it is accepted
    once it is Borel and reached by at least two draws, otherwise the number of
    draws is doubled.
    """
    if trials < 2:
        raise PreconditionError("need at least 2 trials")
    draws = _Draws(seed, space.nvars)
    results = []
    need = trials
    for _ in range(max_rounds):
        for g in draws.take(need)[len(results):]:
            results.append(initial_extensor(apply_gl(g, space), order))
        best = _best(order, results)
        if sum(1 for r in results if r.terms == best.terms) >= 2 and best.is_borel():
            return best
        need *= 2
    raise GenericityError(f"no certified generic initial extensor after {len(results)} draws")


def _ideal_slices(polys, order, top):
    """Leading-term slices of the ideal generated by ``polys`` in degrees up to ``top``."""
    nvars = polys[0].nvars
    low = min(f.m for f in polys)
    slices = {}
    prev_rows, prev_cols = [], None
    for d in range(low, top + 1):
        cols = _Columns(nvars, d, order)
        ech = Echelon()
        if prev_cols is not None:
            for r in prev_rows:
                f = prev_cols.poly(r, nvars)
                for i in range(nvars):
                    ech.add(cols.row(f.times_monomial(mn.variable(i, nvars))))
        for f in polys:
            if f.m == d:
                ech.add(cols.row(f))
        slices[d] = tuple(cols.mons[c] for c in sorted(ech.pivots))
        prev_rows, prev_cols = ech.rows(), cols
    return slices


def _resolve_bound(polys, degree_bound, hilbert_poly):
    if degree_bound is None and hilbert_poly is not None:
        degree_bound = gotzmann_number(as_polynomial(hilbert_poly))
    if degree_bound is None:
        raise PreconditionError("gin_ideal needs a degree bound (or a Hilbert polynomial)")
    return max(degree_bound, max(f.m for f in polys))


def initial_ideal(polys, order, degree_bound=None, hilbert_poly=None):
    """Initial ideal, reconstructed degree by degree up to the bound."""
    top = _resolve_bound(polys, degree_bound, hilbert_poly)
    slices = _ideal_slices(polys, order, top)
    return MonomialIdeal(tuple(t for s in slices.values() for t in s), polys[0].nvars)


def gin_ideal(polys, order, seed=0, degree_bound=None, hilbert_poly=None, trials=4,
              max_rounds=6):
    """Generic initial ideal of the ideal generated by homogeneous ``polys``."""
    polys = list(polys)
    nvars = polys[0].nvars
    top = _resolve_bound(polys, degree_bound, hilbert_poly)
    draws = _Draws(seed, nvars)
    per_draw = []
    need = trials
    for _ in range(max_rounds):
        for g in draws.take(need)[len(per_draw):]:
            sub = _Substitution(g, nvars)
            per_draw.append(_ideal_slices([sub(f) for f in polys], order, top))
        best = {d: _best(order, [ExtensorTerm(s[d], order) for s in per_draw]).terms
                for d in per_draw[0]}
        witnesses = [s for s in per_draw if all(tuple(s[d]) == best[d] for d in best)]
        if len(witnesses) >= 2:
            ideal = MonomialIdeal(tuple(t for s in best.values() for t in s), nvars)
            if is_borel_fixed(ideal):
                return ideal
        need *= 2
    raise GenericityError(f"no certified generic initial ideal after {len(per_draw)} draws")


def delta_support(space, order, budget=SUPPORT_BUDGET):
    """Extensor terms with nonzero Plücker coordinate at ``space``."""
    cols = _Columns(space.nvars, space.m, order)
    count = comb(len(cols.mons), space.q)
    if count > budget:
        raise ResourceError(f"delta support needs {count} minors (budget {budget})")
    ech = Echelon()
    for f in space.basis:
        ech.add(cols.row(f))
    rows = ech.rows()
    supports = [set(r) for r in rows]
    used = sorted(set().union(*supports))
    out = set()
    for combo in combinations(used, space.q):
        chosen = set(combo)
        if any(not (s & chosen) for s in supports):
            continue
        minor = [[r.get(c, 0) for c in combo] for r in rows]
        if determinant(minor) != 0:
            out.add(ExtensorTerm(tuple(cols.mons[c] for c in combo), order))
    return out


def ideal_hilbert_function(space, t_max):
    """``dim_K (I_V)_t`` for ``t = m .. t_max`` by exact rank of products."""
    if t_max < space.m:
        raise PreconditionError("t_max must be at least the degree of the subspace")
    order = mn.TermOrder("degrevlex")
    nvars = space.nvars
    dims = []
    cols = _Columns(nvars, space.m, order)
    ech = Echelon()
    for f in space.basis:
        ech.add(cols.row(f))
    dims.append(ech.rank)
    for d in range(space.m + 1, t_max + 1):
        new_cols = _Columns(nvars, d, order)
        new = Echelon()
        for r in ech.rows():
            f = cols.poly(r, nvars)
            for i in range(nvars):
                new.add(new_cols.row(f.times_monomial(mn.variable(i, nvars))))
        cols, ech = new_cols, new
        dims.append(ech.rank)
    return dims


def monomial_ideal_dims(terms, nvars, m, t_max):
    """Same quantity as :func:`ideal_hilbert_function` for a monomial subspace."""
    ideal = MonomialIdeal(tuple(terms), nvars)
    return [len(truncate(ideal, t)) for t in range(m, t_max + 1)]
