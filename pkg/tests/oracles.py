"""Slow, independent reference implementations used only by the tests."""

from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb

import sympy


def monomials(nvars, d):
    return [a for a in product(range(d + 1), repeat=nvars) if sum(a) == d]


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def brute_hilbert_function(gens, nvars, t):
    """Count degree-t monomials outside the ideal."""
    return sum(1 for a in monomials(nvars, t) if not any(divides(g, a) for g in gens))


def brute_is_borel(gens, nvars, top):
    inside = lambda a: any(divides(g, a) for g in gens)
    for d in range(top + 1):
        for a in monomials(nvars, d):
            if not inside(a):
                continue
            for i in range(nvars):
                for j in range(i + 1, nvars):
                    if a[i]:
                        b = list(a)
                        b[i] -= 1
                        b[j] += 1
                        if not inside(tuple(b)):
                            return False
    return True


def brute_dd_leq(key, left, right):
    """A bijection w with key(a) <= key(w(a)) exists (permutation search)."""
    left, right = list(left), list(right)
    return any(all(key(a) <= key(b) for a, b in zip(left, perm)) for perm in permutations(right))


def gotzmann_value(exponents, t):
    total = 0
    for i, a in enumerate(exponents):
        total += sympy.binomial(t + a - i, a)
    return int(total)


def rational_rank(rows):
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction)
                          else x for x in row] for row in rows]).rank()


def dense(poly_terms, mons):
    return [poly_terms.get(a, 0) for a in mons]


def brute_ideal_dims(polys, nvars, m, t):
    """dim of the degree-t part of the ideal generated by degree-m polys."""
    mons = monomials(nvars, t)
    rows = []
    for f in polys:
        for u in monomials(nvars, t - m):
            rows.append(dense({tuple(x + y for x, y in zip(a, u)): c for a, c in f.items()}, mons))
    return rational_rank(rows)


def brute_plucker_support(polys, mons):
    """Subsets of columns with nonzero maximal minor."""
    rows = [dense(f, mons) for f in polys]
    q = len(rows)
    out = []
    for cols in combinations(range(len(mons)), q):
        minor = sympy.Matrix([[Fraction(r[c]) for c in cols] for r in rows])
        if minor.det() != 0:
            out.append(frozenset(mons[c] for c in cols))
    return out


def ambient(n, t):
    return comb(n + t, n)
