"""Monomials as exponent tuples and the term orders used on them.

A monomial in ``x0, ..., xn`` is a plain tuple of ``n + 1`` non-negative
integers; index ``i`` holds the exponent of ``x_i``.  Every order here
satisfies ``x0 < x1 < ... < xn``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from itertools import combinations_with_replacement
from math import comb

from .errors import DimensionError, ParseError, UndefinedMinError

Monomial = tuple

ORDER_KINDS = ("lex", "deglex", "degrevlex", "weight")


def degree(a):
    return sum(a)


def one(nvars):
    return (0,) * nvars


def variable(i, nvars):
    return tuple(1 if j == i else 0 for j in range(nvars))


def mul(a, b):
    if len(a) != len(b):
        raise DimensionError(f"monomials over {len(a)} and {len(b)} variables")
    return tuple(x + y for x, y in zip(a, b))


def divides(a, b):
    """True if ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def quotient(b, a):
    return tuple(y - x for x, y in zip(a, b))


def min_var(a):
    """Smallest index of a variable dividing ``a``."""
    for i, e in enumerate(a):
        if e:
            return i
    raise UndefinedMinError("min_var of the constant monomial is undefined")


def max_var(a):
    for i in range(len(a) - 1, -1, -1):
        if a[i]:
            return i
    raise UndefinedMinError("max_var of the constant monomial is undefined")


def elementary_borel_moves(a):
    """All ``x_j * a / x_i`` with ``i < j`` and ``x_i | a``."""
    out = set()
    n1 = len(a)
    for i in range(n1):
        if not a[i]:
            continue
        for j in range(i + 1, n1):
            b = list(a)
            b[i] -= 1
            b[j] += 1
            out.add(tuple(b))
    return out


def inverse_borel_moves(a):
    """All ``x_i * a / x_j`` with ``i < j`` and ``x_j | a`` (moves towards smaller variables)."""
    out = set()
    for j in range(len(a)):
        if not a[j]:
            continue
        for i in range(j):
            b = list(a)
            b[j] -= 1
            b[i] += 1
            out.add(tuple(b))
    return out


def monomials_of_degree(nvars, d):
    """Unordered generator over the degree-``d`` monomials in ``nvars`` variables."""
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def all_monomials(n, d, order=None):
    """Basis of ``S_d`` for ``S = K[x0..xn]``, sorted descending under ``order``.

    Without an order, degrevlex is used.
    """
    if d < 0:
        return []
    order = order or TermOrder("degrevlex")
    mons = sorted(monomials_of_degree(n + 1, d), key=order.key, reverse=True)
    assert len(mons) == comb(n + d, n)
    return mons


@dataclass(frozen=True)
class TermOrder:
    """Term order on monomials.

    ``kind`` is one of lex, deglex, degrevlex, weight.  Weight orders compare
    the degree, then the weighted degree, and break ties with the lex rule.
    """

    kind: str = "degrevlex"
    weights: tuple | None = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.kind == "weight":
            if not self.weights:
                raise ValueError("weight order needs a weight vector")
            w = tuple(int(x) for x in self.weights)
            if any(x <= 0 for x in w):
                raise ValueError("weights must be positive")
            if any(w[i] > w[i + 1] for i in range(len(w) - 1)):
                # x_i < x_{i+1} would fail for a decreasing pair
                raise ValueError("weights must be non-decreasing in the variable index")
            object.__setattr__(self, "weights", w)
        elif self.weights is not None:
            raise ValueError(f"{self.kind} takes no weights")

    def key(self, a):
        """Sort key: ``a < b`` in this order iff ``key(a) < key(b)``."""
        return _order_key(self.kind, self.weights, tuple(a))

    def compare(self, a, b):
        if len(a) != len(b):
            raise DimensionError(f"monomials over {len(a)} and {len(b)} variables")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def sorted_desc(self, mons):
        return sorted(mons, key=self.key, reverse=True)

    @property
    def graded(self):
        return self.kind != "lex"

    def __str__(self):
        if self.kind == "weight":
            return "weight:" + ",".join(map(str, self.weights))
        return self.kind


@lru_cache(maxsize=1 << 18)
def _order_key(kind, weights, a):
    if kind == "degrevlex":
        return (sum(a),) + tuple(-e for e in a)
    if kind == "deglex":
        return (sum(a),) + a[::-1]
    if kind == "lex":
        return a[::-1]
    if len(weights) != len(a):
        raise DimensionError(f"weight vector has {len(weights)} entries, monomial has {len(a)}")
    return (sum(a), sum(w * e for w, e in zip(weights, a))) + a[::-1]


def compare(order, a, b):
    """-1, 0 or 1 as ``a`` is smaller than, equal to or greater than ``b``."""
    return order.compare(a, b)


def cmp_key(order):
    return cmp_to_key(order.compare)


def parse_order(text):
    text = text.strip()
    if text.startswith("weight:"):
        try:
            w = tuple(int(x) for x in text[len("weight:"):].split(","))
        except ValueError:
            raise ParseError("malformed weight vector", text, len("weight:")) from None
        return TermOrder("weight", w)
    if text in ("lex", "deglex", "degrevlex"):
        return TermOrder(text)
    raise ParseError(f"unknown term order {text!r}", text, 0)


_FACTOR = re.compile(r"\s*x(\d+)(?:\s*\^\s*(\d+))?\s*")


def parse_monomial(text, nvars=None):
    """Parse ``x3^2*x1`` style text.  ``1`` is the constant monomial."""
    s = text.strip()
    if s == "1":
        if nvars is None:
            raise ParseError("constant monomial needs an explicit variable count", text, 0)
        return one(nvars)
    exps = {}
    pos = 0
    while True:
        m = _FACTOR.match(text, pos)
        if not m:
            raise ParseError("expected a factor x<i> or x<i>^<e>", text, pos)
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if e == 0:
            raise ParseError("zero exponent", text, m.start(2))
        if i in exps:
            raise ParseError(f"variable x{i} repeated", text, m.start(1))
        exps[i] = e
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "*":
            raise ParseError("expected '*'", text, pos)
        pos += 1
    width = max(exps) + 1
    if nvars is not None:
        if width > nvars:
            raise DimensionError(f"x{width - 1} out of range for {nvars} variables")
        width = nvars
    return tuple(exps.get(i, 0) for i in range(width))


def format_monomial(a):
    """Inverse of :func:`parse_monomial`; variables printed from highest index down."""
    parts = []
    for i in range(len(a) - 1, -1, -1):
        e = a[i]
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"
