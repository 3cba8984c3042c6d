"""Integer-valued Hilbert polynomials and their Gotzmann decompositions."""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import AdmissibilityError, ParseError, ResourceError

GOTZMANN_CAP = 10_000


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class HilbertPolynomial:
    """Univariate polynomial in ``t`` with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of ``t^k``.  Construction verifies that
    the polynomial takes integer values at every integer.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        c = _strip(Fraction(x) for x in self.coeffs)
        object.__setattr__(self, "coeffs", c)
        # integer-valued on Z iff integer-valued on deg+1 consecutive integers
        for t in range(len(c)):
            if self._value(t).denominator != 1:
                raise AdmissibilityError(f"{self} is not integer-valued (t={t})")

    @classmethod
    def parse(cls, text):
        return parse_polynomial(text)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return self.degree <= 0

    def _value(self, t):
        v = Fraction(0)
        for c in reversed(self.coeffs):
            v = v * t + c
        return v

    def __call__(self, t):
        v = self._value(t)
        if v.denominator != 1:
            raise AdmissibilityError(f"{self} is not integer-valued at t={t}")
        return int(v)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        k = max(len(a), len(b))
        a = a + (Fraction(0),) * (k - len(a))
        b = b + (Fraction(0),) * (k - len(b))
        return HilbertPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return HilbertPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def shift(self, c):
        """The polynomial ``t -> self(t + c)``."""
        out = [Fraction(0)] * len(self.coeffs)
        for k, a in enumerate(self.coeffs):
            for j in range(k + 1):
                out[j] += a * comb(k, j) * Fraction(c) ** (k - j)
        return HilbertPolynomial(tuple(out))

    def difference(self):
        """First difference ``p(t) - p(t-1)``."""
        return self - self.shift(-1)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            num = str(a) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
            if k == 0:
                body = num
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if a == 1 else num + var
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += sign + body
        return s


def binomial_polynomial(c, d):
    """``binom(t + c, d)`` as a polynomial in ``t``."""
    coeffs = [Fraction(1)]
    for j in range(d):
        # multiply by (t + c - j)
        shift = c - j
        new = [Fraction(0)] * (len(coeffs) + 1)
        for k, a in enumerate(coeffs):
            new[k] += a * shift
            new[k + 1] += a
        coeffs = new
    f = factorial(d)
    return HilbertPolynomial(tuple(a / f for a in coeffs))


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)(?:\s*/\s*(\d+))?)?\s*(\*?\s*t(?:\s*\^\s*(\d+))?)?\s*")


def parse_polynomial(text):
    """Parse text such as ``7t-5``, ``3t+2``, ``t^2+3t+1`` or ``2``."""
    coeffs = {}
    pos = 0
    first = True
    if not text.strip():
        raise ParseError("empty polynomial", text, 0)
    while pos < len(text):
        m = _TERM.match(text, pos)
        sign, num, den, tpart, power = m.groups() if m else (None,) * 5
        if not m or m.end() == pos or (num is None and tpart is None):
            raise ParseError("expected a term <int>, t, <int>t or <int>t^<k>", text, pos)
        if sign is None and not first:
            raise ParseError("expected '+' or '-'", text, pos)
        c = Fraction(int(num), int(den) if den else 1) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        k = 0 if tpart is None else (int(power) if power is not None else 1)
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
        first = False
    deg = max(coeffs)
    return HilbertPolynomial(tuple(coeffs.get(k, Fraction(0)) for k in range(deg + 1)))


def as_polynomial(p):
    if isinstance(p, HilbertPolynomial):
        return p
    if isinstance(p, int):
        return HilbertPolynomial.constant(p)
    return parse_polynomial(p)


def evaluate(p, t):
    return as_polynomial(p)(t)


@dataclass(frozen=True)
class GotzmannDecomposition:
    """Weakly decreasing ``a_1 >= ... >= a_s`` with
    ``p(t) = sum_i binom(t + a_i - (i - 1), a_i)``."""

    exponents: tuple

    @property
    def length(self):
        return len(self.exponents)

    def polynomial(self):
        total = HilbertPolynomial()
        for i, a in enumerate(self.exponents):
            total = total + binomial_polynomial(a - i, a)
        return total

    def value(self, t):
        # generalized binomials; binom(x, 0) = 1 for every x
        v = 0
        for i, a in enumerate(self.exponents):
            x = t + a - i
            num = 1
            for j in range(a):
                num *= x - j
            v += num // factorial(a)
        return v


def gotzmann_decompose(p, cap=GOTZMANN_CAP):
    """Greedy binomial decomposition: peel ``binom(t + d - (i-1), d)`` with
    ``d`` the degree of the current remainder until nothing is left."""
    p = as_polynomial(p)
    if p.is_zero():
        raise AdmissibilityError("the zero polynomial has no Gotzmann decomposition")
    rem = p
    out = []
    while not rem.is_zero():
        d = rem.degree
        if rem.leading <= 0:
            raise AdmissibilityError(
                f"{p} is not a Hilbert polynomial: remainder {rem} after {len(out)} terms")
        if len(out) >= cap:
            raise ResourceError(f"Gotzmann number of {p} exceeds {cap}", partial_count=len(out))
        rem = rem - binomial_polynomial(d - len(out), d)
        out.append(d)
    return GotzmannDecomposition(tuple(out))


def gotzmann_number(p, cap=GOTZMANN_CAP):
    return gotzmann_decompose(p, cap).length


def q_codim(p, n, t):
    """``binom(n + t, n) - p(t)``: dimension of the degree-``t`` part of an ideal
    with Hilbert polynomial ``p`` once ``t`` reaches the Gotzmann number."""
    p = as_polynomial(p)
    if not p.is_zero() and t < gotzmann_number(p):
        warnings.warn(f"q_codim evaluated below the Gotzmann number of {p} (t={t})",
                      stacklevel=2)
    return comb(n + t, n) - p(t)


def check_admissible(p, n):
    """Raise :class:`AdmissibilityError` unless ``p`` is a Hilbert polynomial in P^n."""
    p = as_polynomial(p)
    if p.is_zero():
        return 0
    if p.degree >= n:
        raise AdmissibilityError(f"{p} has degree {p.degree} >= n = {n}")
    return gotzmann_number(p)


def _segment_ideal(p, n, order):
    from .monomials import all_monomials
    from .stable import MonomialIdeal

    p = as_polynomial(p)
    r = check_admissible(p, n)
    q = q_codim(p, n, r)
    mons = all_monomials(n, r, order)
    if q > len(mons) or q < 0:
        raise AdmissibilityError(f"q({r}) = {q} outside [0, {len(mons)}]", degree=r)
    return p, r, MonomialIdeal(mons[:q], n + 1)


def hilb_segment_ideal(p, n, order):
    """Saturated ideal spanned in degree ``r`` by the greatest ``q(r)`` terms, or
    ``None`` when that ideal does not have Hilbert polynomial ``p``."""
    from .stable import saturate

    if not order.graded:
        # within one degree lex is deglex
        from .monomials import TermOrder
        order = TermOrder("deglex")
    p, r, ideal = _segment_ideal(p, n, order)
    if ideal.hilbert_polynomial() != p:
        return None
    return saturate(ideal)


def lex_segment_ideal(p, n):
    from .monomials import TermOrder
    from .stable import ek_expand, saturate, truncate

    p, r, ideal = _segment_ideal(p, n, TermOrder("deglex"))
    grown = len(ek_expand(truncate(ideal, r)))
    if grown != q_codim(p, n, r + 1):
        raise AdmissibilityError(
            f"Macaulay growth violated for {p} in P^{n} at degree {r + 1}", degree=r + 1)
    return saturate(ideal)
