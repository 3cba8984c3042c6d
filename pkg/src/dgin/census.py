"""Census of the saturated strongly stable ideals with a given Hilbert polynomial.

A saturated Borel ideal ``J`` of ``S = K[x0..xn]`` has no generator involving
``x0``, so it is the extension of ``J' = J ∩ R`` with ``R = K[x1..xn]`` and
``H_{S/J}(t) = sum_{s<=t} H_{R/J'}(s)``.  ``J'`` is Borel in ``R`` with Hilbert
polynomial ``p(t) - p(t-1)`` and sits inside its own saturation ``J''`` with
finite colength ``c``, which is fixed by ``p`` and ``J''``.  The census is
built by recursing on ``J''`` and backtracking over the finite order ideals
``J'' \\ J'`` of size ``c``.

:func:`enumerate_borel_by_slices` is the direct search over Borel sets in the
Gotzmann degree and serves as an independent check on small inputs.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from . import monomials as mn
from .errors import AdmissibilityError, ResourceError
from .hilbert import as_polynomial, check_admissible, gotzmann_number, q_codim
from .stable import (
    DegreeSlice,
    MonomialIdeal,
    ek_expand,
    hilbert_function,
    minimalize,
    regularity,
    saturate,
)

DEFAULT_CAP = 1_000_000


def _lower_neighbors(a):
    out = [a[:i] + (a[i] - 1,) + a[i + 1:] for i in range(len(a)) if a[i]]
    out.extend(mn.inverse_borel_moves(a))
    return out


def _upper_neighbors(a):
    out = [a[:i] + (a[i] + 1,) + a[i + 1:] for i in range(len(a))]
    out.extend(mn.elementary_borel_moves(a))
    return out


def _in_ideal(gens, a):
    return any(mn.divides(g, a) for g in gens)


def borel_subideals(gens, nvars, c, cap=DEFAULT_CAP):
    """Borel ideals ``J' ⊆ J = (gens)`` with ``dim_K J/J' = c``, as generator tuples.

    The removed set ``D = J \\ J'`` is an order ideal of the monomials of ``J``
    (closed under division and inverse Borel moves inside ``J``).  Each ``D``
    is built once, by adding its elements in increasing degrevlex order.
    """
    gens = tuple(gens)
    key = mn.TermOrder("degrevlex").key
    results = []
    removed = set()

    def addable(a):
        return all(b in removed for b in _lower_neighbors(a) if _in_ideal(gens, b))

    def emit():
        if not removed:
            results.append(gens)
        else:
            cand = [g for g in gens if g not in removed]
            for t in removed:
                cand.extend(u for u in _upper_neighbors(t)[:nvars] if u not in removed)
            results.append(minimalize(cand))
        if len(results) > cap:
            raise ResourceError(f"more than {cap} Borel subideals", partial_count=len(results))

    def rec(last):
        if len(removed) == c:
            emit()
            return
        pool = {g for g in gens if g not in removed}
        for t in removed:
            pool.update(_upper_neighbors(t))
        pool -= removed
        nxt = sorted((a for a in pool if (last is None or key(a) > last) and addable(a)), key=key)
        for a in nxt:
            removed.add(a)
            rec(key(a))
            removed.discard(a)

    if c < 0:
        return []
    rec(None)
    return results


def _colength(p, gens, nvars):
    """``c`` with ``p(t) = sum_{s<=t} H_{R/J''}(s) + c`` for large ``t``."""
    ideal = MonomialIdeal(gens, nvars)
    top = ideal.max_degree()
    partial = sum(hilbert_function(ideal, s) for s in range(top + 1))
    return p(top) - partial


def _saturated(p, nvars, cap):
    """Generator tuples of all saturated Borel ideals in ``nvars`` variables with
    Hilbert polynomial ``p`` (``p`` must already be a HilbertPolynomial)."""
    if p.is_zero():
        return [(mn.one(nvars),)]
    if nvars == 1:
        return [()] if p.degree == 0 and p.coeffs[0] == 1 else []
    if p.degree > nvars - 2 or p.leading < 0:
        return []
    out = []
    for inner in _saturated(p.difference(), nvars - 1, cap):
        out.extend(_lift(p, nvars, inner, cap))
    return out


def _lift(p, nvars, inner, cap):
    c = _colength(p, inner, nvars - 1)
    return [tuple((0,) + g for g in sub) for sub in borel_subideals(inner, nvars - 1, c, cap)]


def _lift_job(args):
    return _lift(*args)


def enumerate_borel(p, n, jobs=None, cap=DEFAULT_CAP):
    """All saturated strongly stable ideals of ``K[x0..xn]`` with Hilbert polynomial
    ``p``, duplicate free and in canonical order."""
    p = as_polynomial(p)
    check_admissible(p, n)
    nvars = n + 1
    if p.is_zero():
        found = [(mn.one(nvars),)]
    elif nvars == 1:
        found = _saturated(p, nvars, cap)
    else:
        inner = _saturated(p.difference(), nvars - 1, cap)
        tasks = [(p, nvars, g, cap) for g in inner]
        jobs = jobs or int(os.environ.get("DGIN_JOBS", "1"))
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                chunks = list(ex.map(_lift_job, tasks))
        else:
            chunks = [_lift_job(t) for t in tasks]
        found = [g for chunk in chunks for g in chunk]
        if len(found) > cap:
            raise ResourceError(f"census exceeds {cap} ideals", partial_count=len(found))
    ideals = {MonomialIdeal(g, nvars) for g in found}
    if len(ideals) != len(found):
        raise AssertionError("duplicate ideals in census")
    return sorted(ideals, key=MonomialIdeal.sort_key)


def enumerate_borel_by_slices(p, n, cap=DEFAULT_CAP):
    """Census by direct search in the Gotzmann degree ``r``.

    Backtracks over the order ideals ``N ⊆ S_r`` of size ``p(r)`` that are closed
    under inverse Borel moves; ``B = S_r \\ N`` is kept when
    ``|ek_expand(B)| = q(r+1)``, which by Gotzmann persistence means ``(B)`` has
    Hilbert polynomial ``p``.  Exponential; meant for small instances.
    """
    p = as_polynomial(p)
    r = check_admissible(p, n)
    nvars = n + 1
    full = frozenset(mn.monomials_of_degree(nvars, r))
    size = p(r)
    target = q_codim(p, n, r + 1)
    key = mn.TermOrder("degrevlex").key
    chosen = set()
    out = []
    visited = [0]

    def rec(last):
        visited[0] += 1
        if visited[0] > cap:
            raise ResourceError(f"slice search visited more than {cap} nodes",
                                partial_count=len(out))
        if len(chosen) == size:
            b = DegreeSlice(r, nvars, full - chosen)
            if len(ek_expand(b)) == target:
                out.append(saturate(b.ideal()))
            return
        pool = set()
        if not chosen:
            pool.add(tuple([r] + [0] * n))
        for t in chosen:
            pool.update(mn.elementary_borel_moves(t))
        pool -= chosen
        for a in sorted(pool, key=key):
            if last is not None and key(a) <= last:
                continue
            if all(b in chosen for b in mn.inverse_borel_moves(a)):
                chosen.add(a)
                rec(key(a))
                chosen.discard(a)

    if size < 0 or size > len(full):
        raise AdmissibilityError(f"p({r}) = {size} outside [0, {len(full)}]", degree=r)
    rec(None)
    return sorted(set(out), key=MonomialIdeal.sort_key)


def census_record(ideal, r):
    """JSON-ready description of one census member."""
    return {
        "generators": ideal.generator_strings(),
        "regularity": regularity(ideal),
        "hilbert_function": [hilbert_function(ideal, t) for t in range(r + 1)],
        "saturated": saturate(ideal) == ideal,
    }


def census(p, n, jobs=None):
    """``(r, ideals)`` with ``r`` the Gotzmann number of ``p``."""
    p = as_polynomial(p)
    return gotzmann_number(p), enumerate_borel(p, n, jobs=jobs)
