"""Brute-force reference implementations.

Exhaustive box scans that certify the optimized search, Laufer iteration and
semigroup test on small inputs.  They share nothing with the pruned search:
values are accumulated by direct incremental evaluation of the quadratic over
an explicit caller-supplied box.  Performance is a non-goal; a hard guard
rejects boxes above ``guard`` candidates.  These functions are part of the
test surface, not of any report pipeline.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from .errors import BoxTooLarge, EmptyFeasibleRegion, PlumblatError
from .graph import Cycle, IntersectionForm
from .minimize import ChiMinResult, SearchStats

DEFAULT_GUARD = 10 ** 8


def _int_bounds(form: IntersectionForm, lower: Cycle, upper: Cycle) -> tuple[list[int], list[int]]:
    if lower.ids != form.ids or upper.ids != form.ids:
        raise ValueError("box does not live on this graph")
    if not (lower.is_integral() and upper.is_integral()):
        raise ValueError("box bounds must be integral")
    lo = [int(c) for c in lower.coeffs]
    hi = [int(c) for c in upper.coeffs]
    if any(a > b for a, b in zip(lo, hi)):
        raise EmptyFeasibleRegion("lower bound exceeds upper bound")
    return lo, hi


def brute_min_chi(form: IntersectionForm, shift: Optional[Cycle],
                  lower: Cycle, upper: Cycle, exclude_zero: bool = False,
                  guard: int = DEFAULT_GUARD) -> ChiMinResult:
    """Exhaustive scan of chi(shift + l) over the box lower <= l <= upper."""
    if shift is None:
        shift = form.zero()
    lo, hi = _int_bounds(form, lower, upper)
    n = form.n
    volume = 1
    for a, b in zip(lo, hi):
        volume *= (b - a + 1)
    if volume > guard:
        raise BoxTooLarge(f"{volume} candidates exceed guard {guard}")
    if volume == 1 and exclude_zero and all(a == 0 for a in lo):
        raise EmptyFeasibleRegion("region is the single excluded point 0")

    m = form.matrix
    dd = math.lcm(*[c.denominator for c in shift.coeffs])
    kv = [m[v][v] + 2 for v in range(n)]  # (K, E_v)
    x = [int(dd * (shift.coeffs[v] + lo[v])) for v in range(n)]
    g = [sum(m[v][j] * x[j] for j in range(n)) for v in range(n)]
    # 2*dd^2*chi(shift+l) = -(X,X) + dd*(X . kv) for X = dd*(shift+l)
    fval = -sum(x[v] * g[v] for v in range(n)) + dd * sum(x[v] * kv[v] for v in range(n))

    best: Optional[int] = None
    mins: list[tuple[int, ...]] = []
    lvec = lo[:]

    def rec(d: int, zero_prefix: bool) -> None:
        nonlocal fval, best
        if d == n - 1:
            # tight innermost loop: the value along one axis is a quadratic,
            # so advance it by its first difference and keep everything local
            f_cur = fval
            g_d = g[d]
            two_dd = 2 * dd
            const_step = dd * dd * (kv[d] - m[d][d])
            g_step = dd * m[d][d]
            for t in range(lo[d], hi[d] + 1):
                if not (exclude_zero and zero_prefix and t == 0):
                    if best is None or f_cur < best:
                        best = f_cur
                        lvec[d] = t
                        mins.clear()
                        mins.append(tuple(lvec))
                    elif f_cur == best:
                        lvec[d] = t
                        mins.append(tuple(lvec))
                f_cur += const_step - two_dd * g_d
                g_d += g_step
            return
        f0, x0, g0 = fval, x[d], g[:]
        for t in range(lo[d], hi[d] + 1):
            lvec[d] = t
            rec(d + 1, zero_prefix and t == 0)
            if t < hi[d]:
                fval += -2 * dd * g[d] - dd * dd * m[d][d] + dd * dd * kv[d]
                for j in range(n):
                    g[j] += m[j][d] * dd
                x[d] += dd
        fval, x[d] = f0, x0
        g[:] = g0

    rec(0, True)
    if best is None:
        raise EmptyFeasibleRegion("no feasible candidate in box")
    value = Fraction(best, 2 * dd * dd)
    cycles = tuple(Cycle.from_seq(form.ids, t) for t in sorted(mins))
    return ChiMinResult(value, cycles, SearchStats(volume, volume, volume))


def brute_semigroup(form: IntersectionForm, lp: Cycle, radius: int,
                    guard: int = DEFAULT_GUARD) -> bool:
    """Definitional membership test on the window 0 < l <= radius * sum(E_v)."""
    if lp.is_zero():
        return True
    upper = form.total().scale(radius)
    if not upper.is_integral():
        raise ValueError("radius must be an integer")
    res = brute_min_chi(form, lp, form.zero(), upper, exclude_zero=True, guard=guard)
    return res.min_value > form.chi(lp)


def brute_zmin(form: IntersectionForm, box: Cycle, guard: int = DEFAULT_GUARD) -> Cycle:
    """Minimal nonzero cycle pairing non-positively with every E_v, by scan."""
    lo, hi = _int_bounds(form, form.zero(), box)
    n = form.n
    volume = 1
    for a, b in zip(lo, hi):
        volume *= (b - a + 1)
    if volume > guard:
        raise BoxTooLarge(f"{volume} candidates exceed guard {guard}")

    m = form.matrix
    g = [0] * n  # (l, E_v) for the current assignment
    lvec = [0] * n
    members: list[tuple[int, ...]] = []

    def rec(d: int, zero_prefix: bool) -> None:
        g0 = g[:]
        if d == n - 1:
            col = [m[j][d] for j in range(n)]
            for t in range(lo[d], hi[d] + 1):
                if not (zero_prefix and t == 0) and all(v <= 0 for v in g):
                    lvec[d] = t
                    members.append(tuple(lvec))
                for j in range(n):
                    g[j] += col[j]
            g[:] = g0
            return
        for t in range(lo[d], hi[d] + 1):
            lvec[d] = t
            rec(d + 1, zero_prefix and t == 0)
            if t < hi[d]:
                for j in range(n):
                    g[j] += m[j][d]
        g[:] = g0

    rec(0, True)
    if not members:
        raise PlumblatError("no nonzero anti-nef cycle in box")
    smallest = min(members, key=lambda t: (sum(t), t))
    for other in members:
        if not all(a <= b for a, b in zip(smallest, other)):
            raise PlumblatError(
                "anti-nef cycles in box have no unique minimal element; box too small?")
    return Cycle.from_seq(form.ids, smallest)
