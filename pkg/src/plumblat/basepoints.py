"""Base points of natural line bundles and the generic multiplicity formula.

A vertex v can carry base points of the bundle with Chern class -lp exactly
when (lp, E_v) < 0 and the depth-one condition holds:

    min over l >= E_v of chi(lp + l)  =  chi(lp) + 1.

In that case there are exactly -(lp, E_v) base points on E_v, all of local
type (x^t, y) with t read off the level set

    S_v = { l >= E_v : chi(lp + l) = chi(lp) + 1 }:

t = coefficient of v in the (unique, verified) maximal element of S_v, and
the minimal element of S_v is the smallest cycle realizing the depth.  The
extremal elements must pass the membership check; a failure is reported as a
hypothesis violation, never patched over.

Summing the contributions over all such vertices on the maximal ideal cycle
yields the multiplicity of the generic structure:

    mult = -Z_max^2 - sum_v t(v) * (Z_max, E_v).

Rational graphs short-circuit to the classical base-point-free answer
mult = -Z_min^2; in debug runs the depth-one scan is still executed there to
assert it never fires at a vertex with negative pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import NotInSemigroup, NotStar
from .graph import Cycle, IntersectionForm
from .invariants import (
    SingularityClass,
    classify,
    in_analytic_semigroup,
    maximal_ideal_cycle,
)
from .minimize import Constraint, laufer_zmin, min_chi, minimizer_join, minimizer_meet

__all__ = [
    "StarCondition",
    "VertexBaseData",
    "BasePointReport",
    "Distinctness",
    "DistinctnessReport",
    "star_condition",
    "base_point_data",
    "base_point_report",
    "multiplicity_generic",
    "distinct_base_points_check",
]


@dataclass(frozen=True)
class StarCondition:
    vertex: int
    depth: Fraction  # min over l >= E_v of chi(lp+l), minus chi(lp)
    star: bool       # depth == 1


@dataclass(frozen=True)
class VertexBaseData:
    vertex: int
    pairing: int           # (lp, E_v)
    depth: Fraction
    star: bool
    count: int             # base points on E_v
    m_v: Fraction          # E_v-coefficient of lp
    m_v_plus: Optional[Fraction]
    t: Optional[int]       # m_v_plus - m_v; base points are of type (x^t, y)
    m_min: Optional[Cycle]     # minimal element of the level set
    s_max: Optional[Cycle]     # lp + join of the level set; lies in the semigroup


@dataclass(frozen=True)
class BasePointReport:
    chern: Cycle                      # lp
    per_vertex: tuple[VertexBaseData, ...]
    total_base_points: int
    multiplicity: Optional[int]       # populated only when chern is Z_max
    wagreich_floor: Optional[int]     # -Z_max^2
    artin_case: bool                  # rational short-circuit taken


class Distinctness(Enum):
    EXPECTED_DISTINCT = "expected-distinct"
    POSSIBLY_COMMON = "possibly-common"


@dataclass(frozen=True)
class DistinctnessReport:
    status: Distinctness
    m_equal: bool       # the two minimal level-set cycles coincide
    m_first: Cycle
    m_second: Cycle
    s_prime: Cycle      # minimal semigroup element >= lp1 + E_v


def star_condition(f: IntersectionForm, lp: Cycle, v: int) -> StarCondition:
    """Depth of the constrained minimum at v; star means depth exactly one."""
    if not in_analytic_semigroup(f, lp):
        raise NotInSemigroup(f"{lp} is not in the analytic semigroup")
    res = min_chi(f, lp, Constraint.at_least(f.unit(v)))
    depth = res.min_value - f.chi(lp)
    return StarCondition(v, depth, depth == 1)


def _level_set_data(f: IntersectionForm, lp: Cycle, v: int):
    """Join/meet of {l >= E_v : chi(lp+l) = chi(lp)+1}, both verified."""
    res = min_chi(f, lp, Constraint.at_least(f.unit(v)))
    join = minimizer_join(res)
    meet = minimizer_meet(res)
    return res, join, meet


def base_point_data(f: IntersectionForm, lp: Cycle, v: int) -> VertexBaseData:
    """Full base-point record at a starred vertex with negative pairing."""
    sc = star_condition(f, lp, v)
    pv = f.pairing_vertex(lp, v)
    assert pv.denominator == 1
    pv = int(pv)
    if not sc.star:
        raise NotStar(f"depth at vertex {v} is {sc.depth}, not 1")
    if pv >= 0:
        raise NotStar(f"(lp, E_{v}) = {pv} is not negative")
    _, join, meet = _level_set_data(f, lp, v)
    t = join.coeff(v)
    assert t.denominator == 1 and t >= 1
    m_v = lp.coeff(v)
    s_max = lp + join
    if not in_analytic_semigroup(f, s_max):
        raise NotInSemigroup(
            f"maximal level-set element {s_max} fails the semigroup test")
    return VertexBaseData(
        vertex=v, pairing=pv, depth=sc.depth, star=True, count=-pv,
        m_v=m_v, m_v_plus=m_v + t, t=int(t), m_min=meet, s_max=s_max)


def base_point_report(f: IntersectionForm, lp: Cycle) -> BasePointReport:
    """Base-point structure of the bundle with Chern class -lp.

    The multiplicity field is populated only when lp is the maximal ideal
    cycle; for other semigroup elements the report carries the base points
    alone.
    """
    cls = classify(f)
    zmax = maximal_ideal_cycle(f).cycle
    if cls.tag is SingularityClass.RATIONAL:
        return _rational_report(f, lp, zmax)

    per = []
    total = 0
    correction = 0
    for v in f.ids:
        pv = f.pairing_vertex(lp, v)
        if pv >= 0:
            continue
        sc = star_condition(f, lp, v)
        if sc.star:
            data = base_point_data(f, lp, v)
            total += data.count
            correction += data.t * data.count
        else:
            data = VertexBaseData(
                vertex=v, pairing=int(pv), depth=sc.depth, star=False, count=0,
                m_v=lp.coeff(v), m_v_plus=None, t=None, m_min=None, s_max=None)
        per.append(data)

    mult = None
    floor = None
    if lp == zmax:
        floor = int(-f.pairing(zmax, zmax))
        mult = floor + correction
        assert mult >= floor
    return BasePointReport(lp, tuple(per), total, mult, floor, False)


def _rational_report(f: IntersectionForm, lp: Cycle, zmax: Cycle) -> BasePointReport:
    # base-point free for every semigroup class; the depth-one condition
    # provably never holds at a vertex with negative pairing
    if __debug__ and in_analytic_semigroup(f, lp):
        for v in f.ids:
            if f.pairing_vertex(lp, v) < 0:
                sc = star_condition(f, lp, v)
                assert not sc.star and sc.depth >= 2
    mult = None
    floor = None
    if lp == zmax:
        floor = int(-f.pairing(zmax, zmax))
        mult = floor
    return BasePointReport(lp, (), 0, mult, floor, True)


def multiplicity_generic(f: IntersectionForm) -> BasePointReport:
    """Multiplicity of the generic structure via the corrected Wagreich bound."""
    cls = classify(f)
    if cls.tag is SingularityClass.RATIONAL:
        zmin = laufer_zmin(f)
        return _rational_report(f, zmin, zmin)
    zmax = maximal_ideal_cycle(f).cycle
    report = base_point_report(f, zmax)
    assert report.multiplicity is not None
    return report


def distinct_base_points_check(f: IntersectionForm, lp1: Cycle, lp2: Cycle,
                               v: int) -> DistinctnessReport:
    """Combinatorial diagnostic: can bundles -lp1 and -lp2 share a base point on E_v?

    Distinctness is only asserted in the configuration the genericity theorem
    covers: lp2 equal to the minimal semigroup element above lp1 + E_v.  In
    every other configuration the answer is 'possibly common', decorated with
    whether the two minimal level-set cycles coincide (the known obstruction
    pattern for special structures).
    """
    d1 = base_point_data(f, lp1, v)
    d2 = base_point_data(f, lp2, v)
    s_prime = d1.s_max
    if lp1 != lp2 and lp2 == s_prime:
        status = Distinctness.EXPECTED_DISTINCT
    else:
        status = Distinctness.POSSIBLY_COMMON
    return DistinctnessReport(
        status=status,
        m_equal=d1.m_min == d2.m_min,
        m_first=d1.m_min,
        m_second=d2.m_min,
        s_prime=s_prime)
