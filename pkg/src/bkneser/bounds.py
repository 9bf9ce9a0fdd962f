"""Closed-form upper bounds on the b-chromatic number of KG(2n+k, n).

Three bounds are tracked, all in exact arithmetic:

- regular bound d+1, valid for any d-regular graph;
- the d-i bound: if |V| <= 2d+2-2i for an integer i >= 0 then phi <= d-i,
  which simplifies to ceil((|V|-2)/2); stated for n >= 2, so the hypothesis
  flag is tracked separately from the arithmetic condition;
- the counting bound U = (|V| + 2(2n+k))/3, kept as an exact rational whose
  floor is the usable integer bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .kneser import KneserParams


@dataclass(frozen=True)
class BKBound:
    applicable: bool  # arithmetic condition |V| <= 2d+2
    hypothesis_met: bool  # stated hypothesis n >= 2
    i_max: int | None
    value: int | None


@dataclass(frozen=True)
class UBound:
    exact: Fraction
    floor: int


@dataclass(frozen=True)
class Ratios:
    two_ground_over_v: Fraction  # 2(2n+k) / |V|
    degree_over_v: Fraction  # d / |V|


@dataclass(frozen=True)
class BoundsReport:
    params: KneserParams
    regular_bound: int
    bk: BKBound
    u_exact: Fraction
    u_floor: int
    best: int
    ratios: Ratios


def regular_bound(params: KneserParams) -> int:
    """d+1 for the C(n+k, n)-regular Kneser graph."""
    return params.degree + 1


def bk_bound(params: KneserParams) -> BKBound:
    """Largest-i instance of the d-i bound, with its n >= 2 hypothesis flagged.

    The arithmetic value is computed even for n = 1, but callers must not use
    it as a bound there; best_upper_bound excludes it when the hypothesis
    fails.
    """
    v = params.vertex_count
    d = params.degree
    hypothesis_met = params.n >= 2
    if v > 2 * d + 2:
        return BKBound(False, hypothesis_met, None, None)
    i_max = (2 * d + 2 - v) // 2
    value = d - i_max
    # d - i_max collapses to ceil((|V| - 2) / 2); keep both routes honest.
    assert value == -((v - 2) // -2), "d-i bound disagrees with its ceiling form"
    return BKBound(True, hypothesis_met, i_max, value)


def u_bound(params: KneserParams) -> UBound:
    """Counting bound (|V| + 2(2n+k)) / 3 as an exact rational plus its floor."""
    exact = Fraction(params.vertex_count + 2 * params.ground_size, 3)
    return UBound(exact, math.floor(exact))


def best_upper_bound(params: KneserParams) -> BoundsReport:
    """All applicable bounds for one instance and their minimum."""
    reg = regular_bound(params)
    bk = bk_bound(params)
    u = u_bound(params)
    candidates = [reg, u.floor]
    if bk.applicable and bk.hypothesis_met:
        assert bk.value is not None
        candidates.append(bk.value)
    v = params.vertex_count
    ratios = Ratios(
        two_ground_over_v=Fraction(2 * params.ground_size, v),
        degree_over_v=Fraction(params.degree, v),
    )
    return BoundsReport(
        params=params,
        regular_bound=reg,
        bk=bk,
        u_exact=u.exact,
        u_floor=u.floor,
        best=min(candidates),
        ratios=ratios,
    )


@dataclass(frozen=True)
class ScanRow:
    k: int
    ground_size: int
    vertex_count: int
    degree: int
    regular_bound: int
    bk_value: int | None  # None when inapplicable or hypothesis not met
    u_floor: int
    best: int
    two_ground_over_v: Fraction
    degree_over_v: Fraction


def asymptotic_table(n: int, k_min: int, k_max: int) -> list[ScanRow]:
    """One row per k in [k_min, k_max]; ratios stay exact rationals."""
    if n < 1:
        raise ValueError("n must be positive")
    if k_min < 0 or k_min > k_max:
        raise ValueError("k range must be nonempty and nonnegative")
    rows = []
    for k in range(k_min, k_max + 1):
        report = best_upper_bound(KneserParams(n, k))
        usable_bk = (
            report.bk.value
            if report.bk.applicable and report.bk.hypothesis_met
            else None
        )
        rows.append(
            ScanRow(
                k=k,
                ground_size=report.params.ground_size,
                vertex_count=report.params.vertex_count,
                degree=report.params.degree,
                regular_bound=report.regular_bound,
                bk_value=usable_bk,
                u_floor=report.u_floor,
                best=report.best,
                two_ground_over_v=report.ratios.two_ground_over_v,
                degree_over_v=report.ratios.degree_over_v,
            )
        )
    return rows
