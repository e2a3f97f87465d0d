"""CSS-construction parameter ranges for quantum codes from nested duals.

Two regimes, split by how the minimum-distance floor is obtained:

* high-degree: the base index l lies in [3g-1, N-g] and the floor is the
  genus bound l + 1 - g; the auxiliary dimension s ranges over [1, N-2l].
* order-bound: l lies in [g, 3g-1], the floor is the Feng-Rao designed
  distance, and s ranges over [max(2g-l, 1), min(N-2l, N-l-g+1-d)].

Where a published reference row exists for (orbit, l), the computed range is
compared against it and any difference is attached to the result; the
formula output is never altered to match the reference.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fengrao import d_ord
from .gk2 import CurveParams
from .semigroup import NumericalSemigroup

REGIME_HIGH_DEGREE = "high-degree"
REGIME_ORDER_BOUND = "order-bound"


@dataclass(frozen=True)
class QuantumRange:
    """Admissible [[N, s, D]] parameter range for one base index l.

    d_floor is the guaranteed lower bound for D; s runs over
    [s_min, s_max] inclusive (empty when s_max < s_min, flagged via empty).
    discrepancy carries a note when a published row disagrees.
    """

    length: int
    index: int
    d_floor: int
    s_min: int
    s_max: int
    regime: str
    discrepancy: str | None = None

    @property
    def empty(self) -> bool:
        return self.s_max < self.s_min


def range_high_degree(params: CurveParams, index: int) -> QuantumRange:
    """Genus-floor regime: l in [3g-1, N-g], s in [1, N-2l], D >= l+1-g."""
    g = params.genus
    length = params.rational_point_count - 1
    if not 3 * g - 1 <= index <= length - g:
        raise ValueError(
            f"index {index} outside the high-degree regime [{3*g-1}, {length-g}]"
        )
    s_max = length - 2 * index
    return QuantumRange(
        length=length,
        index=index,
        d_floor=index + 1 - g,
        s_min=1,
        s_max=s_max,
        regime=REGIME_HIGH_DEGREE,
        discrepancy="empty range" if s_max < 1 else None,
    )


def range_order_bound(
    params: CurveParams,
    semigroup: NumericalSemigroup,
    index: int,
    reference_row: dict[str, int] | None = None,
) -> QuantumRange:
    """Feng-Rao-floor regime: l in [g, 3g-1].

    s_min = max(2g-l, 1); s_max = min(N-2l, N-l-g+1-d_ord); D >= d_ord.
    If reference_row (keys d_ord, s_min, s_max) is given, differences are
    recorded in the discrepancy field.
    """
    g = params.genus
    length = params.rational_point_count - 1
    if not g <= index <= 3 * g - 1:
        raise ValueError(f"index {index} outside the order-bound regime [{g}, {3*g-1}]")
    d = d_ord(semigroup, index)
    s_min = max(2 * g - index, 1)
    s_max = min(length - 2 * index, length - index - g + 1 - d)
    note = None
    if reference_row is not None:
        diffs = [
            f"{key} computed {have} != published {reference_row[key]}"
            for key, have in (("d_ord", d), ("s_min", s_min), ("s_max", s_max))
            if reference_row.get(key) != have
        ]
        if diffs:
            note = "; ".join(diffs)
    return QuantumRange(
        length=length,
        index=index,
        d_floor=d,
        s_min=s_min,
        s_max=s_max,
        regime=REGIME_ORDER_BOUND,
        discrepancy=note,
    )


def quantum_table(
    params: CurveParams,
    semigroup: NumericalSemigroup,
    l_min: int | None = None,
    l_max: int | None = None,
    regime: str = REGIME_ORDER_BOUND,
) -> list[QuantumRange]:
    """Ranges for consecutive l; defaults to the full regime interval."""
    g = params.genus
    length = params.rational_point_count - 1
    if regime == REGIME_ORDER_BOUND:
        lo, hi = g, 3 * g - 1
        make = lambda l: range_order_bound(params, semigroup, l)
    elif regime == REGIME_HIGH_DEGREE:
        lo, hi = 3 * g - 1, length - g
        make = lambda l: range_high_degree(params, l)
    else:
        raise ValueError(f"unknown regime {regime!r}")
    l_min = lo if l_min is None else l_min
    l_max = hi if l_max is None else l_max
    if not lo <= l_min <= l_max <= hi:
        raise ValueError(f"need {lo} <= l_min <= l_max <= {hi}, got [{l_min}, {l_max}]")
    return [make(l) for l in range(l_min, l_max + 1)]
