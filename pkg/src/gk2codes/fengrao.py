"""Feng-Rao bound machinery for dual one-point evaluation codes.

nu(S, l) counts ordered pairs of nongaps summing to the l-th nongap; the
designed distance d_ord(S, l) is the minimum of nu over all indices >= l.
The scan terminates provably: once the l-th nongap rho satisfies
rho + 1 >= 4*genus, no two gaps can sum to rho (every gap is < 2*genus), so
nu equals "index - genus" from there on and is strictly increasing.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .gk2 import CurveParams
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class CodeTableRow:
    """One row of a dual one-point code parameter table.

    length is the code length N, index the row index l, dim = N - l the dual
    code dimension, rho the l-th nongap, nu the Feng-Rao count and d_ord the
    designed minimum distance.
    """

    length: int
    index: int
    dim: int
    rho: int
    nu: int
    d_ord: int


def nu(semigroup: NumericalSemigroup, index: int) -> int:
    """Ordered pairs (i, j) of nongap indices with rho_i + rho_j = rho_index."""
    rho = semigroup.nth_nongap(index)
    return sum(1 for h in semigroup.nongaps_upto(rho) if semigroup.contains(rho - h))


def _tail_start(semigroup: NumericalSemigroup) -> int:
    """First index whose nongap rho satisfies rho + 1 >= 4*genus."""
    g = semigroup.genus
    if g == 0:
        return 1
    # rho_l = l + g - 1 holds at and beyond the conductor; 4g-1 is beyond it
    return 3 * g


def d_ord(semigroup: NumericalSemigroup, index: int) -> int:
    """Designed minimum distance: min of nu over all indices >= index."""
    if index < 1:
        raise ValueError(f"index must be >= 1, got {index}")
    g = semigroup.genus
    tail = _tail_start(semigroup)
    if index >= tail:
        # nu is index - genus and strictly increasing from here on
        return index - g if g else nu(semigroup, index)
    best = None
    for m in range(index, tail + 1):
        v = nu(semigroup, m)
        if best is None or v < best:
            best = v
    return best


def _worker_cap() -> int:
    raw = os.environ.get("GK2_THREADS", "").strip()
    if not raw:
        return 1
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"GK2_THREADS must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"GK2_THREADS must be >= 1, got {cap}")
    return cap


def _ordered_map(fn, items):
    cap = _worker_cap()
    if cap == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=cap) as pool:
        return list(pool.map(fn, items))


def table(
    semigroup: NumericalSemigroup,
    params: CurveParams,
    l_min: int = 1,
    l_max: int | None = None,
) -> list[CodeTableRow]:
    """Parameter rows for the dual codes of length N = point count - 1."""
    length = params.rational_point_count - 1
    if l_max is None:
        l_max = 3 * params.genus
    if not 1 <= l_min <= l_max <= length - 1:
        raise ValueError(f"need 1 <= l_min <= l_max <= N-1, got [{l_min}, {l_max}]")

    # suffix minima of nu over [l_min, tail] give every d_ord in one pass
    g = semigroup.genus
    tail_start = _tail_start(semigroup)
    tail = max(tail_start, l_max)

    def nu_at(m: int) -> int:
        if g and m >= tail_start:
            return m - g
        return nu(semigroup, m)

    nus = _ordered_map(nu_at, range(l_min, tail + 1))
    suffix_min = nus[:]
    for i in range(len(suffix_min) - 2, -1, -1):
        if suffix_min[i + 1] < suffix_min[i]:
            suffix_min[i] = suffix_min[i + 1]

    rows = []
    for l in range(l_min, l_max + 1):
        rows.append(
            CodeTableRow(
                length=length,
                index=l,
                dim=length - l,
                rho=semigroup.nth_nongap(l),
                nu=nus[l - l_min],
                d_ord=suffix_min[l - l_min],
            )
        )
    return rows
