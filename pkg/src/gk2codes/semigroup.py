"""Finitely generated numerical semigroups.

A numerical semigroup here is the set of all non-negative integer
combinations of a finite generating set with gcd 1.  Construction runs a
dynamic-programming sieve up to a bound that provably covers the conductor
(the Frobenius bound (a-1)(b-1) for a coprime generator pair when one
exists), then shrinks to the observed conductor.  The sieve is self-proving:
the bound is grown until a full window of min(generators) consecutive
members closes the gap list.

Elements of the semigroup are called nongaps, the finitely many missing
non-negative integers gaps; the number of gaps is the genus.  Nongaps are
1-indexed, with the first nongap being 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd


def closure_table(generators: tuple[int, ...], bound: int) -> bytearray:
    """Reachability table for sums of generators on [0, bound]."""
    reach = bytearray(bound + 1)
    reach[0] = 1
    for g in generators:
        for v in range(g, bound + 1):
            if reach[v - g]:
                reach[v] = 1
    return reach


def _initial_bound(gens: tuple[int, ...]) -> int:
    # Frobenius bound for the best coprime pair, if any; otherwise a
    # heuristic start that the construction loop will grow as needed.
    best = None
    for i, a in enumerate(gens):
        for b in gens[i + 1 :]:
            if gcd(a, b) == 1:
                c = (a - 1) * (b - 1)
                if best is None or c < best:
                    best = c
    if best is None:
        best = gens[0] * gens[-1]
    return best + gens[0] + 1


@dataclass(frozen=True)
class NumericalSemigroup:
    """Immutable numerical semigroup with cached gap/nongap data.

    Attributes:
        generators: sorted generating set (gcd 1).
        conductor: least c with every integer >= c in the semigroup.
        genus: number of gaps.
        gaps: sorted tuple of all gaps.
        nongaps_cached: sorted nongaps up to conductor + max(generators).
    """

    generators: tuple[int, ...]
    conductor: int
    genus: int
    gaps: tuple[int, ...]
    nongaps_cached: tuple[int, ...]
    _gap_set: frozenset[int] = field(repr=False)

    @classmethod
    def from_generators(cls, gens, conductor_hint: int | None = None) -> "NumericalSemigroup":
        """Build the semigroup; the gap sieve proves its own conductor.

        conductor_hint, when given, seeds the sieve bound (e.g. 2*genus when
        the genus is known a priori); a hint that is too small only costs a
        retry with a doubled bound, never a wrong answer.
        """
        gens = tuple(sorted(set(int(g) for g in gens)))
        if not gens:
            raise ValueError("generator set is empty")
        if any(g < 1 for g in gens):
            raise ValueError(f"generators must be positive, got {gens}")
        d = 0
        for g in gens:
            d = gcd(d, g)
        if d != 1:
            raise ValueError(f"gcd(generators) = {d} != 1: not a numerical semigroup")

        bound = _initial_bound(gens)
        if conductor_hint is not None:
            bound = min(bound, max(conductor_hint + gens[0] + 1, 2 * gens[0]))
        while True:
            reach = closure_table(gens, bound)
            last_gap = max((v for v in range(bound + 1) if not reach[v]), default=-1)
            # conductor is proven once a full window of gens[0] consecutive
            # members sits below the sieve bound
            if last_gap + gens[0] <= bound:
                break
            bound *= 2

        conductor = last_gap + 1
        gaps = tuple(v for v in range(conductor) if not reach[v])
        top = conductor + gens[-1]
        nongaps = tuple(v for v in range(min(top, bound) + 1) if reach[v])
        if top > bound:
            nongaps += tuple(range(bound + 1, top + 1))
        return cls(
            generators=gens,
            conductor=conductor,
            genus=len(gaps),
            gaps=gaps,
            nongaps_cached=nongaps,
            _gap_set=frozenset(gaps),
        )

    def contains(self, x: int) -> bool:
        """True iff x is a nongap."""
        if x < 0:
            return False
        return x >= self.conductor or x not in self._gap_set

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def nth_nongap(self, index: int) -> int:
        """The index-th nongap, 1-indexed: nth_nongap(1) == 0."""
        if index < 1:
            raise ValueError(f"nongap index must be >= 1, got {index}")
        if index <= len(self.nongaps_cached):
            return self.nongaps_cached[index - 1]
        # beyond the cache everything is past the conductor
        return index + self.genus - 1

    def count_nongaps_upto(self, value: int) -> int:
        """Number of nongaps <= value (the h function of the CSS bookkeeping)."""
        if value < 0:
            return 0
        if value >= self.conductor:
            return value + 1 - self.genus
        lo, hi = 0, len(self.nongaps_cached)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.nongaps_cached[mid] <= value:
                lo = mid + 1
            else:
                hi = mid
        return lo

    def nongaps_upto(self, value: int) -> list[int]:
        """Sorted nongaps <= value."""
        if value < 0:
            return []
        cached_top = self.nongaps_cached[-1] if self.nongaps_cached else -1
        out = [v for v in self.nongaps_cached if v <= value]
        if value > cached_top:
            out.extend(range(max(cached_top + 1, self.conductor), value + 1))
        return out

    def is_symmetric(self) -> bool:
        """Symmetric means 2*genus - 1 is a gap."""
        if self.genus == 0:
            return False
        return not self.contains(2 * self.genus - 1)


def _prefix_gcds(seq: tuple[int, ...]) -> list[int]:
    out = []
    d = 0
    for a in seq:
        d = gcd(d, a)
        out.append(d)
    return out


def is_telescopic(seq) -> bool:
    """Check the telescopic condition on an ordered generator sequence.

    With d_i = gcd of the first i entries and G_{i-1} the semigroup generated
    by the first i-1 entries scaled by 1/d_{i-1}, the sequence is telescopic
    when a_i/d_i lies in G_{i-1} for every i >= 2.
    """
    seq = tuple(int(a) for a in seq)
    if not seq or any(a < 1 for a in seq):
        raise ValueError(f"sequence must consist of positive integers, got {seq}")
    d = _prefix_gcds(seq)
    if d[-1] != 1:
        raise ValueError(f"gcd(sequence) = {d[-1]} != 1")
    for i in range(1, len(seq)):
        target = seq[i] // d[i]
        scaled = tuple(a // d[i - 1] for a in seq[:i])
        reach = closure_table(scaled, target)
        if not reach[target]:
            return False
    return True


def telescopic_genus(seq) -> int:
    """Genus of the semigroup generated by a telescopic sequence.

    Evaluates (1 + sum_i (d_{i-1}/d_i - 1) a_i) / 2 with d_0 = 0, i.e. the
    first term contributes -a_1.  Rejects non-telescopic input: the closed
    form is only valid for telescopic sequences.
    """
    seq = tuple(int(a) for a in seq)
    if not is_telescopic(seq):
        raise ValueError(f"sequence {seq} is not telescopic")
    d = _prefix_gcds(seq)
    total = 1 - seq[0]
    for i in range(1, len(seq)):
        total += (d[i - 1] // d[i] - 1) * seq[i]
    if total % 2:
        raise ValueError(f"telescopic genus formula gave odd total {total}")
    return total // 2
