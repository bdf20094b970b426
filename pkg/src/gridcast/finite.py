"""Brute-force (t,r) broadcast domination numbers on small finite grids.

Independent of the periodic-pattern machinery: serves as an oracle and a
sanity anchor for densities. Exhaustive only, with a configurable size
ceiling.
"""

from __future__ import annotations

from dataclasses import dataclass

from gridcast.core import BroadcastSpec, Vertex, l1_distance
from gridcast.signal import emission_total

DEFAULT_CEILING = 25


@dataclass(frozen=True)
class FiniteGrid:
    """Grid graph with m rows and n columns; vertices (x, y), 0-indexed."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"grid dimensions must be >= 1, got {self.m}x{self.n}")

    def vertices(self) -> list[Vertex]:
        return [(x, y) for x in range(self.n) for y in range(self.m)]


@dataclass(frozen=True)
class FiniteReport:
    valid: bool
    signal: dict[Vertex, int]


def verify_finite(g: FiniteGrid, towers: set[Vertex], spec: BroadcastSpec) -> FiniteReport:
    """Per-vertex capped total signal; valid iff every vertex receives >= r.

    Graph distance on a full grid equals Manhattan distance.
    """
    verts = g.vertices()
    vert_set = set(verts)
    for tw in towers:
        if tw not in vert_set:
            raise ValueError(f"tower {tw} lies outside the {g.m}x{g.n} grid")
    signal = {}
    for v in verts:
        signal[v] = sum(
            min(max(spec.t - l1_distance(v, tw), 0), spec.r) for tw in towers
        )
    return FiniteReport(valid=all(s >= spec.r for s in signal.values()), signal=signal)


@dataclass(frozen=True)
class DominationResult:
    number: int
    witness: tuple[Vertex, ...]  # lexicographically least optimal tower set


def domination_number(g: FiniteGrid, spec: BroadcastSpec, ceiling: int = DEFAULT_CEILING) -> DominationResult:
    """Minimum tower count giving every grid vertex total signal >= r.

    Searches subset sizes in increasing order; within a size, subsets are
    enumerated lexicographically over the sorted vertex list, so the first
    witness found is deterministic. Pruned by the total remaining signal
    deficit against the per-tower emission bound.
    """
    if g.m * g.n > ceiling:
        raise ValueError(
            f"grid {g.m}x{g.n} exceeds the exhaustive ceiling of {ceiling} vertices"
        )
    verts = sorted(g.vertices())
    nv = len(verts)
    r = spec.r
    emission = emission_total(spec)
    # contrib[i][j] = capped signal vertex j receives from a tower at verts[i]
    contrib = [
        tuple(min(max(spec.t - l1_distance(tw, v), 0), r) for v in verts) for tw in verts
    ]

    k_min = -(-nv * r // emission)  # ceil; every tower emits at most `emission`
    for k in range(max(k_min, 0), nv + 1):
        found = _search_k(verts, contrib, k, r, emission)
        if found is not None:
            return DominationResult(number=len(found), witness=tuple(found))
    raise AssertionError("unreachable: the all-vertices set is always checked")


def _search_k(
    verts: list[Vertex],
    contrib: list[tuple[int, ...]],
    k: int,
    r: int,
    emission: int,
) -> list[Vertex] | None:
    nv = len(verts)
    signal = [0] * nv

    def rec(idx: int, chosen: list[int], deficit: int) -> list[Vertex] | None:
        if deficit == 0:
            return [verts[i] for i in chosen]
        remaining = k - len(chosen)
        if remaining == 0 or deficit > remaining * emission:
            return None
        if nv - idx < remaining:
            return None
        # take verts[idx] first: keeps the enumeration lexicographic
        row = contrib[idx]
        delta = 0
        for j in range(nv):
            if row[j] and signal[j] < r:
                delta += min(row[j], r - signal[j])
            signal[j] += row[j]
        chosen.append(idx)
        result = rec(idx + 1, chosen, deficit - delta)
        chosen.pop()
        for j in range(nv):
            signal[j] -= row[j]
        if result is not None:
            return result
        return rec(idx + 1, chosen, deficit)

    return rec(0, [], nv * r)
