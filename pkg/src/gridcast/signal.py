"""Signal, excess, and per-tower emission under the capped signal model."""

from __future__ import annotations

from collections.abc import Iterator

from gridcast.core import BroadcastSpec, PeriodicPattern, Vertex, contains, l1_distance


def sig_from_tower(v: Vertex, tower: Vertex, spec: BroadcastSpec) -> int:
    """Capped signal v receives from one tower: min(max(t - dist, 0), r)."""
    return min(max(spec.t - l1_distance(v, tower), 0), spec.r)


def l1_ball(center: Vertex, radius: int) -> Iterator[Vertex]:
    """All vertices within Manhattan distance `radius` of center."""
    cx, cy = center
    for dy in range(-radius, radius + 1):
        rem = radius - abs(dy)
        for dx in range(-rem, rem + 1):
            yield (cx + dx, cy + dy)


def towers_near(p: PeriodicPattern, v: Vertex, radius: int) -> list[Vertex]:
    """Towers of p within Manhattan distance `radius` of v."""
    return [w for w in l1_ball(v, radius) if contains(p, w)]


def total_signal(v: Vertex, p: PeriodicPattern, spec: BroadcastSpec) -> int:
    """Sum of capped per-tower signal over all towers (sum itself uncapped)."""
    total = 0
    for tower in towers_near(p, v, spec.t - 1):
        total += sig_from_tower(v, tower, spec)
    return total


def signal_at_least(v: Vertex, p: PeriodicPattern, spec: BroadcastSpec, bound: int) -> bool:
    """Early-exit check that total_signal(v, p, spec) >= bound."""
    total = 0
    cx, cy = v
    t = spec.t
    r = spec.r
    for dy in range(-(t - 1), t):
        rem = t - 1 - abs(dy)
        for dx in range(-rem, rem + 1):
            w = (cx + dx, cy + dy)
            if contains(p, w):
                total += min(t - abs(dx) - abs(dy), r)
                if total >= bound:
                    return True
    return total >= bound


def uncapped_signal(v: Vertex, p: PeriodicPattern, t: int) -> int:
    """Sum of max(t - dist, 0) over all towers, without the per-tower cap."""
    total = 0
    cx, cy = v
    for dy in range(-(t - 1), t):
        rem = t - 1 - abs(dy)
        for dx in range(-rem, rem + 1):
            if contains(p, (cx + dx, cy + dy)):
                total += t - abs(dx) - abs(dy)
    return total


def excess(v: Vertex, p: PeriodicPattern, spec: BroadcastSpec) -> int:
    """Total signal minus required reception; negative when v is underserved."""
    return total_signal(v, p, spec) - spec.r


def emission_total(spec: BroadcastSpec) -> int:
    """Total capped signal one tower emits; equals 2t^2 - 2t + 1 when r = 1.

    There are 4k vertices at distance k >= 1 from the tower, one at k = 0.
    """
    t, r = spec.t, spec.r
    total = min(t, r)
    for k in range(1, t):
        total += 4 * k * min(t - k, r)
    return total
