"""Shared helpers for randomized property tests."""

from __future__ import annotations

import random

from gridcast.core import BroadcastSpec, PeriodicPattern, canonicalize


def random_pattern(rng: random.Random, max_entry: int = 6, max_offsets: int = 3) -> PeriodicPattern:
    """A random canonical pattern with a small nonzero-determinant basis."""
    while True:
        u = (rng.randint(-max_entry, max_entry), rng.randint(-max_entry, max_entry))
        v = (rng.randint(-max_entry, max_entry), rng.randint(-max_entry, max_entry))
        det = u[0] * v[1] - u[1] * v[0]
        if det == 0:
            continue
        canon = canonicalize(PeriodicPattern(u, v))
        a = canon.basis_u[0]
        c = canon.basis_v[1]
        domain = [(i, j) for i in range(a) for j in range(c)]
        k = rng.randint(1, min(max_offsets, len(domain)))
        offsets = tuple(sorted(rng.sample(domain, k), key=lambda o: (o[1], o[0])))
        return PeriodicPattern(canon.basis_u, canon.basis_v, offsets)


def random_spec(rng: random.Random, t_max: int = 5, r_max: int = 4) -> BroadcastSpec:
    return BroadcastSpec(rng.randint(1, t_max), rng.randint(1, r_max))


def random_unimodular(rng: random.Random) -> tuple[int, int, int, int]:
    """Entries (a, b, c, d) of a random integer matrix with det = +/-1."""
    while True:
        a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
        if a * d - b * c in (1, -1):
            return a, b, c, d


def transform_basis(p: PeriodicPattern, m: tuple[int, int, int, int]) -> PeriodicPattern:
    """Replace the basis by a unimodular combination; same lattice."""
    a, b, c, d = m
    u = (a * p.basis_u[0] + b * p.basis_v[0], a * p.basis_u[1] + b * p.basis_v[1])
    v = (c * p.basis_u[0] + d * p.basis_v[0], c * p.basis_u[1] + d * p.basis_v[1])
    return PeriodicPattern(u, v, p.offsets)
