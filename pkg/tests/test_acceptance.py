"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.
"""

import itertools
import random
import time
from fractions import Fraction

from conftest import random_pattern, random_spec, random_unimodular, transform_basis
from gridcast.cli import main
from gridcast.core import (
    BroadcastSpec,
    PeriodicPattern,
    canonicalize,
    contains,
    standard,
)
from gridcast.finite import FiniteGrid, domination_number
from gridcast.halfsquares import depth_map, endpoints_of_rot, find_holes, hole_overlap_densities
from gridcast.search import (
    TABLE1_EXPECTED,
    all_valid_standard,
    best_standard,
    reproduce_table1,
    table1_matches,
    table1_specs,
)
from gridcast.signal import emission_total, sig_from_tower, total_signal, uncapped_signal
from gridcast.verifier import is_broadcast, upgrade_check, verify


def tiling(t):
    return PeriodicPattern((t - 1, t - 1), (t - 1, -(t - 1)))


def test_criterion_1_closed_form_r1():
    start = time.monotonic()
    for t in range(1, 9):
        d = 2 * t * t - 2 * t + 1
        report = verify(standard(d, 2 * t - 1), BroadcastSpec(t, 1))
        assert report.valid
        assert report.density == Fraction(1, d)
    for t in range(2, 7):
        assert best_standard(BroadcastSpec(t, 1)).d == 2 * t * t - 2 * t + 1
    elapsed = time.monotonic() - start
    assert elapsed < 10
    print(f"ACCEPTANCE 1 (closed form r=1, {elapsed:.2f}s): PASS")


def test_criterion_2_closed_form_r2():
    for t in range(3, 9):
        spec = BroadcastSpec(t, 2)
        report = verify(tiling(t), spec)
        assert report.valid
        assert report.density == Fraction(1, 2 * (t - 1) ** 2)
        hole_d, overlap_d = hole_overlap_densities(tiling(t), spec)
        assert hole_d == 0 and overlap_d == 0
    print("ACCEPTANCE 2 (closed form r=2 tilings): PASS")


def test_criterion_3_degenerate_22():
    report = verify(standard(3, 2), BroadcastSpec(2, 2))
    assert report.valid
    assert report.min_total_signal == 2
    print("ACCEPTANCE 3 (zero-excess (2,2) broadcast): PASS")


def test_criterion_4_23_construction():
    p = PeriodicPattern((4, 0), (-2, 1), ((0, 0), (1, 0)))
    report = verify(p, BroadcastSpec(2, 3))
    assert report.valid
    assert report.density == Fraction(1, 2)
    result = best_standard(BroadcastSpec(2, 3))
    assert result.d == 1
    assert Fraction(1, 1) > Fraction(1, 2)  # all-towers density vs the construction
    print("ACCEPTANCE 4 ((2,3) construction, no standard optimum): PASS")


def test_criterion_5_upgrade_theorem():
    for t0 in range(3, 7):
        result = upgrade_check(t0)
        assert result.in_theorem_range
        assert result.report.valid
    assert verify(standard(25, 7), BroadcastSpec(5, 3)).valid
    print("ACCEPTANCE 5 (upgrade to (t+1,3)): PASS")


def test_criterion_6_table1(capsys):
    start = time.monotonic()
    rows = reproduce_table1()
    expected_d = {
        2: (5, 5, 8, 11),
        3: (13, 13, 14, 19),
        4: (25, 25, 26, 29),
        5: (41, 41, 42, 43),
        6: (61, 61, 62, 65),
    }
    for row in rows:
        assert row.d_values == expected_d[row.t]
    assert table1_matches(rows)
    for t, cells in TABLE1_EXPECTED.items():
        for spec, (d, e) in zip(table1_specs(t), cells):
            assert is_broadcast(standard(d, e), spec)
    exit_code = main(["table1"])
    capsys.readouterr()
    assert exit_code == 0
    elapsed = time.monotonic() - start
    assert elapsed < 300
    with capsys.disabled():
        print(f"\nACCEPTANCE 6 (Table 1 reproduction, {elapsed:.2f}s): PASS")


def test_criterion_7_conjecture_counterexamples():
    rows = reproduce_table1()
    for row in rows:
        d_opt = row.d_values[0]
        d_t2_5 = row.d_values[2]
        assert d_t2_5 > d_opt, (row.t, d_t2_5, d_opt)
    print("ACCEPTANCE 7 (counterexamples to the (t,r)<->(t+1,r+2) conjecture): PASS")


def test_criterion_8_property_suites():
    rng = random.Random(2026)
    # capped/uncapped threshold equivalence on 1000 random triples
    for _ in range(1000):
        p = random_pattern(rng)
        spec = random_spec(rng)
        v = (rng.randint(-8, 8), rng.randint(-8, 8))
        capped = total_signal(v, p, spec)
        uncapped = uncapped_signal(v, p, spec.t)
        assert (capped >= spec.r) == (uncapped >= spec.r)
    # unimodular-basis invariance of verify on 100 random patterns
    for _ in range(100):
        p = random_pattern(rng, max_entry=4)
        q = transform_basis(p, random_unimodular(rng))
        spec = random_spec(rng, t_max=3, r_max=3)
        assert verify(p, spec) == verify(q, spec)
    # lattice-span generators for t in 1..10
    for t in range(1, 11):
        p = standard(2 * t * t - 2 * t + 1, 2 * t - 1)
        assert contains(p, (t, 1 - t))
        assert contains(p, (t - 1, t))
    # depth-map brute-force equivalence on 50 random patterns
    for _ in range(50):
        p = random_pattern(rng, max_entry=4)
        spec = random_spec(rng, t_max=3, r_max=3)
        dm = depth_map(p, spec)
        for key in list(dm.depth)[:4]:
            u, v = endpoints_of_rot(key)
            brute = 0
            for x in range(u[0] - spec.t - 1, u[0] + spec.t + 2):
                for y in range(u[1] - spec.t - 1, u[1] + spec.t + 2):
                    if contains(p, (x, y)):
                        brute += min(
                            sig_from_tower(u, (x, y), spec), sig_from_tower(v, (x, y), spec)
                        )
            assert dm.depth[key] == brute
    # oracle lower bound and (2,1)-to-classical-domination agreement up to 4x4
    for m in range(1, 5):
        for n in range(1, 5):
            g = FiniteGrid(m, n)
            spec = BroadcastSpec(2, 1)
            result = domination_number(g, spec)
            assert result.number >= -(-m * n // emission_total(spec))
            assert result.number == _classical_domination(g)
    print("ACCEPTANCE 8 (property suites): PASS")


def _classical_domination(g):
    verts = sorted(g.vertices())
    closed = {}
    for x, y in verts:
        nbrs = {(x, y)}
        for w in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if 0 <= w[0] < g.n and 0 <= w[1] < g.m:
                nbrs.add(w)
        closed[(x, y)] = nbrs
    for k in range(1, len(verts) + 1):
        for subset in itertools.combinations(verts, k):
            if len(set().union(*(closed[v] for v in subset))) == len(verts):
                return k
    raise AssertionError("unreachable")


def test_criterion_9_empirical_hole_lemmas():
    allowed = {"2x2", "1xN", "1xInf"}
    population = []
    for t in range(3, 6):
        spec = BroadcastSpec(t, 2)
        for d, e in all_valid_standard(spec):
            population.append((standard(d, e), spec))
        population.append((tiling(t), spec))
    assert population
    for p, spec in population:
        report = find_holes(p, spec, 2)
        for hole in report.holes:
            assert hole.spur_points == (), (spec, canonicalize(p), hole)
            assert hole.shape_class in allowed, (spec, canonicalize(p), hole)
    print(f"ACCEPTANCE 9 (hole lemmas over {len(population)} valid (t,2) broadcasts): PASS")
