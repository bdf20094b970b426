"""Decide whether a periodic pattern is a (t,r) broadcast.

By periodicity, checking every vertex of one fundamental domain decides
validity over the whole infinite grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gridcast.core import (
    BroadcastSpec,
    PeriodicPattern,
    Vertex,
    canonicalize,
    density,
    fundamental_domain,
    standard,
)
from gridcast.signal import signal_at_least, total_signal, uncapped_signal


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    t: int
    r: int
    density: Fraction
    min_total_signal: int
    witness: Vertex  # lexicographically least (by y, then x) minimizer
    domain_size: int

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "t": self.t,
            "r": self.r,
            "density": {"num": self.density.numerator, "den": self.density.denominator},
            "min_total_signal": self.min_total_signal,
            "witness": list(self.witness),
            "domain_size": self.domain_size,
        }


def verify(p: PeriodicPattern, spec: BroadcastSpec) -> VerificationReport:
    """Full scan of the fundamental domain; valid iff every vertex gets >= r."""
    canon = canonicalize(p)
    domain = fundamental_domain(canon)
    best_sig: int | None = None
    witness: Vertex = domain[0]
    for v in domain:
        s = total_signal(v, canon, spec)
        if best_sig is None or s < best_sig or (s == best_sig and (v[1], v[0]) < (witness[1], witness[0])):
            best_sig = s
            witness = v
    assert best_sig is not None
    return VerificationReport(
        valid=best_sig >= spec.r,
        t=spec.t,
        r=spec.r,
        density=density(canon),
        min_total_signal=best_sig,
        witness=witness,
        domain_size=len(domain),
    )


def is_broadcast(p: PeriodicPattern, spec: BroadcastSpec) -> bool:
    """Like verify().valid but bails out at the first underserved vertex."""
    canon = canonicalize(p)
    return all(signal_at_least(v, canon, spec, spec.r) for v in fundamental_domain(canon))


def min_signal(p: PeriodicPattern, t: int) -> int:
    """Minimum UNCAPPED total signal over the fundamental domain.

    Equals the largest r for which p is a (t,r) broadcast, or 0 if none:
    a capped sum reaches r exactly when the uncapped sum does.
    """
    if t < 1:
        raise ValueError(f"signal strength t must be >= 1, got {t}")
    canon = canonicalize(p)
    return min(uncapped_signal(v, canon, t) for v in fundamental_domain(canon))


def min_t(p: PeriodicPattern, r: int, t_max: int) -> int | None:
    """Smallest t <= t_max making p a (t,r) broadcast; None if there is none.

    Signal is monotone in t, so binary search applies.
    """
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    canon = canonicalize(p)
    if not is_broadcast(canon, BroadcastSpec(t_max, r)):
        return None
    lo, hi = 1, t_max  # hi always valid
    while lo < hi:
        mid = (lo + hi) // 2
        if is_broadcast(canon, BroadcastSpec(mid, r)):
            hi = mid
        else:
            lo = mid + 1
    return hi


@dataclass(frozen=True)
class UpgradeCheck:
    """Result of re-verifying the optimal (t0,1) pattern as a (t0+1,3) broadcast."""

    t0: int
    pattern: PeriodicPattern
    report: VerificationReport
    in_theorem_range: bool  # the upgrade theorem is stated for t0 > 2


def upgrade_check(t0: int) -> UpgradeCheck:
    """Verify standard(2*t0^2 - 2*t0 + 1, 2*t0 - 1) against (t0 + 1, 3)."""
    if t0 < 1:
        raise ValueError(f"t0 must be >= 1, got {t0}")
    d = 2 * t0 * t0 - 2 * t0 + 1
    p = standard(d, 2 * t0 - 1)
    report = verify(p, BroadcastSpec(t0 + 1, 3))
    return UpgradeCheck(t0=t0, pattern=p, report=report, in_theorem_range=t0 > 2)
