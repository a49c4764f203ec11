"""Numerical tolerances shared across modules.

Defaults are sized for double precision arithmetic in dimensions up to a
few dozen: 1e-9 for normalization/orthogonality checks and tie bands,
1e-12 for phase-invariance identities, 1e-7 per probability entry when
comparing measurement distributions.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class ToleranceConfig:
    normalization: float = 1e-9
    orthogonality: float = 1e-9
    phase: float = 1e-12
    tie: float = 1e-9
    probability: float = 1e-7

    def __post_init__(self):
        for name in ("normalization", "orthogonality", "phase", "tie", "probability"):
            value = getattr(self, name)
            if not value >= 0:
                raise ValueError(f"tolerance {name} must be non-negative, got {value}")


DEFAULT_TOLERANCES = ToleranceConfig()
