"""Evaluation-point types and cut-plane domain validation.

The fugacity domain is the complex plane with the ray (-inf, -cut_end]
removed; cut_end is exp(beta*omega/2) for thermodynamic points and 1 for
bare Fermi-function calls. Points closer than 1e-6 to the ray are rejected
rather than silently assigned a branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError

#: evaluations closer than this to the cut ray are refused
CUT_MARGIN = 1e-6


def distance_to_cut(z: complex, cut_end: float) -> float:
    """Euclidean distance from z to the ray (-inf, -cut_end]."""
    if z.real >= -cut_end:
        return abs(z - (-cut_end))
    return abs(z.imag)


@dataclass(frozen=True)
class CutPlaneFugacity:
    """A fugacity value known to avoid the excluded ray (-inf, -cut_end]."""

    value: complex
    cut_end: float = 1.0

    def __post_init__(self):
        if not (self.cut_end > 0):
            raise DomainError(f"cut_end must be positive, got {self.cut_end}")
        z = complex(self.value)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError(f"non-finite fugacity {z!r}")
        d = distance_to_cut(z, self.cut_end)
        if d < CUT_MARGIN:
            raise DomainError(
                f"fugacity {z!r} is within {CUT_MARGIN:g} of the cut ray "
                f"(-inf, {-self.cut_end:g}] (distance {d:.3g})"
            )
        object.__setattr__(self, "value", z)


@dataclass(frozen=True)
class ThermoPoint:
    """Grand-canonical evaluation point (beta, z, omega).

    Units: hbar = m = k_B = 1, charge and light speed absorbed into the
    Larmor frequency omega. The fugacity must lie in
    D = C \\ (-inf, -exp(beta*omega/2)].
    """

    beta: float
    z: complex
    omega: float = 0.0
    fugacity: CutPlaneFugacity = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not (self.beta > 0 and math.isfinite(self.beta)):
            raise DomainError(f"beta must be positive and finite, got {self.beta}")
        if not (self.omega >= 0 and math.isfinite(self.omega)):
            raise DomainError(f"omega must be >= 0 and finite, got {self.omega}")
        cut_end = math.exp(self.beta * self.omega / 2.0)
        fug = CutPlaneFugacity(complex(self.z), cut_end=cut_end)
        object.__setattr__(self, "z", fug.value)
        object.__setattr__(self, "fugacity", fug)

    @property
    def cut_end(self) -> float:
        return self.fugacity.cut_end


def as_fugacity(z, cut_end: float = 1.0) -> CutPlaneFugacity:
    """Coerce a complex number (or CutPlaneFugacity) to a validated fugacity."""
    if isinstance(z, CutPlaneFugacity):
        if z.cut_end != cut_end:
            return CutPlaneFugacity(z.value, cut_end=cut_end)
        return z
    return CutPlaneFugacity(complex(z), cut_end=cut_end)
