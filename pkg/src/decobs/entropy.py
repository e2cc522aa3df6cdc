"""Concave entropy functionals S(rho) = sum_i h(lambda_i) over spectra.

Built-ins, selected by string:

* ``"von-neumann"`` -- h(x) = -x ln x, with 0 ln 0 = 0 (values in nats);
* ``"linear"`` -- h(x) = x - x^2, i.e. S = 1 - tr(rho^2).  The alternative
  normalization h(x) = 1 - x^2 differs by the constant dim - 1 on unit-trace
  spectra and satisfies the same inequalities; the conventional form is used;
* ``"renyi:<alpha>"`` -- h(x) = x^alpha for 0 < alpha < 1 and h(x) = -x^alpha
  for alpha > 1, the sign chosen so h is concave (alpha = 1 is rejected: the
  von Neumann functional covers that limit);
* ``"log-det"`` -- h(x) = ln x, returning the -inf sentinel on (numerically)
  singular spectra.

A caller-supplied scalar h is also accepted; it must pass a sampled midpoint
concavity check on a 100-point grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import matcore
from .errors import NotADistributionError, ValidationError
from .states import DensityMatrix, OutcomeEnsemble, ZERO_PROBABILITY

#: Sentinel returned by the log-det functional on singular spectra.  Any
#: finite entropy exceeds it; comparisons with it on the smaller side of an
#: inequality pass vacuously.
NEG_INFINITY = float("-inf")

#: Eigenvalues at or below this are treated as zero by the log-det functional.
SINGULAR_EIGENVALUE = 1e-14

SPECTRUM_RANGE_TOL = 1e-10
SPECTRUM_SUM_TOL = 1e-9

_CONCAVITY_GRID_POINTS = 100
_CONCAVITY_SLACK = 1e-12

_KINDS = ("von-neumann", "linear", "renyi", "log-det", "custom")


@dataclass(frozen=True)
class EntropyFunctional:
    """A concave scalar function h evaluated entrywise over a spectrum."""

    kind: str
    alpha: float | None = None
    h: Callable[[float], float] | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown entropy kind {self.kind!r}")
        if self.kind == "renyi":
            if self.alpha is None or self.alpha <= 0.0:
                raise ValueError("renyi requires alpha > 0")
            if self.alpha == 1.0:
                raise ValueError("renyi alpha = 1 is excluded; use von-neumann")
        elif self.alpha is not None:
            raise ValueError(f"alpha is only meaningful for renyi, not {self.kind!r}")
        if self.kind == "custom":
            if self.h is None:
                raise ValueError("custom functional requires a scalar function h")
            _check_midpoint_concavity(self.h)
        elif self.h is not None:
            raise ValueError("h is only accepted for custom functionals")

    @property
    def label(self) -> str:
        if self.kind == "renyi":
            return f"renyi:{self.alpha:g}"
        return self.kind


def _check_midpoint_concavity(h: Callable[[float], float]) -> None:
    """Reject h unless h((x+y)/2) >= (h(x)+h(y))/2 - slack on a sample grid."""
    grid = np.linspace(0.005, 1.0, _CONCAVITY_GRID_POINTS)
    values = np.array([h(float(x)) for x in grid])
    if not np.all(np.isfinite(values)):
        raise ValidationError("concave-finite-on-grid", detail="h is not finite on (0, 1]")
    for i in range(len(grid)):
        for j in range(i + 1, len(grid)):
            mid = h(float((grid[i] + grid[j]) / 2.0))
            if mid < (values[i] + values[j]) / 2.0 - _CONCAVITY_SLACK:
                raise ValidationError(
                    "concave-midpoint",
                    residual=float((values[i] + values[j]) / 2.0 - mid),
                    detail=f"violated at x={grid[i]:.4f}, y={grid[j]:.4f}",
                )


def von_neumann() -> EntropyFunctional:
    return EntropyFunctional("von-neumann")


def linear() -> EntropyFunctional:
    return EntropyFunctional("linear")


def renyi(alpha: float) -> EntropyFunctional:
    return EntropyFunctional("renyi", alpha=float(alpha))


def log_det() -> EntropyFunctional:
    return EntropyFunctional("log-det")


def custom(h: Callable[[float], float]) -> EntropyFunctional:
    return EntropyFunctional("custom", h=h)


def parse_functional(text: str) -> EntropyFunctional:
    """Parse a selector string: von-neumann | linear | renyi:<alpha> | log-det."""
    name = text.strip()
    if name == "von-neumann":
        return von_neumann()
    if name == "linear":
        return linear()
    if name == "log-det":
        return log_det()
    if name.startswith("renyi:"):
        try:
            alpha = float(name.split(":", 1)[1])
        except ValueError as exc:
            raise ValueError(f"bad renyi parameter in {text!r}") from exc
        return renyi(alpha)
    raise ValueError(f"unknown entropy functional {text!r}")


def builtin_functionals() -> tuple[EntropyFunctional, ...]:
    """The functional set used by default in full verification campaigns."""
    return (von_neumann(), linear(), renyi(0.5), renyi(2.0), log_det())


def entropy_of_spectrum(values, functional: EntropyFunctional) -> float:
    """Sum of h over a probability spectrum.

    Entries must lie in [-1e-10, 1 + 1e-10] (they are clamped to [0, 1]) and
    sum to 1 within 1e-9; otherwise NotADistributionError is raised.
    Eigenvalues at or below the singularity threshold are treated as exact
    zeros by every functional: steep h (the alpha < 1 power sums) would
    otherwise amplify eigensolver noise on structurally zero eigenvalues far
    beyond the working tolerances.  The log-det functional returns the -inf
    sentinel whenever such a zero is present.
    """
    lam = np.asarray(values, dtype=float).ravel()
    if lam.size == 0:
        raise NotADistributionError("spectrum-nonempty")
    if not np.all(np.isfinite(lam)):
        raise NotADistributionError("spectrum-finite")
    low = float(lam.min())
    high = float(lam.max())
    if low < -SPECTRUM_RANGE_TOL or high > 1.0 + SPECTRUM_RANGE_TOL:
        residual = max(-low - SPECTRUM_RANGE_TOL, high - 1.0 - SPECTRUM_RANGE_TOL)
        raise NotADistributionError("spectrum-in-unit-interval", residual=residual)
    sum_residual = abs(float(lam.sum()) - 1.0)
    if sum_residual > SPECTRUM_SUM_TOL:
        raise NotADistributionError("spectrum-sums-to-one", residual=sum_residual)
    lam = np.clip(lam, 0.0, 1.0)
    lam = np.where(lam <= SINGULAR_EIGENVALUE, 0.0, lam)

    if functional.kind == "von-neumann":
        positive = lam[lam > 0.0]
        # + 0.0 normalizes the -0.0 produced by pure spectra
        return float(-(positive * np.log(positive)).sum() + 0.0)
    if functional.kind == "linear":
        return float((lam - lam**2).sum())
    if functional.kind == "renyi":
        total = float((lam**functional.alpha).sum())
        return total if functional.alpha < 1.0 else -total
    if functional.kind == "log-det":
        if float(lam.min()) <= SINGULAR_EIGENVALUE:
            return NEG_INFINITY
        return float(np.log(lam).sum())
    return float(sum(functional.h(float(x)) for x in lam))


def entropy(rho: DensityMatrix, functional: EntropyFunctional) -> float:
    """S(rho) = sum_i h(lambda_i) over the eigenvalues of rho."""
    return entropy_of_spectrum(matcore.hermitian_spectrum(rho.mat), functional)


def expected_entropy(ensemble: OutcomeEnsemble, functional: EntropyFunctional) -> float:
    """Probability-weighted entropy over the live branches of an ensemble.

    Zero-probability branches contribute exactly 0 even when their entropy
    would be the -inf sentinel.
    """
    total = 0.0
    for outcome in ensemble:
        if outcome.probability > ZERO_PROBABILITY:
            total += outcome.probability * entropy(outcome.state, functional)
    return total


def to_bits(value: float) -> float:
    """Convert nats to bits for display; the sentinel passes through."""
    if value == NEG_INFINITY or value == float("inf"):
        return value
    return value / math.log(2.0)
