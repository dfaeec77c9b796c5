"""Monte Carlo estimation of V(eps) = vol{w in box : |f(w)| <= eps}.

For small eps this volume behaves like C * eps^t * (-ln eps)^(m-1), where
(t, m) is the threshold pair of the arrangement, so a log-log regression on
sampled volumes recovers the pair numerically. That makes the sampler an
end-to-end statistical check on the exact combinatorial computation.

Sampling uses the counter-based Philox generator: sample k always consumes
stream positions [k*dim, (k+1)*dim) of the seed's stream, so estimates are
bit-identical for any block-aligned chunking or parallel split of the work.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .arrangement import NormalizedArrangement
from .errors import DegenerateBoxError, DimensionError, InsufficientDataError
from .ratlinalg import as_rational

# Philox advances in 4x64-bit counter blocks, so chunk boundaries must land
# on whole blocks (CHUNK_SAMPLES * dim divisible by 4) for chunked generation
# to reproduce one continuous stream. Any power of two >= 4 satisfies that.
CHUNK_SAMPLES = 1 << 16
_PHILOX_BLOCK = 4

Box = tuple[tuple[Fraction, Fraction], ...]


def default_box(dim: int) -> Box:
    return tuple((Fraction(-1), Fraction(1)) for _ in range(dim))


def default_epsilon_grid() -> list[float]:
    """Nine geometric points from 1e-2 down to 1e-6."""
    return [10.0 ** (-2 - 0.5 * k) for k in range(9)]


def normalize_box(box: Sequence[Sequence], dim: int) -> Box:
    out = []
    for bounds in box:
        lo, hi = bounds
        lo, hi = as_rational(lo), as_rational(hi)
        if lo >= hi:
            raise DegenerateBoxError(f"empty interval [{lo}, {hi}]")
        out.append((lo, hi))
    if len(out) != dim:
        raise DimensionError(f"box has {len(out)} intervals for dimension {dim}")
    return tuple(out)


@dataclass(frozen=True)
class VolumeSample:
    """One Monte Carlo estimate of V(eps) with its binomial standard error."""

    epsilon: float
    volume_estimate: float
    std_error: float
    sample_count: int


@dataclass(frozen=True)
class AsymptoticFit:
    """Least-squares fit of log V = log_C + t*log(eps) + (m-1)*log(-log eps)."""

    lambda_hat: float
    m_hat: float
    log_C_hat: float
    residual_norm: float


def estimate_volume(
    arr: NormalizedArrangement,
    box: Sequence[Sequence] | None,
    epsilon: float,
    samples: int,
    seed: int,
) -> VolumeSample:
    """Hit-or-miss estimate of the volume where |f| <= epsilon.

    Points are uniform on the box; |f(w)| is the product of |a_i . w + b_i|
    raised to the multiplicities, evaluated in floating point. The estimate
    is box_volume * hit_fraction, with the usual binomial standard error.
    Fixed (arr, box, epsilon, samples, seed) gives a bit-identical result.
    """
    if samples < 1:
        raise InsufficientDataError("need at least one sample")
    if not epsilon > 0:
        raise DegenerateBoxError(f"epsilon must be positive, got {epsilon}")
    bounds = normalize_box(box, arr.dim) if box is not None else default_box(arr.dim)
    lo = np.array([float(b[0]) for b in bounds])
    width = np.array([float(b[1] - b[0]) for b in bounds])
    box_volume = 1.0
    for b in bounds:
        box_volume *= float(b[1] - b[0])

    normals = np.array(arr.normals.to_float_lists())
    offsets = np.array([float(b) for b in arr.offsets])
    exponents = np.array([float(s) for s in arr.multiplicities])

    dim = arr.dim
    hits = 0
    start = 0
    while start < samples:
        count = min(CHUNK_SAMPLES, samples - start)
        draws_before = start * dim
        if draws_before % _PHILOX_BLOCK:
            raise AssertionError("chunk start is not block-aligned")
        bitgen = np.random.Philox(key=seed)
        bitgen.advance(draws_before // _PHILOX_BLOCK)
        points = lo + np.random.Generator(bitgen).random((count, dim)) * width
        values = np.abs(points @ normals.T + offsets) ** exponents
        hits += int(np.count_nonzero(values.prod(axis=1) <= epsilon))
        start += count

    fraction = hits / samples
    return VolumeSample(
        epsilon=float(epsilon),
        volume_estimate=box_volume * fraction,
        std_error=box_volume * float(np.sqrt(fraction * (1.0 - fraction) / samples)),
        sample_count=samples,
    )


def _usable(samples: Sequence[VolumeSample]) -> tuple[np.ndarray, np.ndarray]:
    if any(s.volume_estimate <= 0 for s in samples):
        raise InsufficientDataError(
            "a volume estimate is zero; increase the sample count or the epsilon range"
        )
    if any(not 0 < s.epsilon < 1 for s in samples):
        raise InsufficientDataError("asymptotic fitting needs 0 < epsilon < 1")
    eps = np.array([s.epsilon for s in samples])
    if len(np.unique(eps)) < 3:
        raise InsufficientDataError("need at least three distinct epsilon values")
    vol = np.array([s.volume_estimate for s in samples])
    return eps, vol


def fit_asymptotics(
    samples: Sequence[VolumeSample],
    fixed_multiplicity: float | None = None,
    fixed_threshold: float | None = None,
) -> AsymptoticFit:
    """Recover (threshold, multiplicity) from sampled volumes by least squares.

    The unconstrained fit regresses log V on [1, log eps, log(-log eps)].
    Passing fixed_multiplicity pins the log-log term and fits the threshold
    alone (useful to validate a known multiplicity), and vice versa for
    fixed_threshold.
    """
    eps, vol = _usable(samples)
    y = np.log(vol)
    x1 = np.log(eps)
    x2 = np.log(-np.log(eps))

    if fixed_multiplicity is not None and fixed_threshold is not None:
        design = np.column_stack([np.ones_like(y)])
        target = y - fixed_threshold * x1 - (fixed_multiplicity - 1.0) * x2
        coef, residual = _lstsq(design, target)
        return AsymptoticFit(float(fixed_threshold), float(fixed_multiplicity), coef[0], residual)
    if fixed_multiplicity is not None:
        design = np.column_stack([np.ones_like(y), x1])
        target = y - (fixed_multiplicity - 1.0) * x2
        coef, residual = _lstsq(design, target)
        return AsymptoticFit(coef[1], float(fixed_multiplicity), coef[0], residual)
    if fixed_threshold is not None:
        design = np.column_stack([np.ones_like(y), x2])
        target = y - fixed_threshold * x1
        coef, residual = _lstsq(design, target)
        return AsymptoticFit(float(fixed_threshold), coef[1] + 1.0, coef[0], residual)
    design = np.column_stack([np.ones_like(y), x1, x2])
    coef, residual = _lstsq(design, y)
    return AsymptoticFit(coef[1], coef[2] + 1.0, coef[0], residual)


def _lstsq(design: np.ndarray, target: np.ndarray) -> tuple[np.ndarray, float]:
    coef, _, _, _ = np.linalg.lstsq(design, target, rcond=None)
    residual = float(np.linalg.norm(target - design @ coef))
    return coef, residual


def synthetic_samples(
    threshold: float, multiplicity: int, constant: float, epsilons: Sequence[float]
) -> list[VolumeSample]:
    """Noise-free model data V = C * eps^t * (-ln eps)^(m-1), for self-tests."""
    out = []
    for eps in epsilons:
        v = constant * eps**threshold * (-np.log(eps)) ** (multiplicity - 1)
        out.append(VolumeSample(epsilon=eps, volume_estimate=float(v), std_error=0.0, sample_count=0))
    return out
