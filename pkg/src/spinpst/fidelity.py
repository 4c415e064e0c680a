"""Transfer amplitudes from the spectral measure, time traces and PST search."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce as _fold
from typing import Optional

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .errors import InvalidWindow
from .spectral import OrthoPolySystem, SpectralMeasure, eval_poly
from .stratification import JacobiSequences

DEFAULT_TOLERANCE = 1e-9
GRID_POINTS = 4096
TIME_RESOLUTION = 1e-12
MAX_DENOMINATOR = 64


@dataclass(frozen=True)
class FidelityTrace:
    times: np.ndarray
    amplitudes: np.ndarray
    target_layer: int

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.amplitudes)


@dataclass(frozen=True)
class PstCertificate:
    time: float
    deficit: float
    achieved: bool
    target_is_single_vertex: Optional[bool]
    tolerance: float = DEFAULT_TOLERANCE


def _coefficients(j: JacobiSequences, m: SpectralMeasure, k: int) -> np.ndarray:
    """``A_l P_k(x_l) / sqrt(omega_1 ... omega_k)`` for each atom."""
    if not 0 <= k <= j.depth:
        raise ValueError(f"layer {k} outside 0..{j.depth}")
    sys = OrthoPolySystem.from_jacobi(j)
    norm = math.sqrt(math.prod(j.omega[:k]))
    return m.weights * eval_poly(sys, k, m.atoms) / norm


def _evaluate(coeffs, atoms, t):
    t = np.asarray(t, dtype=float)
    out = np.exp(-1j * np.multiply.outer(t, atoms)) @ coeffs
    return complex(out) if out.ndim == 0 else out


def amplitude(j: JacobiSequences, m: SpectralMeasure, k: int, t):
    """Amplitude ``<phi_k| exp(-i H t) |phi_0>`` from the spectral data.

    ``t`` may be a scalar or an array of times.
    """
    return _evaluate(_coefficients(j, m, k), m.atoms, t)


def layer_amplitudes(j: JacobiSequences, m: SpectralMeasure, t) -> np.ndarray:
    """Amplitudes on every layer ``0..d`` at time(s) ``t``; last axis indexes layers."""
    return np.stack([amplitude(j, m, k, t) for k in range(j.depth + 1)], axis=-1)


def trace(j, m, k, t_start, t_end, samples) -> FidelityTrace:
    if not t_start < t_end:
        raise InvalidWindow(f"need t_start < t_end, got [{t_start}, {t_end}]")
    if samples < 2:
        raise InvalidWindow(f"need at least 2 samples, got {samples}")
    times = np.linspace(t_start, t_end, samples)
    return FidelityTrace(times, np.atleast_1d(amplitude(j, m, k, times)), k)


def commensurate_period(m: SpectralMeasure, tolerance: float = DEFAULT_TOLERANCE) -> Optional[float]:
    """Period ``2 pi / g`` when every atom gap is an integer multiple of some ``g``.

    Gap ratios are matched against fractions with denominator at most 64.
    Returns ``None`` for incommensurate spectra or a single atom.
    """
    atoms = np.unique(np.asarray(m.atoms, dtype=float))
    gaps = np.diff(atoms)
    gaps = gaps[gaps > tolerance]
    if gaps.size == 0:
        return None
    smallest = gaps.min()
    fractions = []
    for ratio in gaps / smallest:
        frac = Fraction(float(ratio)).limit_denominator(MAX_DENOMINATOR)
        if abs(ratio - float(frac)) > tolerance * max(1.0, ratio):
            return None
        fractions.append(frac)
    common_den = _fold(math.lcm, (f.denominator for f in fractions))
    numerators = [int(f * common_den) for f in fractions]
    unit = smallest * _fold(math.gcd, numerators) / common_den
    return 2.0 * math.pi / unit


def default_window(m: SpectralMeasure) -> float:
    """Search horizon: the commensurate period, else ``4 pi`` over the smallest gap."""
    period = commensurate_period(m)
    if period is not None:
        return period
    gaps = np.diff(np.unique(m.atoms))
    gaps = gaps[gaps > 0]
    if gaps.size == 0:
        raise InvalidWindow("a single-atom measure has no dynamics to search")
    return 4.0 * math.pi / gaps.min()


def pst_search(
    j: JacobiSequences,
    m: SpectralMeasure,
    t_max: Optional[float] = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> PstCertificate:
    """Best transfer time to the antipodal layer ``phi_d`` within ``(0, t_max]``.

    A 4096-point grid scan locates the best sample; a bounded Brent search
    refines it, and the stationary point of ``|f|^2`` is then polished with a
    bracketed root solve on its analytic time derivative.
    """
    if t_max is None:
        t_max = default_window(m)
    if not t_max > 0:
        raise InvalidWindow(f"t_max must be positive, got {t_max}")
    if not 0 < tolerance <= 1e-2:
        raise ValueError(f"tolerance must lie in (0, 1e-2], got {tolerance}")
    d = j.depth
    if d == 0:
        raise InvalidWindow("single-layer network: nothing to transfer")

    coeffs = _coefficients(j, m, d)
    atoms = m.atoms

    def power(t):
        return abs(_evaluate(coeffs, atoms, t)) ** 2

    def slope(t):
        f = _evaluate(coeffs, atoms, t)
        df = _evaluate(-1j * atoms * coeffs, atoms, t)
        return 2.0 * (f.conjugate() * df).real

    grid = np.linspace(0.0, t_max, GRID_POINTS + 1)[1:]
    values = np.abs(_evaluate(coeffs, atoms, grid)) ** 2
    i = int(np.argmax(values))
    lo = grid[i - 1] if i > 0 else 0.0
    hi = grid[min(i + 1, grid.size - 1)]

    best = float(grid[i])
    if hi > lo:
        res = minimize_scalar(lambda t: -power(t), bounds=(lo, hi), method="bounded",
                              options={"xatol": TIME_RESOLUTION})
        if res.success and power(res.x) >= power(best):
            best = float(res.x)
        # value-only search stalls near sqrt(eps); finish on the derivative
        s_lo, s_hi = slope(lo), slope(hi)
        if s_lo > 0 > s_hi:
            root = brentq(slope, lo, hi, xtol=TIME_RESOLUTION)
            if power(root) >= power(best) - 1e-15:
                best = float(root)

    deficit = max(0.0, 1.0 - math.sqrt(power(best)))
    single = None if j.layer_sizes is None else j.layer_sizes[-1] == 1
    return PstCertificate(best, deficit, deficit <= tolerance, single, tolerance)
