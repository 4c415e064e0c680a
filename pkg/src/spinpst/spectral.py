"""Orthogonal polynomials, spectral measure and Stieltjes transform of a Jacobi chain.

The measure of the quotient Hamiltonian at ``phi_0`` is discrete with
``d + 1`` atoms. Atoms are the eigenvalues of the tridiagonal quotient matrix
and the Gauss weights are the squared first components of its normalised
eigenvectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DegenerateSequence, PoleProximity
from .stratification import JacobiSequences

POLE_DISTANCE = 1e-10


@dataclass(frozen=True)
class OrthoPolySystem:
    """Monic polynomials ``P_0 .. P_{d+1}`` defined by the three-term recurrence

    ``x P_n = P_{n+1} + alpha_{n+1} P_n + omega_n P_{n-1}``.
    """

    omega: tuple[float, ...]
    alpha: tuple[float, ...]

    @classmethod
    def from_jacobi(cls, j: JacobiSequences) -> "OrthoPolySystem":
        return cls(tuple(j.omega), tuple(j.alpha))

    @property
    def degree_bound(self) -> int:
        return len(self.alpha)


@dataclass(frozen=True)
class SpectralMeasure:
    atoms: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        atoms = np.asarray(self.atoms, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if atoms.shape != weights.shape or atoms.ndim != 1:
            raise ValueError("atoms and weights must be 1-d arrays of equal length")
        order = np.argsort(atoms, kind="stable")
        atoms, weights = atoms[order], weights[order]
        atoms.flags.writeable = False
        weights.flags.writeable = False
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "weights", weights)

    def __len__(self):
        return self.atoms.size


def _recurrence(alpha, omega, k, x):
    x = np.asarray(x)
    prev = np.ones_like(x, dtype=np.result_type(x, float))
    if k == 0:
        return prev
    cur = x - alpha[0]
    for n in range(1, k):
        prev, cur = cur, (x - alpha[n]) * cur - omega[n - 1] * prev
    return cur


def eval_poly(sys: OrthoPolySystem, k: int, x):
    """``P_k(x)`` by forward recurrence; ``x`` may be an array (real or complex)."""
    if not 0 <= k <= sys.degree_bound:
        raise ValueError(f"degree {k} outside 0..{sys.degree_bound}")
    return _recurrence(sys.alpha, sys.omega, k, x)


def eval_assoc_poly(sys: OrthoPolySystem, k: int, x):
    """First associated polynomial ``P_k^(1)(x)``: the recurrence with coefficients shifted by one."""
    if not 0 <= k <= sys.degree_bound - 1:
        raise ValueError(f"degree {k} outside 0..{sys.degree_bound - 1}")
    return _recurrence(sys.alpha[1:], sys.omega[1:], k, x)


def _check_sequences(j: JacobiSequences):
    omega = np.asarray(j.omega, dtype=float)
    if np.any(~np.isfinite(omega)) or np.any(omega <= 0):
        raise DegenerateSequence(f"omega must be strictly positive, got {j.omega}")
    return omega


def gauss_measure(j: JacobiSequences) -> SpectralMeasure:
    """Atoms and Gauss weights of the quotient Hamiltonian's spectral measure."""
    omega = _check_sequences(j)
    alpha = np.asarray(j.alpha, dtype=float)
    if omega.size == 0:
        return SpectralMeasure(alpha.copy(), np.ones(1))
    atoms, vecs = eigh_tridiagonal(alpha, np.sqrt(omega))
    weights = vecs[0, :] ** 2
    if np.any(weights <= 0):
        raise RuntimeError(f"eigensolver returned non-positive Gauss weights {weights}")
    return SpectralMeasure(atoms, weights)


def _quotient_eigenvalues(j: JacobiSequences) -> np.ndarray:
    omega = _check_sequences(j)
    alpha = np.asarray(j.alpha, dtype=float)
    if omega.size == 0:
        return alpha
    return eigh_tridiagonal(alpha, np.sqrt(omega), eigvals_only=True)


def _check_pole(atoms, z):
    gap = np.min(np.abs(np.asarray(atoms) - z))
    if gap <= POLE_DISTANCE:
        raise PoleProximity(f"z = {z} lies within {gap:.2e} of an atom")


def stieltjes_cf(j: JacobiSequences, z: complex) -> complex:
    """Stieltjes transform as the finite continued fraction in ``(omega, alpha)``.

    Evaluated bottom-up: ``1 / (z - a_1 - w_1 / (z - a_2 - w_2 / (...)))``.
    """
    _check_pole(_quotient_eigenvalues(j), z)
    tail = z - j.alpha[-1]
    for k in range(j.depth - 1, -1, -1):
        if tail == 0:
            raise PoleProximity(f"continued fraction breaks down at level {k + 1}")
        tail = z - j.alpha[k] - j.omega[k] / tail
    if tail == 0:
        raise PoleProximity("continued fraction breaks down at the top level")
    return 1.0 / tail


def stieltjes_pf(m: SpectralMeasure, z: complex) -> complex:
    """Stieltjes transform as the partial-fraction sum ``sum_l A_l / (z - x_l)``."""
    _check_pole(m.atoms, z)
    return complex(np.sum(m.weights / (z - m.atoms)))


def moments(m: SpectralMeasure, mth: int) -> float:
    """``sum_l A_l x_l**mth``."""
    if mth < 0:
        raise ValueError("moment order must be non-negative")
    return float(np.sum(m.weights * m.atoms**mth))
