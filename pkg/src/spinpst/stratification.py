"""Distance layering from the reference vertex and reduction to a Jacobi chain."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import QuotientClosureViolation
from .network import SpinNetwork, hamiltonian

CLOSURE_RTOL = 1e-12


@dataclass(frozen=True)
class Stratification:
    """Breadth-first layers ``V_0 = {reference}, V_1, ..., V_d``."""

    layers: tuple[tuple[int, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    @property
    def vertex_count(self) -> int:
        return sum(self.sizes)

    def layer_of(self) -> dict[int, int]:
        return {v: k for k, layer in enumerate(self.layers) for v in layer}


@dataclass(frozen=True)
class JacobiSequences:
    """Off-diagonal weights ``omega`` (length d) and diagonal ``alpha`` (length d+1).

    ``layer_sizes`` is carried along when the sequences come from a network
    reduction so downstream code can tell whether the last layer is a single
    vertex.
    """

    omega: tuple[float, ...]
    alpha: tuple[float, ...]
    layer_sizes: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "omega", tuple(float(w) for w in self.omega))
        object.__setattr__(self, "alpha", tuple(float(a) for a in self.alpha))
        if len(self.alpha) != len(self.omega) + 1:
            raise ValueError(
                f"need len(alpha) == len(omega) + 1, got {len(self.alpha)} and {len(self.omega)}"
            )

    @classmethod
    def symmetric(cls, omega) -> "JacobiSequences":
        """Sequences with the given ``omega`` and every ``alpha`` zero."""
        omega = tuple(omega)
        return cls(omega, (0.0,) * (len(omega) + 1))

    @property
    def depth(self) -> int:
        return len(self.omega)


def stratify(net: SpinNetwork) -> Stratification:
    """Partition vertices by graph distance from ``net.reference``."""
    layers = [[net.reference]]
    seen = {net.reference}
    while True:
        frontier = set()
        for v in layers[-1]:
            frontier.update(w for w in net.neighbors(v) if w not in seen)
        if not frontier:
            break
        seen |= frontier
        layers.append(sorted(frontier))
    return Stratification(tuple(tuple(layer) for layer in layers))


def layer_vectors(strat: Stratification, n: int) -> np.ndarray:
    """Rows ``phi_k``: uniform unit vectors supported on each layer.

    Returns an array of shape ``(d + 1, n)`` in the 0-based site basis.
    """
    phi = np.zeros((len(strat.layers), n))
    for k, layer in enumerate(strat.layers):
        phi[k, [v - 1 for v in layer]] = 1.0 / np.sqrt(len(layer))
    return phi


def closure_residuals(net: SpinNetwork) -> tuple[JacobiSequences, np.ndarray]:
    """Jacobi coefficients plus the relative closure residual of every layer.

    Does not raise; :func:`reduce` is the checked entry point.
    """
    strat = stratify(net)
    h = hamiltonian(net)
    phi = layer_vectors(strat, net.vertex_count)
    h_phi = phi @ h  # row k is H phi_k (H symmetric)

    d = strat.depth
    alpha = np.einsum("kn,kn->k", phi, h_phi)
    # sqrt(omega_{k+1}) = phi_{k+1} . H phi_k
    root_omega = np.einsum("kn,kn->k", phi[1:], h_phi[:-1])

    residuals = np.zeros(d + 1)
    for k in range(d + 1):
        r = h_phi[k] - alpha[k] * phi[k]
        if k > 0:
            r -= root_omega[k - 1] * phi[k - 1]
        if k < d:
            r -= root_omega[k] * phi[k + 1]
        scale = np.linalg.norm(h_phi[k])
        residuals[k] = np.linalg.norm(r) / scale if scale > 0 else np.linalg.norm(r)

    seq = JacobiSequences(tuple(root_omega**2), tuple(alpha), strat.sizes)
    return seq, residuals


def reduce(net: SpinNetwork) -> JacobiSequences:
    """Reduce the network Hamiltonian to its Jacobi chain on the layer vectors.

    Raises
    ------
    QuotientClosureViolation
        If ``H phi_k`` leaves ``span(phi_{k-1}, phi_k, phi_{k+1})`` by more
        than ``1e-12 * |H phi_k|`` for some layer ``k``.
    """
    seq, residuals = closure_residuals(net)
    bad = np.flatnonzero(residuals > CLOSURE_RTOL)
    if bad.size:
        k = int(bad[0])
        raise QuotientClosureViolation(k, float(residuals[k]))
    return seq


def quotient_matrix(j: JacobiSequences) -> np.ndarray:
    """Symmetric tridiagonal matrix with diagonal ``alpha`` and off-diagonal ``sqrt(omega)``."""
    off = np.sqrt(np.asarray(j.omega, dtype=float))
    return np.diag(np.asarray(j.alpha, dtype=float)) + np.diag(off, 1) + np.diag(off, -1)
