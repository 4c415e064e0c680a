"""Brute-force reference engine on the full N-dimensional single-excitation space.

Everything here ignores the layer structure. The eigensolver is a cyclic
Jacobi (plane rotation) method; rotations on disjoint index pairs are applied
together in round-robin order so that each sweep costs O(N) array operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import ConvergenceFailure, InvalidTarget, ModeMismatch
from .network import SpinNetwork, hamiltonian
from .stratification import layer_vectors, stratify

MAX_ORDER = 4096
MAX_SWEEPS = 100
OFF_DIAGONAL_RTOL = 1e-14


@dataclass(frozen=True)
class EigenDecomposition:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Partition all index pairs of ``range(n)`` into rounds of disjoint pairs."""
    players = list(range(n)) + ([-1] if n % 2 else [])
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(a, b), max(a, b)) for a, b in pairs if a >= 0 and b >= 0]
        p, q = zip(*pairs)
        rounds.append((np.array(p), np.array(q)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def sym_eigen(h: np.ndarray) -> EigenDecomposition:
    """Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Iterates sweeps until the off-diagonal Frobenius mass is at most
    ``1e-14 * |H|_F``.

    Raises
    ------
    ConvergenceFailure
        After 100 sweeps without convergence.
    """
    a = np.array(h, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds the cap of {MAX_ORDER}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")

    v = np.eye(n)
    target = OFF_DIAGONAL_RTOL * np.linalg.norm(a)
    rounds = _round_robin(n) if n > 1 else []
    sweeps = 0
    while _off_norm(a) > target:
        if sweeps == MAX_SWEEPS:
            raise ConvergenceFailure(
                f"off-diagonal norm {_off_norm(a):.3e} after {MAX_SWEEPS} sweeps"
            )
        sweeps += 1
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            theta = np.where(active, (a[q, q] - a[p, p]) / (2.0 * np.where(active, apq, 1.0)), 0.0)
            # smaller root of t^2 + 2 theta t - 1 = 0
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0.0] = 1.0
            t[~active] = 0.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            cols_p, cols_q = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * cols_p - s * cols_q
            a[:, q] = s * cols_p + c * cols_q
            rows_p, rows_q = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rows_p - s[:, None] * rows_q
            a[q, :] = s[:, None] * rows_p + c[:, None] * rows_q
            a[p, q] = 0.0
            a[q, p] = 0.0

            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return EigenDecomposition(eigenvalues[order], v[:, order])


@lru_cache(maxsize=128)
def _network_eigen(net: SpinNetwork) -> EigenDecomposition:
    return sym_eigen(hamiltonian(net))


def evolve(h, source, t, eig: Optional[EigenDecomposition] = None) -> np.ndarray:
    """``exp(-i H t) @ source`` via the eigendecomposition of ``H``.

    ``t`` may be a scalar (result shape ``(N,)``) or a 1-d array of times
    (result shape ``(len(t), N)``).
    """
    if eig is None:
        eig = sym_eigen(h)
    source = np.asarray(source)
    vals, vecs = eig.eigenvalues, eig.eigenvectors
    if source.shape != (vecs.shape[0],):
        raise ValueError(f"source has shape {source.shape}, expected ({vecs.shape[0]},)")
    coeffs = vecs.T @ source
    times = np.asarray(t, dtype=float)
    phases = np.exp(-1j * np.multiply.outer(times, vals))
    return (phases * coeffs) @ vecs.T


def amplitude_full(net: SpinNetwork, t, vertex: Optional[int] = None, layer: Optional[int] = None):
    """Overlap of ``exp(-i H t)|reference>`` with a site ``|vertex>`` or a layer vector ``phi_layer``.

    Exactly one of ``vertex`` or ``layer`` must be given.
    """
    if (vertex is None) == (layer is None):
        raise InvalidTarget("give exactly one of vertex= or layer=")
    n = net.vertex_count
    if vertex is not None:
        if not 1 <= vertex <= n:
            raise InvalidTarget(f"vertex {vertex} outside 1..{n}")
        target = np.zeros(n)
        target[vertex - 1] = 1.0
    else:
        strat = stratify(net)
        if not 0 <= layer <= strat.depth:
            raise InvalidTarget(f"layer {layer} outside 0..{strat.depth}")
        target = layer_vectors(strat, n)[layer]

    source = np.zeros(n)
    source[net.reference - 1] = 1.0
    psi = evolve(None, source, t, eig=_network_eigen(net))
    out = psi @ target
    return complex(out) if np.ndim(out) == 0 else out


def walk_count(net: SpinNetwork, steps: int) -> int:
    """Exact number of closed walks of length ``steps`` at the reference vertex."""
    if not net.adjacency_mode or any(c != 1.0 for _, _, c in net.edges):
        raise ModeMismatch("walk counting needs an adjacency-mode network with unit couplings")
    if not 0 <= steps <= 20:
        raise ValueError(f"steps must lie in 0..20, got {steps}")
    n = net.vertex_count
    adj = np.zeros((n, n), dtype=object)
    adj[:] = 0
    for i, j, _ in net.edges:
        adj[i - 1, j - 1] = adj[j - 1, i - 1] = 1
    walks = np.zeros(n, dtype=object)
    walks[:] = 0
    walks[net.reference - 1] = 1
    for _ in range(steps):
        walks = adj.dot(walks)
    return int(walks[net.reference - 1])
