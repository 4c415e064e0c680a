"""Weighted spin networks and their single-excitation Hamiltonian.

Vertices are numbered ``1..N``. The Hamiltonian restricted to the
single-excitation subspace is the ``N x N`` real symmetric matrix with
``H[i, j] = scale * J_ij / 2`` on every edge (``scale * J_ij`` when the
network is in adjacency mode) and zeros elsewhere, diagonal included.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .errors import DisconnectedGraph, InvalidEdge

Edge = tuple[int, int, float]


@dataclass(frozen=True)
class SpinNetwork:
    """Immutable weighted undirected graph with a reference vertex.

    Attributes
    ----------
    vertex_count : int
        Number of spins ``N``.
    edges : tuple of (int, int, float)
        Normalised edge list, each pair stored once as ``(i, j, J)`` with
        ``i < j`` and sorted by ``(i, j)``.
    reference : int
        Vertex carrying the initial excitation.
    scale : float
        Global energy scale folded into the Hamiltonian.
    adjacency_mode : bool
        If set, Hamiltonian entries are ``J`` instead of ``J / 2``.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    reference: int = 1
    scale: float = 1.0
    adjacency_mode: bool = False
    _adjacency: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = self.vertex_count
        if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
            raise InvalidEdge(f"vertex_count must be a positive integer, got {n!r}")
        if not (isinstance(self.scale, (int, float)) and math.isfinite(self.scale) and self.scale > 0):
            raise InvalidEdge(f"scale must be a positive real, got {self.scale!r}")
        if not 1 <= self.reference <= n:
            raise InvalidEdge(f"reference vertex {self.reference} out of range 1..{n}")

        normalised = {}
        for edge in self.edges:
            try:
                i, j, coupling = edge
            except (TypeError, ValueError):
                raise InvalidEdge(f"edge {edge!r} is not an (i, j, J) triple") from None
            i, j, coupling = int(i), int(j), float(coupling)
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidEdge(f"edge ({i}, {j}) has an endpoint outside 1..{n}")
            if i == j:
                raise InvalidEdge(f"self-loop at vertex {i}")
            if not (math.isfinite(coupling) and coupling > 0):
                raise InvalidEdge(f"edge ({i}, {j}) has non-positive coupling {coupling}")
            key = (min(i, j), max(i, j))
            if key in normalised:
                raise InvalidEdge(f"duplicate edge {key}")
            normalised[key] = coupling

        edges = tuple((i, j, normalised[i, j]) for i, j in sorted(normalised))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "scale", float(self.scale))
        object.__setattr__(self, "vertex_count", int(n))

        adjacency = {v: {} for v in range(1, n + 1)}
        for i, j, coupling in edges:
            adjacency[i][j] = coupling
            adjacency[j][i] = coupling
        object.__setattr__(self, "_adjacency", adjacency)

        unreached = set(adjacency) - _reachable(adjacency, self.reference)
        if unreached:
            raise DisconnectedGraph(
                f"vertices {sorted(unreached)} are unreachable from vertex {self.reference}"
            )

    def neighbors(self, v: int) -> dict[int, float]:
        """Map of neighbour -> coupling for vertex ``v``."""
        return dict(self._adjacency[v])

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def coupling(self, i: int, j: int) -> float:
        """Coupling ``J_ij``, zero when ``i`` and ``j`` are not adjacent."""
        return self._adjacency[i].get(j, 0.0)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def with_reference(self, reference: int) -> "SpinNetwork":
        return replace(self, reference=reference)

    def with_scale(self, scale: float) -> "SpinNetwork":
        return replace(self, scale=scale)

    def as_adjacency(self) -> "SpinNetwork":
        """Same graph in adjacency mode (entries ``J`` rather than ``J / 2``)."""
        return replace(self, adjacency_mode=True)


def _reachable(adjacency: dict[int, dict], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def from_edge_list(
    n: int,
    edges: Iterable[Sequence],
    reference: int = 1,
    scale: float = 1.0,
    adjacency_mode: bool = False,
) -> SpinNetwork:
    """Validate an edge list and return a :class:`SpinNetwork`.

    Raises
    ------
    InvalidEdge
        Out-of-range id, self-loop, duplicate pair or non-positive coupling.
    DisconnectedGraph
        Some vertex is unreachable from ``reference``.
    """
    return SpinNetwork(
        vertex_count=n,
        edges=tuple(tuple(e) for e in edges),
        reference=reference,
        scale=scale,
        adjacency_mode=adjacency_mode,
    )


def hamiltonian(net: SpinNetwork) -> np.ndarray:
    """Single-excitation Hamiltonian in the site basis (0-based indices).

    The returned array is read-only.
    """
    factor = net.scale if net.adjacency_mode else net.scale / 2.0
    h = np.zeros((net.vertex_count, net.vertex_count))
    for i, j, coupling in net.edges:
        h[i - 1, j - 1] = h[j - 1, i - 1] = factor * coupling
    h.flags.writeable = False
    return h


# ---------------------------------------------------------------------------
# builders for the worked example families


def build_hypercube_column(d: int) -> SpinNetwork:
    """d-dimensional hypercube laid out in columns of equal Hamming weight.

    Column ``k`` holds the ``C(d, k)`` bit strings of weight ``k``; vertex 1
    is the all-zero string. Every coupling is 1.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    masks = sorted(range(2**d), key=lambda m: (bin(m).count("1"), m))
    index = {m: i + 1 for i, m in enumerate(masks)}
    edges = []
    for m in masks:
        for bit in range(d):
            other = m | (1 << bit)
            if other != m:
                edges.append((index[m], index[other], 1.0))
    return from_edge_list(2**d, edges)


def build_w_network() -> SpinNetwork:
    edges = [(1, i, 1.0) for i in range(2, 8)] + [(j, 8, 1.0) for j in range(2, 8)]
    return from_edge_list(8, edges)


def build_binary_tree_unweighted() -> SpinNetwork:
    edges = [(1, 2, 1.0), (1, 3, 1.0), (2, 4, 1.0), (2, 5, 1.0), (3, 6, 1.0), (3, 7, 1.0)]
    return from_edge_list(7, edges)


def build_engineered_chain(n: int) -> SpinNetwork:
    """Path ``1 - 2 - ... - n`` with couplings ``J_{k,k+1} = sqrt(k (n - k))``."""
    if n < 2:
        raise ValueError(f"chain needs at least 2 vertices, got {n}")
    edges = [(k, k + 1, math.sqrt(k * (n - k))) for k in range(1, n)]
    return from_edge_list(n, edges)


def build_star_extended() -> SpinNetwork:
    """Vertex 1 attached to hub 2 (``J = sqrt 3``); hub carries leaves 3, 4, 5."""
    edges = [(1, 2, math.sqrt(3.0)), (2, 3, 1.0), (2, 4, 1.0), (2, 5, 1.0)]
    return from_edge_list(5, edges)


def build_circulant6() -> SpinNetwork:
    """Six-cycle ``1-2-4-6-5-3-1`` with couplings engineered for PST 1 -> 6.

    Outer couplings are ``sqrt(3/2)``; with the ``J / 2`` convention the
    two-vertex layers then give quotient entries ``sqrt(3)/2, 1, sqrt(3)/2``.
    """
    outer = math.sqrt(1.5)
    edges = [
        (1, 2, outer), (1, 3, outer),
        (2, 4, 2.0), (3, 5, 2.0),
        (4, 6, outer), (5, 6, outer),
    ]
    return from_edge_list(6, edges)


def build_binary_tree_modulated() -> SpinNetwork:
    """16-vertex tree: 1 - 2, then 2 binary levels of ``sqrt 3`` and a ``sqrt 2`` leaf level."""
    r3, r2 = math.sqrt(3.0), math.sqrt(2.0)
    edges = [(1, 2, 2.0), (2, 3, r3), (2, 4, r3)]
    edges += [(3, 5, r3), (3, 6, r3), (4, 7, r3), (4, 8, r3)]
    for parent in range(5, 9):
        first = 9 + 2 * (parent - 5)
        edges += [(parent, first, r2), (parent, first + 1, r2)]
    return from_edge_list(16, edges)


DEMO_NAMES = ("chain:N", "hypercube:d", "w-network", "tree7", "tree16", "star5", "circulant6")


def build_demo(name: str) -> SpinNetwork:
    """Resolve a demo name such as ``chain:5`` or ``w-network`` to a network."""
    key, _, arg = name.strip().partition(":")
    fixed = {
        "w-network": build_w_network,
        "tree7": build_binary_tree_unweighted,
        "tree16": build_binary_tree_modulated,
        "star5": build_star_extended,
        "circulant6": build_circulant6,
    }
    if key in fixed and not arg:
        return fixed[key]()
    if key in ("chain", "hypercube") and arg:
        try:
            size = int(arg)
        except ValueError:
            raise ValueError(f"demo {name!r}: {arg!r} is not an integer") from None
        return build_engineered_chain(size) if key == "chain" else build_hypercube_column(size)
    raise ValueError(f"unknown demo {name!r}; choose from {', '.join(DEMO_NAMES)}")


def all_demo_networks() -> dict[str, SpinNetwork]:
    """One instance of every builder family, keyed by demo name."""
    names = ["chain:2", "chain:3", "chain:4", "chain:5", "hypercube:1", "hypercube:2",
             "hypercube:3", "hypercube:4", "w-network", "tree7", "tree16", "star5", "circulant6"]
    return {name: build_demo(name) for name in names}
