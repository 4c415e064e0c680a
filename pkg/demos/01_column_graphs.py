# %% [markdown]
# # Column graphs: from a 2^d-vertex network to a (d+1)-site chain
#
# The d-dimensional hypercube, laid out in columns of equal Hamming weight,
# is layer-regular from vertex 1. Its single-excitation Hamiltonian reduces to
# a tridiagonal matrix on the layer vectors, and the transfer amplitude to the
# far corner is (-i sin(t/2))^d.

# %%
import math

import numpy as np

from spinpst import (
    build_hypercube_column,
    gauss_measure,
    hamiltonian,
    pst_search,
    quotient_matrix,
    reduce,
    stratify,
    amplitude,
)

# %%
for d in range(1, 5):
    net = build_hypercube_column(d)
    j = reduce(net)
    print(f"d={d}: N={net.vertex_count:2d} layers={stratify(net).sizes} omega={np.round(j.omega, 6)}")

# %% [markdown]
# For d = 4 the 16 x 16 Hamiltonian collapses to a 5 x 5 quotient.

# %%
net = build_hypercube_column(4)
print("full Hamiltonian:", hamiltonian(net).shape)
j = reduce(net)
print(np.round(quotient_matrix(j), 6))

# %% [markdown]
# Atoms are the quotient eigenvalues; weights are squared first eigenvector
# components (Gauss quadrature).

# %%
m = gauss_measure(j)
for x, a in zip(m.atoms, m.weights):
    print(f"  atom {x:+.6f}  weight {a:.6f}")

# %%
ts = np.linspace(0, math.pi, 5)
f = amplitude(j, m, j.depth, ts)
print(np.round(np.abs(f), 6))
print(np.round(np.sin(ts / 2) ** 4, 6))

# %%
cert = pst_search(j, m)
print(f"PST at t = {cert.time:.12f} (pi = {math.pi:.12f}), deficit {cert.deficit:.1e}, "
      f"single-vertex target: {cert.target_is_single_vertex}")
