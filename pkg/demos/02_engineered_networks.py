# %% [markdown]
# # Engineered couplings: chain, star, circulant and modulated tree
#
# With J_{k,k+1} = sqrt(k (N - k)) the chain has an equally spaced spectrum
# and transfers perfectly at t = pi. The same idea carries over to graphs whose
# quotient chain reproduces those weights.

# %%
import math

from spinpst import (
    build_binary_tree_modulated,
    build_circulant6,
    build_engineered_chain,
    build_star_extended,
    build_w_network,
    commensurate_period,
    gauss_measure,
    pst_search,
    reduce,
)

# %%
networks = {
    "chain N=6": build_engineered_chain(6),
    "W network": build_w_network(),
    "star": build_star_extended(),
    "circulant": build_circulant6(),
    "modulated tree": build_binary_tree_modulated(),
}

for name, net in networks.items():
    j = reduce(net)
    m = gauss_measure(j)
    period = commensurate_period(m)
    cert = pst_search(j, m)
    print(f"{name:15s} layers={j.layer_sizes} period={period:.6f} "
          f"t*={cert.time:.9f} (t*/pi={cert.time / math.pi:.9f}) deficit={cert.deficit:.1e} "
          f"single-vertex={cert.target_is_single_vertex}")

# %% [markdown]
# The modulated tree reaches its last layer with certainty, but that layer has
# eight leaves, so the excitation ends up spread evenly over them rather than
# on one vertex.
