"""Semifree circle actions on products of two-spheres.

When every circle weight is +-1 the action is semifree, and the monotone
normalization mu(z) = 2 n_z - n (n_z = number of negative weights) makes
mu + n a self-indexing moment map: its value at every fixed point equals
the Morse index.
"""
from gkmlef import (catalog, parse_gkm, restrict_to_circle,
                    semifree_monotone_analysis)

for n in (1, 2, 3):
    entry = catalog.get("sphere_product%d" % n)
    graph = parse_gkm(entry.document)
    profile = restrict_to_circle(graph, entry.default_xi)
    result = semifree_monotone_analysis(profile)
    print("product of %d spheres (xi = %s): semifree = %s"
          % (n, entry.default_xi, result["semifree"]))
    for vid in sorted(result["monotone_mu"]):
        mu = result["monotone_mu"][vid]
        print("  %s: mu = %2s, mu + n = %2s, index = %d"
              % (vid, mu, mu + n, profile.index[vid]))
    print("  mu + n self-indexing:", result["self_indexing"])
    print()

# contrast: the SU(3) orbit is not semifree (a circle weight 2 appears)
entry = catalog.get("su3")
profile = restrict_to_circle(parse_gkm(entry.document), (-1, 1))
print("su3 semifree:", semifree_monotone_analysis(profile)["semifree"],
      "(weights per vertex:", profile.weights, ")")
