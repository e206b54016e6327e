"""The SO(5) coadjoint orbit and its self-indexing moment map.

On the unit-square moment image with xi = (-1, 3) the levels are
(-3, -1, 1, 3) and the affine normalizer mu -> mu + 3 sends them to the
Morse indices (0, 2, 4, 6). Doubling the square reproduces the
normalization (mu + 6) / 2 on the nose.
"""
from gkmlef import (catalog, parse_gkm, restrict_to_circle,
                    self_indexing_normalizer)

for scale in (1, 2):
    entry = catalog.get("so5", scale=scale)
    graph = parse_gkm(entry.document)
    profile = restrict_to_circle(graph, (-1, 3))
    cs = profile.level_constants()
    a, b = self_indexing_normalizer(profile)
    print("scale %s: levels %s" % (scale, [str(c) for c in cs]))
    print("  normalizer mu -> %s*mu + %s" % (a, b))
    print("  normalized levels:", [str(a * c + b) for c in cs], "= indices")
    print()
