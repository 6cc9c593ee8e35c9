"""
Uniform random trees
====================

Binary trees grow by inserting a leaf at a uniform (node, side).  Weighted
trees follow a random walk through the pointed bijection.  Each step adds or
removes one leaf, and the walk stops the first time it reaches the target
size.  The walk sampler is our own extension of the bijection, offered by
analogy with the binary growth procedure.
"""

from collections import Counter

from schroeder.sampling import SampleKind, SamplerConfig, chi_square_uniformity, sample
from schroeder.text import serialize_tree

cfg = SamplerConfig(target_n=4, seed=7)
tally = Counter(serialize_tree(t) for t in sample(SampleKind.SCHROEDER, cfg, 11_000))
for text, hits in sorted(tally.items()):
    print(f"{text:<16} {hits}")

# A goodness-of-fit check against the full list of classes.
for kind, n in [(SampleKind.BINARY, 5), (SampleKind.WELL_WEIGHTED, 4)]:
    print(chi_square_uniformity(kind, n, draws=20_000, seed=1).summary())

# Larger trees are cheap to draw.
print(serialize_tree(sample(SampleKind.SCHROEDER, SamplerConfig(25, seed=3))[0]))
