"""Walkthrough: exact matchings in general graphs.

The packers need maximum matchings on graphs that are nowhere near
bipartite, so the engine implements the blossom method: odd cycles are
shrunk into single pseudo-vertices while the search for augmenting paths
runs. A brute-force enumerator provides an independent cross-check.
"""

import random

from barpack import (
    Graph,
    brute_force_matching,
    matching_pairs,
    matching_weight,
    max_cardinality_matching,
    max_weight_matching,
)

# An odd cycle: no greedy pairing gets more than two edges out of C5.
c5 = Graph(5, ((0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1)))
m = max_cardinality_matching(c5)
print("C5 maximum matching:", matching_pairs(c5, m), "cardinality", m.cardinality())

# Weight and cardinality disagree: one heavy edge can beat two light ones.
path = Graph(4, ((0, 1, 1), (1, 2, 3), (2, 3, 1)))
print("\npath weights 1-3-1:")
print("  max cardinality:", matching_pairs(path, max_cardinality_matching(path)))
print("  max weight:     ", matching_pairs(path, max_weight_matching(path)),
      "weight", matching_weight(path, max_weight_matching(path)))

# Randomized agreement with the exhaustive oracle.
rng = random.Random(2024)
trials = 200
for _ in range(trials):
    n = rng.randint(2, 9)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    edges = tuple((u, v, rng.randint(1, 2)) for u, v in pairs[:rng.randint(0, 12)])
    g = Graph(n, edges)
    assert matching_weight(g, max_weight_matching(g)) == \
        matching_weight(g, brute_force_matching(g, "weight"))
    assert max_cardinality_matching(g).cardinality() == \
        brute_force_matching(g, "cardinality").cardinality()
print(f"\nblossom engine equals brute force on {trials} random graphs")
