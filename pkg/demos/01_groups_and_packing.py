"""
Word metrics, balls, and packing scales
=======================================

A walking tour of the group layer: exact word-metric distances on the
integer lattices and the free group, ball enumeration, the doubling
sequence of packing radii, the annulus radius that swallows a whole
ball, and the two independent refutation oracles that agree with each
other.

Run it top to bottom; every number printed is recomputed on the spot.
"""

from shiftcolor import (
    FreeAbelian,
    FreeGroup,
    annulus_D,
    d_sequence,
    infty_check,
    infty_counting_bound,
    parse_group,
)

# ---------------------------------------------------------------------------
# 1. Groups and distances
# ---------------------------------------------------------------------------
# Three stock groups: the integer line, the integer plane, and the free
# group on two letters. Elements are bare ints, coordinate tuples, and
# reduced words (capital letter = inverse letter).

line = FreeAbelian(1)
plane = FreeAbelian(2)
free2 = FreeGroup(2)

print("line:  dist(3, 8)      =", line.dist(3, 8))
print("plane: dist((0,0),(2,-3)) =", plane.dist((0, 0), (2, -3)))
print("free2: dist('', 'abA') =", free2.dist("", "abA"))

# The product of a word and its inverse cancels back to the identity.
w = "abA"
print("free2: abA * aBA       =", repr(free2.mul(w, free2.inv(w))))

# The metric is right-invariant: translating both points on the right
# leaves the distance alone. Check one instance by hand.
g, h, t = "ab", "ba", "bb"
assert free2.dist(g, h) == free2.dist(free2.mul(g, t), free2.mul(h, t))
print("right-invariance spot check passed")

# ---------------------------------------------------------------------------
# 2. Balls
# ---------------------------------------------------------------------------
# Balls are enumerated breadth-first and returned in a canonical order,
# so their sizes (and contents) are exactly reproducible.

print("\n|Ball(0, r)| on the line :", [len(line.ball(0, r)) for r in range(5)])
print("|Ball(0, r)| on the plane:", [len(plane.ball((0, 0), r)) for r in range(5)])
print("|Ball(1, r)| in free2    :", [len(free2.ball("", r)) for r in range(5)])
# The free-group ball sizes follow 1 + 2*(3^r - 1): 1, 5, 17, 53, 161.

# ---------------------------------------------------------------------------
# 3. Packing scales
# ---------------------------------------------------------------------------
# d_sequence finds the minimal radii d_0 < d_1 < ... where each next ball
# can hold two disjoint balls of the previous radius. On the line the
# answer doubles: 1, 3, 7, 15, ...  Each step carries a witness pair of
# centers that can be re-verified by raw ball arithmetic.

seq = d_sequence("Z^1", 4)
print("\npacking scales on the line:", list(seq))
witness = seq.witnesses[1]
print("witness for the second scale:", witness.center_a, witness.center_b)

# Re-verify that witness directly: the two small balls are disjoint and
# both sit inside the big ball around the identity.
ball_a = set(line.ball(witness.center_a, seq[0]))
ball_b = set(line.ball(witness.center_b, seq[0]))
big = set(line.ball(0, seq[1]))
assert not (ball_a & ball_b) and ball_a <= big and ball_b <= big
print("witness re-verified by set arithmetic")

# The same doubling shows up in the free group. (Stop at two steps: the
# witness search scans center pairs inside exponentially growing balls,
# so each further step costs roughly 27x the previous one.)
print("packing scales in free2:", list(d_sequence("F_2", 2)))

# ---------------------------------------------------------------------------
# 4. The annulus radius
# ---------------------------------------------------------------------------
# annulus_D(group, d) is the least D so that the annulus of inner radius
# 2d and outer radius D around the identity contains a full radius-d
# ball. On the line it is 4d + 1.

for d in (1, 3, 5):
    D, wit = annulus_D("Z^1", d)
    print(f"line annulus radius for d={d}: D={D} (witness center {wit.center})")

# ---------------------------------------------------------------------------
# 5. Refuting too-greedy separation demands
# ---------------------------------------------------------------------------
# infty_check asks: can a single ball of radius d_last admit a coloring
# where color c keeps its points more than 2*d_c apart for every c?
# With scales (1, 3) and only colors {0, 1} the line ball of radius 3
# (7 points) cannot be filled — exhaustive search refutes it.

report = infty_check("Z^1", (1, 3), c=1)
print("\nexhaustive search on scales (1,3), palette {0,1}:", report.outcome)

# A completely independent counting argument reaches the same verdict:
# each color c can appear at most floor(2*d_last / (2*d_c + 1)) + 1 times
# inside the ball, and the capacities do not add up to the ball size.
bound = infty_counting_bound((1, 3), c=1)
print(
    "counting bound: ball of", bound["ball_size"],
    "points vs capacities", bound["capacities"],
    "->", "refuted" if bound["refuted"] else "not refuted",
)
assert bound["refuted"] and report.outcome == "refuted"
print("both oracles agree")
