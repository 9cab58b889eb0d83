"""
Coloring ideals, extension tests, and the radius-tracking reduction
===================================================================

The middle layer of the package: families of finite partial colorings
that are closed under restriction and under shifting, three stock
families, the brute-force oracle that separates "is a member" from "can
be extended", and the product-coded reduction that turns a family with
a join rule into one that is checkable by bounded windows alone.

Run it top to bottom; everything is exact and seeded.
"""

import random

from shiftcolor import (
    INF,
    DistanceConstrained,
    FreeAbelian,
    NotUniversal,
    PartialColoring,
    ProperColoring,
    ReducedIdeal,
    SupRadiiJoin,
    check_join,
    check_local,
    decompose,
    derived_join_from_local,
    extension_oracle,
    grow_random_member,
    ideal_axioms_check,
    is_extendable_at,
    project,
    rare_color_check,
    reduced_contains,
    shift,
)

line = FreeAbelian(1)

# ---------------------------------------------------------------------------
# 1. Three stock families of partial colorings
# ---------------------------------------------------------------------------
# ProperColoring(k): adjacent points differ, colors drawn from {0..k-1}.
# DistanceConstrained(d, h): color c keeps distance > 2*d_c to itself,
#   and is only usable when the pattern stays h_c-reachable (h_c = INF
#   makes the color a one-shot global resource).
# NotUniversal(d, D): same-color points sit more than 2*d_c apart, and
#   any same-color pair in the annulus (2*d_c, D_c] must be dominated by
#   a strictly larger color elsewhere.

pc3 = ProperColoring(line, 3)
dc = DistanceConstrained(line, d=(1, 3), h=(2, INF))
nu = NotUniversal(line, d=(1,), D=(3,))

alternating = PartialColoring(line, {0: 0, 1: 1, 2: 0})
clash = PartialColoring(line, {0: 0, 1: 0})
print("alternating in ProperColoring(3):", pc3.contains(alternating))
print("adjacent repeat in ProperColoring(3):", pc3.contains(clash))

# Membership is shift-invariant and restriction-closed — the two axioms
# every family here satisfies. Spot-check by hand, then by the sampler.
shifted = shift(alternating, 5)
print("shifted copy lives on", sorted(shifted.domain()), "and is still a member:",
      pc3.contains(shifted))
assert pc3.contains(alternating.restrict([0, 2]))

for spec in (pc3, dc, nu):
    report = ideal_axioms_check(spec, sample_budget=40, seed=1)
    print(f"axiom sampler on {spec.to_json()['kind']}: ok={report.ok}")

# ---------------------------------------------------------------------------
# 2. Member today, dead end tomorrow
# ---------------------------------------------------------------------------
# {0: 0, 3: 0} satisfies every pairwise constraint of ProperColoring(2),
# so it IS a member. But on the integer line no 2-coloring can make the
# gap work: the parity is wrong. The extension oracle exhausts every
# total coloring of the surrounding radius-3 ball and refuses.

stuck = PartialColoring(line, {0: 0, 3: 0})
pc2 = ProperColoring(line, 2)
print("\nmember of ProperColoring(2):", pc2.contains(stuck))
report = extension_oracle(pc2, stuck, target_radius=3)
print("extension oracle over the radius-3 neighborhood:", report.outcome,
      f"({report.nodes} nodes searched, {report.valid_count} completions)")

# Flip one endpoint and the same search hands back a checked witness.
fine = PartialColoring(line, {0: 0, 3: 1})
report = extension_oracle(pc2, fine, target_radius=3)
witness = report.witness
print("after the flip:", report.outcome,
      "- witness colors", [witness[x] for x in sorted(witness.domain())])

# Point-level probing: the least color that keeps a pattern alive at a
# given spot, or None when the palette is spent there.
print("least color at 4 next to", dict(alternating.entries), "is",
      is_extendable_at(pc3, alternating, 4))

# Random members grown by that probe are extendable by construction:
rng = random.Random(7)
member = grow_random_member(pc3, rng, size=6, radius=5)
print("random grown member:", {x: member[x] for x in sorted(member.domain())})
assert extension_oracle(pc3, member, target_radius=5).outcome == "witness"

# ---------------------------------------------------------------------------
# 3. One-shot colors and the rare-color audit
# ---------------------------------------------------------------------------
# In DistanceConstrained((1, 3), (2, INF)) color 1 has h = INF: it may be
# used at most once per pattern. The audit counts occurrences and flags
# any one-shot color that appears twice.

double_use = PartialColoring(line, {0: 1, 100: 1})
audit = rare_color_check(dc, double_use)
print("\nrare-color audit on a double use:", audit.violations)
single_use = PartialColoring(line, {0: 1, 100: 0, 103: 0})
print("single use is clean:", rare_color_check(dc, single_use).violations == [])

# ---------------------------------------------------------------------------
# 4. Locality, join rules, and the reduction
# ---------------------------------------------------------------------------
# ProperColoring(k) is local: membership of a pattern is decided by its
# radius-1 windows. A local family automatically supports a join rule —
# separated members may be merged — with the radius supplied by the
# locality radii themselves.

local_report = check_local(pc3, r=pc3.locality_radius, enumeration_budget=400, seed=3)
print("\nlocality check on ProperColoring(3): ok =", local_report.ok)

joiner = derived_join_from_local(pc3.locality_radius)
join_report = check_join(pc3, joiner, tuple_size_max=3, samples=120, seed=3)
print("join check with the derived rule: ok =", join_report.ok)

# The reduction re-codes colors as pairs (h, c): c is a color of the base
# family, h a height that certifies how far the join rule has looked.
# The reduced family is checkable window-by-window even when the base
# join rule is not, and members decompose into separated base members.

R = SupRadiiJoin(lambda c: 1, description=[1, 1, 1])
reduced = ReducedIdeal(pc3, R)
coded = PartialColoring(line, {0: (1, 0), 1: (1, 1), 9: (2, 2)})
print("\nproduct-coded pattern is a reduced member:", reduced_contains(reduced, coded))
print("its projection (second coordinates) in the base:",
      pc3.contains(project(coded)))

pieces = decompose(reduced, coded)
print("decomposition peels", len(pieces.pieces), "pieces at height bound",
      pieces.h_bound)
for piece in pieces.pieces:
    dom = sorted(piece.domain())
    print("  piece on", dom, "->", [piece[x] for x in dom])

# The reduced family passes the same two axioms as the stock ones.
print("reduced family axiom sampler: ok =",
      ideal_axioms_check(reduced, sample_budget=60, seed=5).ok)
