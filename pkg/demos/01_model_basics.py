"""Walkthrough: instances, occupancy, feasibility, and compaction.

A two-bar chart is a pair of unit-width bars with heights in (0, 1] that
must sit in adjacent cells of a unit-height strip. All heights live on an
exact 1/D grid, so nothing below ever touches floating point.
"""

from barpack import (
    Packing,
    compact,
    instance_to_json,
    is_feasible,
    length,
    occupancy,
    validate_instance,
)

# Three charts over a denominator of 100: heights are snapped to the grid.
inst = validate_instance([(0.70, 0.30), (0.35, 0.65), (0.20, 0.20)], 100)
print(f"instance with n={inst.n}, denominator={inst.denominator}")
for c in inst.charts:
    print(f"  chart {c.id}: a={c.a}/100 b={c.b}/100  "
          f"big={c.is_big(inst.denominator)} non-increasing={c.is_nonincreasing()}")

# A packing assigns each chart the cell of its first bar.
p = Packing((1, 2, 5))
print("\nstarts:", p.starts)
print("occupancy (numerators per cell):", occupancy(inst, p))
print("feasible:", is_feasible(inst, p))
print("length (occupied cells):", length(inst, p))

# Chart 2 sits alone at cell 5, leaving cell 4 empty. Compaction slides
# everything left over the gap without breaking feasibility.
squeezed = compact(inst, p)
print("\nafter compaction:", squeezed.starts)
print("occupancy:", occupancy(inst, squeezed))
print("length unchanged:", length(inst, squeezed))

# Cell loads are compared exactly: two bars summing to exactly 1.0 fit.
snug = validate_instance([(0.4, 0.6), (0.6, 0.4)], 10)
print("\nexact boundary: both charts stacked in the same two cells ->",
      "feasible" if is_feasible(snug, Packing((1, 1))) else "infeasible")

print("\ncanonical JSON:", instance_to_json(inst))
