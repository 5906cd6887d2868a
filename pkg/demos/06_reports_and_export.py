"""Walkthrough: experiment reports, ratio envelopes, and the LP export.

A sweep runs several algorithms over seeded instances and emits one CSV
row per run. With the oracle on, each row carries L/OPT together with the
two analytic bounds evaluated at x = (round-one savings)/n; their minimum
caps the ratio for big instances and never exceeds 3/2.
"""

import pathlib

from barpack import (
    export_blp,
    gen_big,
    gen_tight_family,
    lower_bound,
    pack_weighted_matching,
    ratio_bound_capacity,
    ratio_bound_dual,
    row_for_run,
    rows_to_csv,
    solve_exact,
)

rows = []
for seed in range(6):
    inst = gen_big(7, seed)
    run = pack_weighted_matching(inst)
    exact = solve_exact(inst)
    rows.append(row_for_run(f"big-7-s{seed}", inst, "mw", run,
                            exact.opt_length if exact.proven else None,
                            lower_bound(inst)))

print(rows_to_csv(rows), end="")

print("\nthe envelope at a glance:")
for x in (0.0, 0.25, 0.5, 0.75, 1.0):
    f, g = ratio_bound_dual(x), ratio_bound_capacity(x)
    print(f"  x={x:.2f}: dual-side {f:.3f}  capacity-side {g:.3f}  min {min(f, g):.3f}")
print("the two bounds cross at x=1/2 where both equal 1.5")

# The same model as a solver-ready LP file: binary x_i_j pick start cells,
# binary y_j count occupied cells.
out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
inst = gen_tight_family(1, 100)
path = out / "tight_k1.lp"
path.write_text(export_blp(inst, jmax=8))
print(f"\nwrote {path} (any MILP solver should report an optimum of 5)")
