"""Walkthrough: the family where the weighted packer's 3/2 bound is tight.

4k big charts: 2k non-increasing "greens" (0.70, 0.30) and 2k
non-decreasing "reds" (0.35, 0.65). Chaining green..green-red..red packs
them into 4k+1 cells. But pairing every green with a red is also a
maximum-weight first matching, and the merged (0.70, 0.65, 0.65) pieces
lock each other out, stranding the run at 6k cells. The ratio
6k/(4k+1) approaches 3/2 from below as k grows.
"""

from barpack import (
    gen_tight_family,
    pack_forced_first_matching,
    render_svg,
    solve_exact,
    tight_family_forced_pairs,
)

for k in (1, 2):
    inst = gen_tight_family(k, 100)
    exact = solve_exact(inst)
    forced = pack_forced_first_matching(inst, tight_family_forced_pairs(inst))
    print(f"k={k}: n={inst.n}  OPT={exact.opt_length}  adversarial L={forced.length}"
          f"  ratio={forced.length / exact.opt_length:.3f}")
    if k == 1:
        print("  optimal starts:     ", exact.packing.starts)
        print("  adversarial starts: ", forced.packing.starts)
        print("  adversarial trace:  ", [(r.cardinality, r.savings)
                                         for r in forced.trace.rounds])

print("\nratio trend (analytic 6k/(4k+1)):")
for k in (1, 2, 5, 10, 100, 1000):
    print(f"  k={k:>5}: {6 * k / (4 * k + 1):.4f}")
print("limit: 1.5, matching the worst case the guarantee allows")

# The k=1 optimum drawn as SVG (see demos/out/).
import pathlib

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
inst = gen_tight_family(1, 100)
(out / "tight_k1_optimal.svg").write_text(
    render_svg(inst, solve_exact(inst).packing))
print(f"\nwrote {out / 'tight_k1_optimal.svg'}")
