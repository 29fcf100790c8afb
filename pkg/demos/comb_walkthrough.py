"""Walk through the exact solver on comb polygons.

Prints the candidate growth per round and writes one SVG per comb into
the current directory.

    python3 demos/comb_walkthrough.py
"""
from gmpy2 import mpq

from wskit.geometry import reflex_vertices
from wskit.io import render_svg
from wskit.oracle import comb_generator
from wskit.visibility import visibility_region
from wskit.witness import solve_ws_approx, solve_ws_exact

for g in (1, 2, 3):
    poly = comb_generator(g)
    print(f"comb g={g}: n={poly.n}, r={len(reflex_vertices(poly))}")
    sol = solve_ws_exact(poly, log=lambda s: print("   ", s))
    print(f"  exact: {sol.size} witnesses at", ", ".join(f"({x}, {y})" for x, y in sol.chosen))
    for eps in (1, "1/2"):
        apx, frac = solve_ws_approx(poly, mpq(eps))
        print(f"  approx eps={eps}: {apx.size} (guarantee {frac} of optimal)")
    regs = [visibility_region(poly, p) for p in sol.chosen]
    with open(f"comb{g}.svg", "w") as f:
        f.write(render_svg(poly, regions=regs, witnesses=sol.chosen))
