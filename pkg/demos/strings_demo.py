"""Build the string model for a few points in a random simple polygon.

Checks that string crossings match visibility overlaps and writes
strings.svg.

    python3 demos/strings_demo.py [seed]
"""
import random
import sys

from wskit.generate import random_point_in, random_simple_polygon
from wskit.io import render_svg
from wskit.region_graph import regions_intersect_general
from wskit.strings import boundary_contacts, build_string_model, strings_intersect

rng = random.Random(int(sys.argv[1]) if len(sys.argv) > 1 else 3)
poly = random_simple_polygon(10, rng)
pts = [random_point_in(poly, rng, denominator=3) for _ in range(5)]
m = build_string_model(poly, pts)
print(f"epsilon = {m.epsilon}, delta = {m.delta}")
for i in range(len(pts)):
    print(f"string {i}: {len(m.strings[i])} vertices, boundary contacts {boundary_contacts(m, i)}")
for i in range(len(pts)):
    for j in range(i + 1, len(pts)):
        s, v = strings_intersect(m, i, j), regions_intersect_general(m.regions[i], m.regions[j])
        print(f"  {i}-{j}: strings cross {s}, regions meet {v}")
with open("strings.svg", "w") as f:
    f.write(render_svg(m.inflated, strings=m.strings))
