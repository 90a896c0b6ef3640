#!/usr/bin/env python3
"""Cross sections of the q = 1 jigsaw: mosaics in a rectangle.

After a unimodular change of variables the sixteen face polytopes live
over a pyramid base with coordinates (a0, a1, u11, u12).  Fixing (a0, a1)
slices each face to a polygon in (u11, u12); the positive pieces tile the
rectangle [0, a1] x [0, 1].  The picture changes as a1 crosses 1/3 and
1/2: 7 pieces below 1/3, then 11.
"""

from fractions import Fraction as F

from dp4jigsaw import jigsaw

for a1 in (F(1, 5), F(2, 5), F(3, 5)):
    census = jigsaw.slice_census(a1, (1 + a1) / 2)
    print(f"\na1 = {a1}: {census.positive_count} positive pieces, "
          f"total area {census.total_area} (rectangle is {a1} x 1)")
    for face, piece in sorted(census.pieces.items()):
        if piece.area > 0:
            shape = {3: "triangle", 4: "quadrilateral"}[piece.vertex_count]
            print(f"  ({face[0]}),({face[1]}): area {str(piece.area):>8}  {shape}")
    print(f"  union check (tiling, containment, disjointness): "
          f"{census.union_verified}")

print("\nThe census does not depend on where a0 sits inside [a1, 1]:")
c1 = jigsaw.slice_census(F(2, 5), F(7, 10))
c2 = jigsaw.slice_census(F(2, 5), F(9, 10))
same = {f: p.area for f, p in c1.pieces.items()} == \
       {f: p.area for f, p in c2.pieces.items()}
print(f"  censuses at a0 = 7/10 and a0 = 9/10 coincide: {same}")
