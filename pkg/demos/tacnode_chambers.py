"""Wall-and-chamber picture for v = (2, 1, 2, 4) on a tacnodal curve.

The arrangement inside the triangle has a fifth wall 2 delta2 = 1 besides the
four walls one might expect, so there are six chambers.
"""
from curvestab import validate_curve_config
from curvestab.moduli_geometry import wall_crossing_report
from curvestab.numerical_k import NumClass
from curvestab.render import ascii_triangle

tac = validate_curve_config("tacnode")
v = NumClass.parse("2,1,2,4", tac)
rep = wall_crossing_report(v, tac)

print(f"dim M(v) = {rep.dim}")
for label, row in zip(rep.wall_labels, rep.rows):
    wl = row.wall
    print(f"{label}: {wl.main.u} + {wl.main.w}  on  {wl.hyperplane.equation()}")
    print(f"    Ext^1(u, w) = {row.ext_uw}, Ext^1(w, u) = {row.ext_wu}, "
          f"phi(u) < phi(w) in {', '.join(row.less_in)}")

for a, b, via in rep.adjacency:
    print(f"{a} and {b} meet along {', '.join(via)}")

print(ascii_triangle(list(rep.chambers)))
