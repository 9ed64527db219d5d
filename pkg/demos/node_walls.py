"""Walk along the nodal path t in (0, 1) for the class (6, 1, 6).

Prints every wall, whether it is simple, and the flip data at the simple ones.
"""
from curvestab import validate_curve_config
from curvestab.moduli_geometry import flip_data, moduli_dim
from curvestab.numerical_k import NumClass
from curvestab.render import decomposition_text
from curvestab.walls import chambers, walls_for

node = validate_curve_config("node")
v = NumClass.parse("6,1,6", node)
print(f"v = {v}, dim M(v) = {moduli_dim(v, node)}")

walls = walls_for(v, node)
for wall in walls:
    line = f"t = {wall.locus}: {decomposition_text(wall.main)}"
    if wall.simple:
        fd = flip_data(wall, node)
        line += f"   b = {fd.b}, c = {fd.c}, {fd.display()}"
    print(line)

# Chambers are the open intervals between consecutive wall loci.
for ch in chambers(v, node, walls=walls):
    lo, hi = ch.vertices[0][0], ch.vertices[1][0]
    print(f"{ch.label}: ({lo}, {hi})")

# Genus can be fixed numerically.
print("at g = 2:", moduli_dim(v, node, g=2))
