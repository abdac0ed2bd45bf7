"""How thin are geodesic triangles in small graphs?

Walks through the exact computation of delta for a few familiar graphs and
prints the triangle and point that realize it.
"""
from hyperdelta import ThetaSpec, complete, cycle, delta_bounds, delta_exact, path, theta


def show(name, graph):
    res = delta_exact(graph)
    tri = res.witness_triangle
    print(f"{name}: n={graph.n}, m={graph.m}, {res}")
    print(f"  cheap interval first: {delta_bounds(graph)}")
    print(f"  corners {', '.join(map(str, tri.corners))}; farthest point {res.witness_point}")
    for side in tri.sides:
        print(f"    side {side}  (length {side.length})")
    print()


print("Trees are 0-hyperbolic: every triangle is a tripod.\n")
show("path on 6 vertices", path(6))

print("A cycle of length L has delta = L/4.  The witness is a triangle with two")
print("equal corners whose other sides are the two halves of the cycle; the middle")
print("of one half is L/4 away from the other half.\n")
for n in (3, 4, 7):
    show(f"C{n}", cycle(n))

print("Complete graphs stay at 1 however large they get.\n")
show("K5", complete(5))

print("A theta graph glues three paths between two hubs; its delta depends on")
print("the longest path plus the shorter of the middle path and three times the")
print("shortest one.\n")
for spec in (ThetaSpec(1, 3, 4), ThetaSpec(2, 3, 5), ThetaSpec(1, 5, 5)):
    g = theta(spec)
    print(f"theta{(spec.a1, spec.a2, spec.a3)}: closed form {spec.delta()}")
    show(f"theta{(spec.a1, spec.a2, spec.a3)}", g)
