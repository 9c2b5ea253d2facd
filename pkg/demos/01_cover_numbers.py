#!/usr/bin/env python3
"""Cover pebbling numbers of the classic families.

The cover pebbling number of a connected graph is the smallest t such that
*every* placement of t pebbles can be rearranged (two pebbles off a vertex,
one onto a neighbor) to cover all vertices at once.  It always equals the
largest "stacking weight" max_v sum_u 2^dist(u,v): the adversary's best play
is one big pile on the weight-maximizing vertex.
"""

import coverpebbling as cp


def show(name, graph):
    result = cp.cover_pebbling_number(graph)
    print(f"{name:>12}: n={graph.vertex_count:3d}  m={graph.edge_count:4d}  "
          f"lambda={result.cover_number}  (pile on vertex {result.argmax_vertex})")
    return result


print("Complete graphs: lambda(K_n) = 2n - 1")
for n in (3, 5, 8, 12):
    show(f"K_{n}", cp.complete_graph(n))

print("\nPaths double per vertex: lambda(P_n) = 2^n - 1")
for n in (3, 6, 10):
    show(f"P_{n}", cp.path_graph(n))

print("\nBinary cubes: lambda(Q^d) = 3^d")
for d in (2, 4, 6):
    show(f"Q^{d}", cp.cube_graph(d))

print("\nComplete multipartite: lambda = 4 r_1 + 2(r_2 + ... + r_m) - 3")
for parts in [(3, 2, 2), (4, 4), (5, 2, 1, 1)]:
    show(f"K_{parts}", cp.complete_multipartite(parts))

print("\nPer-vertex stacking weights of P_5 (endpoints are worst):")
p5 = cp.path_graph(5)
weights = cp.cover_pebbling_number(p5).per_vertex_weights
for v, w in enumerate(weights):
    print(f"  vertex {v}: sum of 2^dist = {w}")

print("\nA random tree and a random connected-ish G(n, p):")
show("tree(12)", cp.random_tree(12, seed=7))
g = cp.gnp_random_graph(10, 0.5, seed=7)
if g.is_connected():
    show("G(10,.5)", g)
else:
    print("   G(10,.5) came out disconnected; cover number is undefined there")
