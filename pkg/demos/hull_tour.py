"""Hulls of the standard families, ending with the product-graph surprise.

The last section recomputes the hull of C5 box C5 from scratch, which takes
several seconds on one core.
"""

import time

from kernelgraphs import (
    are_isomorphic,
    cartesian_product,
    complement,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    hamming,
    hull,
    is_hull,
    iterated_hull,
    path,
    to_graph6,
    union_complete,
)

print("hull(C5) =", to_graph6(hull(cycle(5))), "= K5:", hull(cycle(5)) == complete(5))
print("hull(C6) iso K(3,3):", are_isomorphic(hull(cycle(6)), complete_multipartite([3, 3])))
print("hull(P5) iso K(3,2):", are_isomorphic(hull(path(5)), complete_multipartite([3, 2])))

three_c5 = disjoint_union(cycle(5), 3)
print("hull(3.C5) = 3.K5:", hull(three_c5) == disjoint_union(complete(5), 3))

# One hull application always suffices.
g = path(6)
h, steps = iterated_hull(g)
print(f"\nP6 stabilizes after {steps} hull step(s)")

# Complete multipartite graphs and unions of cliques are their own hulls.
for parts in ([4, 2, 1], [3, 3, 2]):
    print(f"K{parts} is a hull: {is_hull(complete_multipartite(parts))}")
    print(f"union of cliques {parts} is a hull: {is_hull(union_complete(parts))}")

print("\nC5 box C5:")
product = cartesian_product(cycle(5), cycle(5))
start = time.perf_counter()
h = hull(product)
print(f"  hull computed in {time.perf_counter() - start:.1f}s")
print(f"  equal to the product itself: {h == product}")

rook_complement = complement(hamming(2, 5))
print(f"  equal to the rook complement on product labels: {h == rook_complement}")
print(f"  isomorphic to the rook complement: {are_isomorphic(h, rook_complement)}")

# The isomorphism is the diagonal relabeling (i, j) -> (i + j, i - j) mod 5.
tau = [5 * ((v // 5 + v % 5) % 5) + ((v // 5 - v % 5) % 5) for v in range(25)]
print(f"  diagonal relabeling carries the hull onto it: {h.relabel(tau) == rook_complement}")
