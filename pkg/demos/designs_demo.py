"""Latin squares, orthogonal arrays, and the graphs they define."""

import itertools

from kernelgraphs import (
    are_orthogonal,
    cyclic_square,
    is_hull,
    mols_complete,
    oa_extendible,
    oa_from_mols,
    oa_graph,
)

for q in (3, 4, 5, 7):
    squares = mols_complete(q)
    ok = all(are_orthogonal(a, b) for a, b in itertools.combinations(squares, 2))
    print(f"q={q}: {len(squares)} mutually orthogonal squares, pairwise orthogonal: {ok}")

print("\nthe cyclic square of order 6:")
square = cyclic_square(6)
for row in square.rows:
    print("  " + " ".join(str(x) for x in row))

oa = oa_from_mols([square])
extra = oa_extendible(oa)
print(f"rows in its orthogonal array: {len(oa.rows)}")
print(f"extendible by another row: {extra is not None}")

# OA graphs with few rows sit strictly inside the clique bound and are hulls.
print()
for r, q in ((2, 3), (2, 4), (3, 4), (3, 5)):
    squares = mols_complete(q)[: r - 2]
    g = oa_graph(oa_from_mols(squares, n=q))
    print(f"OA({r},{q}) graph on {g.n} vertices: hull={is_hull(g)}")
