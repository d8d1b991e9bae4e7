"""Minimal generating sets: exact search against the closed-form constructions."""

from kernelgraphs import (
    complement,
    complete_multipartite,
    hamming,
    hamming_complement_generators,
    lattice_generators,
    matching_generators,
    minimal_generating_set,
    square_lattice,
    union_complete,
)

# A complete multipartite graph needs a single generator.
for parts in ([3, 2], [4, 3, 2], [2, 2, 2, 2]):
    gs = minimal_generating_set(complete_multipartite(parts))
    print(f"K{parts}: size {gs.size}, members {[str(t) for t in gs.transformations]}")

# Perfect matchings n.K2 need ceil(log2 n) + 1 members.
print("\nmatchings n.K2:")
for copies in range(2, 9):
    gs = matching_generators(copies)
    flag = "minimal" if gs.minimal else f"lower bound {gs.lower_bound}"
    print(f"  {copies}.K2: construction gives {gs.size} ({flag})")
    if copies <= 5:
        exact = minimal_generating_set(union_complete([2] * copies))
        assert exact.size == gs.size
        print(f"         exact search agrees: {exact.size}")

# Square lattice graphs.
print("\nlattice L(n):")
for n in (3, 4, 5):
    gs = lattice_generators(n)
    print(f"  L({n}): size {gs.size}, minimal={gs.minimal}")
exact = minimal_generating_set(square_lattice(3))
print(f"  exact search on L(3): {exact.size}")

# Complements of Hamming graphs H(2, n) take two generators.
print("\ncomplement of H(2, n):")
for n in (3, 4, 5):
    gs = hamming_complement_generators(2, n)
    print(f"  n={n}: size {gs.size}, minimal={gs.minimal}")
exact = minimal_generating_set(complement(hamming(2, 3)))
print(f"  exact search at n=3: {exact.size}")
