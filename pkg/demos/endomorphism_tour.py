"""Counting endomorphisms and naming automorphism groups."""

import time

from kernelgraphs import (
    automorphism_group,
    complete,
    count_endomorphisms,
    cycle,
    disjoint_union,
    group_name,
    path,
    square_lattice,
)

for label, g in [
    ("C5", cycle(5)),
    ("P4", path(4)),
    ("K4", complete(4)),
    ("L(3)", square_lattice(3)),
]:
    group = automorphism_group(g)
    print(f"{label}: End count {count_endomorphisms(g)}, Aut {group_name(group)} of order {group.order()}")

# Counts multiply over components of the source, so three disjoint copies
# stay cheap even though the raw numbers get large.
print()
for label, g, expect in [
    ("3.C5", disjoint_union(cycle(5), 3), 30**3),
    ("3.K5", disjoint_union(complete(5), 3), 360**3),
]:
    start = time.perf_counter()
    count = count_endomorphisms(g)
    elapsed = time.perf_counter() - start
    print(f"End({label}) = {count:,} in {elapsed:.3f}s")
    assert count == expect
