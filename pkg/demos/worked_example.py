"""Two maps on four points, from collapsing pairs to a synchronizing word."""

from kernelgraphs import (
    Transformation,
    close,
    closure_kernel_graph,
    kernel_graph,
    synchronizing_word,
    transformation_of_word,
)

t1 = Transformation.parse("[3,3,4,3]")
t2 = Transformation.parse("[3,3,2,4]")
print(f"t1 = {t1}")
print(f"t2 = {t2}")

# Kernel graph of the bare set: an edge means no member collapses the pair.
members = kernel_graph([t1, t2])
print("\nkernel graph of {t1, t2}:")
for u, v in members.graph.edges():
    print(f"  {u + 1} ~ {v + 1}")

# The closure tells a different story: products collapse every pair.
closed = closure_kernel_graph([t1, t2])
print(f"\nkernel graph of <t1, t2> has {closed.graph.edge_count} edges")

closure = close([t1, t2])
print(f"closure size: {len(closure)}")
print(f"minimal rank in the closure: {closure.min_rank}")

constant = Transformation.parse("[4,4,4,4]")
print(f"{constant} in closure: {constant in closure.element_set}")

word = synchronizing_word([t1, t2])
assert word is not None
names = ["t1", "t2"]
product = transformation_of_word([t1, t2], word)
print(f"\nsynchronizing word: {' '.join(names[i] for i in word)}")
print(f"its image map: {product}  (rank {product.rank})")
