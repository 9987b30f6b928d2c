"""The lattice order: comparisons, covers, join and meet.

Compares matrices through their corner sum tables, finds the covers of
the smallest non-permutation matrix, classifies a cover edge by its
2x2 exchange block, and shows that join/meet computed from corner sums
land back inside the set of alternating sign matrices.
"""

from asmlat import (
    Ordering,
    Permutation,
    compare,
    corner_sum,
    covers_down,
    covers_up,
    from_permutation,
    identity,
    join,
    meet,
    to_permutation,
    try_cover,
    validate,
)


def perm(*images):
    return from_permutation(Permutation.from_images(list(images)))


# The unique 3x3 matrix with a -1: the join of two incomparable permutations.
a, b = perm(1, 3, 2), perm(2, 1, 3)
middle = join(a, b)
print("join of 132 and 213:")
for row in middle.entries:
    print("  ", " ".join(f"{v:2d}" for v in row))
print("corner sums:", corner_sum(middle).sums)

assert compare(a, b) is Ordering.INCOMPARABLE
assert compare(a, middle) is Ordering.LESS
assert meet(a, b) == identity(3)

print()
print("covers of the middle element:")
for e in covers_up(middle):
    print(f"  up to {to_permutation(e.upper)}  (type {e.cover_type}, dI={e.d_inv})")
for e in covers_down(middle):
    print(f"  down to {to_permutation(e.lower)}  (type {e.cover_type}, dI={e.d_inv})")

# A cover is a purely local move: the upper matrix is the lower one plus
# [[-1, 1], [1, -1]] at a single 2x2 block.
A = validate([
    [0, 0, 1, 0],
    [0, 1, -1, 1],
    [1, -1, 1, 0],
    [0, 1, 0, 0],
])
B = perm(3, 4, 1, 2)
edge = try_cover(A, B)
print()
print(f"A is covered by 3412 at block ({edge.r}, {edge.s}), type {edge.cover_type}")
print(f"  deltas along the edge: dI={edge.d_inv}, dN={edge.d_minus}, 2*dH={edge.d_weak2}")
