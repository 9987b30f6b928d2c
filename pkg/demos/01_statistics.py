"""Statistics of a single alternating sign matrix.

Builds one 4x4 matrix with a -1 entry and walks through its inversion
number I, dual inversion number I*, number of -1 entries N, the
half-integer weak inversion number H, and the rank statistic beta,
checking the identities that tie them together.
"""

from fractions import Fraction

from asmlat import (
    beta,
    beta_poset_oracle,
    beta_row_weighted,
    beta_weighted,
    dual,
    dual_inversion_number,
    inversion_list,
    inversion_number,
    minus_count,
    stat_record,
    validate,
    weak_inversion,
)

A = validate([
    [0, 0, 1, 0],
    [0, 1, -1, 1],
    [1, -1, 1, 0],
    [0, 1, 0, 0],
])

print("matrix A:")
for row in A.entries:
    print("  ", " ".join(f"{v:2d}" for v in row))

print()
print("inversions (pairs of nonzero entries in NE/SW position):")
for inv in inversion_list(A):
    print("  ", inv)

I = inversion_number(A)
Istar = dual_inversion_number(A)
N = minus_count(A)
H = weak_inversion(A)
print()
print(f"I(A)  = {I}")
print(f"I*(A) = {Istar}")
print(f"N(A)  = {N}")
print(f"H(A)  = {H}   (= I - N/2, may be a half-integer)")
assert H == Fraction(I) - Fraction(N, 2)

# I and I* trade places under the rotation-by-180 dual.
assert inversion_number(dual(A)) == Istar
# ... and I + I* - N is constant on all of A_n.
n = A.n
assert I + Istar - N == n * (n - 1) // 2

# beta has three equivalent O(n^2) formulas plus a definitional oracle
# that counts bigrassmannian permutations weakly below A in the lattice.
b = beta(A)
print(f"beta(A) = {b}")
assert b == beta_weighted(A) == beta_row_weighted(A) == beta_poset_oracle(A)

print()
print("full record:", stat_record(A))
