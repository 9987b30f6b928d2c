"""Inversion statistics on alternating sign matrices.

An inversion of A is a quadruple (i, j, k, l) with i < j, k < l and
a_jk * a_il != 0: a nonzero entry with another nonzero entry strictly
north-east of it.  The signed count I, its dual I*, the -1 count N, the
weak inversion number H = I - N/2 and the lattice rank beta all live here.

Half-integers are kept exact: H is exposed both as a Fraction and as the
integer 2H; the local contributions H_pq are quarter-integer Fractions.
No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Asm, IndexOutOfRange, dual, minus_count


@dataclass(frozen=True)
class Inversion:
    """One inversion quadruple with its sign and column weight."""

    i: int
    j: int
    k: int
    l: int
    sign: int   # a_jk * a_il, in {-1, 1}
    weight: int  # l - k


@dataclass(frozen=True)
class StatRecord:
    """The five statistics of one matrix, bundled.

    ``weak2`` stores 2*H so the record stays integer-valued.
    """

    inv: int
    dual_inv: int
    minus: int
    weak2: int
    beta: int

    @property
    def weak(self) -> Fraction:
        return Fraction(self.weak2, 2)

    def to_json_dict(self) -> dict:
        return {
            "I": self.inv,
            "Istar": self.dual_inv,
            "N": self.minus,
            "H2": self.weak2,
            "beta": self.beta,
        }


def inversion_list(a: Asm) -> list[Inversion]:
    """All inversions with nonzero product, in lexicographic (i, j, k, l) order.

    Unlike :func:`inversion_number`, zero products are filtered out here.
    """
    nz = a.nonzeros()
    out = []
    for (j, k, v1) in nz:
        for (i, l, v2) in nz:
            if i < j and k < l:
                out.append(Inversion(i, j, k, l, v1 * v2, l - k))
    out.sort(key=lambda t: (t.i, t.j, t.k, t.l))
    return out


def inversion_number(a: Asm) -> int:
    """I(A): the signed sum over all i<j, k<l of a_jk * a_il.

    Including the zero products changes nothing, so the sum effectively
    runs over all index pairs; only nonzero entries are visited.
    For a permutation matrix this is the classical inversion count.
    """
    nz = a.nonzeros()
    return sum(
        v1 * v2
        for (j, k, v1) in nz
        for (i, l, v2) in nz
        if i < j and k < l
    )


def dual_inversion_number(a: Asm) -> int:
    """I*(A): the signed sum of a_ik * a_jl over i<j, k<l.

    Equals the inversion number of the row-reversed matrix.
    """
    nz = a.nonzeros()
    return sum(
        v1 * v2
        for (i, k, v1) in nz
        for (j, l, v2) in nz
        if i < j and k < l
    )


def beta_weighted(a: Asm) -> int:
    """Rank via column-weighted inversions: sum of (l - k) * a_jk * a_il."""
    nz = a.nonzeros()
    return sum(
        (l - k) * v1 * v2
        for (j, k, v1) in nz
        for (i, l, v2) in nz
        if i < j and k < l
    )


def beta_row_weighted(a: Asm) -> int:
    """Rank via row-weighted inversions: sum of (j - i) * a_jk * a_il."""
    nz = a.nonzeros()
    return sum(
        (j - i) * v1 * v2
        for (j, k, v1) in nz
        for (i, l, v2) in nz
        if i < j and k < l
    )


def beta_corner(a: Asm) -> int:
    """Rank in O(n^2) terms: sum of (delta_ij - a_ij)(n-i+1)(n-j+1).

    This is the default entry point for beta; the weighted sums above are
    kept for cross-validation.
    """
    n = a.n
    total = 0
    for i in range(1, n + 1):
        row = a.entries[i - 1]
        for j in range(1, n + 1):
            d = (1 if i == j else 0) - row[j - 1]
            if d:
                total += d * (n - i + 1) * (n - j + 1)
    return total


beta = beta_corner


def weak_inversion_twice(a: Asm) -> int:
    """2*H(A) = 2*I(A) - N(A), always an integer."""
    return 2 * inversion_number(a) - minus_count(a)


def weak_inversion(a: Asm) -> Fraction:
    """H(A) = I(A) - N(A)/2, exact."""
    return Fraction(weak_inversion_twice(a), 2)


def local_weak_contribution(a: Asm, p: int, q: int) -> Fraction:
    """The local share H_pq of the weak inversion number at position (p, q).

    Zero wherever a_pq = 0; summed over all positions it gives H(A).
    """
    if not (1 <= p <= a.n and 1 <= q <= a.n):
        raise IndexOutOfRange(f"position ({p}, {q}) outside 1..{a.n}")
    apq = a.entries[p - 1][q - 1]
    if apq == 0:
        return Fraction(0)
    sw_ne = 0  # entries strictly south-west plus strictly north-east
    for (r, s, v) in a.nonzeros():
        if (r > p and s < q) or (r < p and s > q):
            sw_ne += v
    same_col_above = sum(a.entries[r][q - 1] for r in range(p - 1))
    same_row_right = sum(a.entries[p - 1][s] for s in range(q, a.n))
    return apq * (Fraction(sw_ne, 2) + Fraction(same_col_above + same_row_right, 4))


def stat_record(a: Asm) -> StatRecord:
    return StatRecord(
        inv=inversion_number(a),
        dual_inv=dual_inversion_number(a),
        minus=minus_count(a),
        weak2=weak_inversion_twice(a),
        beta=beta_corner(a),
    )


def classical_beta(images: tuple[int, ...]) -> int:
    """The 2011 permutation formula: sum of w(i) - w(j) over inversions."""
    n = len(images)
    return sum(
        images[i] - images[j]
        for i in range(n)
        for j in range(i + 1, n)
        if images[i] > images[j]
    )


def classical_inversions(images: tuple[int, ...]) -> int:
    n = len(images)
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if images[i] > images[j]
    )
