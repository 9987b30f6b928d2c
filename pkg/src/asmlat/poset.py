"""The lattice order on alternating sign matrices.

Comparison goes through corner sum matrices (A <= B iff the prefix-sum
table of A dominates that of B entrywise).  Covering pairs differ by a
single 2x2 block exchange adding [[-1, 1], [1, -1]]; the sixteen possible
block contents classify every cover and determine how I, N and H move
along the edge.  Join and meet come from entrywise min/max of corner sums,
which the distributive-lattice structure guarantees to be valid.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .core import (
    Asm,
    AsmError,
    Permutation,
    SizeMismatch,
    corner_sum,
    dual,
    from_corner_sum,
    from_permutation,
    identity,
    iter_permutations,
    validate,
)

class NotAnExchangeBlock(AsmError):
    pass


class Ordering(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


class CoverType(NamedTuple):
    """One row of the cover classification table."""

    index: int    # 1..16
    star: int     # index of the dual type
    d_inv: int    # change in I along the cover
    d_minus: int  # change in N
    d_weak2: int  # change in 2H


# The sixteen cover types, keyed by the lower matrix's 2x2 block at the
# exchange position; the upper block is that plus [[-1, 1], [1, -1]].
# Columns: type index, dual type, delta I, delta N, delta 2H.
_TYPE_ROWS: list[tuple[tuple[int, int, int, int], CoverType]] = [
    ((1, 0, 0, 1), CoverType(1, 1, 1, 0, 2)),
    ((1, -1, 0, 1), CoverType(2, 5, 0, -1, 1)),
    ((1, 0, -1, 1), CoverType(3, 9, 0, -1, 1)),
    ((1, -1, -1, 1), CoverType(4, 13, -1, -2, 0)),
    ((1, 0, 0, 0), CoverType(5, 2, 1, 1, 1)),
    ((1, -1, 0, 0), CoverType(6, 6, 0, 0, 0)),
    ((1, 0, -1, 0), CoverType(7, 10, 0, 0, 0)),
    ((1, -1, -1, 0), CoverType(8, 14, -1, -1, -1)),
    ((0, 0, 0, 1), CoverType(9, 3, 1, 1, 1)),
    ((0, -1, 0, 1), CoverType(10, 7, 0, 0, 0)),
    ((0, 0, -1, 1), CoverType(11, 11, 0, 0, 0)),
    ((0, -1, -1, 1), CoverType(12, 15, -1, -1, -1)),
    ((0, 0, 0, 0), CoverType(13, 4, 1, 2, 0)),
    ((0, -1, 0, 0), CoverType(14, 8, 0, 1, -1)),
    ((0, 0, -1, 0), CoverType(15, 12, 0, 1, -1)),
    ((0, -1, -1, 0), CoverType(16, 16, -1, 0, -2)),
]

_TYPE_BY_LOWER_BLOCK = {block: row for block, row in _TYPE_ROWS}
COVER_TYPES = tuple(row for _, row in _TYPE_ROWS)


@dataclass(frozen=True)
class CoverEdge:
    """A covering pair lower <| upper with its exchange data.

    The two matrices agree outside the 2x2 block at (r, s), (r, s+1),
    (r+1, s), (r+1, s+1), where upper minus lower is [[-1, 1], [1, -1]].
    The deltas are the statistic changes upper-minus-lower; d_weak2 is
    twice the change of H so everything stays integral.
    """

    lower: Asm
    upper: Asm
    r: int
    s: int
    cover_type: int
    d_inv: int
    d_minus: int
    d_weak2: int

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "type": self.cover_type,
            "dI": self.d_inv,
            "dN2x": self.d_minus,
            "dH2x": self.d_weak2,
        }


def compare(a: Asm, b: Asm) -> Ordering:
    """Order two matrices by entrywise domination of corner sums.

    Short-circuits to INCOMPARABLE as soon as strict corner-sum
    differences in both directions have been seen.
    """
    if a.n != b.n:
        raise SizeMismatch(f"sizes {a.n} and {b.n} differ")
    ca, cb = corner_sum(a).sums, corner_sum(b).sums
    a_below = False  # witnessed ca > cb somewhere (meaning a < b)
    b_below = False
    for ra, rb in zip(ca, cb):
        for x, y in zip(ra, rb):
            if x > y:
                a_below = True
            elif x < y:
                b_below = True
            if a_below and b_below:
                return Ordering.INCOMPARABLE
    if a_below:
        return Ordering.LESS
    if b_below:
        return Ordering.GREATER
    return Ordering.EQUAL


def leq(a: Asm, b: Asm) -> bool:
    return compare(a, b) in (Ordering.LESS, Ordering.EQUAL)


def classify_cover_type(
    a_block: Sequence[Sequence[int]], b_block: Sequence[Sequence[int]]
) -> CoverType:
    """Look up the table row for a cover's 2x2 blocks.

    ``b_block - a_block`` must be [[-1, 1], [1, -1]] and both blocks must
    consist of matrix entries in {-1, 0, 1}.
    """
    a = tuple(int(x) for row in a_block for x in row)
    b = tuple(int(x) for row in b_block for x in row)
    if len(a) != 4 or len(b) != 4:
        raise NotAnExchangeBlock("blocks must be 2x2")
    if tuple(y - x for x, y in zip(a, b)) != (-1, 1, 1, -1):
        raise NotAnExchangeBlock("block difference is not [[-1, 1], [1, -1]]")
    row = _TYPE_BY_LOWER_BLOCK.get(a)
    if row is None:
        raise NotAnExchangeBlock(f"lower block {a} has entries outside the table")
    return row


def _add_block(a: Asm, r: int, s: int, sign: int) -> Optional[Asm]:
    """Add sign * [[-1, 1], [1, -1]] at (r, s); None if the result is not an ASM."""
    rows = [list(row) for row in a.entries]
    rows[r - 1][s - 1] -= sign
    rows[r - 1][s] += sign
    rows[r][s - 1] += sign
    rows[r][s] -= sign
    quad = (rows[r - 1][s - 1], rows[r - 1][s], rows[r][s - 1], rows[r][s])
    if any(v not in (-1, 0, 1) for v in quad):
        return None
    try:
        return validate(rows)
    except AsmError:
        return None


def _edge(lower: Asm, upper: Asm, r: int, s: int) -> CoverEdge:
    ab = [row[s - 1 : s + 1] for row in lower.entries[r - 1 : r + 1]]
    bb = [row[s - 1 : s + 1] for row in upper.entries[r - 1 : r + 1]]
    t = classify_cover_type(ab, bb)
    return CoverEdge(lower, upper, r, s, t.index, t.d_inv, t.d_minus, t.d_weak2)


def try_cover(a: Asm, b: Asm) -> Optional[CoverEdge]:
    """The cover edge a <| b, or None when b does not cover a.

    Detection is purely local: the difference must be the exchange block
    at a single position and zero elsewhere.
    """
    if a.n != b.n:
        raise SizeMismatch(f"sizes {a.n} and {b.n} differ")
    diffs = []
    for i in range(a.n):
        for j in range(a.n):
            if a.entries[i][j] != b.entries[i][j]:
                diffs.append((i + 1, j + 1))
                if len(diffs) > 4:
                    return None
    if len(diffs) != 4:
        return None
    (r, s) = diffs[0]
    if diffs != [(r, s), (r, s + 1), (r + 1, s), (r + 1, s + 1)]:
        return None
    d = tuple(
        b.entries[i - 1][j - 1] - a.entries[i - 1][j - 1] for (i, j) in diffs
    )
    if d != (-1, 1, 1, -1):
        return None
    return _edge(a, b, r, s)


def covers_up(a: Asm) -> list[CoverEdge]:
    """All edges a <| b, scanning every exchange position in order."""
    out = []
    for r in range(1, a.n):
        for s in range(1, a.n):
            b = _add_block(a, r, s, 1)
            if b is not None:
                out.append(_edge(a, b, r, s))
    return out


def covers_down(b: Asm) -> list[CoverEdge]:
    """All edges a <| b, by subtracting the exchange block."""
    out = []
    for r in range(1, b.n):
        for s in range(1, b.n):
            a = _add_block(b, r, s, -1)
            if a is not None:
                out.append(_edge(a, b, r, s))
    return out


def join(a: Asm, b: Asm) -> Asm:
    """Least upper bound: entrywise minimum of corner sums."""
    if a.n != b.n:
        raise SizeMismatch(f"sizes {a.n} and {b.n} differ")
    ca, cb = corner_sum(a).sums, corner_sum(b).sums
    return from_corner_sum(
        [[min(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(ca, cb)]
    )


def meet(a: Asm, b: Asm) -> Asm:
    """Greatest lower bound: entrywise maximum of corner sums."""
    if a.n != b.n:
        raise SizeMismatch(f"sizes {a.n} and {b.n} differ")
    ca, cb = corner_sum(a).sums, corner_sum(b).sums
    return from_corner_sum(
        [[max(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(ca, cb)]
    )


def is_bigrassmannian(w: Permutation) -> bool:
    """True iff w has exactly one descent and its inverse has exactly one."""
    return len(w.descents()) == 1 and len(w.inverse().descents()) == 1


def enumerate_bigrassmannians(n: int) -> list[Permutation]:
    """All bigrassmannian permutations of S_n, in one-line lexicographic order."""
    return [w for w in iter_permutations(n) if is_bigrassmannian(w)]


def beta_poset_oracle(b: Asm) -> int:
    """The definitional rank: bigrassmannian permutations weakly below b.

    Exponential in n (it scans S_n); used to cross-check the closed
    formulas, not as the production beta.
    """
    return sum(
        1
        for w in enumerate_bigrassmannians(b.n)
        if leq(from_permutation(w), b)
    )


def bigrassmannians_below(b: Asm) -> list[Permutation]:
    return [
        w
        for w in enumerate_bigrassmannians(b.n)
        if leq(from_permutation(w), b)
    ]


def is_join_irreducible(a: Asm) -> bool:
    """True iff a covers exactly one element."""
    return len(covers_down(a)) == 1


def rank_by_chain(a: Asm) -> int:
    """Length of a saturated chain down to the identity, by greedy descent."""
    steps = 0
    cur = a
    bottom = identity(a.n)
    while cur != bottom:
        down = covers_down(cur)
        if not down:
            raise AsmError("non-identity matrix with no lower cover")
        cur = down[0].lower
        steps += 1
    return steps
