"""Core objects: alternating sign matrices, permutations, corner sum matrices.

All public coordinates are 1-based (i = row, j = column).  Internally the
entries live in tuples of tuples indexed from 0; that never leaks through
the API.  Every object is immutable and hashable, so values can be shared
freely across threads and used as dict keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


class AsmError(ValueError):
    """Base class for all domain errors raised by this package."""


class NotSquare(AsmError):
    pass


class EntryOutOfRange(AsmError):
    pass


class BadPartialSum(AsmError):
    pass


class BadTotalSum(AsmError):
    pass


class InvalidCornerSums(AsmError):
    pass


class NotAPermutation(AsmError):
    pass


class SizeMismatch(AsmError):
    pass


class IndexOutOfRange(AsmError):
    pass


def _as_rows(raw: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in raw)


@dataclass(frozen=True)
class Asm:
    """An n x n alternating sign matrix.

    Entries are in {-1, 0, 1}; every row- and column-prefix sum is 0 or 1
    and every full row/column sum is 1.  Construct via :func:`validate`
    (checked) or the classmethods below; the raw constructor trusts its
    input.
    """

    n: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexOutOfRange(f"position ({i}, {j}) outside 1..{self.n}")
        return self.entries[i - 1][j - 1]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.entries

    def nonzeros(self) -> list[tuple[int, int, int]]:
        """All (i, j, value) with a nonzero entry, row-major, 1-based."""
        return [
            (i + 1, j + 1, v)
            for i, row in enumerate(self.entries)
            for j, v in enumerate(row)
            if v
        ]

    def is_permutation(self) -> bool:
        return minus_count(self) == 0

    def to_json_dict(self) -> dict:
        return {"n": self.n, "entries": [list(row) for row in self.entries]}

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation."""

    n: int
    images: tuple[int, ...]

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        imgs = tuple(int(x) for x in images)
        n = len(imgs)
        if n == 0 or sorted(imgs) != list(range(1, n + 1)):
            raise NotAPermutation(f"{imgs} is not a permutation of 1..{n}")
        return cls(n, imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The reversal i -> n - i + 1 (the maximum of Bruhat order)."""
        return cls(n, tuple(range(n, 0, -1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, w in enumerate(self.images, start=1):
            inv[w - 1] = i
        return Permutation(self.n, tuple(inv))

    def descents(self) -> list[int]:
        """Positions i with w(i) > w(i+1)."""
        return [
            i
            for i in range(1, self.n)
            if self.images[i - 1] > self.images[i]
        ]

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(x) for x in self.images)
        return ",".join(str(x) for x in self.images)


@dataclass(frozen=True)
class CornerSumMatrix:
    """Rectangular prefix sums of an ASM; determines it and orders them.

    sums[i-1][j-1] is the sum of all entries weakly north-west of (i, j).
    Rows and columns increase weakly in steps of 0 or 1, the last column
    reads 1..n and the last row reads 1..n.
    """

    n: int
    sums: tuple[tuple[int, ...], ...]

    def at(self, i: int, j: int) -> int:
        """Prefix sum at 1-based (i, j); positions with i=0 or j=0 give 0."""
        if i == 0 or j == 0:
            return 0
        return self.sums[i - 1][j - 1]


def validate(raw: Sequence[Sequence[int]]) -> Asm:
    """Check the alternating-sign conditions and build an :class:`Asm`.

    The first violated constraint in a row-major scan is reported, with
    1-based coordinates in the message, so errors are deterministic.
    """
    rows = _as_rows(raw)
    n = len(rows)
    if n == 0:
        raise NotSquare("empty matrix")
    for i, row in enumerate(rows, start=1):
        if len(row) != n:
            raise NotSquare(f"row {i} has {len(row)} entries, expected {n}")

    col_sums = [0] * n
    for i, row in enumerate(rows, start=1):
        # row constraints first, then this row's column prefixes
        row_sum = 0
        for j, v in enumerate(row, start=1):
            if v not in (-1, 0, 1):
                raise EntryOutOfRange(f"entry {v} at ({i}, {j}) not in {{-1, 0, 1}}")
            row_sum += v
            if row_sum not in (0, 1):
                raise BadPartialSum(f"row prefix sum {row_sum} at ({i}, {j})")
        if row_sum != 1:
            raise BadTotalSum(f"row {i} sums to {row_sum}, expected 1")
        for j, v in enumerate(row, start=1):
            col_sums[j - 1] += v
            if col_sums[j - 1] not in (0, 1):
                raise BadPartialSum(f"column prefix sum {col_sums[j-1]} at ({i}, {j})")
    for j, s in enumerate(col_sums, start=1):
        if s != 1:
            raise BadTotalSum(f"column {j} sums to {s}, expected 1")
    return Asm(n, rows)


def identity(n: int) -> Asm:
    """The unit matrix, the minimum of the lattice."""
    if n < 1:
        raise NotSquare(f"size {n} must be positive")
    return Asm(n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def from_permutation(w: Permutation) -> Asm:
    """The 0/1 matrix with a 1 at (i, w(i)) for each row i."""
    return Asm(
        w.n,
        tuple(
            tuple(1 if (j + 1) == w.images[i] else 0 for j in range(w.n))
            for i in range(w.n)
        ),
    )


def to_permutation(a: Asm) -> Permutation:
    """Invert the permutation-matrix embedding.

    Raises :class:`NotAPermutation` when the matrix has any -1 entry.
    """
    if minus_count(a) > 0:
        raise NotAPermutation("matrix contains -1 entries")
    images = tuple(row.index(1) + 1 for row in a.entries)
    return Permutation(a.n, images)


def corner_sum(a: Asm) -> CornerSumMatrix:
    n = a.n
    sums = []
    prev = (0,) * n
    for row in a.entries:
        acc = 0
        cur = []
        for j, v in enumerate(row):
            acc += v
            cur.append(prev[j] + acc)
        prev = tuple(cur)
        sums.append(prev)
    return CornerSumMatrix(n, tuple(sums))


def check_corner_sums(raw: Sequence[Sequence[int]]) -> CornerSumMatrix:
    """Validate the three corner-sum invariants and wrap the table."""
    sums = _as_rows(raw)
    n = len(sums)
    if n == 0 or any(len(r) != n for r in sums):
        raise NotSquare("corner sum table must be square and non-empty")
    for i in range(n):
        for j in range(n):
            left = sums[i][j - 1] if j > 0 else 0
            up = sums[i - 1][j] if i > 0 else 0
            if sums[i][j] - left not in (0, 1):
                raise InvalidCornerSums(f"row step at ({i+1}, {j+1}) not 0 or 1")
            if sums[i][j] - up not in (0, 1):
                raise InvalidCornerSums(f"column step at ({i+1}, {j+1}) not 0 or 1")
    for i in range(n):
        if sums[i][n - 1] != i + 1:
            raise InvalidCornerSums(f"last column at row {i+1} is {sums[i][n-1]}, expected {i+1}")
        if sums[n - 1][i] != i + 1:
            raise InvalidCornerSums(f"last row at column {i+1} is {sums[n-1][i]}, expected {i+1}")
    return CornerSumMatrix(n, sums)


def from_corner_sum(c: CornerSumMatrix | Sequence[Sequence[int]]) -> Asm:
    """Recover the matrix by second differences of the prefix-sum table."""
    if not isinstance(c, CornerSumMatrix):
        c = check_corner_sums(c)
    n = c.n
    rows = []
    for i in range(1, n + 1):
        rows.append(
            tuple(
                c.at(i, j) - c.at(i - 1, j) - c.at(i, j - 1) + c.at(i - 1, j - 1)
                for j in range(1, n + 1)
            )
        )
    return validate(rows)


def transpose(a: Asm) -> Asm:
    return Asm(a.n, tuple(zip(*a.entries)))


def dual(a: Asm) -> Asm:
    """Row-reversed matrix: an order-reversing involution on the lattice."""
    return Asm(a.n, tuple(reversed(a.entries)))


def minus_count(a: Asm) -> int:
    """Number of -1 entries."""
    return sum(row.count(-1) for row in a.entries)


def iter_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    import itertools

    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(n, images)
