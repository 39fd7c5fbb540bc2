"""Vectors over GF(2) packed into Python ints, plus row-reduction helpers.

Bit ``i`` of a word is coordinate ``i`` (coordinate 1 in one-based notation).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_DIM = 64


@dataclass(frozen=True, order=True)
class GF2Vector:
    bits: int
    dim: int

    def __post_init__(self) -> None:
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dimension {self.dim} outside 1..{MAX_DIM}")
        if self.bits < 0 or self.bits >> self.dim:
            raise ValueError(f"bits {self.bits:#x} do not fit in dimension {self.dim}")

    @classmethod
    def zero(cls, dim: int) -> "GF2Vector":
        return cls(0, dim)

    @classmethod
    def unit(cls, i: int, dim: int) -> "GF2Vector":
        return cls(1 << i, dim)

    @classmethod
    def from_support(cls, support: Iterable[int], dim: int) -> "GF2Vector":
        bits = 0
        for i in support:
            bits ^= 1 << i
        return cls(bits, dim)

    def __add__(self, other: "GF2Vector") -> "GF2Vector":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return GF2Vector(self.bits ^ other.bits, self.dim)

    __sub__ = __add__

    def __bool__(self) -> bool:
        return self.bits != 0

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def to_hex(self) -> str:
        return f"{self.bits:x}"

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.dim))


def iter_bits(word: int) -> Iterator[int]:
    """Yield positions of set bits, lowest first."""
    while word:
        low = word & -word
        yield low.bit_length() - 1
        word ^= low


def parity(word: int) -> int:
    return word.bit_count() & 1


def reduce_basis(rows: Iterable[int]) -> dict[int, int]:
    """Gaussian elimination; returns ``{pivot_bit: row}`` with distinct leading bits."""
    pivots: dict[int, int] = {}
    for row in rows:
        row = reduce_vector(row, pivots)
        if row:
            pivots[row.bit_length() - 1] = row
    return pivots


def reduce_vector(word: int, pivots: dict[int, int]) -> int:
    """Strip leading bits that are pivots; zero iff ``word`` lies in the span."""
    while word:
        row = pivots.get(word.bit_length() - 1)
        if row is None:
            return word
        word ^= row
    return 0


def rank(rows: Iterable[int]) -> int:
    return len(reduce_basis(rows))


def in_span(word: int, pivots: dict[int, int]) -> bool:
    return reduce_vector(word, pivots) == 0


def is_independent(rows: Sequence[int]) -> bool:
    return rank(rows) == len(rows)


def nullspace(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of ``{x : row . x = 0 for every row}``, as bit words over ``ncols`` columns."""
    pivot_rows: list[tuple[int, int]] = []  # (pivot column, row), fully reduced
    for row in rows:
        for col, prow in pivot_rows:
            if row >> col & 1:
                row ^= prow
        if not row:
            continue
        col = (row & -row).bit_length() - 1
        pivot_rows = [(c, r ^ row if r >> col & 1 else r) for c, r in pivot_rows]
        pivot_rows.append((col, row))
    pivot_cols = {c for c, _ in pivot_rows}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = 1 << free
        for col, prow in pivot_rows:
            if prow >> free & 1:
                vec |= 1 << col
        basis.append(vec)
    return basis


def solve_coordinates(basis: Sequence[int], word: int) -> int | None:
    """Coordinates of ``word`` w.r.t. an independent ``basis`` (bit k = coefficient of basis[k])."""
    pivots: dict[int, tuple[int, int]] = {}
    for k, row in enumerate(basis):
        tag = 1 << k
        while row:
            top = row.bit_length() - 1
            hit = pivots.get(top)
            if hit is None:
                pivots[top] = (row, tag)
                break
            row ^= hit[0]
            tag ^= hit[1]
        else:
            raise ValueError("basis vectors are dependent")
    coords = 0
    while word:
        top = word.bit_length() - 1
        hit = pivots.get(top)
        if hit is None:
            return None
        word ^= hit[0]
        coords ^= hit[1]
    return coords


def invert_columns(columns: Sequence[int], dim: int) -> list[int] | None:
    """Invert a square matrix given by its column images; ``None`` if singular."""
    if len(columns) != dim:
        raise ValueError("matrix is not square")
    if not is_independent(columns):
        return None
    return [solve_coordinates(columns, 1 << i) for i in range(dim)]


def apply_columns(columns: Sequence[int], word: int) -> int:
    """Image of ``word`` under the linear map sending ``e_i`` to ``columns[i]``."""
    out = 0
    for i in iter_bits(word):
        out ^= columns[i]
    return out
