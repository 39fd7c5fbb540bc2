"""Nondegenerate quadratic forms on GF(2)^d.

A form is stored as ``diag`` (bit i = Q(e_i)) together with a strictly upper
triangular bit matrix ``upper`` (row i, bit j>i = B(e_i, e_j)).  The bilinear
form is always derived from these, so Q and B cannot drift apart.

Over a general field F_q the definitions are the usual ones; this module only
handles q = 2, where the elliptic block uses the irreducible x^2 + x + 1.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from . import gf2
from .gf2 import GF2Vector, MAX_DIM


class FormType(enum.Enum):
    HYPERBOLIC = "hyperbolic"
    ELLIPTIC = "elliptic"

    @property
    def delta(self) -> int:
        """Witt defect: maximal totally singular subspaces have dimension dim/2 - delta."""
        return 0 if self is FormType.HYPERBOLIC else 1

    @property
    def sign(self) -> str:
        return "+" if self is FormType.HYPERBOLIC else "-"

    @classmethod
    def parse(cls, text: str) -> "FormType":
        key = text.strip().lower()
        aliases = {"+": "hyperbolic", "plus": "hyperbolic", "-": "elliptic", "minus": "elliptic"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown form type {text!r}") from None


class DegenerateFormError(ValueError):
    pass


@dataclass(frozen=True)
class QuadraticForm:
    dim: int
    diag: int
    upper: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 2 <= self.dim <= MAX_DIM or self.dim % 2:
            raise ValueError(f"form dimension must be even and in 2..{MAX_DIM}, got {self.dim}")
        if len(self.upper) != self.dim:
            raise ValueError("upper must have one row per coordinate")
        if self.diag < 0 or self.diag >> self.dim:
            raise ValueError("diag has bits beyond the dimension")
        for i, row in enumerate(self.upper):
            if row < 0 or row >> self.dim or row & ((1 << (i + 1)) - 1):
                raise ValueError(f"upper row {i} is not strictly upper triangular")

    @classmethod
    def from_gram(cls, diag: int, gram: Sequence[int]) -> "QuadraticForm":
        """Build from Q-values and a full symmetric B matrix (only the upper part is read)."""
        dim = len(gram)
        mask = (1 << dim) - 1
        upper = tuple(row & mask & ~((1 << (i + 1)) - 1) for i, row in enumerate(gram))
        return cls(dim, diag, upper)

    @cached_property
    def gram(self) -> tuple[int, ...]:
        """Symmetric Gram matrix of B as bit rows; zero diagonal."""
        rows = list(self.upper)
        for i, row in enumerate(self.upper):
            for j in gf2.iter_bits(row):
                rows[j] |= 1 << i
        return tuple(rows)

    @property
    def mask(self) -> int:
        return (1 << self.dim) - 1

    # raw-int evaluation, used by every search loop in the package
    def q(self, v: int) -> int:
        acc = (self.diag & v).bit_count()
        upper = self.upper
        w = v
        while w:
            low = w & -w
            acc += (upper[low.bit_length() - 1] & v).bit_count()
            w ^= low
        return acc & 1

    def b(self, u: int, v: int) -> int:
        gram = self.gram
        acc = 0
        while u:
            low = u & -u
            acc += (gram[low.bit_length() - 1] & v).bit_count()
            u ^= low
        return acc & 1

    def vectors(self) -> Iterator[int]:
        return iter(range(1 << self.dim))

    def singular_vectors(self) -> list[int]:
        """All v (including 0) with Q(v) = 0, in increasing order."""
        return [v for v in range(1 << self.dim) if not self.q(v)]

    def is_nondegenerate(self) -> bool:
        return gf2.rank(self.gram) == self.dim

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "diag": f"{self.diag:x}",
            "upper": [f"{row:x}" for row in self.upper],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "QuadraticForm":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["dim"]), int(data["diag"], 16), tuple(int(r, 16) for r in data["upper"]))


def _check_dim(form: QuadraticForm, *vectors: GF2Vector) -> None:
    for v in vectors:
        if v.dim != form.dim:
            raise ValueError(f"vector of dimension {v.dim} used with form of dimension {form.dim}")


def eval_q(form: QuadraticForm, v: GF2Vector) -> int:
    _check_dim(form, v)
    return form.q(v.bits)


def eval_b(form: QuadraticForm, u: GF2Vector, v: GF2Vector) -> int:
    """B(u, v) = Q(u+v) + Q(u) + Q(v), computed from the polarisation identity."""
    _check_dim(form, u, v)
    return form.q(u.bits ^ v.bits) ^ form.q(u.bits) ^ form.q(v.bits)


def radical(form: QuadraticForm) -> list[GF2Vector]:
    return [GF2Vector(v, form.dim) for v in gf2.nullspace(form.gram, form.dim)]


def standard_form(r: int, form_type: FormType) -> QuadraticForm:
    """Orthogonal sum of hyperbolic pairs, the last one replaced by an elliptic block if asked.

    Coordinates are interleaved by block: (2k, 2k+1) = (e_{k+1}, f_{k+1}); for the
    elliptic type the final block (2r-2, 2r-1) is (x, y) with Q(x) = Q(y) = 1.
    """
    if not 1 <= r <= MAX_DIM // 2:
        raise ValueError(f"r must be in 1..{MAX_DIM // 2}, got {r}")
    dim = 2 * r
    upper = [0] * dim
    for k in range(r):
        upper[2 * k] = 1 << (2 * k + 1)
    diag = 0
    if form_type is FormType.ELLIPTIC:
        diag = 0b11 << (dim - 2)
    return QuadraticForm(dim, diag, tuple(upper))


def symplectic_basis(form: QuadraticForm) -> list[tuple[int, int]]:
    """Pairs (e_i, f_i) with B(e_i, f_j) = delta_ij and the pairs mutually orthogonal."""
    remaining = [1 << i for i in range(form.dim)]
    pairs = []
    while remaining:
        e = remaining.pop(0)
        for idx, f in enumerate(remaining):
            if form.b(e, f):
                break
        else:
            raise DegenerateFormError("form is degenerate")
        remaining.pop(idx)
        projected = []
        for v in remaining:
            # project v onto <e, f>^perp
            if form.b(v, f):
                v ^= e
            if form.b(v, e):
                v ^= f
            projected.append(v)
        remaining = projected
        pairs.append((e, f))
    return pairs


def arf_invariant(form: QuadraticForm) -> int:
    return sum(form.q(e) & form.q(f) for e, f in symplectic_basis(form)) & 1


def classify(form: QuadraticForm) -> FormType:
    if not form.is_nondegenerate():
        raise DegenerateFormError("cannot classify a degenerate form")
    return FormType.ELLIPTIC if arf_invariant(form) else FormType.HYPERBOLIC


def singular_count(r: int, form_type: FormType) -> int:
    """Number of singular vectors (zero included) of a nondegenerate form on GF(2)^{2r}."""
    sign = 1 if form_type is FormType.HYPERBOLIC else -1
    return 2 ** (2 * r - 1) + sign * 2 ** (r - 1)


MAX_TS_SEARCH_DIM = 12


def max_totally_singular_dim(form: QuadraticForm) -> int:
    """Largest totally singular subspace, by exhaustive extension with backtracking.

    Exponential; guarded to dim <= 12.  Used as an independent check on classify().
    """
    if form.dim > MAX_TS_SEARCH_DIM:
        raise ValueError(f"exhaustive search limited to dim <= {MAX_TS_SEARCH_DIM}")
    if not form.is_nondegenerate():
        raise DegenerateFormError("form is degenerate")
    singular = [v for v in form.singular_vectors() if v]
    bound = form.dim // 2
    best = 0
    seen: set[frozenset] = set()

    def span_key(pivots: dict[int, int]) -> frozenset:
        span = {0}
        for row in pivots.values():
            span |= {x ^ row for x in span}
        return frozenset(span)

    def extend(pivots: dict[int, int], chosen: list[int]) -> bool:
        nonlocal best
        depth = len(chosen)
        best = max(best, depth)
        if best == bound:
            return True
        key = span_key(pivots)
        if key in seen:
            return False
        seen.add(key)
        for v in singular:
            if gf2.in_span(v, pivots):
                continue
            if any(form.b(v, w) for w in chosen):
                continue
            child = dict(pivots)
            red = gf2.reduce_vector(v, child)
            child[red.bit_length() - 1] = red
            if extend(child, chosen + [v]):
                return True
        return False

    extend({}, [])
    return best


def is_isometry(form1: QuadraticForm, form2: QuadraticForm, columns: Sequence[int]) -> bool:
    """Whether the linear map e_i -> columns[i] carries form1 onto form2.

    Checking Q on basis vectors and B on basis pairs is enough: Q(v) expands as
    sum of Q(e_i) plus sum of B(e_i, e_j) over pairs in the support of v.
    """
    if form1.dim != form2.dim:
        raise ValueError("forms have different dimensions")
    if len(columns) != form1.dim:
        raise ValueError("map must give one image per basis vector")
    if not gf2.is_independent(columns):
        raise ValueError("map is singular")
    d = form1.dim
    for i in range(d):
        if form2.q(columns[i]) != form1.diag >> i & 1:
            return False
        for j in range(i + 1, d):
            if form2.b(columns[i], columns[j]) != form1.upper[i] >> j & 1:
                return False
    return True
