"""Symmetric bases: bases with every Q(v_i) = 0 and every B(v_i, v_j) = 1 (i != j)."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from . import gf2
from .gf2 import GF2Vector
from .quadratic import FormType, QuadraticForm, standard_form

MAX_BRUTE_FORCE_DIM = 8


class HypothesisError(ValueError):
    """The extension step was handed data violating its hypotheses."""


@dataclass(frozen=True)
class NotExists:
    """A mathematical 'no': the form carries no symmetric basis."""

    reason: str

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class SymmetricBasis:
    form: QuadraticForm
    vectors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not _is_symmetric(self.form, self.vectors):
            raise ValueError("vectors do not form a symmetric basis")

    @property
    def r(self) -> int:
        return self.form.dim // 2

    def as_vectors(self) -> list[GF2Vector]:
        return [GF2Vector(v, self.form.dim) for v in self.vectors]

    def to_json(self) -> dict:
        return {"form": self.form.to_json(), "basis": [f"{v:x}" for v in self.vectors]}

    def table(self) -> str:
        """Human-readable rows: vector bits, Q-value, B-row against the basis."""
        d = self.form.dim
        lines = [f"{'#':>3}  {'vector':<{d}}  Q  B-row"]
        for i, v in enumerate(self.vectors):
            brow = "".join(str(self.form.b(v, w)) if j != i else "." for j, w in enumerate(self.vectors))
            lines.append(f"{i + 1:>3}  {GF2Vector(v, d)!s:<{d}}  {self.form.q(v)}  {brow}")
        return "\n".join(lines)


def _is_symmetric(form: QuadraticForm, vectors: Sequence[int]) -> bool:
    if len(vectors) != form.dim or not gf2.is_independent(vectors):
        return False
    if any(form.q(v) for v in vectors):
        return False
    return all(form.b(vectors[i], vectors[j]) for i in range(len(vectors)) for j in range(i))


def is_symmetric_basis(form: QuadraticForm, vectors: Sequence[GF2Vector | int]) -> bool:
    if len(vectors) != form.dim:
        raise ValueError(f"need {form.dim} vectors, got {len(vectors)}")
    words = []
    for v in vectors:
        if isinstance(v, GF2Vector):
            if v.dim != form.dim:
                raise ValueError("vector dimension does not match the form")
            v = v.bits
        words.append(v)
    return _is_symmetric(form, words)


def weight_parity_q(t: int) -> int:
    """Q-value of a sum of t distinct symmetric-basis vectors: 0 iff t = 0, 1 (mod 4)."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return 0 if t % 4 in (0, 1) else 1


def exists_symmetric_basis(r: int, form_type: FormType) -> bool:
    if r < 1:
        raise ValueError("r must be positive")
    return form_type is induced_type_of_symmetric_space(r)


def induced_type_of_symmetric_space(r: int) -> FormType:
    """The only form type on GF(2)^{2r} that can carry a symmetric basis."""
    if r < 1:
        raise ValueError("r must be positive")
    return FormType.HYPERBOLIC if r % 4 in (0, 1) else FormType.ELLIPTIC


def _check_pair(form: QuadraticForm, a: int, b: int, name: str) -> list[str]:
    problems = []
    if form.q(a) or form.q(b):
        problems.append(f"pair {name} is not singular")
    if not form.b(a, b):
        problems.append(f"pair {name} has B = 0 within the pair")
    return problems


def extend_by_three_pairs(
    form: QuadraticForm,
    basis: Sequence[int],
    pairs: Sequence[tuple[int, int]],
) -> list[int]:
    """Grow a symmetric basis of W by six vectors spanning W + three hyperbolic planes.

    ``basis`` is a symmetric basis of a subspace W of ``form``'s space and
    ``pairs`` are three mutually orthogonal hyperbolic pairs in W-perp.  The
    construction needs Q(sum of basis) = 1, which is checked directly; a
    warning is emitted if that disagrees with dim W = 2 (mod 4).
    """
    if len(pairs) != 3:
        raise ValueError("exactly three hyperbolic pairs are required")
    (a, b), (c, d), (g, h) = pairs
    total = 0
    for w in basis:
        total ^= w
    problems = []
    q_total = form.q(total)
    if q_total != 1:
        problems.append(f"Q(sum of W basis) = {q_total}, need 1")
    stated = len(basis) % 4 == 2
    if stated != (q_total == 1):
        warnings.warn(
            f"dim W = {len(basis)} and Q(sum) = {q_total} disagree on the extension hypothesis",
            stacklevel=2,
        )
    for name, (x, y) in zip("abc", pairs):
        problems += _check_pair(form, x, y, name)
    members = [a, b, c, d, g, h]
    for i in range(6):
        for j in range(i // 2 * 2 + 2, 6):
            if form.b(members[i], members[j]):
                problems.append("hyperbolic pairs are not mutually orthogonal")
                break
        if any(form.b(members[i], w) for w in basis):
            problems.append("hyperbolic pairs are not orthogonal to W")
    if problems:
        raise HypothesisError("; ".join(dict.fromkeys(problems)))
    new = [
        a ^ c ^ d ^ total,
        b ^ c ^ d ^ total,
        c ^ g ^ h ^ total,
        d ^ g ^ h ^ total,
        g ^ a ^ b ^ total,
        h ^ a ^ b ^ total,
    ]
    return list(basis) + new


def _standard_blocks(r: int, form_type: FormType) -> tuple[list[tuple[int, int]], tuple[int, int] | None]:
    hyperbolic_count = r if form_type is FormType.HYPERBOLIC else r - 1
    hyp = [(1 << 2 * k, 1 << 2 * k + 1) for k in range(hyperbolic_count)]
    ell = None if form_type is FormType.HYPERBOLIC else (1 << 2 * r - 2, 1 << 2 * r - 1)
    return hyp, ell


def _build(form: QuadraticForm, hyp: list[tuple[int, int]], ell: tuple[int, int] | None) -> list[int]:
    """Recursive construction over the listed blocks of the standard form."""
    r = len(hyp) + (ell is not None)
    if ell is None and r == 1:
        return [hyp[0][0], hyp[0][1]]
    if ell is not None and r == 2:
        e1, f1 = hyp[0]
        x, y = ell
        return [e1, f1, x ^ e1 ^ f1, y ^ e1 ^ f1]
    if ell is not None and r == 3:
        c = _build(form, hyp[:1], ell)
        e2, f2 = hyp[1]
        s = c[0] ^ c[1] ^ c[2] ^ c[3]
        return c + [e2 ^ s, f2 ^ s]
    if r % 4 in (0, 2):
        # r = r' + 4 with W of rank r' + 1: append three hyperbolic planes
        inner = _build(form, hyp[:-3], ell)
        return extend_by_three_pairs(form, inner, hyp[-3:])
    # r = r' + 5 with W of rank r' + 1: three planes plus one more pair (x, y)
    inner = _build(form, hyp[:-4], ell)
    grown = extend_by_three_pairs(form, inner, hyp[-4:-1])
    x, y = hyp[-1]
    total = 0
    for w in inner:
        total ^= w
    rest = total
    for u, v in hyp[-4:-1]:
        rest ^= u ^ v
    return grown + [x ^ rest, y ^ rest]


def construct_symmetric_basis(r: int, form_type: FormType) -> SymmetricBasis | NotExists:
    """Inductive construction on ``standard_form(r, form_type)``, in standard coordinates."""
    if not 1 <= r <= 32:
        raise ValueError(f"r must be in 1..32, got {r}")
    if not exists_symmetric_basis(r, form_type):
        return NotExists(_parity_reason(r, form_type))
    form = standard_form(r, form_type)
    hyp, ell = _standard_blocks(r, form_type)
    return SymmetricBasis(form, tuple(_build(form, hyp, ell)))


def _parity_reason(r: int, form_type: FormType) -> str:
    need = induced_type_of_symmetric_space(r)
    return f"r = {r} = {r % 4} (mod 4) requires a {need.value} form, got {form_type.value}"


def brute_force_symmetric_basis(form: QuadraticForm) -> SymmetricBasis | NotExists:
    """Exhaustive search for the lexicographically first symmetric basis.

    Candidates are nonzero singular vectors in increasing integer order; a partial
    basis is extended only by vectors having B = 1 with every chosen vector.
    """
    if form.dim > MAX_BRUTE_FORCE_DIM:
        raise ValueError(f"brute force limited to dim <= {MAX_BRUTE_FORCE_DIM}")
    cand = [v for v in form.singular_vectors() if v]
    n = len(cand)
    # bit k of linked[i]: candidate k > i has B(cand[i], cand[k]) = 1
    linked = [0] * n
    for i in range(n):
        for k in range(i + 1, n):
            if form.b(cand[i], cand[k]):
                linked[i] |= 1 << k
    target = form.dim

    def search(chosen: list[int], pivots: dict[int, int], allowed: int) -> list[int] | None:
        if len(chosen) == target:
            return chosen
        if allowed.bit_count() < target - len(chosen):
            return None
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            k = low.bit_length() - 1
            v = cand[k]
            red = gf2.reduce_vector(v, pivots)
            if not red:
                continue
            child = dict(pivots)
            child[red.bit_length() - 1] = red
            found = search(chosen + [v], child, allowed & linked[k])
            if found is not None:
                return found
        return None

    found = search([], {}, (1 << n) - 1)
    if found is None:
        return NotExists(f"exhaustive search over {n} singular vectors found no symmetric basis")
    return SymmetricBasis(form, tuple(found))
