"""Two- and three-fold tensors over based spaces and the classical Yang-Baxter residual.

Brackets of the leg embeddings r12, r13, r23 are never formed in the
enveloping algebra.  Any two of them share exactly one leg, so each
commutator lands in G (x) G (x) G and is given by a closed formula:

    [r12, r13] = sum [a_i, a_j] (x) b_i (x) b_j
    [r12, r23] = sum a_i (x) [b_i, a_j] (x) b_j
    [r13, r23] = sum a_i (x) a_j (x) [b_i, b_j]
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import ShapeMismatch
from .lie_core import LieAlgebra
from .results import CheckResult
from .scalar_linalg import ZERO, Matrix, format_scalar, scalar


@dataclass(frozen=True)
class Tensor2:
    """``sum coeff[i][j] e_i (x) f_j``."""

    dims: tuple
    coeff: tuple

    def __post_init__(self):
        a, b = self.dims
        if len(self.coeff) != a or any(len(row) != b for row in self.coeff):
            raise ShapeMismatch(f"coefficient array does not have shape {self.dims}")

    @classmethod
    def from_rows(cls, rows) -> Tensor2:
        rows = tuple(tuple(scalar(x) for x in r) for r in rows)
        return cls((len(rows), len(rows[0]) if rows else 0), rows)

    @classmethod
    def zeros(cls, a: int, b: int | None = None) -> Tensor2:
        b = a if b is None else b
        return cls((a, b), tuple((ZERO,) * b for _ in range(a)))

    @classmethod
    def from_terms(cls, dims, terms: dict) -> Tensor2:
        a, b = dims
        rows = [[ZERO] * b for _ in range(a)]
        for (i, j), x in terms.items():
            rows[i][j] += scalar(x)
        return cls((a, b), tuple(tuple(r) for r in rows))

    @classmethod
    def wedge(cls, n: int, i: int, j: int, c=1) -> Tensor2:
        """c (e_i (x) e_j - e_j (x) e_i)."""
        return cls.from_terms((n, n), {(i, j): c, (j, i): -scalar(c)})

    def __getitem__(self, ij):
        i, j = ij
        return self.coeff[i][j]

    def terms(self) -> list:
        return [(i, j, x) for i, row in enumerate(self.coeff) for j, x in enumerate(row) if x]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.coeff for x in row)

    def is_square(self) -> bool:
        return self.dims[0] == self.dims[1]

    def __add__(self, other: Tensor2) -> Tensor2:
        if self.dims != other.dims:
            raise ShapeMismatch("tensor shapes differ")
        return Tensor2(self.dims, tuple(tuple(x + y for x, y in zip(r, s))
                                        for r, s in zip(self.coeff, other.coeff)))

    def __sub__(self, other: Tensor2) -> Tensor2:
        return self + other.scale(-1)

    def __neg__(self) -> Tensor2:
        return self.scale(-1)

    def scale(self, c) -> Tensor2:
        c = scalar(c)
        return Tensor2(self.dims, tuple(tuple(c * x for x in r) for r in self.coeff))

    def as_matrix(self) -> Matrix:
        return Matrix.from_rows(self.coeff, cols=self.dims[1])

    def __str__(self) -> str:
        t = self.terms()
        if not t:
            return "0"
        return " ".join(f"({i + 1},{j + 1})={format_scalar(x)}" for i, j, x in t)


@dataclass(frozen=True)
class Tensor3:
    dims: tuple
    coeff: tuple

    @classmethod
    def zeros(cls, a: int, b: int | None = None, c: int | None = None) -> Tensor3:
        b = a if b is None else b
        c = a if c is None else c
        return cls((a, b, c), tuple(tuple((ZERO,) * c for _ in range(b)) for _ in range(a)))

    @classmethod
    def from_terms(cls, dims, terms: dict) -> Tensor3:
        a, b, c = dims
        arr = [[[ZERO] * c for _ in range(b)] for _ in range(a)]
        for (i, j, k), x in terms.items():
            arr[i][j][k] += scalar(x)
        return cls(tuple(dims), _freeze3(arr))

    def __getitem__(self, ijk):
        i, j, k = ijk
        return self.coeff[i][j][k]

    def terms(self) -> list:
        return [(i, j, k, x) for i, plane in enumerate(self.coeff)
                for j, row in enumerate(plane) for k, x in enumerate(row) if x]

    def is_zero(self) -> bool:
        return not self.terms()

    def first_nonzero(self):
        """Lexicographically first nonzero (i, j, k), or None."""
        t = self.terms()
        return t[0][:3] if t else None

    def __add__(self, other: Tensor3) -> Tensor3:
        if self.dims != other.dims:
            raise ShapeMismatch("tensor shapes differ")
        return Tensor3(self.dims, tuple(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(p, q))
            for p, q in zip(self.coeff, other.coeff)))

    def scale(self, c) -> Tensor3:
        c = scalar(c)
        return Tensor3(self.dims, tuple(tuple(tuple(c * x for x in r) for r in p)
                                        for p in self.coeff))

    def __str__(self) -> str:
        t = self.terms()
        if not t:
            return "0"
        return " ".join(f"({i + 1},{j + 1},{k + 1})={format_scalar(x)}" for i, j, k, x in t)


def _freeze3(arr) -> tuple:
    return tuple(tuple(tuple(r) for r in p) for p in arr)


def _dense3(n: int) -> list:
    return [[[ZERO] * n for _ in range(n)] for _ in range(n)]


def transpose21(r: Tensor2) -> Tensor2:
    a, b = r.dims
    if a != b:
        raise ShapeMismatch("flip needs a square tensor")
    return Tensor2((b, a), tuple(tuple(r.coeff[i][j] for i in range(a)) for j in range(b)))


def is_skew(r: Tensor2) -> bool:
    return (r + transpose21(r)).is_zero()


def _check_over(L: LieAlgebra, r: Tensor2):
    if r.dims != (L.dim, L.dim):
        raise ShapeMismatch(f"tensor of shape {r.dims} over a {L.dim}-dim algebra")


def cyb_terms(L: LieAlgebra, r: Tensor2) -> tuple:
    """The three commutators ([r12,r13], [r12,r23], [r13,r23]) as Tensor3s."""
    _check_over(L, r)
    n = L.dim
    t1, t2, t3 = _dense3(n), _dense3(n), _dense3(n)
    nz = r.terms()
    for p, q, x in nz:
        for s, t, y in nz:
            w = x * y
            for k, ck in L.bracket_terms(p, s):
                t1[k][q][t] += w * ck
            for k, ck in L.bracket_terms(q, s):
                t2[p][k][t] += w * ck
            for k, ck in L.bracket_terms(q, t):
                t3[p][s][k] += w * ck
    dims = (n, n, n)
    return Tensor3(dims, _freeze3(t1)), Tensor3(dims, _freeze3(t2)), Tensor3(dims, _freeze3(t3))


def cyb_residual(L: LieAlgebra, r: Tensor2) -> Tensor3:
    """[r12,r13] + [r12,r23] + [r13,r23]; zero exactly when r solves the CYBE."""
    _check_over(L, r)
    n = L.dim
    out = _dense3(n)
    nz = r.terms()
    for p, q, x in nz:
        for s, t, y in nz:
            w = x * y
            for k, ck in L.bracket_terms(p, s):
                out[k][q][t] += w * ck
            for k, ck in L.bracket_terms(q, s):
                out[p][k][t] += w * ck
            for k, ck in L.bracket_terms(q, t):
                out[p][s][k] += w * ck
    return Tensor3((n, n, n), _freeze3(out))


def solves_cybe(L: LieAlgebra, r: Tensor2) -> bool:
    return cyb_residual(L, r).is_zero()


def act_on_legs3(L: LieAlgebra, i: int, s: Tensor3) -> Tensor3:
    """[e_i (x) 1 (x) 1 + 1 (x) e_i (x) 1 + 1 (x) 1 (x) e_i, s]."""
    n = L.dim
    out = _dense3(n)
    for a, b, c, x in s.terms():
        for k, ck in L.bracket_terms(i, a):
            out[k][b][c] += x * ck
        for k, ck in L.bracket_terms(i, b):
            out[a][k][c] += x * ck
        for k, ck in L.bracket_terms(i, c):
            out[a][b][k] += x * ck
    return Tensor3((n, n, n), _freeze3(out))


def check_modified_cybe(L: LieAlgebra, r: Tensor2) -> CheckResult:
    """Is the CYBE residual of r invariant under the diagonal adjoint action?

    The witness is the first basis index ``(i,)`` whose action is nonzero;
    ``residual`` then holds that action as a Tensor3.
    """
    s = cyb_residual(L, r)
    if s.is_zero():
        return CheckResult(True, details={"residual": s})
    for i in range(L.dim):
        moved = act_on_legs3(L, i, s)
        if not moved.is_zero():
            return CheckResult(False, (i,), moved, details={"residual": s})
    return CheckResult(True, details={"residual": s})


def cobracket(L: LieAlgebra, r: Tensor2, x: Sequence) -> Tensor2:
    """delta(x) = [x (x) 1 + 1 (x) x, r]."""
    _check_over(L, r)
    if len(x) != L.dim:
        raise ShapeMismatch("vector length does not match the algebra")
    n = L.dim
    out = [[ZERO] * n for _ in range(n)]
    for p, q, c in r.terms():
        for i, xi in enumerate(x):
            if not xi:
                continue
            w = xi * c
            for k, ck in L.bracket_terms(i, p):
                out[k][q] += w * ck
            for k, ck in L.bracket_terms(i, q):
                out[p][k] += w * ck
    return Tensor2((n, n), tuple(tuple(row) for row in out))


def co_jacobi_residual(L: LieAlgebra, r: Tensor2, x: Sequence) -> Tensor3:
    """Cyclic sum of (delta (x) 1) delta(x) over the three legs."""
    n = L.dim
    deltas = [cobracket(L, r, _unit(n, a)) for a in range(n)]
    dx = cobracket(L, r, x)
    inner = _dense3(n)
    for a, b, d in dx.terms():
        for p, q, y in deltas[a].terms():
            inner[p][q][b] += d * y
    out = _dense3(n)
    for a, b, c in product(range(n), repeat=3):
        out[a][b][c] = inner[a][b][c] + inner[b][c][a] + inner[c][a][b]
    return Tensor3((n, n, n), _freeze3(out))


def _unit(n: int, i: int) -> tuple:
    return tuple(scalar(1) if k == i else ZERO for k in range(n))


def tensor_to_map(r: Tensor2) -> Matrix:
    """The map (first space)* -> second space with T(e_a*) = sum_b coeff[a][b] e_b."""
    return r.as_matrix().T


def map_to_tensor(T: Matrix) -> Tensor2:
    """Inverse of :func:`tensor_to_map`."""
    return Tensor2.from_rows(T.T.to_rows()) if T.rows else Tensor2.zeros(T.cols, 0)
