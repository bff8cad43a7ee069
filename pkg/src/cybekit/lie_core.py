"""Lie algebras given by structure constants, and the objects built on them.

Everything is indexed from 0 internally.  A linear map is a
:class:`~cybekit.scalar_linalg.Matrix` whose column ``j`` is the image of the
``j``-th domain basis vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .errors import NotALieAlgebra, NotARepresentation, ShapeMismatch
from .results import CheckResult
from .scalar_linalg import (
    ZERO,
    Matrix,
    column_space_basis,
    in_span,
    is_invertible,
    is_zero_vector,
    rank_and_kernel,
    scalar,
    unit_vector,
    vadd,
    vsub,
)

LinearMap = Matrix


def _freeze_cube(cube, n: int) -> tuple:
    try:
        out = tuple(tuple(tuple(scalar(cube[i][j][k]) for k in range(n)) for j in range(n))
                    for i in range(n))
    except IndexError as exc:
        raise ShapeMismatch(f"structure cube is not {n}x{n}x{n}") from exc
    if len(cube) != n or any(len(row) != n for row in cube):
        raise ShapeMismatch(f"structure cube is not {n}x{n}x{n}")
    return out


def _sparse_table(cube: tuple, n: int) -> tuple:
    return tuple(
        tuple(tuple((k, x) for k, x in enumerate(cube[i][j]) if x) for j in range(n))
        for i in range(n)
    )


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """A Lie algebra with ``[e_i, e_j] = sum_k c[i][j][k] e_k``."""

    dim: int
    c: tuple
    labels: tuple = field(default=(), compare=False)

    def __init__(self, dim: int, c, labels: Sequence[str] | None = None, check: bool = True):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "c", _freeze_cube(c, dim))
        if labels is None or len(labels) == 0:
            labels = tuple(f"e{i + 1}" for i in range(dim))
        if len(labels) != dim:
            raise ShapeMismatch(f"{len(labels)} labels for dimension {dim}")
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "_table", _sparse_table(self.c, dim))
        if check:
            report = validate_lie(self)
            if not report.ok:
                kind, idx = report.witness
                raise NotALieAlgebra(f"{kind} fails at {tuple(i + 1 for i in idx)}")

    @classmethod
    def unchecked(cls, dim: int, c, labels=None) -> LieAlgebra:
        return cls(dim, c, labels, check=False)

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict, labels=None, check: bool = True) -> LieAlgebra:
        """Build from ``{(i, j): {k: coeff}}`` for i < j (0-based); the rest by antisymmetry."""
        cube = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), out in brackets.items():
            for k, x in out.items():
                x = scalar(x)
                cube[i][j][k] += x
                cube[j][i][k] -= x
        return cls(dim, cube, labels, check=check)

    @classmethod
    def abelian(cls, dim: int) -> LieAlgebra:
        return cls(dim, [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.dim, self.c))

    def __repr__(self) -> str:
        nz = [f"[{self.labels[i]},{self.labels[j]}]" for i in range(self.dim)
              for j in range(i + 1, self.dim) if self._table[i][j]]
        return f"LieAlgebra(dim={self.dim}, nonzero={' '.join(nz) or 'none'})"

    def is_abelian(self) -> bool:
        return all(not self._table[i][j] for i in range(self.dim) for j in range(self.dim))

    def bracket_terms(self, i: int, j: int) -> tuple:
        """Nonzero ``(k, c[i][j][k])`` pairs."""
        return self._table[i][j]

    def bracket_basis(self, i: int, j: int) -> tuple:
        return self.c[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                w = xi * yj
                for k, ck in self._table[i][j]:
                    out[k] += w * ck
        return tuple(out)

    def ad_basis(self, i: int) -> Matrix:
        n = self.dim
        return Matrix(n, n, tuple(self.c[i][j][k] for k in range(n) for j in range(n)))

    def ad(self, x: Sequence) -> Matrix:
        n = self.dim
        cols = [self.bracket(x, unit_vector(n, j)) for j in range(n)]
        return Matrix.from_columns(cols, rows=n)

    def basis(self) -> list:
        return [unit_vector(self.dim, i) for i in range(self.dim)]


def validate_lie(L: LieAlgebra) -> CheckResult:
    """Exact antisymmetry and Jacobi check on every basis triple.

    Violations are returned as data: ``witness`` is ``(kind, (i, j, k))`` for
    the first one and ``details["violations"]`` lists them all.
    """
    n = L.dim
    violations = []
    for i, j, k in product(range(n), repeat=3):
        if L.c[i][j][k] != -L.c[j][i][k]:
            violations.append(("antisymmetry", (i, j, k)))
    if not violations:
        basis = L.basis()
        for i, j, k in product(range(n), repeat=3):
            x, y, z = basis[i], basis[j], basis[k]
            s = vadd(vadd(L.bracket(L.bracket(x, y), z), L.bracket(L.bracket(y, z), x)),
                     L.bracket(L.bracket(z, x), y))
            if not is_zero_vector(s):
                violations.append(("jacobi", (i, j, k)))
    return CheckResult(
        ok=not violations,
        witness=violations[0] if violations else None,
        details={"violations": violations},
    )


@dataclass(frozen=True, eq=False)
class Representation:
    """``action[i]`` is the matrix of rho(e_i) on an m-dimensional space."""

    algebra: LieAlgebra
    action: tuple
    labels: tuple = field(default=(), compare=False)

    def __init__(self, algebra: LieAlgebra, action: Sequence[Matrix], labels=None):
        action = tuple(action)
        if len(action) != algebra.dim:
            raise ShapeMismatch(f"{len(action)} action matrices for a {algebra.dim}-dim algebra")
        m = action[0].rows if action else 0
        for a in action:
            if a.shape != (m, m):
                raise ShapeMismatch("action matrices must all be square of the same size")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "action", action)
        if not labels:
            labels = tuple(f"v{a + 1}" for a in range(m))
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def space_dim(self) -> int:
        return self.action[0].rows if self.action else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return self.algebra == other.algebra and self.action == other.action

    def __hash__(self) -> int:
        return hash(self.action)

    def of(self, x: Sequence) -> Matrix:
        """rho(x) for a vector x of the algebra."""
        m = self.space_dim
        out = Matrix.zeros(m)
        for xi, a in zip(x, self.action):
            if xi:
                out = out + a.scale(xi)
        return out

    def act(self, x: Sequence, v: Sequence) -> tuple:
        return self.of(x).apply(v)


def check_representation(rho: Representation) -> CheckResult:
    """rho([e_i, e_j]) == [rho(e_i), rho(e_j)] for all i < j."""
    L = rho.algebra
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = rho.of(L.bracket_basis(i, j))
            a, b = rho.action[i], rho.action[j]
            diff = lhs - (a @ b - b @ a)
            if not diff.is_zero():
                return CheckResult(False, (i, j), diff)
    return CheckResult(True)


def adjoint(L: LieAlgebra) -> Representation:
    return Representation(L, [L.ad_basis(i) for i in range(L.dim)], labels=L.labels)


def dual_of(rho: Representation) -> Representation:
    """rho*(x) = -rho(x)^T in the dual basis."""
    return Representation(rho.algebra, [-a.T for a in rho.action],
                          labels=tuple(f"{s}*" for s in rho.labels))


def coadjoint(L: LieAlgebra) -> Representation:
    return dual_of(adjoint(L))


def regular_of(A, L: LieAlgebra | None = None) -> Representation:
    """Left multiplications of a pre-Lie algebra, ``action[i][k, j] = a[i][j][k]``.

    ``L`` defaults to the commutator algebra of ``A`` (built unchecked, so a
    non-left-symmetric ``A`` still yields an object whose representation
    property can be tested).
    """
    n = A.dim
    if L is None:
        L = LieAlgebra.unchecked(
            n, [[[A.a[i][j][k] - A.a[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]
        )
    if L.dim != n:
        raise ShapeMismatch("pre-Lie algebra and Lie algebra dimensions differ")
    mats = [Matrix(n, n, tuple(A.a[i][j][k] for k in range(n) for j in range(n))) for i in range(n)]
    return Representation(L, mats, labels=L.labels)


def explicit(L: LieAlgebra, matrices: Sequence, check: bool = True) -> Representation:
    mats = [m if isinstance(m, Matrix) else Matrix.from_rows(m) for m in matrices]
    rho = Representation(L, mats)
    if check:
        r = check_representation(rho)
        if not r.ok:
            i, j = r.witness
            raise NotARepresentation(
                f"rho([e{i + 1},e{j + 1}]) != [rho(e{i + 1}), rho(e{j + 1})]"
            )
    return rho


def zero_representation(L: LieAlgebra, m: int) -> Representation:
    return Representation(L, [Matrix.zeros(m)] * L.dim)


def make_representation(L: LieAlgebra, kind: str, arg=None) -> Representation:
    """Dispatcher over the representation kinds.

    ``kind`` is one of ``adjoint``, ``coadjoint``, ``dual`` (arg: a
    Representation), ``regular`` (arg: a pre-Lie algebra) or ``explicit``
    (arg: a list of matrices).
    """
    if kind == "adjoint":
        return adjoint(L)
    if kind == "coadjoint":
        return coadjoint(L)
    if kind == "dual":
        return dual_of(arg)
    if kind == "regular":
        return regular_of(arg, L)
    if kind == "explicit":
        return explicit(L, arg)
    raise ValueError(f"unknown representation kind {kind!r}")


def semidirect(L: LieAlgebra, rho: Representation) -> LieAlgebra:
    """``L`` acting on the abelian module of ``rho``; basis is (L basis, module basis)."""
    if rho.algebra.dim != L.dim:
        raise ShapeMismatch("representation is not over this algebra")
    n, m = L.dim, rho.space_dim
    N = n + m
    cube = [[[ZERO] * N for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                cube[i][j][k] = L.c[i][j][k]
        a = rho.action[i]
        for p in range(m):
            for q in range(m):
                x = a[q, p]
                if x:
                    cube[i][n + p][n + q] = x
                    cube[n + p][i][n + q] = -x
    return LieAlgebra.unchecked(N, cube, labels=tuple(L.labels) + tuple(rho.labels))


@dataclass(frozen=True)
class BilinearForm:
    gram: Matrix

    @classmethod
    def from_rows(cls, rows) -> BilinearForm:
        return cls(Matrix.from_rows(rows))

    @property
    def space_dim(self) -> int:
        return self.gram.rows

    def __call__(self, x: Sequence, y: Sequence):
        return sum((xi * v for xi, v in zip(x, self.gram.apply(y)) if xi), ZERO)

    def is_symmetric(self) -> bool:
        return self.gram == self.gram.T

    def is_skew(self) -> bool:
        return self.gram == -self.gram.T

    def is_nondegenerate(self) -> bool:
        return is_invertible(self.gram)


@dataclass(frozen=True)
class FormReport:
    symmetric: bool
    invariant: bool
    nondegenerate: bool
    witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.symmetric and self.invariant and self.nondegenerate


def check_invariant_form(L: LieAlgebra, B: BilinearForm) -> FormReport:
    if B.space_dim != L.dim:
        raise ShapeMismatch("form and algebra dimensions differ")
    basis = L.basis()
    witness = None
    for i, j, k in product(range(L.dim), repeat=3):
        x, y, z = basis[i], basis[j], basis[k]
        if B(L.bracket(x, y), z) != B(x, L.bracket(y, z)):
            witness = (i, j, k)
            break
    return FormReport(B.is_symmetric(), witness is None, B.is_nondegenerate(), witness)


def killing_form(L: LieAlgebra) -> BilinearForm:
    n = L.dim
    ads = [L.ad_basis(i) for i in range(n)]
    rows = []
    for i in range(n):
        rows.append([sum(((ads[i] @ ads[j])[k, k] for k in range(n)), ZERO) for j in range(n)])
    return BilinearForm.from_rows(rows)


def center(L: LieAlgebra) -> list:
    """Basis of {x : [x, y] = 0 for all y}, the kernel of the stacked ad matrices."""
    n = L.dim
    rows = [[L.c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    if not rows:
        return []
    return rank_and_kernel(Matrix.from_rows(rows, cols=n))[1]


def map_property(L: LieAlgebra, f: Matrix, which: str) -> CheckResult:
    """Derivation or automorphism test for a square map ``f``; witness is a basis pair."""
    if f.shape != (L.dim, L.dim):
        raise ShapeMismatch("map must be square on the algebra")
    if which not in ("derivation", "automorphism"):
        raise ValueError(f"unknown property {which!r}")
    if which == "automorphism" and not is_invertible(f):
        return CheckResult(False, None, details={"reason": "singular"})
    images = [f.column(i) for i in range(L.dim)]
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = f.apply(L.bracket_basis(i, j))
            if which == "derivation":
                e_i, e_j = unit_vector(L.dim, i), unit_vector(L.dim, j)
                rhs = vadd(L.bracket(images[i], e_j), L.bracket(e_i, images[j]))
            else:
                rhs = L.bracket(images[i], images[j])
            if lhs != rhs:
                return CheckResult(False, (i, j), vsub(lhs, rhs))
    return CheckResult(True)


def bracket_of_subspaces(L: LieAlgebra, U: Sequence, W: Sequence) -> list:
    vecs = [L.bracket(u, w) for u in U for w in W]
    vecs = [v for v in vecs if not is_zero_vector(v)]
    if not vecs:
        return []
    return column_space_basis(Matrix.from_columns(vecs, rows=L.dim))[1]


def lower_central_series(L: LieAlgebra) -> list:
    """G, [G,G], [G,[G,G]], ... as bases, stopping once the dimension stabilises."""
    series = [L.basis()]
    while True:
        nxt = bracket_of_subspaces(L, L.basis(), series[-1])
        if len(nxt) == len(series[-1]):
            return series
        series.append(nxt)


def derived_series(L: LieAlgebra) -> list:
    series = [L.basis()]
    while True:
        nxt = bracket_of_subspaces(L, series[-1], series[-1])
        if len(nxt) == len(series[-1]):
            return series
        series.append(nxt)


def is_nilpotent(L: LieAlgebra) -> bool:
    return len(lower_central_series(L)[-1]) == 0


def is_solvable(L: LieAlgebra) -> bool:
    return len(derived_series(L)[-1]) == 0


def is_subalgebra(L: LieAlgebra, basis: Sequence) -> bool:
    return all(in_span(basis, L.bracket(u, w)) for u in basis for w in basis)
