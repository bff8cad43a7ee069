"""O-operators, their lift to skew r-matrices, operator forms of the CYBE, 1-cocycles.

An O-operator for a representation rho of G on V is a map T: V -> G with

    [T(u), T(v)] = T(rho(T(u)) v - rho(T(v)) u)     for all u, v in V.

``lift_o_operator`` turns T into the skew tensor T - T^21 living in
G x| V* (semidirect product by the dual representation); that tensor solves
the CYBE exactly when T is an O-operator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .errors import BudgetExceeded, InvalidForm, ShapeMismatch
from .lie_core import (
    BilinearForm,
    LieAlgebra,
    Representation,
    adjoint,
    check_invariant_form,
    coadjoint,
    dual_of,
    semidirect,
)
from .results import CheckResult
from .scalar_linalg import ZERO, Matrix, invert, is_zero_vector, scalar, vsub
from .tensor_cybe import Tensor2, cyb_residual, tensor_to_map

DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class OOperatorReport:
    """Per-pair residuals ``[T(v_i),T(v_k)] - T(rho(T(v_i))v_k - rho(T(v_k))v_i)`` for i < k."""

    residuals: dict = field(default_factory=dict)

    @property
    def is_o_operator(self) -> bool:
        return all(is_zero_vector(v) for v in self.residuals.values())

    @property
    def witness(self):
        for pair in sorted(self.residuals):
            if not is_zero_vector(self.residuals[pair]):
                return pair
        return None

    def __bool__(self) -> bool:
        return self.is_o_operator


def _check_shapes(L: LieAlgebra, rho: Representation, T: Matrix):
    if rho.algebra.dim != L.dim:
        raise ShapeMismatch("representation is not over this algebra")
    if T.shape != (L.dim, rho.space_dim):
        raise ShapeMismatch(
            f"map must be {L.dim}x{rho.space_dim} (V -> G), got {T.rows}x{T.cols}"
        )


def o_operator_residual(L: LieAlgebra, rho: Representation, T: Matrix, u, v) -> tuple:
    Tu, Tv = T.apply(u), T.apply(v)
    inner = vsub(rho.act(Tu, v), rho.act(Tv, u))
    return vsub(L.bracket(Tu, Tv), T.apply(inner))


def check_o_operator(L: LieAlgebra, rho: Representation, T: Matrix) -> OOperatorReport:
    _check_shapes(L, rho, T)
    m = rho.space_dim
    images = [T.column(i) for i in range(m)]
    rho_images = [rho.of(x) for x in images]
    residuals = {}
    for i in range(m):
        for k in range(i + 1, m):
            inner = vsub(rho_images[i].column(k), rho_images[k].column(i))
            residuals[(i, k)] = vsub(L.bracket(images[i], images[k]), T.apply(inner))
    return OOperatorReport(residuals)


def o_operator_ambient(L: LieAlgebra, rho: Representation) -> LieAlgebra:
    """G x| V*, the algebra the lifted tensor lives in."""
    return semidirect(L, dual_of(rho))


def lift_o_operator(L: LieAlgebra, rho: Representation, T: Matrix) -> Tensor2:
    """T - T^21 in the basis (e_1..e_n, v_1*..v_m*).

    With T(v_i) = sum_j a_ij e_j the tensor has coeff[j][n+i] = a_ij and
    coeff[n+i][j] = -a_ij.
    """
    _check_shapes(L, rho, T)
    n, m = L.dim, rho.space_dim
    terms = {}
    for i in range(m):
        for j in range(n):
            a = T[j, i]
            if a:
                terms[(j, n + i)] = a
                terms[(n + i, j)] = -a
    return Tensor2.from_terms((n + m, n + m), terms)


def map_via_form(B: BilinearForm, r: Tensor2) -> Matrix:
    """Identify r with a map G -> G through G ~ G*, x -> B(x, .)."""
    return tensor_to_map(r) @ B.gram


def tensor_via_form(B: BilinearForm, R: Matrix) -> Tensor2:
    """Inverse of :func:`map_via_form`."""
    M = R @ invert(B.gram)
    return Tensor2.from_rows(M.T.to_rows())


def check_operator_form(L: LieAlgebra, form: str, X, B: BilinearForm | None = None) -> OOperatorReport:
    """Operator forms of the CYBE.

    ``form="kupershmidt"``: X is a map G* -> G (or a tensor, identified by
    <T(u), v> = <u (x) v, T>), checked as an O-operator for the coadjoint
    representation.

    ``form="semenov"``: X is a map G -> G (or a tensor, identified through
    the nondegenerate invariant symmetric form B), checked as an O-operator
    for the adjoint representation.
    """
    if form == "kupershmidt":
        T = tensor_to_map(X) if isinstance(X, Tensor2) else X
        return check_o_operator(L, coadjoint(L), T)
    if form == "semenov":
        if B is None:
            raise InvalidForm("the semenov form needs a bilinear form")
        rep = check_invariant_form(L, B)
        if not rep.ok:
            what = [name for name, ok in (("symmetric", rep.symmetric), ("invariant", rep.invariant),
                                          ("nondegenerate", rep.nondegenerate)) if not ok]
            raise InvalidForm(f"form is not {', '.join(what)}")
        R = map_via_form(B, X) if isinstance(X, Tensor2) else X
        return check_o_operator(L, adjoint(L), R)
    raise ValueError(f"unknown operator form {form!r}")


def is_form_skew(B: BilinearForm, R: Matrix) -> bool:
    """B(R x, y) = -B(x, R y) for all x, y."""
    return R.T @ B.gram == -(B.gram @ R)


def check_one_cocycle(L: LieAlgebra, rho: Representation, q: Matrix) -> CheckResult:
    """q[x,y] == rho(x) q(y) - rho(y) q(x) on all basis pairs i < j."""
    if rho.algebra.dim != L.dim:
        raise ShapeMismatch("representation is not over this algebra")
    if q.shape != (rho.space_dim, L.dim):
        raise ShapeMismatch(f"cocycle must be {rho.space_dim}x{L.dim} (G -> V)")
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = q.apply(L.bracket_basis(i, j))
            rhs = vsub(rho.action[i].apply(q.column(j)), rho.action[j].apply(q.column(i)))
            if lhs != rhs:
                return CheckResult(False, (i, j), vsub(lhs, rhs))
    return CheckResult(True)


def skew_from_upper(n: int, upper: Sequence) -> Tensor2:
    """Skew tensor whose strict upper triangle, read row by row, is ``upper``."""
    rows = [[ZERO] * n for _ in range(n)]
    it = iter(upper)
    for i in range(n):
        for j in range(i + 1, n):
            x = scalar(next(it))
            rows[i][j] = x
            rows[j][i] = -x
    return Tensor2((n, n), tuple(tuple(r) for r in rows))


def iter_skew_tensors(n: int, coefficient_set: Iterable) -> Iterable[Tensor2]:
    coeffs = [scalar(c) for c in coefficient_set]
    for upper in product(coeffs, repeat=n * (n - 1) // 2):
        yield skew_from_upper(n, upper)


def search_skew_solutions(L: LieAlgebra, coefficient_set: Sequence, budget: int = DEFAULT_BUDGET) -> list:
    """All skew tensors with upper-triangle entries from ``coefficient_set`` that solve the CYBE.

    Candidates are enumerated in lexicographic order of the upper triangle
    (order of ``coefficient_set`` is respected), so the output is deterministic.
    """
    n = L.dim
    count = len(coefficient_set) ** (n * (n - 1) // 2)
    if count > budget:
        raise BudgetExceeded(f"{count} candidates exceed the budget of {budget}")
    return [r for r in iter_skew_tensors(n, coefficient_set) if cyb_residual(L, r).is_zero()]
