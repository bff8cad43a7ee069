"""Left-symmetric (pre-Lie) algebras and their interplay with the CYBE.

A product cube ``a`` means ``e_i . e_j = sum_k a[i][j][k] e_k``.  Left-symmetric
means the associator (x,y,z) = (xy)z - x(yz) is symmetric in x, y; right-symmetric
means it is symmetric in y, z.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .errors import (
    Degenerate,
    NotACocycle,
    NotBijective,
    NotPreLie,
    NotSkew,
    ShapeMismatch,
    SingularMatrix,
)
from .lie_core import (
    BilinearForm,
    LieAlgebra,
    Representation,
    adjoint,
    center,
    coadjoint,
    dual_of,
    is_subalgebra,
    map_property,
    regular_of,
    semidirect,
)
from .operators import check_o_operator, check_one_cocycle, o_operator_residual
from .results import CheckResult
from .scalar_linalg import (
    ONE,
    ZERO,
    Matrix,
    column_space_basis,
    coordinates,
    in_span,
    invert,
    is_invertible,
    kernel,
    scalar,
    unit_vector,
    vscale,
    vsub,
)
from .tensor_cybe import Tensor2, is_skew, tensor_to_map

SIDES = ("left", "right")


def _freeze_cube(cube, n: int) -> tuple:
    if len(cube) != n or any(len(r) != n or any(len(s) != n for s in r) for r in cube):
        raise ShapeMismatch(f"product cube is not {n}x{n}x{n}")
    return tuple(tuple(tuple(scalar(x) for x in s) for s in r) for r in cube)


def _associator(a: tuple, n: int, i: int, j: int, k: int) -> tuple:
    """(e_i e_j) e_k - e_i (e_j e_k) straight from the cube."""
    out = [ZERO] * n
    for l, x in enumerate(a[i][j]):
        if x:
            for m, y in enumerate(a[l][k]):
                if y:
                    out[m] += x * y
    for l, x in enumerate(a[j][k]):
        if x:
            for m, y in enumerate(a[i][l]):
                if y:
                    out[m] -= x * y
    return tuple(out)


def validate_prelie(cube, side: str = "left") -> CheckResult:
    """Symmetry of the associator in its first two (left) or last two (right) slots.

    Witness is the first basis triple ``(i, j, k)`` where it fails.
    """
    if side not in SIDES:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    a = cube.a if isinstance(cube, PreLieAlgebra) else cube
    n = len(a)
    a = _freeze_cube(a, n)
    for i, j, k in product(range(n), repeat=3):
        lhs = _associator(a, n, i, j, k)
        rhs = _associator(a, n, j, i, k) if side == "left" else _associator(a, n, i, k, j)
        if lhs != rhs:
            return CheckResult(False, (i, j, k), vsub(lhs, rhs))
    return CheckResult(True)


@dataclass(frozen=True, eq=False)
class PreLieAlgebra:
    dim: int
    a: tuple
    side: str = "left"
    labels: tuple = field(default=(), compare=False)

    def __init__(self, dim: int, a, side: str = "left", labels=None, check: bool = True):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "a", _freeze_cube(a, dim))
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "labels", tuple(labels) if labels else
                           tuple(f"e{i + 1}" for i in range(dim)))
        if check:
            rep = validate_prelie(self.a, side)
            if not rep.ok:
                raise NotPreLie(f"{side}-symmetry fails at {tuple(i + 1 for i in rep.witness)}")

    @classmethod
    def unchecked(cls, dim: int, a, side: str = "left", labels=None) -> PreLieAlgebra:
        return cls(dim, a, side, labels, check=False)

    @classmethod
    def from_products(cls, dim: int, products: dict, side: str = "left", check: bool = True) -> PreLieAlgebra:
        """Build from ``{(i, j): {k: coeff}}`` (0-based), listing nonzero products only."""
        cube = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), out in products.items():
            for k, x in out.items():
                cube[i][j][k] += scalar(x)
        return cls(dim, cube, side, check=check)

    @classmethod
    def zero(cls, dim: int) -> PreLieAlgebra:
        return cls(dim, [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PreLieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.a == other.a

    def __hash__(self) -> int:
        return hash((self.dim, self.a))

    def __repr__(self) -> str:
        nz = [f"{self.labels[i]}{self.labels[j]}" for i in range(self.dim)
              for j in range(self.dim) if any(self.a[i][j])]
        return f"PreLieAlgebra(dim={self.dim}, side={self.side}, nonzero={' '.join(nz) or 'none'})"

    def multiply(self, x: Sequence, y: Sequence) -> tuple:
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                w = xi * yj
                for k, c in enumerate(self.a[i][j]):
                    if c:
                        out[k] += w * c
        return tuple(out)

    def left_mult(self, i: int) -> Matrix:
        n = self.dim
        return Matrix(n, n, tuple(self.a[i][j][k] for k in range(n) for j in range(n)))


def _cube_from_products(n: int, prod) -> list:
    """Cube whose (i, j) slice is ``prod(i, j)``."""
    return [[list(prod(i, j)) for j in range(n)] for i in range(n)]


def sub_adjacent(A: PreLieAlgebra) -> LieAlgebra:
    """The commutator Lie algebra [x, y] = xy - yx."""
    n = A.dim
    cube = [[[A.a[i][j][k] - A.a[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]
    return LieAlgebra(n, cube, labels=A.labels)


def regular_representation(A: PreLieAlgebra) -> Representation:
    return regular_of(A, sub_adjacent(A))


def prelie_from_cocycle(L: LieAlgebra, rho: Representation, q: Matrix) -> PreLieAlgebra:
    """x * y = q^-1(rho(x) q(y)) for a bijective 1-cocycle q: G -> V."""
    if not is_invertible(q):
        raise NotBijective("cocycle is not bijective")
    rep = check_one_cocycle(L, rho, q)
    if not rep.ok:
        i, j = rep.witness
        raise NotACocycle(f"cocycle identity fails on (e{i + 1}, e{j + 1})")
    qinv = invert(q)
    n = L.dim
    cube = _cube_from_products(n, lambda i, j: qinv.apply(rho.action[i].apply(q.column(j))))
    return PreLieAlgebra(n, cube, labels=L.labels)


@dataclass(frozen=True)
class TwistReport:
    """A product built from a map, plus the subspace condition deciding (left/right) symmetry.

    ``obstruction_witness`` is ``((i, j), vector)`` for the first basis pair whose
    obstruction vector falls outside the required subspace.
    """

    product: PreLieAlgebra
    condition_ok: bool
    obstruction_witness: tuple | None = None
    image_basis: list | None = None
    image_product: PreLieAlgebra | None = None
    algebra_product: PreLieAlgebra | None = None


def prelie_from_o_operator(L: LieAlgebra, rho: Representation, T: Matrix) -> TwistReport:
    """Products induced by T: V -> G.

    * on V: u * v = rho(T(u)) v; left-symmetric iff every O-operator
      obstruction lies in Ker rho;
    * on T(V) (only when T is an O-operator): T(u) . T(v) = T(u * v), in the
      basis of pivot columns of T;
    * on G (only when T is an invertible O-operator): x . y = T(rho(x) T^-1(y)).
    """
    if T.shape != (L.dim, rho.space_dim):
        raise ShapeMismatch(f"map must be {L.dim}x{rho.space_dim} (V -> G)")
    m = rho.space_dim
    images = [T.column(i) for i in range(m)]
    rho_images = [rho.of(x) for x in images]
    v_cube = _cube_from_products(m, lambda i, j: rho_images[i].column(j))
    v_product = PreLieAlgebra.unchecked(m, v_cube, labels=rho.labels)

    kernel_rho = kernel(Matrix.from_columns([a.entries for a in rho.action], rows=m * m))
    witness = None
    is_o = True
    for i in range(m):
        for j in range(i + 1, m):
            obstruction = o_operator_residual(L, rho, T, unit_vector(m, i), unit_vector(m, j))
            if any(obstruction):
                is_o = False
            if witness is None and not in_span(kernel_rho, obstruction):
                witness = ((i, j), obstruction)
    report = dict(product=v_product, condition_ok=witness is None, obstruction_witness=witness)
    if not is_o:
        return TwistReport(**report)

    pivots, basis = column_space_basis(T)
    r = len(basis)

    def image_coords(v):
        return coordinates(basis, T.apply(v))

    img_cube = _cube_from_products(r, lambda s, t: image_coords(v_product.multiply(
        unit_vector(m, pivots[s]), unit_vector(m, pivots[t]))))
    report["image_basis"] = basis
    report["image_product"] = PreLieAlgebra.unchecked(r, img_cube)
    if is_invertible(T):
        Tinv = invert(T)
        g_cube = _cube_from_products(
            L.dim, lambda i, j: T.apply(rho.action[i].apply(Tinv.column(j))))
        report["algebra_product"] = PreLieAlgebra.unchecked(L.dim, g_cube, labels=L.labels)
    return TwistReport(**report)


def twist_obstruction(L: LieAlgebra, f: Matrix, x, y) -> tuple:
    """[f(x), f(y)] - f([f(x), y] + [x, f(y)])."""
    fx, fy = f.apply(x), f.apply(y)
    inner = tuple(a + b for a, b in zip(L.bracket(fx, y), L.bracket(x, fy)))
    return vsub(L.bracket(fx, fy), f.apply(inner))


def adjoint_twist(L: LieAlgebra, f: Matrix, side: str = "left") -> TwistReport:
    """x * y = [f(x), y] (left) or x . y = [x, f(y)] (right).

    ``condition_ok`` holds iff every obstruction [f(x),f(y)] - f([f(x),y] + [x,f(y)])
    lies in the center; that is exactly when the product is left- (resp.
    right-) symmetric.
    """
    if f.shape != (L.dim, L.dim):
        raise ShapeMismatch("map must be square on the algebra")
    if side not in SIDES:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    n = L.dim
    basis = L.basis()
    images = [f.column(i) for i in range(n)]
    if side == "left":
        cube = _cube_from_products(n, lambda i, j: L.bracket(images[i], basis[j]))
    else:
        cube = _cube_from_products(n, lambda i, j: L.bracket(basis[i], images[j]))
    product_ = PreLieAlgebra.unchecked(n, cube, side=side, labels=L.labels)
    z = center(L)
    witness = None
    for i in range(n):
        for j in range(i + 1, n):
            obstruction = twist_obstruction(L, f, basis[i], basis[j])
            if not in_span(z, obstruction):
                witness = ((i, j), obstruction)
                break
        if witness:
            break
    return TwistReport(product_, witness is None, witness)


def twist_by_coefficients(L: LieAlgebra, f: Matrix, side: str = "left") -> PreLieAlgebra:
    """The twisted products written out on the basis, with f(e_i) = sum_l r_il e_l:

    left:  e_i * e_j = sum_l r_il [e_l, e_j]
    right: e_i . e_j = sum_l r_jl [e_i, e_l]
    """
    n = L.dim
    r = [[f[l, i] for l in range(n)] for i in range(n)]
    cube = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i, j, l in product(range(n), repeat=3):
        if side == "left":
            coeff, (p, q) = r[i][l], (l, j)
        else:
            coeff, (p, q) = r[j][l], (i, l)
        if coeff:
            for k, c in L.bracket_terms(p, q):
                cube[i][j][k] += coeff * c
    return PreLieAlgebra.unchecked(n, cube, side=side, labels=L.labels)


def canonical_r(A: PreLieAlgebra) -> tuple[LieAlgebra, Tensor2]:
    """The ambient G(A) x| G(A)* (dual of the regular representation) and
    r = sum_i (e_i (x) e_i* - e_i* (x) e_i) in it."""
    L = sub_adjacent(A)
    ambient = semidirect(L, dual_of(regular_of(A, L)))
    n = A.dim
    terms = {}
    for i in range(n):
        terms[(i, n + i)] = ONE
        terms[(n + i, i)] = -ONE
    return ambient, Tensor2.from_terms((2 * n, 2 * n), terms)


def coadjoint_ambient(A: PreLieAlgebra) -> LieAlgebra:
    """G(A) x| G(A)* through the coadjoint representation instead of L*."""
    L = sub_adjacent(A)
    return semidirect(L, coadjoint(L))


def symplectic_form(A: PreLieAlgebra) -> BilinearForm:
    """omega(x + x*, y + y*) = <x*, y> - <y*, x>; gram [[0, -I], [I, 0]]."""
    n = A.dim
    rows = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[i][n + i] = -ONE
        rows[n + i][i] = ONE
    return BilinearForm.from_rows(rows)


def check_two_cocycle(L: LieAlgebra, B: BilinearForm) -> CheckResult:
    """B([x,y],z) + B([y,z],x) + B([z,x],y) == 0 on all basis triples."""
    if B.space_dim != L.dim:
        raise ShapeMismatch("form and algebra dimensions differ")
    basis = L.basis()
    for i, j, k in product(range(L.dim), repeat=3):
        x, y, z = basis[i], basis[j], basis[k]
        s = B(L.bracket(x, y), z) + B(L.bracket(y, z), x) + B(L.bracket(z, x), y)
        if s:
            return CheckResult(False, (i, j, k), s)
    return CheckResult(True)


def two_cocycle_from_r(L: LieAlgebra, r: Tensor2) -> BilinearForm:
    """B(x, y) = <r^-1(x), y> with r read as a map G* -> G.

    The gram matrix is the inverse of the coefficient array of r.
    """
    if r.dims != (L.dim, L.dim):
        raise ShapeMismatch("tensor does not live over this algebra")
    if not is_skew(r):
        raise NotSkew("r must be skew-symmetric")
    try:
        rinv = invert(tensor_to_map(r))
    except SingularMatrix as exc:
        raise Degenerate("r is degenerate as a map") from exc
    return BilinearForm(rinv.T)


@dataclass(frozen=True)
class InnerDerivationReport:
    holds: bool
    witness: tuple | None = None
    satisfies_operator_form: bool | None = None
    invertible: bool = False
    automorphism: bool | None = None

    def __bool__(self) -> bool:
        return self.holds


def check_inner_derivation_condition(L: LieAlgebra, f: Matrix, reading: str = "sub-adjacent") -> InnerDerivationReport:
    """Does x * y = [f(x), y] have L itself as commutator algebra?

    The default reading checks [x, y] = [f(x), y] - [f(y), x] on every basis
    pair.  ``reading="literal"`` checks [x, y] = [f(x), y] - [y, f(x)]
    instead, i.e. [x, y] = 2[f(x), y] on all ordered pairs.  When f is
    invertible and satisfies the operator form of the CYBE, the report also
    says whether f is an automorphism.
    """
    if f.shape != (L.dim, L.dim):
        raise ShapeMismatch("map must be square on the algebra")
    if reading not in ("sub-adjacent", "literal"):
        raise ValueError(f"unknown reading {reading!r}")
    n = L.dim
    basis = L.basis()
    images = [f.column(i) for i in range(n)]
    witness = None
    for i in range(n):
        for j in range(n) if reading == "literal" else range(i + 1, n):
            lhs = L.bracket_basis(i, j)
            if reading == "literal":
                rhs = vscale(2, L.bracket(images[i], basis[j]))
            else:
                rhs = vsub(L.bracket(images[i], basis[j]), L.bracket(images[j], basis[i]))
            if lhs != rhs:
                witness = (i, j)
                break
        if witness:
            break
    semenov = check_o_operator(L, adjoint(L), f).is_o_operator
    invertible = is_invertible(f)
    auto = map_property(L, f, "automorphism").ok if (semenov and invertible) else None
    return InnerDerivationReport(witness is None, witness, semenov, invertible, auto)


def image_is_subalgebra(L: LieAlgebra, T: Matrix) -> bool:
    return is_subalgebra(L, column_space_basis(T)[1])
