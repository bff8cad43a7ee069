"""The built-in theorem suite run by ``cybekit fixtures`` and by the acceptance tests.

Every criterion is exact (zero tolerance).  Each one returns a
:class:`CriterionResult` carrying per-instance records so failures point at a
concrete algebra, map or tensor.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

from . import fixtures as fx
from .lie_core import (
    BilinearForm,
    LieAlgebra,
    adjoint,
    check_invariant_form,
    check_representation,
    coadjoint,
    dual_of,
    is_nilpotent,
    map_property,
    regular_of,
    semidirect,
    validate_lie,
)
from .operators import (
    check_o_operator,
    check_one_cocycle,
    check_operator_form,
    is_form_skew,
    lift_o_operator,
    map_via_form,
    o_operator_ambient,
    search_skew_solutions,
)
from .pre_lie import (
    adjoint_twist,
    canonical_r,
    check_two_cocycle,
    coadjoint_ambient,
    prelie_from_cocycle,
    prelie_from_o_operator,
    regular_representation,
    sub_adjacent,
    symplectic_form,
    twist_by_coefficients,
    two_cocycle_from_r,
    validate_prelie,
)
from .sampling import (
    DEFAULT_SEED,
    random_invertible,
    random_matrix,
    random_nondegenerate_skew,
    random_skew,
    random_tensor,
    rng,
)
from .scalar_linalg import Matrix, invert, is_invertible, scalar
from .tensor_cybe import Tensor2, Tensor3, check_modified_cybe, cyb_residual, is_skew, transpose21

# CYBE residual of the canonical tensor of PLA placed in G(PLA) x| G(PLA)* with the
# coadjoint action, frozen from the enveloping-algebra oracle in tests/oracles.py.
# Basis (e1, e2, e1*, e2*), 0-based indices.
PLA_COADJOINT_RESIDUAL = {
    (1, 2, 3): -1, (1, 3, 2): 1, (2, 1, 3): 1,
    (2, 3, 1): -1, (3, 1, 2): -1, (3, 2, 1): 1,
}


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool = True
    records: list = field(default_factory=list)
    seconds: float = 0.0

    def record(self, name: str, ok: bool, **info):
        self.records.append({"name": name, "ok": bool(ok), **info})
        if not ok:
            self.ok = False


def _o_operator_pairs():
    return [
        ("AFF1/adjoint", fx.AFF1, adjoint(fx.AFF1)),
        ("H3/coadjoint", fx.H3, coadjoint(fx.H3)),
        ("SL2/adjoint", fx.SL2, adjoint(fx.SL2)),
        ("AFF1/regular(PLA)", fx.AFF1, regular_of(fx.PLA, fx.AFF1)),
    ]


def _lift_residual_formula(L: LieAlgebra, rho, T: Matrix) -> Tensor3:
    """The lifted residual written through O-operator obstructions Phi_ik:

    sum_{i,k} Phi_ik (x) v_i* (x) v_k* - v_i* (x) Phi_ik (x) v_k* + v_i* (x) v_k* (x) Phi_ik
    """
    n, m = L.dim, rho.space_dim
    N = n + m
    report = check_o_operator(L, rho, T)
    terms = {}
    for (i, k), phi in report.residuals.items():
        for sign, (a, b) in ((1, (i, k)), (-1, (k, i))):
            for j, x in enumerate(phi):
                if not x:
                    continue
                x = sign * x
                for key, s in (((j, n + a, n + b), 1), ((n + a, j, n + b), -1), ((n + a, n + b, j), 1)):
                    terms[key] = terms.get(key, 0) + s * x
    return Tensor3.from_terms((N, N, N), terms)


def criterion_1(seed: int) -> CriterionResult:
    res = CriterionResult(1, "tensor CYBE: R0 on AFF1 and bounded search")
    t0 = time.perf_counter()
    res.record("cybe[AFF1,R0]", cyb_residual(fx.AFF1, fx.R0).is_zero())
    found = search_skew_solutions(fx.AFF1, [-1, 0, 1])
    expected = [fx.R0.scale(-1), Tensor2.zeros(2), fx.R0]
    res.record("search[AFF1,{-1,0,1}]", found == expected, count=len(found))
    elapsed = time.perf_counter() - t0
    res.record("runtime_under_1s", elapsed < 1.0, seconds=round(elapsed, 3))
    return res


def criterion_2(seed: int) -> CriterionResult:
    res = CriterionResult(2, "O-operator <=> lifted skew r-matrix")
    t0 = time.perf_counter()
    r = rng(seed)
    for name, L, rho in _o_operator_pairs():
        ambient = o_operator_ambient(L, rho)
        discrepancies = formula_mismatch = positives = 0
        samples = 0
        for zero_prob in (0.0, 0.6):
            for _ in range(100):
                T = random_matrix(r, L.dim, rho.space_dim, zero_prob)
                lifted = lift_o_operator(L, rho, T)
                resid = cyb_residual(ambient, lifted)
                is_o = check_o_operator(L, rho, T).is_o_operator
                discrepancies += is_o != resid.is_zero()
                formula_mismatch += resid != _lift_residual_formula(L, rho, T)
                positives += is_o
                samples += 1
        res.record(f"lift_equivalence[{name}]", discrepancies == 0 and formula_mismatch == 0,
                   samples=samples, o_operators=positives, discrepancies=discrepancies,
                   formula_mismatches=formula_mismatch)
    elapsed = time.perf_counter() - t0
    res.record("runtime_under_30s", elapsed < 30.0, seconds=round(elapsed, 3))
    return res


def criterion_3(seed: int) -> CriterionResult:
    res = CriterionResult(3, "canonical r-matrix solves CYBE; coadjoint version solves modified CYBE")
    for name, A in fx.all_prelie_fixtures().items():
        ambient, r = canonical_r(A)
        res.record(f"canonical_r[{name}]", cyb_residual(ambient, r).is_zero())
        co = coadjoint_ambient(A)
        res.record(f"modified_cybe[{name}]", check_modified_cybe(co, r).ok)
    _, r = canonical_r(fx.PLA)
    resid = cyb_residual(coadjoint_ambient(fx.PLA), r)
    frozen = Tensor3.from_terms((4, 4, 4), PLA_COADJOINT_RESIDUAL)
    res.record("plain_cybe_fails[PLA,coadjoint]", not resid.is_zero() and resid == frozen)
    return res


def _even_fixture_algebras() -> dict:
    out = {"AFF1": fx.AFF1, "ABELIAN2": LieAlgebra.abelian(2), "GL2": fx.GL2, "OSC": fx.OSC}
    for name, A in fx.PRE_LIE.items():
        out[f"amb({name})"] = canonical_r(A)[0]
    return out


def criterion_4(seed: int) -> CriterionResult:
    res = CriterionResult(4, "2-cocycle / symplectic form coherence and Drinfel'd equivalence")
    for name, A in fx.all_prelie_fixtures().items():
        ambient, r = canonical_r(A)
        omega = symplectic_form(A)
        res.record(f"omega_two_cocycle[{name}]", check_two_cocycle(ambient, omega).ok)
        res.record(f"r_inverse_is_omega[{name}]", two_cocycle_from_r(ambient, r) == omega)
    B = two_cocycle_from_r(fx.AFF1, fx.R0)
    res.record("R0_form", B.gram == Matrix.from_rows([[0, -1], [1, 0]]) and check_two_cocycle(fx.AFF1, B).ok)
    r_ = rng(seed)
    for name, L in _even_fixture_algebras().items():
        mismatches = solutions = 0
        samples = []
        for zero_prob in (0.0, 0.5):
            samples += [random_nondegenerate_skew(r_, L.dim, zero_prob) for _ in range(30)]
        for t in samples:
            solves = cyb_residual(L, t).is_zero()
            cocycle = check_two_cocycle(L, two_cocycle_from_r(L, t)).ok
            mismatches += solves != cocycle
            solutions += solves
        res.record(f"drinfeld[{name}]", mismatches == 0, samples=len(samples), solutions=solutions)
    return res


def criterion_5(seed: int) -> CriterionResult:
    res = CriterionResult(5, "operator-form reductions (Kupershmidt, Semenov-Tian-Shansky)")
    r = rng(seed)
    for name, L in (("AFF1", fx.AFF1), ("SL2", fx.SL2)):
        mismatches = solutions = 0
        count = 0
        for zero_prob in (0.0, 0.5):
            for _ in range(100):
                t = random_skew(r, L.dim, zero_prob)
                solves = cyb_residual(L, t).is_zero()
                mismatches += solves != check_operator_form(L, "kupershmidt", t).is_o_operator
                solutions += solves
                count += 1
        res.record(f"kupershmidt[{name}]", mismatches == 0, samples=count, solutions=solutions)
    B = fx.SL2_KILLING
    mismatches = solutions = not_b_skew = 0
    count = 0
    for zero_prob in (0.0, 0.5):
        for _ in range(100):
            t = random_skew(r, 3, zero_prob)
            R = map_via_form(B, t)
            not_b_skew += not is_form_skew(B, R)
            solves = cyb_residual(fx.SL2, t).is_zero()
            mismatches += solves != check_operator_form(fx.SL2, "semenov", R, B).is_o_operator
            solutions += solves
            count += 1
    res.record("semenov[SL2,Killing]", mismatches == 0 and not_b_skew == 0,
               samples=count, solutions=solutions)
    return res


def criterion_6(seed: int) -> CriterionResult:
    res = CriterionResult(6, "pre-Lie constructions")
    P = prelie_from_cocycle(fx.AFF1, regular_of(fx.PLA, fx.AFF1), Matrix.identity(2))
    res.record("from_cocycle[AFF1,L,id]", P == fx.PLA)
    for name, A in fx.all_prelie_fixtures().items():
        L = sub_adjacent(A)
        rep = prelie_from_o_operator(L, regular_of(A, L), Matrix.identity(A.dim))
        res.record(f"from_o_operator_id[{name}]",
                   rep.condition_ok and rep.product == A and rep.algebra_product == A)
    left = adjoint_twist(fx.AFF1, fx.F0, "left")
    expected = [[[0, 0] for _ in range(2)] for _ in range(2)]
    expected[0][0] = [0, -1]
    res.record("twist_left[AFF1,F0]", left.condition_ok and left.product.a == tuple(
        tuple(tuple(scalar(x) for x in s) for s in row) for row in expected)
        and validate_prelie(left.product.a, "left").ok)
    right = adjoint_twist(fx.AFF1, fx.F0, "right")
    res.record("twist_right[AFF1,F0]", right.condition_ok and validate_prelie(right.product.a, "right").ok)
    r = rng(seed)
    mismatches = 0
    count = 0
    for L in (fx.AFF1, fx.H3, fx.SL2):
        for _ in range(40):
            f = random_matrix(r, L.dim, L.dim)
            for side in ("left", "right"):
                mismatches += adjoint_twist(L, f, side).product != twist_by_coefficients(L, f, side)
            count += 1
    res.record("basis_formulas", mismatches == 0, samples=count)
    return res


def _h3_invertible_derivation(r) -> Matrix:
    """Derivations of H3 in closed form: any 2x2 block A on span(e1, e2), free
    e3-components, and D(e3) = tr(A) e3.  Invertible iff det A != 0 != tr A."""
    while True:
        m = random_matrix(r, 3, 3)
        a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
        if a * d - b * c and a + d:
            rows = m.to_rows()
            rows[0][2] = rows[1][2] = 0
            rows[2][2] = a + d
            return Matrix.from_rows(rows)


def criterion_7(seed: int) -> CriterionResult:
    res = CriterionResult(7, "invertible O-operator <=> inverse is a 1-cocycle")
    r = rng(seed)
    pairs = _o_operator_pairs() + [("H3/adjoint", fx.H3, adjoint(fx.H3))]
    for name, L, rho in pairs:
        if rho.space_dim != L.dim:
            continue
        mismatches = positives = 0
        samples = [random_invertible(r, L.dim, zp) for zp in (0.0, 0.6) for _ in range(30)]
        if name.startswith("AFF1/regular"):
            samples.append(Matrix.identity(2))
        if name == "H3/adjoint":
            samples += [invert(_h3_invertible_derivation(r)) for _ in range(30)]
        for T in samples:
            is_o = check_o_operator(L, rho, T).is_o_operator
            cocycle = check_one_cocycle(L, rho, invert(T)).ok
            mismatches += is_o != cocycle
            positives += is_o
        res.record(f"duality[{name}]", mismatches == 0, samples=len(samples), o_operators=positives)
    return res


def _quadratic_algebras() -> list:
    out = [(f"ABELIAN{n}", LieAlgebra.abelian(n), BilinearForm(Matrix.identity(n))) for n in (1, 2, 3, 4)]
    out += [("SL2", fx.SL2, fx.SL2_KILLING), ("GL2", fx.GL2, fx.GL2_TRACE), ("OSC", fx.OSC, fx.OSC_FORM)]
    return out


def criterion_8(seed: int) -> CriterionResult:
    res = CriterionResult(8, "invertible skew solutions force a derivation and nilpotency")
    for name, L, B in _quadratic_algebras():
        if not check_invariant_form(L, B).ok:
            res.record(f"form_valid[{name}]", False)
            continue
        sols = search_skew_solutions(L, [-1, 0, 1])
        invertible = [t for t in sols if is_invertible(t.as_matrix())]
        derivations = all(map_property(L, invert(map_via_form(B, t)), "derivation").ok for t in invertible)
        nilpotent = is_nilpotent(L) if invertible else True
        res.record(f"inverse_is_derivation[{name}]", derivations and nilpotent,
                   solutions=len(sols), invertible=len(invertible))
        if name == "SL2":
            res.record("no_invertible_solution[SL2]", not invertible)
    return res


def criterion_9(seed: int) -> CriterionResult:
    res = CriterionResult(9, "structural invariants")
    ambients = {}
    duals = {}
    for name, L, rho in _o_operator_pairs():
        ambients[f"lift[{name}]"] = o_operator_ambient(L, rho)
        ambients[f"module[{name}]"] = semidirect(L, rho)
        duals[name] = dual_of(rho)
    for name, A in fx.all_prelie_fixtures().items():
        ambients[f"canonical[{name}]"] = canonical_r(A)[0]
        ambients[f"coadjoint[{name}]"] = coadjoint_ambient(A)
        duals[f"regular({name})"] = dual_of(regular_representation(A))
    for name, L in ambients.items():
        res.record(f"semidirect_valid[{name}]", validate_lie(L).ok)
    for name, rho in duals.items():
        res.record(f"dual_rep[{name}]", check_representation(rho).ok)
    r = rng(seed)
    involution = scaling = 0
    count = 0
    for L in (fx.AFF1, fx.H3, fx.SL2, fx.GL2, canonical_r(fx.PLA)[0]):
        for _ in range(20):
            t = random_tensor(r, L.dim)
            involution += transpose21(transpose21(t)) != t
            scaling += cyb_residual(L, t.scale(2)) != cyb_residual(L, t).scale(4)
            count += 1
    res.record("transpose21_involution", involution == 0, samples=count)
    res.record("residual_quadratic", scaling == 0, samples=count)
    res.record("lift_is_skew", all(
        is_skew(lift_o_operator(L, rho, random_matrix(r, L.dim, rho.space_dim)))
        for _, L, rho in _o_operator_pairs()))
    return res


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def run_criterion(fn, seed: int | None = None) -> CriterionResult:
    seed = DEFAULT_SEED if seed is None else seed
    t0 = time.perf_counter()
    result = fn(seed)
    result.seconds = time.perf_counter() - t0
    return result


def run_all(seed: int | None = None) -> list:
    return [run_criterion(fn, seed) for fn in CRITERIA]
