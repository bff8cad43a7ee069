import pytest

from cybekit import fixtures as fx
from cybekit.errors import BudgetExceeded, InvalidForm, ShapeMismatch
from cybekit.lie_core import BilinearForm, LieAlgebra, adjoint, coadjoint, map_property, regular_of, validate_lie
from cybekit.operators import (
    check_o_operator,
    check_one_cocycle,
    check_operator_form,
    is_form_skew,
    lift_o_operator,
    map_via_form,
    o_operator_ambient,
    o_operator_residual,
    search_skew_solutions,
    skew_from_upper,
    tensor_via_form,
)
from cybekit.sampling import random_invertible, random_matrix, random_skew, rng
from cybekit.scalar_linalg import Matrix, invert
from cybekit.tensor_cybe import Tensor2, cobracket, cyb_residual, is_skew, tensor_to_map
from oracles import nonzero_terms3, ordered_product_cybe

PAIRS = [
    ("AFF1/adjoint", fx.AFF1, adjoint(fx.AFF1)),
    ("H3/adjoint", fx.H3, adjoint(fx.H3)),
    ("H3/coadjoint", fx.H3, coadjoint(fx.H3)),
    ("SL2/adjoint", fx.SL2, adjoint(fx.SL2)),
    ("AFF1/regular(PLA)", fx.AFF1, regular_of(fx.PLA, fx.AFF1)),
]


def _sampled_o_operators(L, rho, seed, count=300):
    r = rng(seed)
    out = []
    for _ in range(count):
        T = random_matrix(r, L.dim, rho.space_dim, 0.6)
        if check_o_operator(L, rho, T).is_o_operator:
            out.append(T)
    return out


def test_identity_is_o_operator_for_regular_rep():
    rho = regular_of(fx.PLA, fx.AFF1)
    assert check_o_operator(fx.AFF1, rho, Matrix.identity(2)).is_o_operator


def test_o_operator_failure_witness():
    rep = check_o_operator(fx.AFF1, adjoint(fx.AFF1), Matrix.identity(2))
    assert not rep.is_o_operator
    assert rep.witness == (0, 1)
    # [e1,e2] - ([e1,e2] - [e2,e1]) = -e2
    assert rep.residuals[(0, 1)] == (0, -1)
    assert o_operator_residual(fx.AFF1, adjoint(fx.AFF1), Matrix.identity(2), (1, 0), (0, 1)) == (0, -1)


def test_lift_layout():
    rho = regular_of(fx.PLA, fx.AFF1)
    r = lift_o_operator(fx.AFF1, rho, fx.F0)
    assert r == Tensor2.from_terms((4, 4), {(1, 2): 1, (2, 1): -1})
    assert is_skew(r)


@pytest.mark.parametrize("name,L,rho", PAIRS, ids=[p[0] for p in PAIRS])
def test_lift_equivalence_against_oracle(name, L, rho):
    ambient = o_operator_ambient(L, rho)
    assert validate_lie(ambient).ok
    r = rng(17)
    seen = set()
    for zero_prob in (0.0, 0.7):
        for _ in range(12):
            T = random_matrix(r, L.dim, rho.space_dim, zero_prob)
            lifted = lift_o_operator(L, rho, T)
            expected = nonzero_terms3(ordered_product_cybe(ambient.c, lifted.coeff))
            got = cyb_residual(ambient, lifted)
            assert expected == {(i, j, k): x for i, j, k, x in got.terms()}
            is_o = check_o_operator(L, rho, T).is_o_operator
            assert is_o == (not expected)
            seen.add(is_o)
    # in dimension 2 with the regular representation of PLA every map is an O-operator
    assert seen == ({True} if name == "AFF1/regular(PLA)" else {True, False})


@pytest.mark.parametrize("name,L,rho", [PAIRS[2], PAIRS[4]], ids=["H3/coadjoint", "AFF1/regular(PLA)"])
def test_lift_cobracket_restricts_to_dual_module(name, L, rho):
    # For an O-operator T, delta(v_k*) lies in V* (x) V* and equals minus the
    # transposed bracket [u,v] = rho(Tu)v - rho(Tv)u on V.
    n, m = L.dim, rho.space_dim
    ambient = o_operator_ambient(L, rho)
    ops = _sampled_o_operators(L, rho, 23)
    assert any(not T.is_zero() for T in ops)
    for T in ops:
        r = lift_o_operator(L, rho, T)
        for k in range(m):
            x = tuple(1 if p == n + k else 0 for p in range(n + m))
            d = cobracket(ambient, r, x)
            for a, b, c in d.terms():
                assert a >= n and b >= n
            for a in range(m):
                for b in range(m):
                    Ta, Tb = T.column(a), T.column(b)
                    br = tuple(p - q for p, q in zip(rho.act(Ta, _unit(m, b)), rho.act(Tb, _unit(m, a))))
                    assert d[n + a, n + b] == -br[k]


def _unit(m, i):
    return tuple(1 if p == i else 0 for p in range(m))


def test_kupershmidt_matches_tensor_cybe():
    r = rng(29)
    for L in (fx.AFF1, fx.SL2, fx.H3):
        agree = set()
        for zero_prob in (0.0, 0.6):
            for _ in range(60):
                t = random_skew(r, L.dim, zero_prob)
                k = check_operator_form(L, "kupershmidt", t).is_o_operator
                assert k == cyb_residual(L, t).is_zero()
                agree.add(k)
        # every skew tensor on a 2-dim algebra is a multiple of R0
        assert agree == ({True} if L.dim == 2 else {True, False})


def test_semenov_examples():
    B = fx.SL2_KILLING
    e, f, h = fx.SL2.basis()
    for x in (e, f):
        assert check_operator_form(fx.SL2, "semenov", fx.SL2.ad(x), B).is_o_operator
    rep = check_operator_form(fx.SL2, "semenov", fx.SL2.ad(h), B)
    assert not rep.is_o_operator
    assert rep.witness == (0, 1)
    assert rep.residuals[(0, 1)] == (0, 0, -4)


def test_semenov_matches_tensor_cybe_for_form_skew_maps():
    B = fx.SL2_KILLING
    r = rng(31)
    for _ in range(100):
        t = random_skew(r, 3, 0.5)
        R = map_via_form(B, t)
        assert is_form_skew(B, R)
        assert tensor_via_form(B, R) == t
        assert check_operator_form(fx.SL2, "semenov", R, B).is_o_operator == cyb_residual(fx.SL2, t).is_zero()
        assert check_operator_form(fx.SL2, "semenov", t, B).is_o_operator == cyb_residual(fx.SL2, t).is_zero()


def test_semenov_rejects_bad_forms():
    with pytest.raises(InvalidForm):
        check_operator_form(fx.AFF1, "semenov", fx.R0, BilinearForm(Matrix.identity(2)))
    with pytest.raises(InvalidForm):
        check_operator_form(fx.SL2, "semenov", fx.SL2.ad((1, 0, 0)))
    with pytest.raises(ValueError):
        check_operator_form(fx.SL2, "bogus", fx.SL2.ad((1, 0, 0)))


@pytest.mark.parametrize("name,L,rho", PAIRS, ids=[p[0] for p in PAIRS])
def test_one_cocycle_duality(name, L, rho):
    if L.dim != rho.space_dim:
        pytest.skip("needs a module of the same dimension")
    r = rng(37)
    for zero_prob in (0.0, 0.5):
        for _ in range(40):
            T = random_invertible(r, L.dim, zero_prob)
            assert check_o_operator(L, rho, T).is_o_operator == check_one_cocycle(L, rho, invert(T)).ok


def test_one_cocycle_examples():
    rho = regular_of(fx.PLA, fx.AFF1)
    assert check_one_cocycle(fx.AFF1, rho, Matrix.identity(2)).ok
    res = check_one_cocycle(fx.AFF1, adjoint(fx.AFF1), Matrix.identity(2))
    assert not res.ok and res.witness == (0, 1)


def test_search_budget_and_order():
    with pytest.raises(BudgetExceeded):
        search_skew_solutions(fx.SL2, [-1, 0, 1], budget=26)
    assert search_skew_solutions(fx.SL2, [-1, 0, 1], budget=27)
    assert skew_from_upper(3, [1, 2, 3]) == Tensor2.from_rows([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
    assert search_skew_solutions(fx.AFF1, [1, 0, -1]) == [fx.R0, Tensor2.zeros(2), fx.R0.scale(-1)]


def test_invertible_skew_solution_inverse_is_derivation():
    # On a nilpotent quadratic algebra an invertible skew solution gives a
    # derivation, through the form.
    L = LieAlgebra.abelian(2)
    B = BilinearForm(Matrix.identity(2))
    sols = [t for t in search_skew_solutions(L, [-1, 0, 1]) if not t.is_zero()]
    assert sols
    for t in sols:
        assert map_property(L, invert(map_via_form(B, t)), "derivation").ok


def test_shape_errors():
    with pytest.raises(ShapeMismatch):
        check_o_operator(fx.AFF1, adjoint(fx.AFF1), Matrix.identity(3))
    with pytest.raises(ShapeMismatch):
        check_one_cocycle(fx.AFF1, adjoint(fx.AFF1), Matrix.zeros(2, 3))
    assert tensor_to_map(fx.R0).shape == (2, 2)
