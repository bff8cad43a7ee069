from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cybekit import fixtures as fx
from cybekit.errors import ShapeMismatch
from cybekit.lie_core import LieAlgebra, killing_form
from cybekit.operators import search_skew_solutions
from cybekit.pre_lie import canonical_r
from cybekit.sampling import random_skew, random_tensor, rng
from cybekit.scalar_linalg import Matrix, invert
from cybekit.tensor_cybe import (
    Tensor2,
    Tensor3,
    check_modified_cybe,
    co_jacobi_residual,
    cobracket,
    cyb_residual,
    cyb_terms,
    is_skew,
    map_to_tensor,
    solves_cybe,
    tensor_to_map,
    transpose21,
)
from oracles import nonzero_terms3, ordered_product_cybe

ORACLE_ALGEBRAS = [fx.AFF1, fx.H3, fx.SL2, fx.GL2, fx.OSC, canonical_r(fx.PLB)[0]]


def test_r0_solves_cybe_term_by_term():
    a, b, c = cyb_terms(fx.AFF1, fx.R0)
    assert a == Tensor3.from_terms((2, 2, 2), {(1, 0, 1): 1, (1, 1, 0): -1})
    assert b == Tensor3.from_terms((2, 2, 2), {(0, 1, 1): -1, (1, 1, 0): 1})
    assert c == Tensor3.from_terms((2, 2, 2), {(0, 1, 1): 1, (1, 0, 1): -1})
    assert cyb_residual(fx.AFF1, fx.R0).is_zero()


def test_e2_e1_fails_with_first_coefficient():
    r = Tensor2.from_terms((2, 2), {(1, 0): 1})
    res = cyb_residual(fx.AFF1, r)
    assert res.terms() == [(1, 1, 0, 1)]
    assert res.first_nonzero() == (1, 1, 0)


def test_e1_e1_is_a_trivial_solution():
    assert solves_cybe(fx.AFF1, Tensor2.from_terms((2, 2), {(0, 0): 1}))


@pytest.mark.parametrize("L", ORACLE_ALGEBRAS, ids=["AFF1", "H3", "SL2", "GL2", "OSC", "canonical_PLB"])
def test_residual_matches_enveloping_oracle(L):
    r = rng(11)
    for zero_prob in (0.0, 0.5, 0.8):
        for _ in range(8):
            t = random_tensor(r, L.dim, zero_prob)
            expected = ordered_product_cybe(L.c, t.coeff)
            got = cyb_residual(L, t)
            assert nonzero_terms3(expected) == {(i, j, k): x for i, j, k, x in got.terms()}


def test_residual_quadratic_and_zero():
    r = rng(5)
    for L in (fx.SL2, fx.H3):
        t = random_tensor(r, L.dim)
        assert cyb_residual(L, t.scale(2)) == cyb_residual(L, t).scale(4)
        assert cyb_residual(L, Tensor2.zeros(L.dim)).is_zero()


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_transpose21_involution(rows):
    t = Tensor2.from_rows(rows)
    assert transpose21(transpose21(t)) == t
    assert is_skew(t - transpose21(t))
    assert map_to_tensor(tensor_to_map(t)) == t


def test_tensor_map_convention():
    # T(e_a*) = sum_b coeff[a][b] e_b
    T = tensor_to_map(fx.R0)
    assert T.column(0) == (0, 1)
    assert T.column(1) == (-1, 0)


def test_search_aff1():
    assert search_skew_solutions(fx.AFF1, [-1, 0, 1]) == [fx.R0.scale(-1), Tensor2.zeros(2), fx.R0]


def test_search_sl2_frozen():
    expected = [Tensor2.wedge(3, 0, 2, -1), Tensor2.wedge(3, 1, 2, -1), Tensor2.zeros(3),
                Tensor2.wedge(3, 1, 2, 1), Tensor2.wedge(3, 0, 2, 1)]
    assert search_skew_solutions(fx.SL2, [-1, 0, 1]) == expected


def test_modified_cybe_failure_example():
    r = Tensor2.from_terms((2, 2), {(1, 0): 1})
    res = check_modified_cybe(fx.AFF1, r)
    assert not res.ok
    assert res.witness == (0,)
    assert res.residual == Tensor3.from_terms((2, 2, 2), {(1, 1, 0): 2})


def test_casimir_solves_modified_cybe():
    # The Casimir element of sl2 is ad-invariant, so its residual is too.
    cas = map_to_tensor(invert(killing_form(fx.SL2).gram))
    res = check_modified_cybe(fx.SL2, cas)
    assert res.ok
    assert not cyb_residual(fx.SL2, cas).is_zero()
    for x in fx.SL2.basis():
        assert cobracket(fx.SL2, cas, x).is_zero()


def test_cobracket_of_solutions_is_coskew_and_cojacobi():
    for L in (fx.AFF1, fx.SL2, fx.H3):
        for r in search_skew_solutions(L, [-1, 0, 1]):
            for x in L.basis():
                d = cobracket(L, r, x)
                assert transpose21(d) == d.scale(-1)
                assert co_jacobi_residual(L, r, x).is_zero()


def test_shape_errors():
    with pytest.raises(ShapeMismatch):
        cyb_residual(fx.AFF1, Tensor2.zeros(3))
    with pytest.raises(ShapeMismatch):
        cobracket(fx.AFF1, fx.R0, (1, 0, 0))


def test_literal_format():
    assert str(fx.R0) == "(1,2)=1 (2,1)=-1"
    assert str(Tensor2.zeros(2)) == "0"
