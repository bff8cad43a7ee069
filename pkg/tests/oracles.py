"""Independent reference evaluators used to produce and cross-check expected values.

Nothing here imports the code paths under test beyond plain data holders.
"""

from collections import defaultdict
from fractions import Fraction
from itertools import product

import sympy


def _leg_product(x, y):
    return x + y


def ordered_product_cybe(c, coeff):
    """CYBE residual computed inside U(G) (x) U(G) (x) U(G).

    ``c`` is a structure cube (nested lists), ``coeff`` the n x n coefficient
    array of r.  The leg embeddings carry explicit unit legs (empty words);
    products concatenate words leg by leg and the commutators are formed as
    XY - YX.  Length-2 words are then put in PBW order with
    ab = ba + [a, b] for a > b; the ordered quadratic part must cancel and
    what is left lies in G (x) G (x) G.
    """
    n = len(coeff)
    terms = [(p, q, Fraction(coeff[p][q])) for p in range(n) for q in range(n) if coeff[p][q]]
    r12 = {((p,), (q,), ()): x for p, q, x in terms}
    r13 = {((p,), (), (q,)): x for p, q, x in terms}
    r23 = {((), (p,), (q,)): x for p, q, x in terms}

    def mul(X, Y):
        out = defaultdict(Fraction)
        for kx, a in X.items():
            for ky, b in Y.items():
                out[tuple(_leg_product(u, v) for u, v in zip(kx, ky))] += a * b
        return out

    def comm(X, Y):
        out = defaultdict(Fraction, mul(X, Y))
        for k, v in mul(Y, X).items():
            out[k] -= v
        return out

    total = defaultdict(Fraction)
    for X, Y in ((r12, r13), (r12, r23), (r13, r23)):
        for k, v in comm(X, Y).items():
            total[k] += v

    quadratic = defaultdict(Fraction)
    result = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for legs, v in total.items():
        if not v:
            continue
        lengths = [len(w) for w in legs]
        assert sorted(lengths) == [1, 1, 2], legs
        pos = lengths.index(2)
        a, b = legs[pos]
        if a > b:
            # ab = ba + [a, b]
            quadratic[legs[:pos] + ((b, a),) + legs[pos + 1:]] += v
            for k in range(n):
                ck = Fraction(c[a][b][k])
                if ck:
                    idx = [w[0] if len(w) == 1 else None for w in legs]
                    idx[pos] = k
                    result[idx[0]][idx[1]][idx[2]] += v * ck
        else:
            quadratic[legs] += v
    leftover = {k: v for k, v in quadratic.items() if v}
    assert not leftover, f"ordered quadratic part does not cancel: {leftover}"
    return result


def nonzero_terms3(arr):
    n1, n2, n3 = len(arr), len(arr[0]), len(arr[0][0])
    return {(i, j, k): arr[i][j][k] for i, j, k in product(range(n1), range(n2), range(n3))
            if arr[i][j][k]}


def sympy_rank(rows):
    return sympy.Matrix(rows).rank()


def sympy_inverse(rows):
    return [[Fraction(int(x.p), int(x.q)) for x in row]
            for row in sympy.Matrix(rows).inv().tolist()]


def sympy_nullity(rows):
    return len(sympy.Matrix(rows).nullspace())
