"""Named, hand-checkable objects shared by the tests, the CLI and the acceptance suite.

AFF1  dim 2, [e1,e2] = e2
H3    Heisenberg, [e1,e2] = e3
SL2   basis (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h
PL1   dim-1 pre-Lie, e1e1 = e1
PLA   dim-2 pre-Lie, e1e1 = e1, e1e2 = e2 (commutator algebra AFF1)
PLB   dim-2 pre-Lie, e1e1 = -e2 (commutator algebra abelian)
F0    map on AFF1, e1 -> e2, e2 -> 0
R0    e1 (x) e2 - e2 (x) e1 over a 2-dim space
"""

from __future__ import annotations

from .lie_core import BilinearForm, LieAlgebra, killing_form
from .pre_lie import PreLieAlgebra
from .scalar_linalg import Matrix
from .tensor_cybe import Tensor2

AFF1 = LieAlgebra.from_brackets(2, {(0, 1): {1: 1}})
H3 = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}})
# e=0, f=1, h=2
SL2 = LieAlgebra.from_brackets(
    3, {(0, 2): {0: -2}, (1, 2): {1: 2}, (0, 1): {2: 1}}, labels=("e", "f", "h")
)
# sl2 + a central element; trace form makes it quadratic
GL2 = LieAlgebra.from_brackets(
    4, {(0, 2): {0: -2}, (1, 2): {1: 2}, (0, 1): {2: 1}}, labels=("e", "f", "h", "z")
)
# oscillator algebra: [t,x] = y, [t,y] = -x, [x,y] = z; solvable, not nilpotent, quadratic
OSC = LieAlgebra.from_brackets(
    4, {(0, 1): {2: 1}, (0, 2): {1: -1}, (1, 2): {3: 1}}, labels=("t", "x", "y", "z")
)

PL1 = PreLieAlgebra.from_products(1, {(0, 0): {0: 1}})
PLA = PreLieAlgebra.from_products(2, {(0, 0): {0: 1}, (0, 1): {1: 1}})
PLB = PreLieAlgebra.from_products(2, {(0, 0): {1: -1}})

F0 = Matrix.from_rows([[0, 0], [1, 0]])
R0 = Tensor2.wedge(2, 0, 1)

SL2_KILLING = killing_form(SL2)
GL2_TRACE = BilinearForm.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1]])
OSC_FORM = BilinearForm.from_rows([[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]])

LIE_ALGEBRAS = {"AFF1": AFF1, "H3": H3, "SL2": SL2, "GL2": GL2, "OSC": OSC}
PRE_LIE = {"PL1": PL1, "PLA": PLA, "PLB": PLB}
MAPS = {"F0": F0}
TENSORS = {"R0": R0}
FORMS = {"SL2_KILLING": SL2_KILLING, "GL2_TRACE": GL2_TRACE, "OSC_FORM": OSC_FORM}


def zero_prelie_fixtures() -> dict:
    return {f"ZERO{n}": PreLieAlgebra.zero(n) for n in (1, 2, 3)}


def all_prelie_fixtures() -> dict:
    return {**PRE_LIE, **zero_prelie_fixtures()}


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra.abelian(n)
