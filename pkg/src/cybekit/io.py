"""JSON file formats (1-based indices, rational literals as strings).

Algebra:        {"dim": n, "labels": [...], "brackets": [{"i": 1, "j": 2, "out": {"2": "1"}}, ...]}
                (i < j, nonzero brackets only)
Representation: {"algebra": <name | inline algebra>, "space_dim": m, "matrices": [[[...]], ...]}
Linear map:     {"rows": m, "cols": n, "matrix": [["p/q", ...], ...]}  (column j = image of basis j)
Tensor:         {"dims": [a, b], "terms": [{"i": a, "j": b, "coeff": "p/q"}, ...]}
                (a bare list of terms is accepted too)
Pre-Lie:        {"dim": n, "products": [{"i": 1, "j": 1, "out": {"1": "1"}}, ...]}
                (optional "side": "right")
Bilinear form:  {"gram": [[...], ...]}

``dumps`` is canonical: parsing its output and dumping again gives identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import fixtures as fx
from .errors import CybeError
from .lie_core import BilinearForm, LieAlgebra, Representation, explicit
from .pre_lie import PreLieAlgebra
from .scalar_linalg import Matrix, format_scalar, parse_scalar
from .tensor_cybe import Tensor2, Tensor3


class InputError(CybeError, ValueError):
    """Malformed input; the message names the source and the location."""


def _fmt(x) -> str:
    return format_scalar(x)


def _num(text, where: str):
    if isinstance(text, int) and not isinstance(text, bool):
        return parse_scalar(str(text))
    if not isinstance(text, str):
        raise InputError(f"{where}: expected a rational literal, got {text!r}")
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def _index(value, bound: int, where: str) -> int:
    if isinstance(value, str) and value.isdigit():
        value = int(value)
    if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= bound:
        raise InputError(f"{where}: index {value!r} outside 1..{bound}")
    return value - 1


def _require(doc: dict, key: str, where: str):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"{where}: missing key {key!r}")
    return doc[key]


def algebra_to_dict(L: LieAlgebra) -> dict:
    brackets = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            terms = L.bracket_terms(i, j)
            if terms:
                brackets.append({"i": i + 1, "j": j + 1,
                                 "out": {str(k + 1): _fmt(x) for k, x in terms}})
    return {"dim": L.dim, "labels": list(L.labels), "brackets": brackets}


def algebra_from_dict(doc: dict, where: str = "<algebra>", check: bool = True) -> LieAlgebra:
    n = _require(doc, "dim", where)
    if not isinstance(n, int) or n < 0:
        raise InputError(f"{where}: dim must be a nonnegative integer")
    labels = doc.get("labels") or None
    brackets = {}
    for pos, entry in enumerate(_require(doc, "brackets", where)):
        here = f"{where}: brackets[{pos}]"
        i = _index(_require(entry, "i", here), n, here)
        j = _index(_require(entry, "j", here), n, here)
        if i >= j:
            raise InputError(f"{here}: brackets must list i < j")
        out = {_index(k, n, here): _num(v, f"{here}.out[{k}]") for k, v in _require(entry, "out", here).items()}
        brackets[(i, j)] = out
    try:
        return LieAlgebra.from_brackets(n, brackets, labels=labels, check=check)
    except CybeError as exc:
        raise InputError(f"{where}: {exc}") from None


def prelie_to_dict(A: PreLieAlgebra) -> dict:
    products = []
    for i in range(A.dim):
        for j in range(A.dim):
            out = {str(k + 1): _fmt(x) for k, x in enumerate(A.a[i][j]) if x}
            if out:
                products.append({"i": i + 1, "j": j + 1, "out": out})
    doc = {"dim": A.dim, "products": products}
    if A.side != "left":
        doc["side"] = A.side
    return doc


def prelie_from_dict(doc: dict, where: str = "<pre-lie>", check: bool = True) -> PreLieAlgebra:
    n = _require(doc, "dim", where)
    side = doc.get("side", "left")
    if side not in ("left", "right"):
        raise InputError(f"{where}: side must be 'left' or 'right'")
    products = {}
    for pos, entry in enumerate(_require(doc, "products", where)):
        here = f"{where}: products[{pos}]"
        i = _index(_require(entry, "i", here), n, here)
        j = _index(_require(entry, "j", here), n, here)
        out = {_index(k, n, here): _num(v, f"{here}.out[{k}]") for k, v in _require(entry, "out", here).items()}
        products[(i, j)] = out
    try:
        return PreLieAlgebra.from_products(n, products, side=side, check=check)
    except CybeError as exc:
        raise InputError(f"{where}: {exc}") from None


def _rows_to_json(m: Matrix) -> list:
    return [[_fmt(x) for x in m.row(i)] for i in range(m.rows)]


def _rows_from_json(rows, nrows: int, ncols: int, where: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != nrows:
        raise InputError(f"{where}: expected {nrows} rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != ncols:
            raise InputError(f"{where}: row {i + 1} must have {ncols} entries")
        out.append([_num(x, f"{where}[{i + 1}][{j + 1}]") for j, x in enumerate(row)])
    return Matrix.from_rows(out, cols=ncols)


def map_to_dict(T: Matrix) -> dict:
    return {"rows": T.rows, "cols": T.cols, "matrix": _rows_to_json(T)}


def map_from_dict(doc: dict, where: str = "<map>") -> Matrix:
    rows, cols = _require(doc, "rows", where), _require(doc, "cols", where)
    return _rows_from_json(_require(doc, "matrix", where), rows, cols, f"{where}: matrix")


def form_to_dict(B: BilinearForm) -> dict:
    return {"gram": _rows_to_json(B.gram)}


def form_from_dict(doc: dict, where: str = "<form>") -> BilinearForm:
    gram = _require(doc, "gram", where)
    n = len(gram) if isinstance(gram, list) else 0
    return BilinearForm(_rows_from_json(gram, n, n, f"{where}: gram"))


def tensor_to_dict(r: Tensor2) -> dict:
    return {"dims": list(r.dims),
            "terms": [{"i": i + 1, "j": j + 1, "coeff": _fmt(x)} for i, j, x in r.terms()]}


def tensor_from_dict(doc, where: str = "<tensor>", dims=None) -> Tensor2:
    if isinstance(doc, list):
        terms = doc
        if dims is None:
            raise InputError(f"{where}: a bare term list needs the dimension of its algebra")
    else:
        terms = _require(doc, "terms", where)
        dims = tuple(_require(doc, "dims", where))
        if len(dims) != 2:
            raise InputError(f"{where}: dims must have two entries")
    a, b = dims
    out = {}
    for pos, t in enumerate(terms):
        here = f"{where}: terms[{pos}]"
        key = (_index(_require(t, "i", here), a, here), _index(_require(t, "j", here), b, here))
        out[key] = out.get(key, 0) + _num(_require(t, "coeff", here), f"{here}.coeff")
    return Tensor2.from_terms((a, b), out)


def tensor3_terms(t: Tensor3) -> list:
    return [{"i": i + 1, "j": j + 1, "k": k + 1, "coeff": _fmt(x)} for i, j, k, x in t.terms()]


def representation_to_dict(rho: Representation, algebra_name: str | None = None) -> dict:
    return {
        "algebra": algebra_name if algebra_name else algebra_to_dict(rho.algebra),
        "space_dim": rho.space_dim,
        "matrices": [_rows_to_json(a) for a in rho.action],
    }


def representation_from_dict(doc: dict, where: str = "<representation>", algebra: LieAlgebra | None = None,
                             check: bool = True) -> Representation:
    ref = doc.get("algebra") if isinstance(doc, dict) else None
    if isinstance(ref, str):
        if ref not in fx.LIE_ALGEBRAS:
            raise InputError(f"{where}: unknown algebra name {ref!r}")
        L = fx.LIE_ALGEBRAS[ref]
    elif isinstance(ref, dict):
        L = algebra_from_dict(ref, f"{where}: algebra", check=check)
    elif algebra is not None:
        L = algebra
    else:
        raise InputError(f"{where}: missing key 'algebra'")
    if algebra is not None and L != algebra:
        raise InputError(f"{where}: representation is over a different algebra")
    m = _require(doc, "space_dim", where)
    mats = _require(doc, "matrices", where)
    if not isinstance(mats, list) or len(mats) != L.dim:
        raise InputError(f"{where}: need {L.dim} matrices")
    mats = [_rows_from_json(x, m, m, f"{where}: matrices[{i + 1}]") for i, x in enumerate(mats)]
    try:
        return explicit(L, mats, check=check)
    except CybeError as exc:
        raise InputError(f"{where}: {exc}") from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def compact(doc) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def read_json(path) -> object:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def detect_kind(doc) -> str:
    if isinstance(doc, list):
        return "tensor"
    if not isinstance(doc, dict):
        return "unknown"
    for key, kind in (("brackets", "algebra"), ("products", "prelie"), ("matrices", "representation"),
                      ("matrix", "map"), ("terms", "tensor"), ("gram", "form")):
        if key in doc:
            return kind
    return "unknown"
