"""Command-line front end.

Every check prints one line-oriented record per result::

    name=cybe status=fail witness=(1,1,2) residual_zero=false

Indices in records and files are 1-based.  Exit codes: 0 when the property
holds (or the object is valid), 1 when it fails, 2 on input errors.

Objects on the command line are either fixture names (AFF1, H3, SL2, GL2, OSC,
PL1, PLA, PLB, F0, R0, SL2_KILLING, ...) or paths to JSON files in the formats
of :mod:`cybekit.io`.  Representations are written ``adjoint``, ``coadjoint``,
``regular:<prelie>``, ``dual:<rep>`` or a file path.

Tensors inside records use the literal ``(i,j)=c;(k,l)=d`` (1-based, nonzero
terms in lexicographic order) or ``0``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures as fx
from . import io
from .errors import BudgetExceeded, CybeError, NotACocycle, NotBijective
from .lie_core import (
    BilinearForm,
    LieAlgebra,
    Representation,
    adjoint,
    check_representation,
    coadjoint,
    dual_of,
    regular_of,
    validate_lie,
)
from .operators import (
    DEFAULT_BUDGET,
    check_o_operator,
    check_one_cocycle,
    lift_o_operator,
    o_operator_ambient,
    search_skew_solutions,
)
from .pre_lie import (
    PreLieAlgebra,
    adjoint_twist,
    canonical_r,
    check_two_cocycle,
    prelie_from_cocycle,
    prelie_from_o_operator,
    symplectic_form,
    two_cocycle_from_r,
    validate_prelie,
)
from .scalar_linalg import Matrix, format_scalar, parse_scalar
from .suite import run_all
from .tensor_cybe import Tensor2, Tensor3, check_modified_cybe, cyb_residual, solves_cybe

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, tuple):
        return "(" + ",".join(_value(x) for x in v) + ")"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return v
    return format_scalar(v)


def format_record(name: str, ok: bool, witness=None, residual_zero=None, **fields) -> str:
    """One key=value record; ``witness`` is 0-based and is printed 1-based."""
    parts = [f"name={name}", f"status={'ok' if ok else 'fail'}"]
    if witness is not None:
        parts.append("witness=" + _value(tuple(i + 1 for i in witness)))
    if residual_zero is not None:
        parts.append("residual_zero=" + _value(residual_zero))
    parts += [f"{k}={_value(v)}" for k, v in fields.items()]
    return " ".join(parts)


def parse_record(line: str) -> dict:
    return dict(part.split("=", 1) for part in line.split())


def _vector(v) -> str:
    return _value(tuple(v))


def _tensor_literal(t) -> str:
    return str(t).replace(" ", ";")


class Workspace:
    """Resolves command-line arguments to objects; validates on load unless unchecked."""

    def __init__(self, check: bool = True):
        self.check = check

    def _load(self, arg: str, kind: str):
        doc = io.read_json(arg)
        found = io.detect_kind(doc)
        if found != kind:
            raise io.InputError(f"{arg}: expected a {kind} document, found {found}")
        return doc

    def algebra(self, arg: str) -> LieAlgebra:
        if arg in fx.LIE_ALGEBRAS:
            return fx.LIE_ALGEBRAS[arg]
        return io.algebra_from_dict(self._load(arg, "algebra"), arg, check=self.check)

    def prelie(self, arg: str) -> PreLieAlgebra:
        if arg in fx.PRE_LIE:
            return fx.PRE_LIE[arg]
        return io.prelie_from_dict(self._load(arg, "prelie"), arg, check=self.check)

    def map(self, arg: str) -> Matrix:
        if arg in fx.MAPS:
            return fx.MAPS[arg]
        return io.map_from_dict(self._load(arg, "map"), arg)

    def tensor(self, arg: str, n: int) -> Tensor2:
        if arg in fx.TENSORS:
            t = fx.TENSORS[arg]
        else:
            t = io.tensor_from_dict(self._load(arg, "tensor"), arg, dims=(n, n))
        if t.dims != (n, n):
            raise io.InputError(f"{arg}: tensor has dims {t.dims}, algebra has dimension {n}")
        return t

    def form(self, arg: str) -> BilinearForm:
        if arg in fx.FORMS:
            return fx.FORMS[arg]
        return io.form_from_dict(self._load(arg, "form"), arg)

    def representation(self, L: LieAlgebra, arg: str) -> Representation:
        if arg == "adjoint":
            return adjoint(L)
        if arg == "coadjoint":
            return coadjoint(L)
        if arg.startswith("dual:"):
            return dual_of(self.representation(L, arg[5:]))
        if arg.startswith("regular:"):
            A = self.prelie(arg[8:])
            if A.dim != L.dim:
                raise io.InputError(f"{arg}: pre-Lie algebra has dimension {A.dim}, algebra {L.dim}")
            rho = regular_of(A, L)
            return _checked(rho, arg) if self.check else rho
        return io.representation_from_dict(self._load(arg, "representation"), arg, algebra=L,
                                           check=self.check)


def _checked(rho: Representation, where: str) -> Representation:
    res = check_representation(rho)
    if not res.ok:
        raise io.InputError(f"{where}: not a representation of the algebra")
    return rho


def _shape(T: Matrix, rows: int, cols: int, where: str):
    if T.shape != (rows, cols):
        raise io.InputError(f"{where}: map must be {rows}x{cols}, got {T.rows}x{T.cols}")


def _emit(out, line: str):
    print(line, file=out)


def _write(path: Path, doc) -> str:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(io.dumps(doc))
    return str(path)


def _residual_line(t: Tensor3) -> str:
    return "residual: " + ("0" if t.is_zero() else _tensor_literal(t))


def cmd_validate(args, ws: Workspace, out) -> int:
    if args.file in fx.LIE_ALGEBRAS or args.file in fx.PRE_LIE:
        doc = (io.algebra_to_dict(fx.LIE_ALGEBRAS[args.file]) if args.file in fx.LIE_ALGEBRAS
               else io.prelie_to_dict(fx.PRE_LIE[args.file]))
    else:
        doc = io.read_json(args.file)
    kind = io.detect_kind(doc)
    if kind == "algebra":
        res = validate_lie(io.algebra_from_dict(doc, args.file, check=False))
        _emit(out, format_record("validate.lie", res.ok, res.witness[1] if res.witness else None,
                                 **({"violation": res.witness[0]} if res.witness else {})))
    elif kind == "prelie":
        A = io.prelie_from_dict(doc, args.file, check=False)
        res = validate_prelie(A.a, A.side)
        fields = {"side": A.side}
        if res.residual is not None:
            fields["residual"] = _vector(res.residual)
        _emit(out, format_record("validate.prelie", res.ok, res.witness, **fields))
    elif kind == "representation":
        rho = io.representation_from_dict(doc, args.file, check=False)
        res = check_representation(rho)
        _emit(out, format_record("validate.representation", res.ok, res.witness))
    elif kind in ("map", "tensor", "form"):
        {"map": io.map_from_dict, "tensor": io.tensor_from_dict, "form": io.form_from_dict}[kind](doc, args.file)
        _emit(out, format_record(f"validate.{kind}", True))
        return EXIT_OK
    else:
        raise io.InputError(f"{args.file}: unrecognised document")
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_cybe(args, ws: Workspace, out) -> int:
    L = ws.algebra(args.algebra)
    r = ws.tensor(args.tensor, L.dim)
    t = cyb_residual(L, r)
    _emit(out, _residual_line(t))
    first = t.first_nonzero()
    fields = {"coeff": t[first]} if first else {}
    _emit(out, format_record("cybe", t.is_zero(), first, t.is_zero(), **fields))
    return EXIT_OK if t.is_zero() else EXIT_FAIL


def cmd_modified_cybe(args, ws: Workspace, out) -> int:
    L = ws.algebra(args.algebra)
    r = ws.tensor(args.tensor, L.dim)
    res = check_modified_cybe(L, r)
    _emit(out, _residual_line(cyb_residual(L, r)))
    fields = {}
    if not res.ok:
        fields["moved"] = _tensor_literal(res.residual)
    _emit(out, format_record("modified-cybe", res.ok, res.witness, res.ok, **fields))
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_o_operator(args, ws: Workspace, out) -> int:
    L = ws.algebra(args.algebra)
    rho = ws.representation(L, args.rep)
    T = ws.map(args.map)
    _shape(T, L.dim, rho.space_dim, args.map)
    rep = check_o_operator(L, rho, T)
    w = rep.witness
    fields = {"residual": _vector(rep.residuals[w])} if w else {}
    _emit(out, format_record("o-operator", rep.is_o_operator, w, rep.is_o_operator, **fields))
    return EXIT_OK if rep.is_o_operator else EXIT_FAIL


def cmd_lift(args, ws: Workspace, out) -> int:
    L = ws.algebra(args.algebra)
    rho = ws.representation(L, args.rep)
    T = ws.map(args.map)
    _shape(T, L.dim, rho.space_dim, args.map)
    ambient = o_operator_ambient(L, rho)
    r = lift_o_operator(L, rho, T)
    return _emit_ambient_and_tensor(out, args.out_dir, "lift", ambient, r)


def _emit_ambient_and_tensor(out, out_dir, name: str, ambient: LieAlgebra, r: Tensor2) -> int:
    fields = {}
    if out_dir:
        d = Path(out_dir)
        fields["ambient_file"] = _write(d / "ambient.json", io.algebra_to_dict(ambient))
        fields["tensor_file"] = _write(d / "tensor.json", io.tensor_to_dict(r))
    else:
        fields["ambient"] = io.compact(io.algebra_to_dict(ambient))
        fields["tensor"] = io.compact(io.tensor_to_dict(r))
    zero = solves_cybe(ambient, r)
    _emit(out, format_record(name, True, None, zero, **fields))
    return EXIT_OK


def _emit_product(out, out_file, name: str, ok: bool, A: PreLieAlgebra, witness=None, **fields) -> int:
    if out_file:
        fields["product_file"] = _write(Path(out_file), io.prelie_to_dict(A))
    else:
        fields["product"] = io.compact(io.prelie_to_dict(A))
    _emit(out, format_record(name, ok, witness, **fields))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_prelie(args, ws: Workspace, out) -> int:
    L = ws.algebra(args.algebra)
    if args.construction == "twist":
        f = ws.map(args.map)
        _shape(f, L.dim, L.dim, args.map)
        rep = adjoint_twist(L, f, args.side)
        w = rep.obstruction_witness
        fields = {"side": args.side}
        if w:
            fields["obstruction"] = _vector(w[1])
        return _emit_product(out, args.out, "prelie.twist", rep.condition_ok, rep.product,
                             w[0] if w else None, **fields)
    rho = ws.representation(L, args.rep)
    T = ws.map(args.map)
    if args.construction == "from-cocycle":
        _shape(T, rho.space_dim, L.dim, args.map)
        try:
            A = prelie_from_cocycle(L, rho, T)
        except NotBijective:
            _emit(out, format_record("prelie.from-cocycle", False, reason="not_bijective"))
            return EXIT_FAIL
        except NotACocycle:
            res = check_one_cocycle(L, rho, T)
            _emit(out, format_record("prelie.from-cocycle", False, res.witness, reason="not_a_cocycle",
                                     residual=_vector(res.residual)))
            return EXIT_FAIL
        return _emit_product(out, args.out, "prelie.from-cocycle", True, A)
    _shape(T, L.dim, rho.space_dim, args.map)
    rep = prelie_from_o_operator(L, rho, T)
    w = rep.obstruction_witness
    fields = {"o_operator": rep.image_product is not None}
    if w:
        fields["obstruction"] = _vector(w[1])
    if rep.algebra_product is not None:
        fields["algebra_product"] = io.compact(io.prelie_to_dict(rep.algebra_product))
    return _emit_product(out, args.out, "prelie.from-o-operator", rep.condition_ok, rep.product,
                         w[0] if w else None, **fields)


def cmd_canonical_r(args, ws: Workspace, out) -> int:
    A = ws.prelie(args.prelie)
    ambient, r = canonical_r(A)
    code = _emit_ambient_and_tensor(out, args.out_dir, "canonical-r", ambient, r)
    return code if solves_cybe(ambient, r) else EXIT_FAIL


def cmd_symplectic(args, ws: Workspace, out) -> int:
    A = ws.prelie(args.prelie)
    ambient, _ = canonical_r(A)
    omega = symplectic_form(A)
    res = check_two_cocycle(ambient, omega)
    _emit(out, format_record("symplectic", res.ok, res.witness, form=io.compact(io.form_to_dict(omega))))
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_two_cocycle(args, ws: Workspace, out) -> int:
    L = ws.algebra(args.algebra)
    arg = args.object
    if arg in fx.FORMS or (arg not in fx.TENSORS and io.detect_kind(io.read_json(arg)) == "form"):
        B = ws.form(arg)
        if B.space_dim != L.dim:
            raise io.InputError(f"{arg}: form has dimension {B.space_dim}, algebra {L.dim}")
        res = check_two_cocycle(L, B)
        _emit(out, format_record("two-cocycle", res.ok, res.witness, skew=B.is_skew()))
        return EXIT_OK if res.ok else EXIT_FAIL
    r = ws.tensor(arg, L.dim)
    try:
        B = two_cocycle_from_r(L, r)
    except CybeError as exc:
        _emit(out, format_record("two-cocycle", False, reason=type(exc).__name__))
        return EXIT_FAIL
    res = check_two_cocycle(L, B)
    _emit(out, format_record("two-cocycle", res.ok, res.witness, solves_cybe=solves_cybe(L, r),
                             form=io.compact(io.form_to_dict(B))))
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_search(args, ws: Workspace, out) -> int:
    L = ws.algebra(args.algebra)
    try:
        coeffs = [parse_scalar(c) for c in args.coeffs.split(",") if c.strip()]
    except ValueError as exc:
        raise io.InputError(f"--coeffs: {exc}") from None
    try:
        found = search_skew_solutions(L, coeffs, args.budget)
    except BudgetExceeded as exc:
        raise io.InputError(f"--budget: {exc}") from None
    for k, t in enumerate(found, 1):
        _emit(out, f"solution={k} tensor={_tensor_literal(t)}")
    _emit(out, format_record("search", True, solutions=len(found)))
    return EXIT_OK


def cmd_fixtures(args, ws: Workspace, out) -> int:
    ok = True
    for res in run_all(args.seed):
        for rec in res.records:
            info = {k: v for k, v in rec.items() if k not in ("name", "ok", "seconds")}
            _emit(out, format_record(f"c{res.number}.{rec['name']}", rec["ok"], **info))
        _emit(out, format_record(f"criterion.{res.number}", res.ok, records=len(res.records)))
        ok = ok and res.ok
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cybekit", description="Exact checks for the classical Yang-Baxter equation.")
    p.add_argument("--unchecked", action="store_true", help="skip validation of loaded objects")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="validate an algebra, pre-Lie algebra or representation file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    for name, func in (("cybe", cmd_cybe), ("modified-cybe", cmd_modified_cybe)):
        s = sub.add_parser(name)
        s.add_argument("algebra")
        s.add_argument("tensor")
        s.set_defaults(func=func)

    s = sub.add_parser("o-operator")
    s.add_argument("algebra")
    s.add_argument("rep")
    s.add_argument("map")
    s.set_defaults(func=cmd_o_operator)

    s = sub.add_parser("lift", help="lift T: V -> G to a skew tensor in G x| V*")
    s.add_argument("algebra")
    s.add_argument("rep")
    s.add_argument("map")
    s.add_argument("--out-dir")
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("prelie")
    pre = s.add_subparsers(dest="construction", required=True)
    for name in ("from-cocycle", "from-o-operator"):
        c = pre.add_parser(name)
        c.add_argument("algebra")
        c.add_argument("rep")
        c.add_argument("map")
        c.add_argument("--out")
        c.set_defaults(func=cmd_prelie)
    c = pre.add_parser("twist")
    c.add_argument("algebra")
    c.add_argument("map")
    c.add_argument("--side", choices=("left", "right"), default="left")
    c.add_argument("--out")
    c.set_defaults(func=cmd_prelie)

    s = sub.add_parser("canonical-r")
    s.add_argument("prelie")
    s.add_argument("--out-dir")
    s.set_defaults(func=cmd_canonical_r)

    s = sub.add_parser("symplectic")
    s.add_argument("prelie")
    s.set_defaults(func=cmd_symplectic)

    s = sub.add_parser("two-cocycle")
    s.add_argument("algebra")
    s.add_argument("object", help="a bilinear form or a skew tensor")
    s.set_defaults(func=cmd_two_cocycle)

    s = sub.add_parser("search")
    s.add_argument("algebra")
    s.add_argument("--coeffs", default="-1,0,1")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("fixtures", help="run the built-in theorem suite")
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_fixtures)
    return p


def _join_coeffs(argv: list) -> list:
    # "--coeffs -1,0,1" would otherwise read the list as an option
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--coeffs" and i + 1 < len(argv):
            out.append(f"--coeffs={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = _join_coeffs(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    ws = Workspace(check=not args.unchecked)
    try:
        return args.func(args, ws, out)
    except CybeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
