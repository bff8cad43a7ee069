import json

import pytest

from cybekit import fixtures as fx
from cybekit import io
from cybekit.lie_core import adjoint, regular_of
from cybekit.pre_lie import canonical_r
from cybekit.sampling import random_matrix, random_tensor, rng
from cybekit.tensor_cybe import Tensor2


def _round_trip(doc, parse, dump):
    text = io.dumps(doc)
    obj = parse(json.loads(text))
    assert io.dumps(dump(obj)) == text
    return obj


@pytest.mark.parametrize("name", sorted(fx.LIE_ALGEBRAS))
def test_algebra_round_trip(name):
    L = fx.LIE_ALGEBRAS[name]
    assert _round_trip(io.algebra_to_dict(L), io.algebra_from_dict, io.algebra_to_dict) == L


def test_semidirect_round_trip_keeps_labels():
    ambient, r = canonical_r(fx.PLA)
    doc = io.algebra_to_dict(ambient)
    assert doc["labels"] == ["e1", "e2", "e1*", "e2*"]
    assert _round_trip(doc, io.algebra_from_dict, io.algebra_to_dict) == ambient
    assert _round_trip(io.tensor_to_dict(r), io.tensor_from_dict, io.tensor_to_dict) == r


@pytest.mark.parametrize("name", sorted(fx.all_prelie_fixtures()))
def test_prelie_round_trip(name):
    A = fx.all_prelie_fixtures()[name]
    assert _round_trip(io.prelie_to_dict(A), io.prelie_from_dict, io.prelie_to_dict) == A


def test_random_round_trips():
    r = rng(7)
    for _ in range(20):
        T = random_matrix(r, 3, 2).scale(io.parse_scalar("1/3"))
        assert _round_trip(io.map_to_dict(T), io.map_from_dict, io.map_to_dict) == T
        t = random_tensor(r, 3)
        assert _round_trip(io.tensor_to_dict(t), io.tensor_from_dict, io.tensor_to_dict) == t


def test_representation_and_form_round_trip():
    rho = regular_of(fx.PLA, fx.AFF1)
    doc = io.representation_to_dict(rho, "AFF1")
    back = io.representation_from_dict(json.loads(io.dumps(doc)))
    assert back.action == rho.action
    inline = io.representation_to_dict(adjoint(fx.SL2))
    assert io.representation_from_dict(inline).action == adjoint(fx.SL2).action
    B = fx.SL2_KILLING
    assert _round_trip(io.form_to_dict(B), io.form_from_dict, io.form_to_dict).gram == B.gram


def test_bare_tensor_list():
    t = io.tensor_from_dict([{"i": 1, "j": 2, "coeff": "1"}, {"i": 2, "j": 1, "coeff": "-1"}], dims=(2, 2))
    assert t == fx.R0
    with pytest.raises(io.InputError):
        io.tensor_from_dict([{"i": 1, "j": 2, "coeff": "1"}])


@pytest.mark.parametrize("doc,fragment", [
    ({"dim": 2, "brackets": [{"i": 1, "j": 3, "out": {"2": "1"}}]}, "brackets[0]"),
    ({"dim": 2, "brackets": [{"i": 2, "j": 1, "out": {"2": "1"}}]}, "i < j"),
    ({"dim": 2, "brackets": [{"i": 1, "j": 2, "out": {"2": "x"}}]}, "out[2]"),
    ({"dim": 2}, "missing key 'brackets'"),
])
def test_algebra_diagnostics(doc, fragment):
    with pytest.raises(io.InputError) as exc:
        io.algebra_from_dict(doc, "alg.json")
    assert "alg.json" in str(exc.value) and fragment in str(exc.value)


def test_invalid_algebra_rejected_unless_unchecked():
    doc = {"dim": 3, "brackets": [{"i": 1, "j": 2, "out": {"3": "1"}}, {"i": 2, "j": 3, "out": {"1": "1"}},
                                  {"i": 1, "j": 3, "out": {"1": "1"}}]}
    with pytest.raises(io.InputError):
        io.algebra_from_dict(doc)
    assert io.algebra_from_dict(doc, check=False).dim == 3


def test_map_shape_diagnostic():
    with pytest.raises(io.InputError) as exc:
        io.map_from_dict({"rows": 2, "cols": 2, "matrix": [["1", "0"], ["0"]]}, "m.json")
    assert "row 2" in str(exc.value)


def test_read_json_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{\n  \"dim\": 2,\n}")
    with pytest.raises(io.InputError) as exc:
        io.read_json(bad)
    assert "line 3" in str(exc.value)
    with pytest.raises(io.InputError):
        io.read_json(tmp_path / "missing.json")


def test_detect_kind():
    assert io.detect_kind(io.algebra_to_dict(fx.AFF1)) == "algebra"
    assert io.detect_kind(io.tensor_to_dict(Tensor2.zeros(2))) == "tensor"
    assert io.detect_kind([]) == "tensor"
    assert io.detect_kind({"x": 1}) == "unknown"
