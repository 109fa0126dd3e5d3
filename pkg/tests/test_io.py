import json
from fractions import Fraction

import pytest

from multibgg.bgg import EPresentation, graded_pieces_of_e_module, toric_rr
from multibgg.core import Field, dual_ring_toric
from multibgg.diffmod import ConvergenceStatus, res_dm
from multibgg.errors import InvalidRingError, SchemaError
from multibgg.io import builtin_ring, dump, load, parse_builtin, parse_polynomial, render, ring_from_json, to_json
from multibgg.io.builtins import hirzebruch
from multibgg.io.payloads import dm_from_payload, e_module_from_payload, module_from_payload
from multibgg.io.render import render_table
from multibgg.io.serialize import check_schema, field_from_json
from multibgg.modules import residue_field
from multibgg.modules.pieces import piece_dimension
from multibgg.modules.resolution import minimal_free_resolution
from multibgg.strands import strongly_linear_strand


def test_parse_polynomial(qq_xy):
    x, y = qq_xy.gens
    assert parse_polynomial(qq_xy, "x^2*y - 3/4*x*y^2") == x ** 2 * y - Fraction(3, 4) * x * y ** 2
    assert parse_polynomial(qq_xy, "-(x + y)^2") == -(x + y) ** 2
    assert parse_polynomial(qq_xy, "2*x*3") == 6 * x
    assert parse_polynomial(qq_xy, 0).is_zero()


def test_parse_exterior_element(hirzebruch3):
    E = dual_ring_toric(hirzebruch3)
    assert parse_polynomial(E, "e_1*e_0 + e_0*e_1").is_zero()
    assert parse_polynomial(E, "2*e_3") == E.var(3) * 2


@pytest.mark.parametrize("text", ["x +", "x ^ y", "z", "x $ y", "(x", "1/0", ""])
def test_parse_errors_carry_the_pointer(qq_xy, text):
    with pytest.raises(SchemaError) as info:
        parse_polynomial(qq_xy, text, "/payload/dm/del/0/1")
    assert info.value.pointer == "/payload/dm/del/0/1"


def test_printed_polynomials_parse_back(r101):
    f = parse_polynomial(r101, "x^2*y - 3*x*y^2 + 50*y^3")
    assert parse_polynomial(r101, str(f)) == f


def test_builtin_rings():
    assert builtin_ring("hirzebruch", "3") == hirzebruch(3)
    assert builtin_ring("hirzebruch", [3]) == hirzebruch(3)
    S = parse_builtin("weighted-projective [1, 1, 1, 2, 2]")
    assert S.var_degrees == ((1,), (1,), (1,), (2,), (2,))
    assert parse_builtin("standard 2").nvars == 3
    assert builtin_ring("standard", "1", Field.prime(7)).field == Field.prime(7)


@pytest.mark.parametrize("name, args, pointer", [
    ("projective", "2", "/ring/builtin"),
    ("hirzebruch", "three", "/ring/args"),
    ("hirzebruch", "1 2", "/ring/args"),
    ("weighted-projective", "[1, 0]", "/ring/args"),
    ("standard", "-1", "/ring/args"),
])
def test_builtin_ring_errors(name, args, pointer):
    with pytest.raises(SchemaError) as info:
        builtin_ring(name, args)
    assert info.value.pointer == pointer


def test_ring_documents():
    S = ring_from_json({"field": "ZZ/101", "vars": ["x", "y"], "degrees": [[1], [1]]})
    assert S.field == Field.prime(101)
    assert ring_from_json(to_json(S)) == S
    assert ring_from_json("hirzebruch 3") == hirzebruch(3)
    T = ring_from_json({"builtin": "standard", "args": [2], "field": {"Fp": 7}})
    assert T.field.characteristic == 7 and T.nvars == 3
    E = dual_ring_toric(hirzebruch(3))
    assert ring_from_json(to_json(E)) == E


@pytest.mark.parametrize("doc, pointer", [
    ({"vars": ["x", "y"], "degrees": [[1], [1, 0]]}, "/ring/degrees/1"),
    ({"vars": ["x", "y"], "degrees": [[1]]}, "/ring/degrees"),
    ({"vars": [], "degrees": []}, "/ring/vars"),
    ({"field": "ZZ/4", "vars": ["x"], "degrees": [[1]]}, "/ring/field"),
    ({"field": "RR", "vars": ["x"], "degrees": [[1]]}, "/ring/field"),
    ({"schema": 2, "vars": ["x"], "degrees": [[1]]}, "/ring/schema"),
    ({"vars": ["x", "y"], "degrees": [[1, 0], [0, 1]], "theta": [1]}, "/ring/theta"),
])
def test_ring_document_errors(doc, pointer):
    with pytest.raises(SchemaError) as info:
        ring_from_json(doc)
    assert info.value.pointer == pointer


def test_field_documents():
    assert field_from_json("QQ") == Field.rationals()
    assert field_from_json(None) == Field.rationals()
    assert field_from_json(101) == Field.prime(101)
    assert field_from_json({"Fp": 5}) == Field.prime(5)
    with pytest.raises(InvalidRingError):
        field_from_json(6)


def test_schema_version_is_checked():
    check_schema({"schema": 1})
    with pytest.raises(SchemaError) as info:
        check_schema({"schema": 3}, "/payload")
    assert info.value.pointer == "/payload/schema"


def test_dump_and_load_values(degree_two_dm, qq_xy, hirzebruch3):
    res = res_dm(degree_two_dm, 5)
    E = dual_ring_toric(hirzebruch3)
    values = [degree_two_dm,
              res,
              minimal_free_resolution(residue_field(qq_xy), 3),
              graded_pieces_of_e_module(EPresentation.free(E, [E.zero_degree()])),
              toric_rr(module_from_payload(hirzebruch3, {"relations": [["x_0"]]}))]
    for value in values:
        doc = json.loads(json.dumps(dump(value)))
        assert doc["schema"] == 1
        assert doc["type"] == type(value).__name__
        assert load(doc) == value


def test_dump_and_load_strand(qq_xy):
    result = strongly_linear_strand(residue_field(qq_xy))
    back = load(json.loads(json.dumps(dump(result))))
    assert back.strand == result.strand
    assert back.source_degree == result.source_degree
    assert back.kernel_dims == result.kernel_dims


def test_truncated_resolution_keeps_its_status(degree_two_dm):
    doc = json.loads(json.dumps(dump(res_dm(degree_two_dm, 1))))
    assert doc["value"]["status"] == "truncated"
    assert load(doc).status is ConvergenceStatus.TRUNCATED


def test_load_rejects_unknown_types():
    with pytest.raises(SchemaError) as info:
        load({"schema": 1, "type": "Sheaf", "ring": "standard 1", "value": {}})
    assert info.value.pointer == "/type"


def test_module_payloads(hirzebruch3, qq_xy):
    assert piece_dimension(module_from_payload(qq_xy, {"ideal": ["x", "y^2"]}), (1,)) == 1
    assert module_from_payload(qq_xy, {"residue_field": True}).rank == 1
    assert module_from_payload(hirzebruch3, {"free": [[0, 0], [1, 0]]}).generators.twists == ((0, 0), (1, 0))
    minors = module_from_payload(qq_xy, {"minors": {"size": 1, "matrix": [["x", "y"]]}})
    assert piece_dimension(minors, (1,)) == 0
    ext = module_from_payload(qq_xy, {"ext": {"index": 2, "of": {"residue_field": True}}})
    assert ext.generators.twists == ((-2,),)
    twisted = module_from_payload(qq_xy, {"relations": [["x^2"], ["y"]], "twists": [[0], [1]]})
    assert twisted.relations.source.twists == ((2,),)


@pytest.mark.parametrize("doc, pointer", [
    ({"ideal": ["x"], "free": [[0]]}, "/payload/module"),
    ({"relations": [["z"]]}, "/payload/module/relations/0/0"),
    ({"relations": [["x"], ["y"]], "twists": [[0]]}, "/payload/module/twists"),
    ({"free": [[0, 1]]}, "/payload/module/free/0"),
    ({"minors": {"size": 3, "matrix": [["x", "y"]]}}, "/payload/module/minors/size"),
    ({"ext": {"of": {"residue_field": True}}}, "/payload/module/ext/index"),
    ([1, 2], "/payload/module"),
])
def test_module_payload_errors(qq_xy, doc, pointer):
    with pytest.raises(SchemaError) as info:
        module_from_payload(qq_xy, doc)
    assert info.value.pointer == pointer


def test_dm_payloads(r101, degree_two_dm):
    doc = {"degree": [2], "twists": [[0], [0]], "del": [["x*y", "-x^2"], ["y^2", "-x*y"]]}
    assert dm_from_payload(r101, doc) == degree_two_dm
    assert dm_from_payload(r101, to_json(degree_two_dm)) == degree_two_dm
    zero = dm_from_payload(r101, {"degree": [0], "module": {"residue_field": True}})
    assert zero.differential.is_zero()


@pytest.mark.parametrize("doc, pointer", [
    ({"degree": [2, 1], "twists": [[0]], "del": "zero"}, "/payload/dm/degree"),
    ({"twists": [[0]]}, "/payload/dm/degree"),
    ({"degree": [1], "twists": [[0], [0]], "del": [["x"]]}, "/payload/dm/del"),
])
def test_dm_payload_errors(r101, doc, pointer):
    with pytest.raises(SchemaError) as info:
        dm_from_payload(r101, doc)
    assert info.value.pointer == pointer


def test_e_module_payloads(hirzebruch3):
    E = dual_ring_toric(hirzebruch3)
    assert e_module_from_payload(E, {"free": 2}).twists == (E.zero_degree(),) * 2
    k = e_module_from_payload(E, {"residue_field": True, "twist": [0, 0, 1]})
    assert k.twists == ((0, 0, 1),)
    N = e_module_from_payload(E, {"twists": [[0, 0, 0]], "relations": [["e_0", "e_2"]]})
    assert len(N.relations) == 2
    assert graded_pieces_of_e_module(N).total_dim == 4


def test_render_matrix(degree_two_dm):
    assert render(degree_two_dm.differential).splitlines() == ["{0} | xy -x2 |", "{0} | y2 -xy |"]
    assert render_table([], []) == "0"
    text = render(res_dm(degree_two_dm, 5))
    assert "status: complete after 3 iterations" in text
    assert "F_0: {{1}}" in text
