"""
Command payloads. A module is one of

    {"relations": [[...], ...], "twists"?: [...]}    coker of a matrix of strings
    {"ideal": ["x_0", "x_1^2"]}                       S / (ideal)
    {"minors": {"size": 2, "matrix": [[...], ...]}}   S / I_size(matrix)
    {"residue_field": true}
    {"free": [[0, 0], [1, 0]]}
    {"ext": {"index": 3, "twist": [-7], "of": <module>}}

or a codec document {"generators": ..., "relations": {...}}. A differential
module is {"degree", "module" | "twists", "del": rows | "zero"}; an
E-module is {"twists", "relations"}, {"free": rank or twists} or
{"residue_field": true}.
"""
from typing import List

from multibgg.bgg.EModule import EPresentation
from multibgg.core.ExtAlgebra import ExtAlgebra
from multibgg.core.PolyRing import PolyRing
from multibgg.diffmod.DifferentialModule import DifferentialModule
from multibgg.errors import SchemaError
from multibgg.io.parser import parse_rows
from multibgg.io.serialize import (check_schema, degree_from_json, degrees_from_json, dm_from_json,
                                   presented_from_json, require)
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.modules.constructors import cokernel, free_module, minors_quotient, quotient_ring, residue_field
from multibgg.modules.resolution import ext_module
from multibgg.utils import Degree

MODULE_KINDS = ("relations", "ideal", "minors", "residue_field", "free", "ext")


def module_from_payload(ring: PolyRing, doc, pointer: str = "/payload/module") -> PresentedModule:
    check_schema(doc, pointer)
    if "generators" in doc:
        return presented_from_json(ring, doc, pointer)
    kinds = [k for k in MODULE_KINDS if k in doc]
    if len(kinds) != 1:
        raise SchemaError(f"a module needs exactly one of {list(MODULE_KINDS)}", pointer)
    kind = kinds[0]
    value = doc[kind]
    here = f"{pointer}/{kind}"
    if kind == "relations":
        rows = parse_rows(ring, value, here)
        twists = doc.get("twists")
        if twists is not None:
            twists = degrees_from_json(twists, f"{pointer}/twists", ring.rank)
            if len(twists) != len(rows):
                raise SchemaError(f"{len(rows)} rows need {len(rows)} twists", f"{pointer}/twists")
        elif not rows:
            raise SchemaError("an empty relation matrix needs twists", f"{pointer}/twists")
        return cokernel(ring, rows, twists)
    if kind == "ideal":
        if not isinstance(value, list):
            raise SchemaError("an ideal is a list of polynomials", here)
        return quotient_ring(ring, parse_rows(ring, [value], here)[0])
    if kind == "minors":
        size = require(value, "size", here)
        rows = parse_rows(ring, require(value, "matrix", here), f"{here}/matrix")
        if not isinstance(size, int) or size < 1 or size > min(len(rows), len(rows[0]) if rows else 0):
            raise SchemaError(f"bad minor size {size!r}", f"{here}/size")
        return minors_quotient(ring, size, rows)
    if kind == "residue_field":
        return residue_field(ring)
    if kind == "free":
        return free_module(ring, degrees_from_json(value, here, ring.rank))
    index = require(value, "index", here)
    if not isinstance(index, int):
        raise SchemaError("the Ext index is an integer", f"{here}/index")
    twist = degree_from_json(value.get("twist", list(ring.zero_degree())), f"{here}/twist", ring.rank)
    inner = module_from_payload(ring, require(value, "of", here), f"{here}/of")
    return ext_module(inner, index, twist)


def dm_from_payload(ring: PolyRing, doc, pointer: str = "/payload/dm") -> DifferentialModule:
    check_schema(doc, pointer)
    if "differential" in doc and "module" in doc and isinstance(doc["differential"], dict):
        return dm_from_json(ring, doc, pointer)
    a = degree_from_json(require(doc, "degree", pointer), f"{pointer}/degree", ring.rank)
    if "module" in doc:
        module = module_from_payload(ring, doc["module"], f"{pointer}/module")
    else:
        twists = degrees_from_json(require(doc, "twists", pointer), f"{pointer}/twists", ring.rank)
        module = PresentedModule.free(FreeModule(ring, twists))
    spec = doc.get("del", "zero")
    if spec == "zero":
        return DifferentialModule.zero(module, a)
    rows = parse_rows(ring, spec, f"{pointer}/del")
    n = module.rank
    if len(rows) != n or any(len(r) != n for r in rows):
        raise SchemaError(f"the differential must be {n} x {n}", f"{pointer}/del")
    G = module.generators
    return DifferentialModule(module, GradedMatrix(G, G, a, tuple(tuple(r) for r in rows)))


def e_module_from_payload(E: ExtAlgebra, doc, pointer: str = "/payload/emodule") -> EPresentation:
    check_schema(doc, pointer)
    if doc.get("residue_field"):
        twist = doc.get("twist")
        return EPresentation.residue_field(E, None if twist is None else
                                           degree_from_json(twist, f"{pointer}/twist", E.rank))
    if "free" in doc:
        free = doc["free"]
        if isinstance(free, int) and not isinstance(free, bool):
            return EPresentation.free(E, [E.zero_degree()] * free)
        return EPresentation.free(E, degrees_from_json(free, f"{pointer}/free", E.rank))
    twists = degrees_from_json(require(doc, "twists", pointer), f"{pointer}/twists", E.rank)
    rows = parse_rows(E, doc.get("relations", []), f"{pointer}/relations")
    if rows and len(rows) != len(twists):
        raise SchemaError(f"{len(twists)} generators need {len(twists)} rows", f"{pointer}/relations")
    ncols = len(rows[0]) if rows else 0
    columns = tuple(tuple(rows[k][j] for k in range(len(twists))) for j in range(ncols))
    return EPresentation(E, twists, columns)


def degree_list_from_payload(doc, rank: int, pointer: str = "/options/degreeList") -> List[Degree]:
    return list(degrees_from_json(doc, pointer, rank))
