"""
JSON codec. Every document carries "schema": 1. Encoders never repeat the ring:
`dump` wraps a value as {"schema", "type", "ring", "value"} and `load` undoes it.
Polynomials travel as strings in the grammar of `multibgg.io.parser`.
"""
from fractions import Fraction
from functools import singledispatch
from typing import Any, Dict, Optional

import numpy as np

from multibgg.bgg.DifferentialEModule import DifferentialEModule
from multibgg.bgg.EModule import EModuleGraded
from multibgg.core.ExtAlgebra import ExtAlgebra
from multibgg.core.Field import Field
from multibgg.core.Grading import GradingSpec
from multibgg.core.PolyRing import PolyRing
from multibgg.diffmod.DifferentialModule import DifferentialModule, DMorphism, FlagDM
from multibgg.diffmod.FlagResolution import ConvergenceStatus, FlagResolution
from multibgg.errors import InvalidRingError, SchemaError
from multibgg.io.builtins import builtin_ring, parse_builtin
from multibgg.io.parser import parse_polynomial
from multibgg.modules.FComplex import FComplex
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.strands.strand import StrandResult
from multibgg.utils import Degree, deg

SCHEMA_VERSION = 1


def check_schema(doc, pointer: str = "") -> None:
    if not isinstance(doc, dict):
        raise SchemaError("expected a JSON object", pointer or "/")
    if "schema" in doc and doc["schema"] != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {doc['schema']!r}", f"{pointer}/schema")


def require(doc: Dict, key: str, pointer: str):
    if not isinstance(doc, dict):
        raise SchemaError("expected a JSON object", pointer or "/")
    if key not in doc:
        raise SchemaError(f"missing field {key!r}", f"{pointer}/{key}")
    return doc[key]


# scalars and degrees

def coefficient_to_json(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else str(c)


def degree_from_json(value, pointer: str, rank: Optional[int] = None) -> Degree:
    if isinstance(value, int) and not isinstance(value, bool):
        value = [value]
    if not isinstance(value, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in value):
        raise SchemaError(f"a degree is a list of integers, got {value!r}", pointer)
    if rank is not None and len(value) != rank:
        raise SchemaError(f"degree vector has length {len(value)}, expected {rank}", pointer)
    return deg(value)


def degrees_from_json(values, pointer: str, rank: Optional[int] = None):
    if not isinstance(values, list):
        raise SchemaError("expected a list of degrees", pointer)
    return tuple(degree_from_json(v, f"{pointer}/{i}", rank) for i, v in enumerate(values))


# rings

def field_from_json(value, pointer: str = "/ring/field") -> Field:
    try:
        if value is None or value == "QQ" or value == 0:
            return Field.rationals()
        if isinstance(value, int) and not isinstance(value, bool):
            return Field.prime(value)
        if isinstance(value, str) and value.startswith("ZZ/"):
            return Field.prime(int(value[3:]))
        if isinstance(value, dict) and "Fp" in value:
            return Field.prime(int(value["Fp"]))
    except InvalidRingError as e:
        raise InvalidRingError(str(e).split(" (at ")[0], pointer) from None
    except ValueError:
        pass
    raise SchemaError(f"unknown field {value!r}, expected \"QQ\", \"ZZ/p\" or {{\"Fp\": p}}", pointer)


def ring_from_json(doc, pointer: str = "/ring"):
    """
    A ring is a builtin ("hirzebruch 3", {"builtin": "standard", "args": [2]})
    or explicit: {"field", "vars", "degrees", "theta"?}. Exterior algebras add
    "exterior": true.
    """
    if isinstance(doc, str):
        return parse_builtin(doc)
    check_schema(doc, pointer)
    field = field_from_json(doc.get("field"), f"{pointer}/field")
    if "builtin" in doc:
        return builtin_ring(doc["builtin"], doc.get("args", []), field)
    names = require(doc, "vars", pointer)
    if not isinstance(names, list) or not names or any(not isinstance(n, str) for n in names):
        raise InvalidRingError("vars must be a nonempty list of names", f"{pointer}/vars")
    degrees = require(doc, "degrees", pointer)
    if not isinstance(degrees, list) or len(degrees) != len(names):
        raise InvalidRingError(f"{len(names)} variables need {len(names)} degrees", f"{pointer}/degrees")
    first = degree_from_json(degrees[0], f"{pointer}/degrees/0")
    degrees = degrees_from_json(degrees, f"{pointer}/degrees", len(first))
    theta = doc.get("theta")
    if theta is not None:
        theta = degree_from_json(theta, f"{pointer}/theta", len(first))
    if doc.get("exterior"):
        symmetric = doc.get("symmetric_vars")
        return ExtAlgebra(field, tuple(names), degrees, tuple(symmetric) if symmetric else None, theta)
    try:
        return PolyRing(field, tuple(names), GradingSpec(len(degrees[0]), degrees, theta))
    except InvalidRingError as e:
        raise InvalidRingError(str(e).split(" (at ")[0], pointer + (e.pointer or "")) from None


# encoders

@singledispatch
def to_json(obj) -> Any:
    raise TypeError(f"no JSON encoding for {type(obj).__name__}")


@to_json.register
def _(ring: PolyRing):
    doc = {"schema": SCHEMA_VERSION, "field": ring.field.to_json(), "vars": list(ring.var_names),
           "degrees": [list(d) for d in ring.var_degrees]}
    if ring.grading.theta is not None:
        doc["theta"] = list(ring.grading.theta)
    return doc


@to_json.register
def _(ring: ExtAlgebra):
    doc = {"schema": SCHEMA_VERSION, "exterior": True, "field": ring.field.to_json(),
           "vars": list(ring.var_names), "degrees": [list(d) for d in ring.var_degrees]}
    if ring.symmetric_names:
        doc["symmetric_vars"] = list(ring.symmetric_names)
    if ring.theta is not None:
        doc["theta"] = list(ring.theta)
    return doc


@to_json.register
def _(F: FreeModule):
    return {"schema": SCHEMA_VERSION, "twists": [list(t) for t in F.twists]}


@to_json.register
def _(phi: GradedMatrix):
    return {"schema": SCHEMA_VERSION, "source": [list(t) for t in phi.source.twists],
            "target": [list(t) for t in phi.target.twists], "shift": list(phi.shift),
            "entries": [[str(f) for f in row] for row in phi.entries]}


@to_json.register
def _(M: PresentedModule):
    return {"schema": SCHEMA_VERSION, "generators": to_json(M.generators), "relations": to_json(M.relations)}


@to_json.register
def _(C: FComplex):
    return {"schema": SCHEMA_VERSION,
            "terms": {str(i): [list(t) for t in F.twists] for i, F in sorted(C.terms.items())},
            "differentials": {str(i): to_json(d) for i, d in sorted(C.differentials.items())}}


@to_json.register
def _(D: DifferentialModule):
    doc = {"schema": SCHEMA_VERSION, "degree": list(D.degree), "module": to_json(D.underlying),
           "differential": to_json(D.differential)}
    if isinstance(D, FlagDM):
        doc["flag"] = [list(block) for block in D.flag]
        if D.labels is not None:
            doc["labels"] = list(D.labels)
    return doc


@to_json.register
def _(f: DMorphism):
    return {"schema": SCHEMA_VERSION, "source": to_json(f.source), "target": to_json(f.target),
            "matrix": to_json(f.matrix)}


@to_json.register
def _(res: FlagResolution):
    return {"schema": SCHEMA_VERSION, "status": res.status.value, "iterations": res.iterations,
            "augmentation": to_json(res.augmentation)}


@to_json.register
def _(N: EModuleGraded):
    return {"schema": SCHEMA_VERSION,
            "pieces": [{"degree": list(d), "dim": N.dim(d)} for d in N.support],
            "actions": [{"var": i, "degree": list(d),
                         "matrix": [[coefficient_to_json(c) for c in row] for row in a.tolist()]}
                        for (i, d), a in sorted(N.actions.items()) if a.size and np.any(a != 0)]}


@to_json.register
def _(N: DifferentialEModule):
    doc = {"schema": SCHEMA_VERSION, "twists": [list(t) for t in N.twists],
           "entries": [[str(f) for f in row] for row in N.entries]}
    if N.sources is not None:
        doc["sources"] = [list(d) for d in N.sources]
    return doc


@to_json.register
def _(result: StrandResult):
    return {"schema": SCHEMA_VERSION, "sourceDegree": list(result.source_degree),
            "kernelDims": [{"degree": list(d), "dim": n} for d, n in sorted(result.kernel_dims.items())],
            "strand": to_json(result.strand)}


# decoders

def free_from_json(ring, doc, pointer: str = "") -> FreeModule:
    if isinstance(doc, dict):
        check_schema(doc, pointer)
        doc, pointer = require(doc, "twists", pointer), f"{pointer}/twists"
    return FreeModule(ring, degrees_from_json(doc, pointer, ring.rank))


def matrix_from_json(ring, doc, pointer: str = "") -> GradedMatrix:
    check_schema(doc, pointer)
    source = free_from_json(ring, require(doc, "source", pointer), f"{pointer}/source")
    target = free_from_json(ring, require(doc, "target", pointer), f"{pointer}/target")
    shift = degree_from_json(doc.get("shift", list(ring.zero_degree())), f"{pointer}/shift", ring.rank)
    rows = require(doc, "entries", pointer)
    if not isinstance(rows, list) or len(rows) != target.rank:
        raise SchemaError(f"expected {target.rank} rows", f"{pointer}/entries")
    entries = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != source.rank:
            raise SchemaError(f"expected {source.rank} entries", f"{pointer}/entries/{i}")
        entries.append(tuple(parse_polynomial(ring, f, f"{pointer}/entries/{i}/{j}") for j, f in enumerate(row)))
    return GradedMatrix(source, target, shift, tuple(entries))


def presented_from_json(ring, doc, pointer: str = "") -> PresentedModule:
    check_schema(doc, pointer)
    generators = free_from_json(ring, require(doc, "generators", pointer), f"{pointer}/generators")
    relations = matrix_from_json(ring, require(doc, "relations", pointer), f"{pointer}/relations")
    return PresentedModule(generators, relations)


def complex_from_json(ring, doc, pointer: str = "") -> FComplex:
    check_schema(doc, pointer)
    terms = {int(i): FreeModule(ring, degrees_from_json(t, f"{pointer}/terms/{i}", ring.rank))
             for i, t in require(doc, "terms", pointer).items()}
    differentials = {int(i): matrix_from_json(ring, d, f"{pointer}/differentials/{i}")
                     for i, d in doc.get("differentials", {}).items()}
    return FComplex(ring, terms, differentials)


def dm_from_json(ring, doc, pointer: str = "") -> DifferentialModule:
    check_schema(doc, pointer)
    module = presented_from_json(ring, require(doc, "module", pointer), f"{pointer}/module")
    differential = matrix_from_json(ring, require(doc, "differential", pointer), f"{pointer}/differential")
    if "flag" in doc:
        labels = doc.get("labels")
        return FlagDM(module, differential, tuple(tuple(b) for b in doc["flag"]),
                      tuple(labels) if labels is not None else None)
    return DifferentialModule(module, differential)


def morphism_from_json(ring, doc, pointer: str = "") -> DMorphism:
    check_schema(doc, pointer)
    return DMorphism(dm_from_json(ring, require(doc, "source", pointer), f"{pointer}/source"),
                     dm_from_json(ring, require(doc, "target", pointer), f"{pointer}/target"),
                     matrix_from_json(ring, require(doc, "matrix", pointer), f"{pointer}/matrix"))


def flag_resolution_from_json(ring, doc, pointer: str = "") -> FlagResolution:
    check_schema(doc, pointer)
    augmentation = morphism_from_json(ring, require(doc, "augmentation", pointer), f"{pointer}/augmentation")
    try:
        status = ConvergenceStatus(require(doc, "status", pointer))
    except ValueError:
        raise SchemaError(f"unknown status {doc['status']!r}", f"{pointer}/status") from None
    return FlagResolution(augmentation.source, augmentation, status, int(doc.get("iterations", 0)))


def e_graded_from_json(ring: ExtAlgebra, doc, pointer: str = "") -> EModuleGraded:
    check_schema(doc, pointer)
    F = ring.field
    pieces = {}
    for k, piece in enumerate(require(doc, "pieces", pointer)):
        d = degree_from_json(require(piece, "degree", f"{pointer}/pieces/{k}"), f"{pointer}/pieces/{k}/degree",
                             ring.rank)
        pieces[d] = int(require(piece, "dim", f"{pointer}/pieces/{k}"))
    actions = {}
    for k, action in enumerate(doc.get("actions", [])):
        here = f"{pointer}/actions/{k}"
        i = int(require(action, "var", here))
        d = degree_from_json(require(action, "degree", here), f"{here}/degree", ring.rank)
        rows = require(action, "matrix", here)
        a = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
        for p, row in enumerate(rows):
            for q, c in enumerate(row):
                a[p, q] = F(c)
        actions[(i, d)] = a
    return EModuleGraded(ring, pieces, actions)


def e_dm_from_json(ring: ExtAlgebra, doc, pointer: str = "") -> DifferentialEModule:
    check_schema(doc, pointer)
    twists = degrees_from_json(require(doc, "twists", pointer), f"{pointer}/twists", ring.rank)
    rows = require(doc, "entries", pointer)
    entries = tuple(tuple(parse_polynomial(ring, f, f"{pointer}/entries/{i}/{j}") for j, f in enumerate(row))
                    for i, row in enumerate(rows))
    sources = doc.get("sources")
    if sources is not None:
        sources = degrees_from_json(sources, f"{pointer}/sources", ring.rank - 1)
    return DifferentialEModule(ring, twists, entries, sources)


def strand_from_json(ring, doc, pointer: str = "") -> StrandResult:
    check_schema(doc, pointer)
    kernel_dims = {degree_from_json(k["degree"], f"{pointer}/kernelDims"): int(k["dim"])
                   for k in doc.get("kernelDims", [])}
    return StrandResult(complex_from_json(ring, require(doc, "strand", pointer), f"{pointer}/strand"),
                        degree_from_json(require(doc, "sourceDegree", pointer), f"{pointer}/sourceDegree", ring.rank),
                        kernel_dims)


DECODERS = {
    "FreeModule": free_from_json,
    "GradedMatrix": matrix_from_json,
    "PresentedModule": presented_from_json,
    "FComplex": complex_from_json,
    "DifferentialModule": dm_from_json,
    "FlagDM": dm_from_json,
    "DMorphism": morphism_from_json,
    "FlagResolution": flag_resolution_from_json,
    "EModuleGraded": e_graded_from_json,
    "DifferentialEModule": e_dm_from_json,
    "StrandResult": strand_from_json,
}


def ring_of(obj):
    if isinstance(obj, (FreeModule, PresentedModule, DifferentialModule, EModuleGraded, DifferentialEModule)):
        return obj.ring
    if isinstance(obj, GradedMatrix):
        return obj.source.ring
    if isinstance(obj, FComplex):
        return obj.ring
    if isinstance(obj, DMorphism):
        return obj.source.ring
    if isinstance(obj, FlagResolution):
        return obj.flag.ring
    if isinstance(obj, StrandResult):
        return obj.strand.ring
    raise TypeError(f"no ring for {type(obj).__name__}")


def dump(obj) -> Dict:
    """Self-contained document for any public type."""
    name = type(obj).__name__
    if name not in DECODERS:
        raise TypeError(f"no JSON encoding for {name}")
    return {"schema": SCHEMA_VERSION, "type": name, "ring": to_json(ring_of(obj)), "value": to_json(obj)}


def load(doc):
    check_schema(doc)
    name = require(doc, "type", "")
    if name not in DECODERS:
        raise SchemaError(f"unknown type {name!r}", "/type")
    ring = ring_from_json(require(doc, "ring", ""), "/ring")
    return DECODERS[name](ring, require(doc, "value", ""), "/value")
