"""Structured JSON documents for weights, subdivisions, arrangements, fans.

All numeric values are integers or rational strings "p/q"; decimal floats
are rejected.  Every format round-trips: parse(emit(x)) == x, bit-exact on
rational strings.  Field names are fixed here and in docs/formats.md.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .arrangements import TreeArrangement
from .errors import FormatError
from .subdivision import Cell, MatroidalSubdivision
from .subsets import WeightVector, enumerate_ksubsets
from .trees import parse_newick, to_newick

#: the only supported entry ordering for weight files
LEX = "lex"


def rational_to_json(x) -> int | str:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_json(v) -> Fraction:
    if isinstance(v, bool):
        raise FormatError(f"not a rational value: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as e:
            raise FormatError(f"bad rational string {v!r}") from e
    raise FormatError(f"numeric values must be integers or 'p/q' strings, "
                      f"got {type(v).__name__}: {v!r}")


def _require(doc, field, types):
    if field not in doc:
        raise FormatError(f"missing field {field!r}")
    v = doc[field]
    if not isinstance(v, types) or isinstance(v, bool):
        raise FormatError(f"field {field!r} has wrong type")
    return v


def _int_list(v, what):
    if not isinstance(v, list) or \
            any(isinstance(x, bool) or not isinstance(x, int) for x in v):
        raise FormatError(f"{what} must be a list of integers")
    return [int(x) for x in v]


# -- weight documents ----------------------------------------------------


def emit_weight(w: WeightVector) -> dict:
    return {
        "type": "weight",
        "k": w.k,
        "n": w.n,
        "ordering": LEX,
        "values": [rational_to_json(v) for v in w.values()],
    }


def parse_weight(doc: dict) -> WeightVector:
    if _require(doc, "type", str) != "weight":
        raise FormatError("document type must be 'weight'")
    k = _require(doc, "k", int)
    n = _require(doc, "n", int)
    if doc.get("ordering", LEX) != LEX:
        raise FormatError(f"unsupported ordering {doc.get('ordering')!r}")
    values = _require(doc, "values", list)
    subsets = enumerate_ksubsets(k, n)
    if len(values) != len(subsets):
        raise FormatError(
            f"expected {len(subsets)} values for (k,n)=({k},{n}), "
            f"got {len(values)}")
    return WeightVector(k, n, [rational_from_json(v) for v in values])


# -- subdivision documents -----------------------------------------------


def emit_subdivision(sd: MatroidalSubdivision) -> dict:
    return {
        "type": "subdivision",
        "k": sd.k,
        "n": sd.n,
        "cells": [cell.as_lists() for cell in sd],
    }


def parse_subdivision(doc: dict) -> MatroidalSubdivision:
    if _require(doc, "type", str) != "subdivision":
        raise FormatError("document type must be 'subdivision'")
    k = _require(doc, "k", int)
    n = _require(doc, "n", int)
    cells = []
    for c in _require(doc, "cells", list):
        if not isinstance(c, list):
            raise FormatError("each cell must be a list of basis lists")
        cells.append(Cell(k, n, [tuple(_int_list(b, "basis")) for b in c]))
    return MatroidalSubdivision(k, n, cells)


# -- arrangement documents -----------------------------------------------


def emit_arrangement(T: TreeArrangement) -> dict:
    return {
        "type": "arrangement",
        "k": T.k,
        "n": T.n,
        "trees": [{"index": list(J), "tree": to_newick(tree)}
                  for J, tree in T.items()],
    }


def parse_arrangement(doc: dict) -> TreeArrangement:
    if _require(doc, "type", str) != "arrangement":
        raise FormatError("document type must be 'arrangement'")
    k = _require(doc, "k", int)
    n = _require(doc, "n", int)
    trees = {}
    for entry in _require(doc, "trees", list):
        if not isinstance(entry, dict):
            raise FormatError("each arrangement entry must be an object")
        J = tuple(_int_list(_require(entry, "index", list), "index"))
        if J in trees:
            raise FormatError(f"duplicate arrangement index {J}")
        trees[J] = parse_newick(_require(entry, "tree", str))
    try:
        return TreeArrangement(k, n, trees)
    except Exception as e:
        raise FormatError(f"invalid arrangement document: {e}") from e


# -- fan documents -------------------------------------------------------


class FanFile:
    """Externally computed fan data: rays, lineality basis, cone ray lists."""

    def __init__(self, k, n, rays, lineality, cones):
        N = len(enumerate_ksubsets(k, n))
        for v in list(rays) + list(lineality):
            if len(v) != N:
                raise FormatError(f"fan vectors must have length {N}")
        for c in cones:
            if any(not 0 <= i < len(rays) for i in c):
                raise FormatError(f"cone ray index out of range: {c}")
        self.k, self.n = k, n
        self.rays = [tuple(int(x) for x in v) for v in rays]
        self.lineality = [tuple(int(x) for x in v) for v in lineality]
        self.cones = [tuple(int(i) for i in c) for c in cones]

    def interior_point(self, cone_index: int) -> WeightVector:
        """Sum of the cone's rays plus the sum of the lineality basis."""
        N = len(self.rays[0]) if self.rays else \
            len(enumerate_ksubsets(self.k, self.n))
        total = [Fraction(0)] * N
        for i in self.cones[cone_index]:
            total = [a + b for a, b in zip(total, self.rays[i])]
        for v in self.lineality:
            total = [a + b for a, b in zip(total, v)]
        return WeightVector(self.k, self.n, total)

    def __eq__(self, other):
        return isinstance(other, FanFile) and \
            (self.k, self.n, self.rays, self.lineality, self.cones) == \
            (other.k, other.n, other.rays, other.lineality, other.cones)


def emit_fan(fan: FanFile) -> dict:
    return {
        "type": "fan",
        "k": fan.k,
        "n": fan.n,
        "rays": [list(v) for v in fan.rays],
        "lineality": [list(v) for v in fan.lineality],
        "cones": [list(c) for c in fan.cones],
    }


def parse_fan(doc: dict) -> FanFile:
    if _require(doc, "type", str) != "fan":
        raise FormatError("document type must be 'fan'")
    k = _require(doc, "k", int)
    n = _require(doc, "n", int)
    rays = [_int_list(v, "ray") for v in _require(doc, "rays", list)]
    lineality = [_int_list(v, "lineality vector")
                 for v in _require(doc, "lineality", list)]
    cones = [_int_list(c, "cone") for c in _require(doc, "cones", list)]
    return FanFile(k, n, rays, lineality, cones)


# -- file helpers --------------------------------------------------------

_PARSERS = {
    "weight": parse_weight,
    "subdivision": parse_subdivision,
    "arrangement": parse_arrangement,
    "fan": parse_fan,
}


def load_document(text: str):
    """Parse any supported document from JSON text."""
    try:
        doc = json.loads(text, parse_float=_reject_float,
                         parse_constant=_reject_float)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    kind = doc.get("type")
    if kind not in _PARSERS:
        raise FormatError(f"unknown document type {kind!r}")
    return _PARSERS[kind](doc)


def dump_document(obj) -> str:
    if isinstance(obj, WeightVector):
        doc = emit_weight(obj)
    elif isinstance(obj, MatroidalSubdivision):
        doc = emit_subdivision(obj)
    elif isinstance(obj, TreeArrangement):
        doc = emit_arrangement(obj)
    elif isinstance(obj, FanFile):
        doc = emit_fan(obj)
    else:
        raise FormatError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(doc, indent=2) + "\n"


def _reject_float(s):
    raise FormatError(f"decimal floats are not accepted: {s!r}")
