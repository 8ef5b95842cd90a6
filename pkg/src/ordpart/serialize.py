"""JSON encodings of ordinals, interval sets, colorings and derivations.

Ordinals nested inside other objects are canonical expression strings.
Top-level documents carry ``schema_version`` and ``kind``; the schemas live
in ``ordpart/schemas/ordpart.schema.json``.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Any, Dict

from .derivation import Derivation, Evidence, Statement
from .expr import parse_ordinal, render
from .intervals import IntervalSet, format_interval_set, order_type
from .ordinal import Ordinal
from .partition import (
    DecomposableColoring,
    FinOrdSet,
    PairColoring,
    SierpinskiColoring,
    TableColoring,
    decomposable_coloring,
    sierpinski_coloring,
)

SCHEMA_VERSION = 1


def load_schema() -> Dict[str, Any]:
    text = resources.files("ordpart").joinpath("schemas/ordpart.schema.json").read_text("utf-8")
    return json.loads(text)


def schema_for(name: str) -> Dict[str, Any]:
    """A standalone schema validating the ``$defs`` entry ``name``."""
    full = load_schema()
    return {"$schema": full["$schema"], "$defs": full["$defs"], "$ref": f"#/$defs/{name}"}


def _doc(kind: str, body: Dict[str, Any]) -> Dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, **body}


def ordinal_to_json(a: Ordinal, unicode: bool = False) -> Dict[str, Any]:
    return _doc("ordinal", {
        "value": render(a, unicode),
        "terms": [{"exponent": render(e, unicode), "coefficient": c} for e, c in a.terms],
    })


def interval_set_to_json(s: IntervalSet, unicode: bool = False) -> Dict[str, Any]:
    return _doc("interval_set", {
        "text": format_interval_set(s, unicode),
        "intervals": [{"lo": render(lo, unicode), "hi": render(hi, unicode)} for lo, hi in s],
        "order_type": render(order_type(s), unicode),
    })


def interval_set_from_json(doc: Dict[str, Any]) -> IntervalSet:
    return IntervalSet((parse_ordinal(iv["lo"]), parse_ordinal(iv["hi"])) for iv in doc["intervals"])


def coloring_to_json(c: PairColoring) -> Dict[str, Any]:
    if isinstance(c, TableColoring):
        return _doc("coloring", {
            "form": "table",
            "colors": c.k,
            "ground": [render(x) for x in c.ground],
            "pairs": [{"pair": [render(x), render(y)], "color": col}
                      for (x, y), col in sorted(c.table.items())],
        })
    if isinstance(c, SierpinskiColoring):
        return _doc("coloring", {"form": "rule", "colors": 2, "rule": "sierpinski",
                                 "bound": render(c.bound)})
    if isinstance(c, DecomposableColoring):
        return _doc("coloring", {"form": "rule", "colors": 2, "rule": "decomposable",
                                 "bound": render(c.alpha), "cut": render(c.cut),
                                 "tail": render(c.tail)})
    raise TypeError(f"cannot serialize {type(c).__name__}")


def coloring_from_json(doc: Dict[str, Any]) -> PairColoring:
    try:
        return _coloring_from_json(doc)
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed coloring document: {exc!r}") from exc


def _coloring_from_json(doc: Dict[str, Any]) -> PairColoring:
    if doc.get("form") == "table":
        ground = FinOrdSet(parse_ordinal(x) for x in doc["ground"])
        table = {}
        for entry in doc["pairs"]:
            x, y = (parse_ordinal(v) for v in entry["pair"])
            table[(x, y)] = int(entry["color"])
        return TableColoring(ground, table, int(doc.get("colors", 2)))
    if doc.get("form") == "rule":
        bound = parse_ordinal(doc["bound"])
        if doc["rule"] == "sierpinski":
            return sierpinski_coloring(bound)
        if doc["rule"] == "decomposable":
            return decomposable_coloring(bound)
        raise ValueError(f"unknown coloring rule {doc['rule']!r}")
    raise ValueError(f"unknown coloring form {doc.get('form')!r}")


def statement_to_json(s: Statement, unicode: bool = False, top: bool = True) -> Dict[str, Any]:
    body = {"source": render(s.source, unicode), "goals": [render(g, unicode) for g in s.goals]}
    if not top:
        return body
    return _doc("statement", {**body, "exponent": 2,
                              "text": f"{body['source']} -> ({body['goals'][0]}, {body['goals'][1]})"})


def _node_to_json(d: Derivation, unicode: bool) -> Dict[str, Any]:
    return {
        "rule": d.rule,
        "conclusion": statement_to_json(d.conclusion, unicode, top=False),
        "params": {k: render(v, unicode) for k, v in d.params},
        "evidence": [
            {"condition": e.condition, "values": {k: render(v, unicode) for k, v in e.values}, "ok": e.ok}
            for e in d.evidence
        ],
        "premises": [_node_to_json(p, unicode) for p in d.premises],
    }


def derivation_to_json(d: Derivation, unicode: bool = False) -> Dict[str, Any]:
    return _doc("derivation", _node_to_json(d, unicode))


def derivation_from_json(doc: Dict[str, Any]) -> Derivation:
    try:
        return _node_from_json(doc)
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed derivation document: {exc!r}") from exc


def _node_from_json(doc: Dict[str, Any]) -> Derivation:
    concl = doc["conclusion"]
    return Derivation(
        Statement(parse_ordinal(concl["source"]), tuple(parse_ordinal(g) for g in concl["goals"])),
        doc["rule"],
        tuple(_node_from_json(p) for p in doc.get("premises", [])),
        tuple((k, parse_ordinal(v)) for k, v in doc.get("params", {}).items()),
        tuple(
            Evidence(e["condition"], tuple((k, parse_ordinal(v)) for k, v in e["values"].items()), bool(e["ok"]))
            for e in doc.get("evidence", [])
        ),
    )
