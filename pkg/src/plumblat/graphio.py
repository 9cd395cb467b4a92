"""Graph files and cycle specs.

A graph file is a JSON document::

    {
      "name": "g2",
      "vertices": [{"id": 1, "euler": -3}, ...],
      "edges": [[1, 2], ...]
    }

A cycle spec is either a comma-separated list of integer coefficients in
ascending vertex-id order ("2,6,1,6,2,3,3") or a nonnegative combination of
anti-dual basis symbols ("2*Estar(3) + Estar(5)"; "Estar(v3)" also accepted).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Optional

from .errors import GraphParseError
from .graph import Cycle, IntersectionForm, ResolutionGraph


def parse_graph_text(text: str, source: Optional[str] = None) -> ResolutionGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, source=source, line=exc.lineno, column=exc.colno) from None
    return _graph_from_doc(doc, source)


def parse_graph_file(path, source: Optional[str] = None) -> ResolutionGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read(), source=source or str(path))


def _graph_from_doc(doc, source) -> ResolutionGraph:
    def bad(msg):
        raise GraphParseError(msg, source=source)

    if not isinstance(doc, dict):
        bad("top-level value must be an object")
    vertices = doc.get("vertices")
    edges = doc.get("edges", [])
    name = doc.get("name")
    if not isinstance(vertices, list) or not vertices:
        bad("'vertices' must be a non-empty list")
    vs = []
    for i, item in enumerate(vertices):
        if not isinstance(item, dict) or not isinstance(item.get("id"), int) \
                or not isinstance(item.get("euler"), int):
            bad(f"vertices[{i}] must be an object with integer 'id' and 'euler'")
        vs.append((item["id"], item["euler"]))
    if not isinstance(edges, list):
        bad("'edges' must be a list")
    es = []
    for i, item in enumerate(edges):
        if (not isinstance(item, (list, tuple)) or len(item) != 2
                or not all(isinstance(x, int) for x in item)):
            bad(f"edges[{i}] must be a pair of integer ids")
        es.append((item[0], item[1]))
    if name is not None and not isinstance(name, str):
        bad("'name' must be a string")
    return ResolutionGraph(tuple(vs), tuple(es), name)


def graph_to_doc(g: ResolutionGraph) -> dict:
    doc = {}
    if g.name is not None:
        doc["name"] = g.name
    doc["vertices"] = [{"id": v, "euler": e} for v, e in g.vertices]
    doc["edges"] = [[a, b] for a, b in g.edges]
    return doc


def graph_to_text(g: ResolutionGraph) -> str:
    return json.dumps(graph_to_doc(g), indent=2) + "\n"


_ESTAR_TERM = re.compile(r"^\s*(?:(\d+)\s*\*\s*)?Estar\(\s*v?(-?\d+)\s*\)\s*$")


def parse_cycle_spec(f: IntersectionForm, spec: str) -> Cycle:
    spec = spec.strip()
    if not spec:
        raise GraphParseError("empty cycle spec")
    if "Estar" in spec:
        acc = f.zero()
        for term in spec.split("+"):
            m = _ESTAR_TERM.match(term)
            if not m:
                raise GraphParseError(f"bad anti-dual term {term.strip()!r}")
            k = int(m.group(1)) if m.group(1) else 1
            v = int(m.group(2))
            if v not in f.index:
                raise GraphParseError(f"Estar({v}): vertex {v} not in graph")
            acc = acc + f.dual(v).scale(k)
        return acc
    parts = [p for p in re.split(r"[,\s]+", spec) if p]
    try:
        coeffs = [int(p) for p in parts]
    except ValueError:
        raise GraphParseError(f"cycle spec must be integers or Estar terms, got {spec!r}") from None
    if len(coeffs) != f.n:
        raise GraphParseError(f"expected {f.n} coefficients, got {len(coeffs)}")
    return Cycle.from_seq(f.ids, coeffs)


def frac_repr(x: Fraction):
    """JSON-friendly exact value: int when integral, 'p/q' string otherwise."""
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def cycle_to_json(c: Cycle) -> dict:
    return {str(v): frac_repr(x) for v, x in zip(c.ids, c.coeffs)}


def cycle_to_text(c: Cycle) -> str:
    return "[" + ", ".join(str(frac_repr(x)) for x in c.coeffs) + "]"
