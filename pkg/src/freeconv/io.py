"""JSON codecs for the value types, and DOT export for graphs.

Rationals are written as reduced ``"p/q"`` strings, or bare ``"p"`` when the
denominator is one.  Bare JSON integers are accepted on input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .convolve import ConvResult
from .graph import ColoredRootedGraph, Edge
from .series import Dist, FormalSeries, JacobiParams, as_fraction
from .walks import WalkTable

__all__ = [
    "FormatError",
    "frac_to_str",
    "dist_to_json",
    "dist_from_json",
    "eta_to_json",
    "eta_from_json",
    "conv_to_json",
    "jacobi_to_json",
    "jacobi_from_json",
    "graph_to_json",
    "graph_from_json",
    "walks_to_json",
    "to_dot",
    "dumps",
    "load_file",
]


class FormatError(ValueError):
    """A JSON document does not match the expected schema."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def frac_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fracs(values: Sequence) -> list[str]:
    return [frac_to_str(v) for v in values]


def _parse_fracs(doc: dict, field: str) -> list[Fraction]:
    if field not in doc:
        raise FormatError(field, "missing")
    values = doc[field]
    if not isinstance(values, list):
        raise FormatError(field, "expected a list of rationals")
    out = []
    for i, v in enumerate(values):
        if isinstance(v, float) or isinstance(v, bool):
            raise FormatError(f"{field}[{i}]", f"expected an exact rational, got {v!r}")
        try:
            out.append(as_fraction(v))
        except (TypeError, ValueError, ZeroDivisionError):
            raise FormatError(f"{field}[{i}]", f"not a rational: {v!r}") from None
    return out


def _parse_order(doc: dict, available: int, field: str = "order") -> int:
    order = doc.get(field, available)
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise FormatError(field, f"expected a positive integer, got {order!r}")
    if order > available:
        raise FormatError(field, f"order {order} exceeds the {available} stored values")
    return order


def dist_to_json(d: Dist) -> dict:
    return {"order": d.order, "moments": _fracs(d.moments)}


def dist_from_json(doc: Any) -> Dist:
    if not isinstance(doc, dict):
        raise FormatError("<root>", "expected a JSON object")
    moments = _parse_fracs(doc, "moments")
    order = _parse_order(doc, len(moments))
    return Dist(moments[:order])


def eta_to_json(e: FormalSeries) -> dict:
    return {"order": e.order, "first_return": _fracs(e.tail())}


def eta_from_json(doc: Any) -> FormalSeries:
    if not isinstance(doc, dict):
        raise FormatError("<root>", "expected a JSON object")
    values = _parse_fracs(doc, "first_return")
    order = _parse_order(doc, len(values))
    return FormalSeries.from_tail(values[:order], order)


def conv_to_json(r: ConvResult) -> dict:
    return {
        "order": r.order,
        "moments": _fracs(r.moments),
        "first_return": _fracs(r.first_return),
        "method": r.method,
    }


def jacobi_to_json(J: JacobiParams) -> dict:
    return {"alpha": _fracs(J.alpha), "omega": _fracs(J.omega)}


def jacobi_from_json(doc: Any) -> JacobiParams:
    if not isinstance(doc, dict):
        raise FormatError("<root>", "expected a JSON object")
    return JacobiParams(_parse_fracs(doc, "alpha"), _parse_fracs(doc, "omega"))


def graph_to_json(g: ColoredRootedGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "root": g.root,
        "edges": [{"u": e.u, "v": e.v, "color": e.color, "mult": e.mult} for e in g.edges],
    }


def graph_from_json(doc: Any) -> ColoredRootedGraph:
    if not isinstance(doc, dict):
        raise FormatError("<root>", "expected a JSON object")
    for field in ("vertices", "root"):
        if field not in doc:
            raise FormatError(field, "missing")
    if not isinstance(doc["vertices"], list):
        raise FormatError("vertices", "expected a list of identifiers")
    edges = []
    for i, e in enumerate(doc.get("edges", [])):
        if not isinstance(e, dict) or "u" not in e or "v" not in e:
            raise FormatError(f"edges[{i}]", "expected an object with u and v")
        color = e.get("color", 1)
        mult = e.get("mult", 1)
        if color not in (1, 2):
            raise FormatError(f"edges[{i}].color", f"expected 1 or 2, got {color!r}")
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
            raise FormatError(f"edges[{i}].mult", f"expected a positive integer, got {mult!r}")
        edges.append(Edge(str(e["u"]), str(e["v"]), color, mult))
    try:
        return ColoredRootedGraph(doc["vertices"], doc["root"], edges)
    except ValueError as exc:
        raise FormatError("edges" if "edge" in str(exc) else "root", str(exc)) from None


def walks_to_json(t: WalkTable) -> dict:
    doc: dict[str, Any] = {
        "max_n": t.max_n,
        "spectral": t.spectral,
        "first_return": t.first_return,
        "dwalks": t.dwalks,
    }
    if t.dwalks_brute is not None:
        doc["dwalks_brute"] = t.dwalks_brute
        doc["agreement"] = "pass" if t.agreement else "fail"
    if t.even_fwalk_ok is not None:
        doc["even_fwalk_check"] = t.even_fwalk_ok
    return doc


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: ColoredRootedGraph, name: str = "G") -> str:
    """Undirected DOT text; color-1 edges solid, color-2 dashed, every edge labelled."""
    lines = [f"graph {_dot_id(name)} {{"]
    for v in g.vertices:
        shape = "doublecircle" if v == g.root else "circle"
        lines.append(f"  {_dot_id(v)} [shape={shape}];")
    for e in g.edges:
        style = "solid" if e.color == 1 else "dashed"
        label = f"c{e.color}" if e.mult == 1 else f"c{e.color}x{e.mult}"
        lines.append(f"  {_dot_id(e.u)} -- {_dot_id(e.v)} [label={_dot_id(label)}, style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_file(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
