'''Canonical JSON form of an order.

Layout::

    {"base": {"type": "P2"} | {"type": "F", "n": 0},
     "components": [{"id", "class", "e", "mults", "nodes_at", "annotations"?}],
     "points": [{"id", "parent": "base" | point id, "on_D", "node"}],
     "curves": [{"id", "class", "mults", "irreducible"}],
     "id"?: fixture id}

Classes are integer lists (``[d]`` or ``[a, b]``); every rational elsewhere
is a ``"p/q"`` string.  ``nodes_at`` lists the nodes of D on a component and
is checked against the multiplicities on parse.  Keys are sorted on output so
that equal orders give identical text.
'''
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .config import BlowupPoint, CurveRecord, SurfaceModel
from .errors import DPOrdersError, InvalidConfiguration, ParseError
from .lattice import BasisTag
from .order import OrderData, RamificationComponent

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.match(s):
        raise ParseError(f"not a rational string: {s!r}")
    x = Fraction(s)
    if "/" in s and s != rational(x):
        raise ParseError(f"rational {s!r} is not in lowest terms")
    return x


# encoding

def base_to_json(b: BasisTag) -> dict:
    return {"type": "P2"} if b.is_p2 else {"type": "F", "n": b.n}


def _mults(c: CurveRecord) -> dict:
    return {p: m for p, m in c.mults}


def order_to_json(o: OrderData, fixture_id: str | None = None) -> dict:
    S = o.surface
    node_ids = {p.id for p in S.points if p.node_of_D}
    comps = []
    for c in o.components:
        d = {
            "id": c.id,
            "class": list(c.curve.base_coeffs),
            "e": c.e,
            "mults": _mults(c.curve),
            "nodes_at": [p for p in S.point_ids if p in node_ids and c.curve.mult(p)],
        }
        if c.annotations:
            d["annotations"] = list(c.annotations)
        comps.append(d)
    out: dict[str, Any] = {
        "base": base_to_json(o.base),
        "components": comps,
        "points": [
            {"id": p.id, "parent": p.parent or "base", "on_D": p.on_D, "node": p.node_of_D} for p in S.points
        ],
        "curves": [
            {"id": c.id, "class": list(c.base_coeffs), "mults": _mults(c), "irreducible": c.irreducible}
            for c in S.curves
        ],
    }
    if fixture_id is not None:
        out["id"] = fixture_id
    return out


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def order_dumps(o: OrderData, fixture_id: str | None = None) -> str:
    return dumps(order_to_json(o, fixture_id))


# decoding

def _need(d: dict, key: str, typ, where: str):
    if not isinstance(d, dict):
        raise ParseError(f"{where}: expected an object")
    if key not in d:
        raise ParseError(f"{where}: missing key {key!r}")
    v = d[key]
    if typ is int and (isinstance(v, bool) or not isinstance(v, int)):
        raise ParseError(f"{where}.{key}: expected an integer")
    if typ is not int and not isinstance(v, typ):
        raise ParseError(f"{where}.{key}: expected {typ.__name__}")
    return v


def _check_keys(d: dict, allowed: set[str], where: str) -> None:
    extra = set(d) - allowed
    if extra:
        raise ParseError(f"{where}: unknown keys {sorted(extra)}")


def base_from_json(d: Any) -> BasisTag:
    t = _need(d, "type", str, "base")
    if t == "P2":
        _check_keys(d, {"type"}, "base")
        return BasisTag.p2()
    if t == "F":
        _check_keys(d, {"type", "n"}, "base")
        n = _need(d, "n", int, "base")
        if n < 0:
            raise ParseError("base.n must be non-negative")
        return BasisTag.hirzebruch(n)
    raise ParseError(f"unknown base type {t!r}")


def _class(v: Any, base: BasisTag, where: str) -> tuple[int, ...]:
    if not isinstance(v, list) or len(v) != base.rank:
        raise ParseError(f"{where}.class: expected a list of {base.rank} integers")
    out = []
    for x in v:
        if isinstance(x, str):
            x = parse_rational(x)
            if x.denominator != 1:
                raise ParseError(f"{where}.class: curve classes are integral")
            x = int(x)
        if isinstance(x, bool) or not isinstance(x, int):
            raise ParseError(f"{where}.class: expected integers")
        out.append(x)
    return tuple(out)


def _mult_map(v: Any, where: str) -> dict[str, int]:
    if not isinstance(v, dict):
        raise ParseError(f"{where}.mults: expected an object")
    for k, m in v.items():
        if isinstance(m, bool) or not isinstance(m, int):
            raise ParseError(f"{where}.mults[{k!r}]: expected an integer")
    return v


def order_from_json(d: Any) -> OrderData:
    if not isinstance(d, dict):
        raise ParseError("top level: expected an object")
    _check_keys(d, {"base", "components", "points", "curves", "id"}, "top level")
    base = base_from_json(_need(d, "base", dict, "top level"))
    points = []
    for i, p in enumerate(_need(d, "points", list, "top level")):
        w = f"points[{i}]"
        _check_keys(p, {"id", "parent", "on_D", "node"}, w)
        parent = _need(p, "parent", str, w)
        points.append(BlowupPoint(_need(p, "id", str, w), None if parent == "base" else parent,
                                  _need(p, "on_D", bool, w), _need(p, "node", bool, w)))
    curves = []
    for i, c in enumerate(_need(d, "curves", list, "top level")):
        w = f"curves[{i}]"
        _check_keys(c, {"id", "class", "mults", "irreducible"}, w)
        curves.append(CurveRecord.make(_need(c, "id", str, w), base, _class(_need(c, "class", list, w), base, w),
                                       _mult_map(_need(c, "mults", dict, w), w), _need(c, "irreducible", bool, w)))
    S = SurfaceModel(base, points, curves)
    comps = []
    claimed: dict[str, list[str]] = {}
    for i, c in enumerate(_need(d, "components", list, "top level")):
        w = f"components[{i}]"
        _check_keys(c, {"id", "class", "e", "mults", "nodes_at", "annotations"}, w)
        cid = _need(c, "id", str, w)
        e = _need(c, "e", int, w)
        if e < 2:
            raise InvalidConfiguration(f"{w}: ramification degree must be at least 2, got {e}")
        ann = c.get("annotations", [])
        if not isinstance(ann, list) or not all(isinstance(a, str) for a in ann):
            raise ParseError(f"{w}.annotations: expected a list of strings")
        curve = CurveRecord.make(cid, base, _class(_need(c, "class", list, w), base, w), _mult_map(_need(c, "mults", dict, w), w))
        comps.append(RamificationComponent(cid, curve, e, tuple(ann)))
        nodes = _need(c, "nodes_at", list, w)
        if not all(isinstance(x, str) for x in nodes):
            raise ParseError(f"{w}.nodes_at: expected point ids")
        claimed[cid] = nodes
    o = OrderData(S, comps)
    want = order_to_json(o)["components"]
    for c in want:
        if sorted(claimed[c["id"]]) != sorted(c["nodes_at"]):
            raise InvalidConfiguration(
                f"component {c['id']!r}: nodes_at {claimed[c['id']]} disagrees with the multiplicities ({c['nodes_at']})"
            )
    return o


def order_loads(text: str) -> OrderData:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    return order_from_json(d)


# point specs for the command line

_SPEC = re.compile(r"^(?P<id>[^@:=,\s]+)(@(?P<parent>[^@:=,\s]+))?(:(?P<inc>.*))?$")


def parse_point_spec(spec: str) -> tuple[str, str | None, dict[str, int]]:
    '''``id[@parent][:curve=m,...]`` or a JSON object ``{"id", "parent"?, "incidences"?}``.'''
    spec = spec.strip()
    if spec.startswith("{"):
        try:
            d = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed point spec: {exc}") from None
        _check_keys(d, {"id", "parent", "incidences"}, "point spec")
        pid = _need(d, "id", str, "point spec")
        parent = d.get("parent")
        if parent == "base":
            parent = None
        if parent is not None and not isinstance(parent, str):
            raise ParseError("point spec.parent: expected a point id")
        inc = _mult_map(d.get("incidences", {}), "point spec")
        return pid, parent, dict(inc)
    m = _SPEC.match(spec)
    if not m:
        raise ParseError(f"malformed point spec {spec!r}")
    inc: dict[str, int] = {}
    if m.group("inc"):
        for part in m.group("inc").split(","):
            name, eq, val = part.partition("=")
            name = name.strip()
            if not name:
                raise ParseError(f"malformed incidence {part!r}")
            if not eq:
                val = "1"
            try:
                inc[name] = int(val)
            except ValueError:
                raise ParseError(f"malformed multiplicity in {part!r}") from None
    parent = m.group("parent")
    return m.group("id"), None if parent in (None, "base") else parent, inc


__all__ = [
    "DPOrdersError", "rational", "parse_rational", "order_to_json", "order_from_json",
    "order_dumps", "order_loads", "dumps", "parse_point_spec",
]
