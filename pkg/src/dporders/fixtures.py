'''The fixture catalog.

Minimal orders drawn from the configuration figures, plus blown up orders
exercising each classification clause.  Every entry carries the predicate
values it is expected to satisfy; these were worked out by hand and are
re-checked by ``check`` in the test suite.

Blown up fixtures are built with :func:`dporders.order.blowup_order`, so the
catalog only states where points go.
'''
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .config import CurveRecord, SurfaceModel
from .errors import UnknownFixture
from .lattice import BasisTag
from .order import OrderData, RamificationComponent, blowup_order, fresh_point

P2 = BasisTag.p2()
F0, F1, F2 = (BasisTag.hirzebruch(n) for n in range(3))


@dataclass(frozen=True)
class Fixture:
    id: str
    order: OrderData
    description: str
    expect: dict = field(default_factory=dict, hash=False, compare=False)
    figure: str | None = None
    labels: tuple[str, ...] = ()
    cross_ref: str | None = None


@dataclass(frozen=True)
class CrossRef:
    '''An intrinsic contraction relating two minimal orders on different bases.'''

    source: str
    target: str
    contracted: str
    note: str


def build(base: BasisTag, components: Sequence, curves: Sequence = (), points: Sequence = ()) -> OrderData:
    '''Assemble an order, then blow up ``points`` in order.

    ``components``: ``(id, class, e)`` or ``(id, class, e, annotations)``.
    ``curves``: ``(id, class)`` or ``(id, class, irreducible)``.
    ``points``: ``(id, parent, {curve id: multiplicity})``.
    '''
    crs = []
    for c in curves:
        cid, cls = c[0], c[1]
        irr = c[2] if len(c) > 2 else True
        crs.append(CurveRecord.make(cid, base, cls, {}, irr))
    comps = []
    for c in components:
        cid, cls, e = c[:3]
        ann = tuple(c[3]) if len(c) > 3 else ()
        comps.append(RamificationComponent(cid, CurveRecord.make(cid, base, cls), e, ann))
    o = OrderData(SurfaceModel(base, (), tuple(crs)), tuple(comps))
    for pid, parent, inc in points:
        o = blowup_order(o, fresh_point(o, pid, parent, inc))
    return o


def _q(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _expect(dp: bool, adp: bool, minimal: bool, k2, k_zero: Sequence[str] | None = None,
            tags: Sequence[str] = ()) -> dict:
    out = {"del_pezzo": dp, "almost_del_pezzo": adp, "minimal": minimal, "k_squared": _q(k2)}
    if k_zero is not None:
        out["k_zero"] = sorted(k_zero)
    if tags:
        out["tags"] = sorted(tags)
    return out


def _points_on(curve: str, ids: Sequence[str], extra: dict | None = None) -> list:
    return [(p, None, {curve: 1, **((extra or {}).get(p, {}))}) for p in ids]


def _figure_entries() -> list[Fixture]:
    out = []
    mu = ("mu", "-mu")

    # cubic configurations, drawn for any e; catalogued at e = 2
    cubic = _expect(True, True, True, Fraction(9, 4), [], ["T1-P2-deg3:1"])
    out += [
        Fixture("p2-cubic-line-conic", build(P2, [("L", (1,), 2, mu), ("Q", (2,), 2, mu)]),
                "transverse line and conic", cubic, "cubic", ("mu", "-mu", "mu", "-mu")),
        Fixture("p2-cubic-three-lines", build(P2, [("L1", (1,), 2, mu), ("L2", (1,), 2, mu), ("L3", (1,), 2, mu)]),
                "three transverse lines", cubic, "cubic", ("-mu", "mu", "mu", "-mu", "mu", "-mu")),
        Fixture("p2-cubic-smooth", build(P2, [("C", (3,), 2)]), "smooth cubic", cubic, "cubic"),
        Fixture("p2-cubic-nodal", build(P2, [("C", (3,), 2, mu)]), "nodal cubic", cubic, "cubic", mu),
    ]

    # quartic configurations: four with e = 2, nine drawn with e = 3
    q2 = _expect(True, True, True, 1, [], ["T1-P2-deg4:1"])
    q3 = _expect(True, True, True, Fraction(1, 9), [], ["T1-P2-deg4:1"])
    out += [
        Fixture("p2-quartic-e2-1node", build(P2, [("Q", (4,), 2)]), "irreducible quartic with one node", q2,
                "quartic", ("1", "1")),
        Fixture("p2-quartic-e2-2nodes", build(P2, [("Q", (4,), 2)]), "irreducible quartic with two nodes", q2,
                "quartic", ("1",) * 4),
        Fixture("p2-quartic-e2-3nodes", build(P2, [("Q", (4,), 2)]), "irreducible quartic with three nodes", q2,
                "quartic", ("1",) * 6),
        Fixture("p2-quartic-e2-two-conics", build(P2, [("Q1", (2,), 2), ("Q2", (2,), 2)]),
                "two conics crossing at four points", q2, "quartic", ("1",) * 8),
    ]
    e3 = [
        ("p2-quartic-e3-1node", [("Q", (4,), 3)], "irreducible quartic with one node", ("1", "2")),
        ("p2-quartic-e3-nodal-cubic-line-a", [("C", (3,), 3), ("L", (1,), 3)], "transverse nodal cubic and line",
         ("1", "2", "1", "2", "1", "2", "1", "2")),
        ("p2-quartic-e3-smooth-cubic-line-a", [("C", (3,), 3), ("L", (1,), 3)], "transverse smooth cubic and line",
         ("2", "1", "1", "2", "2", "1")),
        ("p2-quartic-e3-2nodes", [("Q", (4,), 3)], "irreducible quartic with two nodes", ("2", "1", "2", "1")),
        ("p2-quartic-e3-conics", [("Q1", (2,), 3), ("Q2", (2,), 3)], "transverse conics",
         ("1", "2", "1", "2", "2", "1", "2", "1")),
        ("p2-quartic-e3-nodal-cubic-line-b", [("C", (3,), 3), ("L", (1,), 3)], "transverse nodal cubic and line",
         ("2", "1", "2", "1", "2", "1", "1", "2")),
        ("p2-quartic-e3-3nodes", [("Q", (4,), 3)], "irreducible quartic with three nodes",
         ("1", "2", "1", "2", "1", "2")),
        ("p2-quartic-e3-smooth-cubic-line-b", [("C", (3,), 3), ("L", (1,), 3)], "transverse smooth cubic and line",
         ("1", "2", "2", "1", "1", "2")),
        ("p2-quartic-e3-conic-lines", [("Q", (2,), 3), ("L1", (1,), 3), ("L2", (1,), 3)],
         "transverse conic and lines", ("2", "1", "1", "2", "2", "1", "2", "1", "1", "2")),
    ]
    for fid, comps, desc, labels in e3:
        out.append(Fixture(fid, build(P2, comps), desc, q3, "quartic", labels))

    # [D] = 2C0 + 2F on P1xP1, any e; catalogued at e = 2
    f22 = _expect(True, True, True, 2, [], ["T1-P1P1:1"])
    out += [
        Fixture("f0-22-four-rulings",
                build(F0, [("A1", (1, 0), 2), ("A2", (1, 0), 2), ("B1", (0, 1), 2), ("B2", (0, 1), 2)]),
                "two (1,0) and two (0,1) curves", f22, "P1P1-22", ("mu", "-mu") * 4),
        Fixture("f0-22-rulings-and-diagonal", build(F0, [("A", (1, 0), 2), ("B", (0, 1), 2), ("C", (1, 1), 2)]),
                "(1,0) + (0,1) + (1,1)", f22, "P1P1-22", ("-mu", "mu") * 3),
        Fixture("f0-22-ruling-and-12", build(F0, [("A", (1, 0), 2), ("C", (1, 2), 2)]),
                "(1,0) + (1,2)", f22, "P1P1-22", ("-mu", "mu") * 2),
        Fixture("f0-22-nodal", build(F0, [("D", (2, 2), 2)]), "(2,2) curve with one marked node", f22, "P1P1-22",
                ("-mu", "mu")),
        Fixture("f0-22-two-marks", build(F0, [("D", (2, 2), 2)]), "(2,2) curve with two marked crossings", f22,
                "P1P1-22", ("-mu", "mu", "-mu", "mu")),
    ]

    # larger bidegrees on P1xP1, e = 2
    out += [
        Fixture("f0-32-two-rulings-and-12", build(F0, [("A1", (1, 0), 2), ("A2", (1, 0), 2), ("C", (1, 2), 2)]),
                "two (1,0) curves and a (1,2) curve", _expect(True, True, True, 1, [], ["T1-P1P1:1"]), "P1P1-e2"),
        Fixture("f0-23-22-and-ruling-a", build(F0, [("D", (2, 2), 2), ("B", (0, 1), 2)]),
                "(2,2) curve and a (0,1) curve, first drawing", _expect(True, True, True, 1, [], ["T1-P1P1:1"]),
                "P1P1-e2"),
        Fixture("f0-23-22-and-ruling-b", build(F0, [("D", (2, 2), 2), ("B", (0, 1), 2)]),
                "(2,2) curve and a (0,1) curve, second drawing", _expect(True, True, True, 1, [], ["T1-P1P1:1"]),
                "P1P1-e2"),
        Fixture("f0-33-three-diagonals", build(F0, [("C1", (1, 1), 2), ("C2", (1, 1), 2), ("C3", (1, 1), 2)]),
                "three (1,1) curves", _expect(True, True, True, Fraction(1, 2), [], ["T1-P1P1:1"]), "P1P1-e2"),
    ]
    return out


def _minimal_entries() -> list[Fixture]:
    return [
        Fixture("p2-cubic-e2", build(P2, [("D", (3,), 2)]), "smooth cubic, e = 2",
                _expect(True, True, True, Fraction(9, 4), [], ["T1-P2-deg3:1"])),
        Fixture("p2-cubic-e3", build(P2, [("D", (3,), 3)]), "smooth cubic, e = 3",
                _expect(True, True, True, 1, [], ["T1-P2-deg3:1"])),
        Fixture("p2-quintic-e2", build(P2, [("D", (5,), 2)]), "quintic, e = 2",
                _expect(True, True, True, Fraction(1, 4), [], ["T1-P2-deg5:1"])),
        Fixture("f1-2C0+4F", build(F1, [("D", (2, 4), 2)]), "bisection 2C0+4F on F1",
                _expect(False, True, True, 1, ["C0"], ["T3-F1:1", "minimal-TAdPO-F1:1"]),
                cross_ref="p2-quartic-e2-1node"),
        Fixture("f1-3C0+5F", build(F1, [("D", (3, 5), 2)]), "trisection 3C0+5F on F1",
                _expect(False, True, True, Fraction(1, 4), ["C0"], ["CdPO-F1-3C0+5F:1", "minimal-TAdPO-F1:2"]),
                cross_ref="p2-quintic-e2"),
        Fixture("f2-2C0+4F-e2", build(F2, [("D", (2, 4), 2)]), "bisection 2C0+4F on F2, e = 2",
                _expect(False, True, True, 2, ["C0"], ["T3-F2:1", "minimal-TAdPO-F2:1"])),
        Fixture("f2-2C0+4F-e3", build(F2, [("D", (2, 4), 3)]), "bisection 2C0+4F on F2, e = 3",
                _expect(False, True, True, Fraction(8, 9), ["C0"], ["T3-F2:1", "minimal-TAdPO-F2:1"])),
        Fixture("f2-2C0+4F-section", build(F2, [("S", (1, 0), 2), ("T", (1, 4), 2)]),
                "the section C0 plus a (1,4) curve meeting it twice",
                _expect(False, True, True, 2, ["S"], ["T3-F2:1", "minimal-TAdPO-F2:1"])),
        Fixture("f2-3C0+6F", build(F2, [("D", (3, 6), 2)]), "trisection 3C0+6F on F2",
                _expect(False, True, True, Fraction(1, 2), ["C0"], ["CdPO-F2-3C0+6F:1", "minimal-TAdPO-F2:2"])),
    ]


def _general_on_cubic(n: int) -> OrderData:
    ids = [f"p{i}" for i in range(1, n + 1)]
    return build(P2, [("D", (3,), 2)], points=_points_on("D", ids))


def _general_on_22(n: int) -> OrderData:
    ids = [f"p{i}" for i in range(1, n + 1)]
    return build(F0, [("D", (2, 2), 2)], points=_points_on("D", ids))


def _blowup_entries() -> list[Fixture]:
    out = []
    for n in range(1, 9):
        out.append(Fixture(
            f"t1-p2-deg3-n{n}", _general_on_cubic(n), f"{n} general points on a nodal cubic, e = 2",
            _expect(True, True, False, Fraction(9 - n, 4), [], ["T1-P2-deg3:2"])))
    out += [
        Fixture("t1-p2-deg3-out-e2", build(P2, [("D", (3,), 2)], points=[("q", None, {})]),
                "one point off the cubic, e = 2", _expect(True, True, False, Fraction(5, 4), [], ["T1-P2-deg3:3"])),
        Fixture("p2-deg3-out-e3", build(P2, [("D", (3,), 3)], points=[("q", None, {})]),
                "one point off the cubic, e = 3", _expect(False, False, False, 0)),
        Fixture("p2-deg3-two-out", build(P2, [("D", (3,), 2)], points=[("q1", None, {}), ("q2", None, {})]),
                "two points off the cubic, e = 2", _expect(False, False, False, Fraction(1, 4))),
        Fixture("t3-p2-deg3-c1", build(P2, [("D", (3,), 2)], points=[("p1", None, {"D": 1}), ("p2", "p1", {"D": 1})]),
                "a point of the cubic and the infinitely near point along it",
                _expect(False, True, False, Fraction(7, 4), ["E[p1]"], ["T3-P2-deg3:1"])),
        Fixture("t3-p2-deg3-c2", build(P2, [("D", (3,), 2)], points=[("p", None, {"D": 1}), ("q", None, {})]),
                "one point on the cubic and one off it, e = 2",
                _expect(False, True, False, 1, ["line(p,q)"], ["T3-P2-deg3:2"])),
        Fixture("t3-p2-deg3-c3", build(P2, [("D", (3,), 2)], [("L", (1,))],
                                       _points_on("D", ["p1", "p2", "p3"], {p: {"L": 1} for p in ("p1", "p2", "p3")})),
                "three collinear points of the cubic",
                _expect(False, True, False, Fraction(3, 2), ["L"], ["T3-P2-deg3:3"])),
        Fixture("t3-p2-deg3-c3-tangent",
                build(P2, [("D", (3,), 2)], [("T", (1,))],
                      [("p1", None, {"D": 1, "T": 1}), ("p2", "p1", {"D": 1, "T": 1}), ("p3", None, {"D": 1, "T": 1})]),
                "tangent line to the cubic at p1 meeting it again at p3",
                _expect(False, True, False, Fraction(3, 2), ["E[p1]", "T"], ["T3-P2-deg3:1", "T3-P2-deg3:3"])),
        Fixture("t3-p2-deg3-c4",
                build(P2, [("D", (3,), 2)], [("Q", (2,))],
                      _points_on("D", [f"p{i}" for i in range(1, 7)], {f"p{i}": {"Q": 1} for i in range(1, 7)})),
                "six points of the cubic on a conic",
                _expect(False, True, False, Fraction(3, 4), ["Q"], ["T3-P2-deg3:4"])),
        Fixture("t3-p2-deg3-c5",
                build(P2, [("D", (3,), 2)], [("N", (3,))],
                      [("p1", None, {"D": 1, "N": 2})] + _points_on("D", [f"p{i}" for i in range(2, 9)],
                                                                   {f"p{i}": {"N": 1} for i in range(2, 9)})),
                "eight points of the cubic on a second cubic with a node at p1",
                _expect(False, True, False, Fraction(1, 4), ["N"], ["T3-P2-deg3:5"])),
        Fixture("p2-deg3-conic-seven",
                build(P2, [("D", (3,), 2)], [("Q", (2,))],
                      _points_on("D", [f"p{i}" for i in range(1, 8)], {f"p{i}": {"Q": 1} for i in range(1, 8)})),
                "seven points of the cubic on a conic", _expect(False, False, False, Fraction(1, 2))),
        Fixture("p2-deg3-line-four",
                build(P2, [("D", (3,), 2)], [("L", (1,))],
                      _points_on("D", ["p1", "p2", "p3"], {p: {"L": 1} for p in ("p1", "p2", "p3")})
                      + [("q", None, {"L": 1})]),
                "three collinear points of the cubic and a fourth point of their line off the cubic",
                _expect(False, False, False, Fraction(1, 2))),
        Fixture("p2-deg3-node-e2", build(P2, [("D", (3,), 2)], points=[("p", None, {"D": 2})]),
                "the node of a nodal cubic", _expect(True, True, False, 2, [], ["T1-P2-deg3:2"])),
        # quartic: two conics, M = H
        Fixture("t1-p2-deg4-in", build(P2, [("Q1", (2,), 2), ("Q2", (2,), 2)], points=[("p", None, {"Q1": 1})]),
                "one point on a conic of the quartic", _expect(True, True, False, Fraction(3, 4), [], ["T1-P2-deg4:2"])),
        Fixture("p2-deg4-out", build(P2, [("Q1", (2,), 2), ("Q2", (2,), 2)], points=[("q", None, {})]),
                "one point off the quartic", _expect(False, False, False, 0)),
        Fixture("p2-deg4-e3-in", build(P2, [("Q1", (2,), 3), ("Q2", (2,), 3)], points=[("p", None, {"Q1": 1})]),
                "one point on the quartic, e = 3", _expect(False, False, False, 0)),
        Fixture("t3-p2-deg4-2pts",
                build(P2, [("Q1", (2,), 2), ("Q2", (2,), 2)], points=_points_on("Q1", ["p1", "p2"])),
                "two points on the quartic", _expect(False, True, False, Fraction(1, 2), ["line(p1,p2)"],
                                                     ["T3-P2-deg4:1"])),
        Fixture("t3-p2-deg4-3pts",
                build(P2, [("Q1", (2,), 2), ("Q2", (2,), 2)], points=_points_on("Q1", ["p1", "p2", "p3"])),
                "three points on the quartic, no three collinear",
                _expect(False, True, False, Fraction(1, 4), ["line(p1,p2)", "line(p1,p3)", "line(p2,p3)"],
                        ["T3-P2-deg4:1"])),
        Fixture("p2-quintic-e2-in", build(P2, [("D", (5,), 2)], points=[("p", None, {"D": 1})]),
                "one point on the quintic", _expect(False, False, False, 0)),
    ]
    for n in range(1, 8):
        out.append(Fixture(
            f"t1-f0-22-n{n}", _general_on_22(n), f"{n} general points on a (2,2) curve, e = 2",
            _expect(True, True, False, Fraction(8 - n, 4), [], ["T1-P1P1:2"])))
    out += [
        Fixture("t3-f0-c1", build(F0, [("D", (2, 2), 2)], points=[("q", None, {})]),
                "one point off a (2,2) curve, e = 2",
                _expect(False, True, False, 1, ["fibre(q)", "ruling(q)"], ["T3-P1P1:1"])),
        Fixture("f0-22-out-e3", build(F0, [("D", (2, 2), 3)], points=[("q", None, {})]),
                "one point off a (2,2) curve, e = 3", _expect(False, False, False, Fraction(-1, 9))),
        Fixture("t3-f0-c2", build(F0, [("A1", (1, 0), 2), ("A2", (1, 0), 2), ("C", (1, 2), 2)],
                                  points=[("p", None, {"C": 1})]),
                "one point on the (1,2) curve of a (3,2) configuration",
                _expect(False, True, False, Fraction(3, 4), ["fibre(p)"], ["T3-P1P1:2"])),
        Fixture("t3-f0-c3", build(F0, [("C1", (1, 1), 2), ("C2", (1, 1), 2), ("C3", (1, 1), 2)],
                                  points=[("p", None, {"C1": 1})]),
                "one point on a (3,3) configuration",
                _expect(False, True, False, Fraction(1, 4), ["fibre(p)", "ruling(p)"], ["T3-P1P1:3"])),
        Fixture("t3-f0-c4", build(F0, [("D", (2, 2), 2)], [("G", (0, 1))],
                                  _points_on("D", ["p1", "p2"], {"p1": {"G": 1}, "p2": {"G": 1}})),
                "two points of a (2,2) curve on one fibre",
                _expect(False, True, False, Fraction(3, 2), ["G"], ["T3-P1P1:4"])),
        Fixture("t3-f0-c4-diagonal", build(F0, [("D", (2, 2), 2)], [("B", (1, 1))],
                                           _points_on("D", ["p1", "p2", "p3", "p4"],
                                                      {f"p{i}": {"B": 1} for i in range(1, 5)})),
                "four points of a (2,2) curve on a (1,1) curve",
                _expect(False, True, False, 1, ["B"], ["T3-P1P1:4"])),
        # F1
        Fixture("t3-f1-c1", build(F1, [("D", (2, 4), 2)], points=[("p", None, {"D": 1})]),
                "one point of the bisection off C0",
                _expect(False, True, False, Fraction(3, 4), ["C0"], ["T3-F1:1"])),
        Fixture("t3-f1-c2", build(F1, [("D", (2, 4), 2)], [("G", (0, 1))],
                                  _points_on("D", ["p1", "p2"], {"p1": {"G": 1}, "p2": {"G": 1}})),
                "both points of the bisection on one fibre",
                _expect(False, True, False, Fraction(1, 2), ["C0", "G"], ["T3-F1:1", "T3-F1:2"])),
        Fixture("t3-f1-c3", build(F1, [("D", (2, 4), 2)], points=[("p1", None, {"D": 1}), ("p2", "p1", {"D": 1})]),
                "a point of the bisection and the infinitely near point along it",
                _expect(False, True, False, Fraction(1, 2), ["C0", "E[p1]"], ["T3-F1:1", "T3-F1:3"])),
        Fixture("f1-on-C0", build(F1, [("D", (2, 4), 2)], [("S", (1, 0))], points=[("p", None, {"D": 1, "S": 1})]),
                "a point where the bisection meets C0", _expect(False, False, False, Fraction(3, 4))),
        Fixture("f1-3C0+5F-in", build(F1, [("D", (3, 5), 2)], points=[("p", None, {"D": 1})]),
                "one point on the trisection", _expect(False, False, False, 0)),
        # F2
        Fixture("t3-f2-c2", build(F2, [("D", (2, 4), 2)], points=[("q", None, {})]),
                "one point off the bisection, e = 2",
                _expect(False, True, False, 1, ["C0", "fibre(q)"], ["T3-F2:1", "T3-F2:2"])),
        Fixture("f2-out-e3", build(F2, [("D", (2, 4), 3)], points=[("q", None, {})]),
                "one point off the bisection, e = 3", _expect(False, False, False, Fraction(-1, 9))),
        Fixture("t3-f2-c3", build(F2, [("D", (2, 4), 2)], [("G", (0, 1))],
                                  _points_on("D", ["p1", "p2"], {"p1": {"G": 1}, "p2": {"G": 1}})),
                "both points of the bisection on one fibre",
                _expect(False, True, False, Fraction(3, 2), ["C0", "G"], ["T3-F2:1", "T3-F2:3"])),
        Fixture("t3-f2-c4", build(F2, [("D", (2, 4), 2)], points=[("p1", None, {"D": 1}), ("p2", "p1", {"D": 1})]),
                "a point of the bisection and the infinitely near point along it",
                _expect(False, True, False, Fraction(3, 2), ["C0", "E[p1]"], ["T3-F2:1", "T3-F2:4"])),
        Fixture("f2-node", build(F2, [("S1", (1, 2), 2), ("S2", (1, 2), 2)], points=[("n", None, {"S1": 1, "S2": 1})]),
                "two sections C0+2F blown up at one of their two crossings",
                _expect(False, True, False, Fraction(7, 4), ["C0"], ["T3-F2:1"])),
        Fixture("t3-f2-3C0+6F-p", build(F2, [("D", (3, 6), 2)], points=[("p", None, {"D": 1})]),
                "one point on the trisection",
                _expect(False, True, False, Fraction(1, 4), ["C0", "fibre(p)"],
                        ["CdPO-F2-3C0+6F:1", "CdPO-F2-3C0+6F:2"])),
    ]
    return out


CROSS_REFS = (
    CrossRef("f1-2C0+4F", "p2-quartic-e2-1node", "C0",
             "contracting C0 maps 2C0+4F = 4(C0+F) - 2C0 to a quartic with a double point"),
    CrossRef("f1-3C0+5F", "p2-quintic-e2", "C0",
             "contracting C0 maps 3C0+5F = 5(C0+F) - 2C0 to a quintic with a double point"),
)


@lru_cache(maxsize=1)
def catalog() -> dict[str, Fixture]:
    entries = _figure_entries() + _minimal_entries() + _blowup_entries()
    out: dict[str, Fixture] = {}
    for f in entries:
        if f.id in out:
            raise ValueError(f"duplicate fixture id {f.id}")
        out[f.id] = f
    return out


def get(fid: str) -> Fixture:
    try:
        return catalog()[fid]
    except KeyError:
        raise UnknownFixture(f"no fixture {fid!r}") from None


def figure_counts() -> dict[str, int]:
    counts: dict[str, int] = {}
    for f in catalog().values():
        if f.figure:
            counts[f.figure] = counts.get(f.figure, 0) + 1
    return counts
