'''Positivity of the order canonical class.

The effective cone of a blowup of P2 or F_n at few points is generated by
finitely many curves of square -1, -2 and 0.  A class counts only when some
curve witnesses it: a declared curve, a ramification component, one of the
implicit lines and fibres from :func:`dporders.config.auto_curves`, or the
strict transform of an exceptional curve.  Numerical candidates without a
witness are reported as diagnostics and otherwise ignored.

The del Pezzo tests check every witnessed irreducible curve, not only the
generators: a witnessed curve of square below -2 (a line through four blown
up points, say) still has to be K-negative.
'''
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .config import BlowupPoint, CurveRecord, SurfaceModel, auto_curves, declared_curves, exceptional_curve, multiplicity_at
from .errors import BudgetExceeded, NotApplicable, PredicateViolation, UnsupportedContraction
from .lattice import DivisorClass, canonical_class, intersect, strict_transform, total_transform
from .order import OrderData, m_decomposition, order_canonical, remove_last_point, k_squared

log = logging.getLogger(__name__)

KINDS = ("minus-one", "minus-two", "zero-fibre", "plane-line")
_KIND_NUMBERS = {"minus-one": (-1, -1), "minus-two": (-2, 0), "zero-fibre": (0, -2)}


@dataclass(frozen=True)
class ConeGenerator:
    '''A witnessed curve class.

    ``kind`` is one of :data:`KINDS`, or ``"other"`` for a witnessed curve that
    is not a generator but still enters the positivity tests.
    '''

    cls: DivisorClass
    kind: str
    witness: str
    curve: CurveRecord | None = None

    @property
    def square(self) -> Fraction:
        return intersect(self.cls, self.cls)


@dataclass(frozen=True)
class ContractionStep:
    contracted: ConeGenerator
    before: OrderData
    after: OrderData
    a: Fraction


@dataclass(frozen=True)
class Diagnostic:
    '''Structured record about a candidate class or a blocked step.'''

    cls: DivisorClass | None
    kind: str
    reason: str
    witness: str | None = None


def budget(o: OrderData) -> int:
    return 8 if o.base.is_p2 else 7


def _check_budget(o: OrderData) -> None:
    if o.surface.k > budget(o):
        raise BudgetExceeded(f"{o.surface.k} blowups exceed the budget {budget(o)} over {o.base.label}")


def _max_degree(o: OrderData) -> int:
    return 3 if o.base.is_p2 else 4


def _kind(o: OrderData, c: DivisorClass, KZ: DivisorClass) -> str | None:
    sq, kz = intersect(c, c), intersect(KZ, c)
    for name, (s, t) in _KIND_NUMBERS.items():
        if sq == s and kz == t:
            return name
    return None


def witnesses(o: OrderData) -> list[CurveRecord]:
    '''Every curve whose strict transform can witness a class, in a fixed order.'''
    S = o.surface
    declared = list(declared_curves(o))
    out = [c for c in declared if c.irreducible]
    out += auto_curves(o, declared)
    out += [exceptional_curve(S, p) for p in S.point_ids]
    return out


def _base_generators(o: OrderData) -> list[tuple[DivisorClass, str]]:
    S = o.surface
    pts = S.point_ids
    if o.base.is_p2:
        if S.k == 0:
            return [(DivisorClass.of_base(o.base, (1,)), "H")]
        if S.k == 1:
            # the pencil of lines through the single point
            return [(DivisorClass.of_base(o.base, (1,), pts) - DivisorClass.exceptional(o.base, pts, pts[0]), "H")]
        return []
    if S.k == 0:
        return [(DivisorClass.of_base(o.base, (1, 0)), "C0"), (DivisorClass.of_base(o.base, (0, 1)), "F")]
    return []


def _collect(o: OrderData) -> tuple[list[ConeGenerator], list[ConeGenerator]]:
    S = o.surface
    KZ = canonical_class(S)
    gens: dict[tuple, ConeGenerator] = {}
    extra: dict[tuple, ConeGenerator] = {}
    wits = witnesses(o)
    for cls, wid in _base_generators(o):
        kind = _kind(o, cls, KZ)
        if S.k == 0 and o.base.is_p2:
            kind = "plane-line"
        # prefer a named curve in the class as the witness
        cur = next((c for c in wits if strict_transform(c, S) == cls), None)
        gens.setdefault(cls.vector, ConeGenerator(cls, kind or "other", cur.id if cur else wid, cur))
    for cur in wits:
        cls = strict_transform(cur, S)
        key = cls.vector
        if key in gens or key in extra:
            continue
        kind = _kind(o, cls, KZ)
        deg = sum(cur.base_coeffs)
        wid = cur.id
        if kind is not None and deg <= _max_degree(o):
            gens[key] = ConeGenerator(cls, kind, wid, cur)
        else:
            extra[key] = ConeGenerator(cls, "other", wid, cur)
    order = lambda g: g.cls.vector
    return sorted(gens.values(), key=order), sorted(extra.values(), key=order)


def _solutions(k: int, total: int, squares: int, cap: int) -> Iterator[tuple[int, ...]]:
    '''Non-negative vectors of length k with given sum and sum of squares.'''
    if k == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    for m in range(min(cap, total), -1, -1):
        if m * m > squares:
            continue
        for rest in _solutions(k - 1, total - m, squares - m * m, cap):
            yield (m,) + rest


def numeric_candidates(o: OrderData) -> list[tuple[DivisorClass, str]]:
    '''All integral classes of bounded base degree meeting a kind's numbers.'''
    S = o.surface
    base, pts, k = o.base, S.point_ids, S.k
    KZ = canonical_class(S)
    out = []
    for i, p in enumerate(pts):
        out.append((DivisorClass.exceptional(base, pts, p), "minus-one"))
        for j, q in enumerate(pts):
            if i != j:
                out.append((DivisorClass.exceptional(base, pts, p) - DivisorClass.exceptional(base, pts, q), "minus-two"))
    if base.is_p2:
        shapes = [(d,) for d in range(1, 4)]
    else:
        shapes = [(a, s - a) for s in range(1, 5) for a in range(s + 1)]
    for coeffs in shapes:
        c0 = DivisorClass.of_base(base, coeffs, pts)
        sq0 = intersect(c0, c0)
        k0 = intersect(KZ, c0)
        for kind, (s, t) in _KIND_NUMBERS.items():
            # c = c0 - sum m_i E_i:  c^2 = sq0 - sum m^2,  K.c = k0 + sum m
            total, squares = t - k0, sq0 - s
            if total < 0 or squares < 0 or total.denominator != 1 or squares.denominator != 1:
                continue
            for ms in _solutions(k, int(total), int(squares), sum(coeffs)):
                c = DivisorClass(base, coeffs, tuple(-m for m in ms), pts)
                out.append((c, kind))
    return out


def effective_cone_generators(o: OrderData, diagnostics: list | None = None) -> list[ConeGenerator]:
    '''Witnessed generators of the effective cone, sorted by coefficient vector.'''
    _check_budget(o)
    gens, _ = _collect(o)
    if diagnostics is not None:
        have = {g.cls.vector: g for g in gens}
        for cls, kind in numeric_candidates(o):
            g = have.get(cls.vector)
            if g is None:
                diagnostics.append(Diagnostic(cls, kind, "dropped: no witness"))
            else:
                diagnostics.append(Diagnostic(cls, kind, "kept", g.witness))
    return gens


def witnessed_curves(o: OrderData) -> list[ConeGenerator]:
    '''Generators plus every other witnessed irreducible curve.'''
    _check_budget(o)
    gens, extra = _collect(o)
    return gens + extra


def _sign_test(o: OrderData, strict: bool) -> bool:
    if k_squared(o) <= 0:
        return False
    K = order_canonical(o)
    for g in witnessed_curves(o):
        v = intersect(K, g.cls)
        if v > 0 or (strict and v == 0):
            return False
    return True


def is_del_pezzo(o: OrderData) -> bool:
    '''``K^2 > 0`` and ``K.C < 0`` on every witnessed curve.'''
    return _sign_test(o, True)


def is_almost_del_pezzo(o: OrderData) -> bool:
    '''``K^2 > 0`` and ``K.C <= 0`` on every witnessed curve.'''
    return _sign_test(o, False)


def _negative_k_negative(o: OrderData) -> list[ConeGenerator]:
    K = order_canonical(o)
    return [g for g in witnessed_curves(o) if g.square < 0 and intersect(K, g.cls) < 0]


def is_minimal(o: OrderData) -> bool:
    '''No witnessed curve with negative square and negative ``K``-degree.'''
    return not _negative_k_negative(o)


def k_zero_curves(o: OrderData) -> list[ConeGenerator]:
    '''Witnessed curves with ``K.C = 0`` on an almost del Pezzo order.'''
    if not is_almost_del_pezzo(o):
        raise PredicateViolation("order is not almost del Pezzo")
    K = order_canonical(o)
    return [g for g in witnessed_curves(o) if intersect(K, g.cls) == 0]


def mult_criterion(o: OrderData, curve: CurveRecord, strict: bool) -> bool:
    '''Compare the blown up multiplicity of ``curve`` with its bound.

    The bound is ``2 - 2 p_a(C) + C^2 - (e-1) M.C~`` where ``C`` is the curve
    on the base and ``p_a`` its arithmetic genus.  For an exceptional curve the
    multiplicity is ``(#children) - 1`` and ``C = 0``.
    '''
    md = m_decomposition(o)
    if md is None:
        raise NotApplicable("no effective M-decomposition")
    e = o.uniform_degree()
    if e is None:
        raise NotApplicable("no ramification")
    S = o.surface
    ct = strict_transform(curve, S)
    c0 = curve.cls
    KB = DivisorClass.of_base(o.base, o.base.canonical)
    c_sq = intersect(c0, c0)
    two_pa = 2 + intersect(KB, c0) + c_sq
    bound = 2 - two_pa + c_sq - (e - 1) * intersect(md.M, ct)
    if curve.exceptional_of is None:
        m = multiplicity_at(curve, S.point_ids)
    else:
        m = multiplicity_at(curve, S.point_ids) - 1
    return m < bound if strict else m <= bound


def contract(o: OrderData, g: ConeGenerator) -> OrderData:
    '''Blow down the exceptional curve of the most recent point.'''
    S = o.surface
    if not S.points:
        raise UnsupportedContraction("nothing to contract")
    last = S.point_ids[-1]
    target = DivisorClass.exceptional(o.base, S.point_ids, last)
    if g.witness != f"E[{last}]" or g.cls != target:
        raise UnsupportedContraction(f"{g.witness} is not the exceptional curve of the last point {last!r}")
    return remove_last_point(o)


def run_mmp(o: OrderData, diagnostics: list | None = None) -> tuple[OrderData, list[ContractionStep]]:
    '''Contract K-negative negative curves until none remain.

    Picks the lexicographically smallest coefficient vector each time.  If that
    curve is not a contractible leaf the loop stops and a diagnostic is
    recorded; the partial result is returned.
    '''
    steps: list[ContractionStep] = []
    cur = o
    while True:
        bad = _negative_k_negative(cur)
        if not bad:
            return cur, steps
        g = min(bad, key=lambda x: x.cls.vector)
        try:
            nxt = contract(cur, g)
        except UnsupportedContraction as exc:
            log.warning("mmp blocked: %s", exc)
            if diagnostics is not None:
                diagnostics.append(Diagnostic(g.cls, g.kind, f"blocked: {exc}", g.witness))
            return cur, steps
        a = (order_canonical(cur) - total_transform(order_canonical(nxt), cur.surface)).coeff(cur.surface.point_ids[-1])
        steps.append(ContractionStep(g, cur, nxt, a))
        cur = nxt


def centre_order(o: OrderData) -> OrderData:
    '''The same surface with no ramification; components become plain curves.'''
    S = o.surface
    pts = tuple(BlowupPoint(p.id, p.parent) for p in S.points)
    curves = S.curves + tuple(c.curve for c in o.components)
    return OrderData(SurfaceModel(S.base, pts, curves), ())
