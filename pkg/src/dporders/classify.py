'''Classification families, clause matching and enumeration.

Tags name a classification family and clauses are numbered within it:

``T1-P2-deg3``   1 minimal, 2 points of D in general position (n < 9), 3 one point off D with e = 2
``T1-P2-deg4``   1 minimal, 2 one point of D with e = 2
``T1-P2-deg5``   1 minimal
``T1-P1P1``      1 minimal, 2 points of a (2,2) curve in general position (n <= 7)
``T3-P2-deg3``   1 (-2)-exceptional, 2 line through p in D and q off D, 3 line through 3 points,
                 4 conic through 6 points, 5 cubic of multiplicity 9
``T3-P2-deg4``   1 line through 2 points
``T3-P1P1``      1 (2,2), p off D: both rulings, 2 (3,2), p in D: the ruling meeting D three times,
                 3 (3,3), p in D: both rulings, 4 (2,2): curves through exactly 2(a+b) points
``T3-F1``        1 C0, 2 fibre through 2 points, 3 (-2)-exceptional
``T3-F2``        1 C0, 2 fibre through the point off D, 3 fibre through 2 points, 4 (-2)-exceptional
``CdPO-F1-3C0+5F`` 1 C0;  ``CdPO-F2-3C0+6F`` 1 C0, 2 fibre through the point
``minimal-TAdPO-F1`` / ``minimal-TAdPO-F2`` 1 for 2C0+4F, 2 for the trisection

A K-zero curve that no clause names yields an ``unclassified`` record.
'''
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .config import CurveRecord, SurfaceModel, multiplicity_at, position_predicate, sigma_almost_general_curves
from .errors import InvalidConfiguration, NotApplicable, UnknownFixture
from .lattice import BasisTag, intersect
from .order import OrderData, RamificationComponent, f1_balance, f2_balance, genus_constraint, k_squared
from .positivity import ConeGenerator, is_almost_del_pezzo, is_del_pezzo, is_minimal, k_zero_curves

E_MAX_DEFAULT = 12
B_MAX_DEFAULT = 8


def e_max() -> int:
    raw = os.environ.get("DPORDERS_E_MAX")
    if raw is None:
        return E_MAX_DEFAULT
    try:
        v = int(raw)
    except ValueError:
        raise InvalidConfiguration(f"DPORDERS_E_MAX must be an integer, got {raw!r}") from None
    if v < 2:
        raise InvalidConfiguration("DPORDERS_E_MAX must be at least 2")
    return v


@dataclass(frozen=True)
class ClassificationRecord:
    theorem: str
    clause: int
    witness: dict = field(hash=False)
    k_zero: tuple = ()
    note: str = ""

    @property
    def tag(self) -> str:
        return f"{self.theorem}:{self.clause}"

    def sort_key(self):
        w = self.witness
        return (self.theorem, self.clause, w.get("base", ""), tuple(w.get("D", ())), tuple(w.get("e", ())),
                w.get("points", 0), repr(self.k_zero))


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def summary(o: OrderData) -> dict:
    return {
        "base": o.base.label,
        "D": list(o.base_d_coeffs()),
        "e": sorted(c.e for c in o.components),
        "points": o.surface.k,
        "k_squared": _q(k_squared(o)),
    }


def describe(g: ConeGenerator) -> dict:
    return {"witness": g.witness, "class": str(g.cls), "kind": g.kind}


# family detection

def _family(o: OrderData) -> tuple | None:
    e = o.uniform_degree()
    if e is None:
        return None
    d = o.base_d_coeffs()
    if o.base.is_p2:
        return ("P2", d[0], e)
    if o.base.n == 0:
        return ("F0", tuple(sorted(d, reverse=True)), e)
    if o.base.n in (1, 2):
        return (o.base.label, d, e)
    return None


@dataclass
class _Ctx:
    o: OrderData
    e: int
    sigma: tuple[str, ...]
    off: tuple[str, ...]
    all_in: bool


def _ctx(o: OrderData) -> _Ctx:
    S = o.surface
    off = tuple(p.id for p in S.points if not p.on_D)
    return _Ctx(o, o.uniform_degree() or 0, S.point_ids, off, not off)


def _cls_is(g: ConeGenerator, coeffs) -> bool:
    if g.curve is None:
        return g.cls.coeffs_base == tuple(coeffs) and not any(g.cls.coeffs_exc)
    return g.curve.exceptional_of is None and g.curve.base_coeffs == tuple(coeffs)


def _mult(c: _Ctx, g: ConeGenerator) -> int:
    return multiplicity_at(g.curve, c.sigma) if g.curve is not None else 0


def _minus_two_exceptional(g: ConeGenerator) -> bool:
    return g.curve is not None and g.curve.exceptional_of is not None and g.kind == "minus-two"


def _p2_deg3(c: _Ctx, g: ConeGenerator) -> list[int]:
    out = []
    ag = c.all_in and position_predicate(c.o, "almost-general-P2")
    if ag and _minus_two_exceptional(g):
        out.append(1)
    if (c.e == 2 and len(c.sigma) == 2 and len(c.off) == 1 and _cls_is(g, (1,))
            and all(g.curve.mult(p) == 1 for p in c.sigma)):
        out.append(2)
    if ag and _cls_is(g, (1,)) and _mult(c, g) == 3:
        out.append(3)
    if ag and _cls_is(g, (2,)) and _mult(c, g) == 6:
        out.append(4)
    if ag and _cls_is(g, (3,)) and _mult(c, g) == 9:
        out.append(5)
    return out


def _p2_deg4(c: _Ctx, g: ConeGenerator) -> list[int]:
    if (c.e == 2 and c.all_in and len(c.sigma) in (2, 3) and position_predicate(c.o, "almost-general-P2")
            and _cls_is(g, (1,)) and _mult(c, g) == 2):
        return [1]
    return []


def _is_ruling(g: ConeGenerator) -> bool:
    return _cls_is(g, (1, 0)) or _cls_is(g, (0, 1))


def _f0(c: _Ctx, g: ConeGenerator, ab: tuple[int, int]) -> list[int]:
    out = []
    single = len(c.sigma) == 1
    p = c.sigma[0] if single else None
    if ab == (2, 2) and c.e == 2 and single and c.off == (p,) and _is_ruling(g) and g.curve is not None and g.curve.mult(p) == 1:
        out.append(1)
    if ab == (3, 2) and c.e == 2 and single and c.all_in and _is_ruling(g) and g.curve is not None and g.curve.mult(p) == 1:
        d = c.o.base_d_coeffs()
        meets = intersect(g.curve.cls, type(g.curve.cls).of_base(c.o.base, d))
        if meets == 3:
            out.append(2)
    if ab == (3, 3) and c.e == 2 and single and c.all_in and _is_ruling(g) and g.curve is not None and g.curve.mult(p) == 1:
        out.append(3)
    if ab == (2, 2) and c.all_in and position_predicate(c.o, "almost-general-P1P1") and g.curve is not None:
        if any(s.id == g.curve.id for s in sigma_almost_general_curves(c.o)):
            out.append(4)
    return out


def _f1(c: _Ctx, g: ConeGenerator) -> list[int]:
    if not (c.all_in and position_predicate(c.o, "almost-general-F1")):
        return []
    out = []
    if _cls_is(g, (1, 0)):
        out.append(1)
    if _cls_is(g, (0, 1)) and _mult(c, g) == 2:
        out.append(2)
    if _minus_two_exceptional(g):
        out.append(3)
    return out


def _f2(c: _Ctx, g: ConeGenerator) -> list[int]:
    out = []
    if _cls_is(g, (1, 0)):
        out.append(1)
    if c.e == 2 and len(c.off) == 1:
        q = c.off[0]
        if c.o.surface.point(q).parent is None and _cls_is(g, (0, 1)) and g.curve.mult(q) == 1:
            out.append(2)
    ag = c.all_in and position_predicate(c.o, "almost-general-F2")
    if ag and _cls_is(g, (0, 1)) and _mult(c, g) == 2:
        out.append(3)
    if ag and _minus_two_exceptional(g):
        out.append(4)
    return out


def _f1_trisection(c: _Ctx, g: ConeGenerator) -> list[int]:
    return [1] if _cls_is(g, (1, 0)) else []


def _f2_trisection(c: _Ctx, g: ConeGenerator) -> list[int]:
    out = [1] if _cls_is(g, (1, 0)) else []
    if len(c.sigma) == 1 and c.all_in and _cls_is(g, (0, 1)) and g.curve.mult(c.sigma[0]) == 1:
        out.append(2)
    return out


def _matcher(fam: tuple) -> tuple[str, Callable] | None:
    kind, d, e = fam
    if kind == "P2" and d == 3:
        return "T3-P2-deg3", _p2_deg3
    if kind == "P2" and d == 4:
        return "T3-P2-deg4", _p2_deg4
    if kind == "F0" and d in ((2, 2), (3, 2), (3, 3)):
        return "T3-P1P1", lambda c, g: _f0(c, g, d)
    if kind == "F1" and d == (2, 4) and e == 2:
        return "T3-F1", _f1
    if kind == "F1" and d == (3, 5) and e == 2:
        return "CdPO-F1-3C0+5F", _f1_trisection
    if kind == "F2" and d == (2, 4):
        return "T3-F2", _f2
    if kind == "F2" and d == (3, 6) and e == 2:
        return "CdPO-F2-3C0+6F", _f2_trisection
    return None


def _t1(o: OrderData, fam: tuple | None) -> list[tuple[str, int]]:
    if fam is None:
        return []
    kind, d, e = fam
    c = _ctx(o)
    n = len(c.sigma)
    if kind == "P2" and d in (3, 4, 5):
        tag = f"T1-P2-deg{d}"
        if n == 0:
            return [(tag, 1)]
        if d == 3 and c.all_in and n < 9 and position_predicate(o, "general-P2"):
            return [(tag, 2)]
        if d == 3 and n == 1 and c.off and e == 2:
            return [(tag, 3)]
        if d == 4 and n == 1 and c.all_in and e == 2:
            return [(tag, 2)]
    if kind == "F0":
        if n == 0:
            return [("T1-P1P1", 1)]
        if d == (2, 2) and c.all_in and n <= 7 and position_predicate(o, "general-P1P1"):
            return [("T1-P1P1", 2)]
    return []


def _minimal_tadpo(o: OrderData, fam: tuple | None) -> list[tuple[str, int]]:
    if fam is None or o.surface.k:
        return []
    kind, d, e = fam
    if kind == "F1" and e == 2:
        return [("minimal-TAdPO-F1", {(2, 4): 1, (3, 5): 2}[d])] if d in ((2, 4), (3, 5)) else []
    if kind == "F2":
        if d == (2, 4):
            return [("minimal-TAdPO-F2", 1)]
        if d == (3, 6) and e == 2:
            return [("minimal-TAdPO-F2", 2)]
    return []


def classify_blowup(o: OrderData) -> list[ClassificationRecord]:
    '''Match an order against the classification clauses.'''
    if not is_almost_del_pezzo(o):
        return []
    fam = _family(o)
    wit = summary(o)
    if is_del_pezzo(o):
        hits = _t1(o, fam)
        if not hits:
            return [ClassificationRecord("unclassified", 0, wit, (), "del Pezzo but no clause applies")]
        return [ClassificationRecord(t, c, wit, ()) for t, c in hits]
    kz = k_zero_curves(o)
    records: dict[tuple[str, int], list[ConeGenerator]] = {}
    unmatched: list[ConeGenerator] = []
    m = _matcher(fam) if fam else None
    c = _ctx(o)
    for g in kz:
        clauses = m[1](c, g) if m else []
        if not clauses:
            unmatched.append(g)
        for cl in clauses:
            records.setdefault((m[0], cl), []).append(g)
    for t, cl in _minimal_tadpo(o, fam):
        records.setdefault((t, cl), []).extend(kz)
    out = [ClassificationRecord(t, cl, wit, tuple(describe(g) for g in gs)) for (t, cl), gs in records.items()]
    if unmatched:
        out.append(ClassificationRecord("unclassified", 0, wit, tuple(describe(g) for g in unmatched),
                                        "K-zero curves named by no clause"))
    return sorted(out, key=ClassificationRecord.sort_key)


def tags(records: Sequence[ClassificationRecord]) -> list[str]:
    return sorted({r.tag for r in records})


# enumerators

def _single(base: BasisTag, coeffs: tuple[int, ...], e: int) -> OrderData:
    comp = RamificationComponent("D", CurveRecord.make("D", base, coeffs), e)
    return OrderData(SurfaceModel(base), (comp,))


def enumerate_minimal_tdpo_p2(emax: int | None = None) -> list[ClassificationRecord]:
    '''Degrees and ramification degrees of del Pezzo orders over P2 with no blowups.'''
    emax = e_max() if emax is None else emax
    out = []
    for d in (3, 4, 5):
        for e in range(2, emax + 1):
            o = _single(BasisTag.p2(), (d,), e)
            if is_del_pezzo(o):
                note = f"for all e (verified to E_MAX={emax})" if d == 3 else ""
                out.append(ClassificationRecord(f"T1-P2-deg{d}", 1, summary(o), (), note))
    return sorted(out, key=ClassificationRecord.sort_key)


def _primes(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _ruled_candidates(n: int, emax: int, bmax: int) -> list[OrderData]:
    base = BasisTag.hirzebruch(n)
    out = []
    for a in range(0, 4):
        for b in range(0, bmax + 1):
            if (a, b) != (1, 0) and b < n * a:
                continue  # no irreducible curve in this class
            if (a, b) == (0, 0):
                continue
            for e in range(2, emax + 1):
                out.append(_single(base, (a, b), e))
    from .fixtures import catalog

    for f in catalog().values():
        o = f.order
        if o.base == base and o.surface.k == 0 and o.uniform_degree() is not None and o.uniform_degree() <= emax:
            out.append(o)
    return out


def _passes(o: OrderData) -> bool:
    if not (is_minimal(o) and is_almost_del_pezzo(o)):
        return False
    for e in set(o.degrees()):
        for p in _primes(e):
            try:
                if not genus_constraint(o, p):
                    return False
            except NotApplicable:
                pass
    if o.base.n == 1:
        return f1_balance(o)
    if o.base.n == 2:
        return f2_balance(o)
    return True


def enumerate_minimal_tadpo_ruled(n: int, emax: int | None = None, bmax: int = B_MAX_DEFAULT) -> list[ClassificationRecord]:
    '''Minimal almost del Pezzo orders over F0, F1 or F2 (single ramification degree).'''
    if n not in (0, 1, 2):
        raise NotApplicable("ruled enumeration covers F0, F1 and F2")
    emax = e_max() if emax is None else emax
    seen: dict[tuple, ClassificationRecord] = {}
    tag = {0: "T1-P1P1", 1: "minimal-TAdPO-F1", 2: "minimal-TAdPO-F2"}[n]
    for o in _ruled_candidates(n, emax, bmax):
        if not _passes(o):
            continue
        d = o.base_d_coeffs()
        e = o.uniform_degree()
        key = (d, e)
        if key in seen:
            continue
        if n == 0:
            clause = 1
        else:
            clause = 1 if d[0] == 2 else 2
        unbounded = (n == 0 and d == (2, 2)) or (n == 2 and d == (2, 4))
        note = f"for all e (verified to E_MAX={emax})" if unbounded else ""
        seen[key] = ClassificationRecord(tag, clause, summary(_single(o.base, d, e)), (), note)
    return sorted(seen.values(), key=ClassificationRecord.sort_key)


# blowup budgets

@dataclass(frozen=True)
class BlowupBudget:
    '''How many points may be blown up while staying almost del Pezzo.

    ``max_in_D``: points of D alone.  ``max_out_of_D``: points off D.
    ``max_in_D_with_out``: further points of D once a point off D is used.
    '''

    max_in_D: int
    max_out_of_D: int
    max_in_D_with_out: int
    note: str = ""


def blowup_budget(o: OrderData) -> BlowupBudget:
    if o.surface.k:
        raise UnknownFixture("budgets are tabulated for minimal orders only")
    fam = _family(o)
    if fam is None:
        raise UnknownFixture("no budget for mixed ramification degrees")
    kind, d, e = fam
    if kind == "P2":
        if d == 3:
            return BlowupBudget(8, 1 if e == 2 else 0, 1 if e == 2 else 0, "n < 9 in D; one point off D needs e = 2")
        if d == 4 and e == 2:
            return BlowupBudget(3, 0, 0, "n <= 3 and no three points collinear")
        if d in (4, 5):
            return BlowupBudget(0, 0, 0, "any blowup drops K^2 to 0 or below")
    if kind == "F0":
        if d == (2, 2):
            return BlowupBudget(7, 1 if e == 2 else 0, 0, "n <= 7 in D; a point off D needs e = 2 and stands alone")
        if d in ((3, 2), (3, 3)) and e == 2:
            return BlowupBudget(1, 0, 0, "a single point of D")
    if kind == "F1" and e == 2:
        if d == (2, 4):
            return BlowupBudget(3, 0, 0, "n <= 3 in almost general position")
        if d == (3, 5):
            return BlowupBudget(0, 0, 0, "any blowup drops K^2 to 0 or below")
    if kind == "F2":
        if d == (2, 4):
            return BlowupBudget(7, 1 if e == 2 else 0, 3 if e == 2 else 0,
                                "n <= 7 in D; with one point off D, 3 more in D, none on its fibre")
        if d == (3, 6) and e == 2:
            return BlowupBudget(1, 0, 0, "a single point of D")
    raise UnknownFixture(f"no budget for {kind} with D = {d}, e = {e}")


def check_cross_ref(ref) -> bool:
    '''Compare K^2, ramification degrees and pushed forward degree of a cross reference.'''
    from .fixtures import get

    src, tgt = get(ref.source).order, get(ref.target).order
    if not tgt.base.is_p2 or src.base.n != 1:
        return False
    # H pulls back to C0 + F, so aC0 + bF contracts to a curve of degree b
    return (
        k_squared(src) == k_squared(tgt)
        and sorted(src.degrees()) == sorted(tgt.degrees())
        and src.base_d_coeffs()[1] == tgt.base_d_coeffs()[0]
    )
