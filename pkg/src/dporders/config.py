'''Point configurations: forests of blowup points and the curves through them.

Incidence is declared, never computed.  A curve records its class on the base
surface and a multiplicity at every blowup point (absent means 0).  Points are
"free": a point infinitely near ``q`` lies on the exceptional curve of ``q``
and on nothing else unless some declared curve says so.
'''
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import FlavorMismatch, IncidenceError, InvalidConfiguration
from .lattice import BasisTag, DivisorClass, canonical_class, check_proximity, intersect, strict_transform

RESERVED_PREFIXES = ("E[", "line(", "fibre(", "ruling(")


def _norm_mults(mults) -> tuple[tuple[str, int], ...]:
    items = dict(mults).items() if not isinstance(mults, tuple) else mults
    out = {}
    for pid, m in items:
        if isinstance(m, bool) or not isinstance(m, int):
            raise InvalidConfiguration(f"multiplicity at {pid!r} must be an integer")
        if m < 0:
            raise InvalidConfiguration(f"negative multiplicity at {pid!r}")
        if m:
            out[str(pid)] = m
    return tuple(sorted(out.items()))


@dataclass(frozen=True)
class BlowupPoint:
    '''A point to blow up.

    ``parent`` is ``None`` for a point of the base surface, else the id of the
    point whose exceptional curve carries it.  ``incidences`` is only read when
    the point is fresh (see :func:`dporders.order.blowup_order`); once a point
    belongs to a surface its incidences live in the curves' multiplicity maps.
    '''

    id: str
    parent: str | None = None
    on_D: bool = False
    node_of_D: bool = False
    incidences: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if not self.id or not isinstance(self.id, str):
            raise InvalidConfiguration("point ids must be non-empty strings")
        if self.id == "base" or self.id.startswith(RESERVED_PREFIXES):
            raise InvalidConfiguration(f"reserved point id {self.id!r}")
        if self.node_of_D and not self.on_D:
            raise InvalidConfiguration(f"point {self.id!r} is a node of D but not on D")
        object.__setattr__(self, "incidences", _norm_mults(self.incidences))

    @property
    def incidence_map(self) -> dict[str, int]:
        return dict(self.incidences)


@dataclass(frozen=True)
class CurveRecord:
    '''A declared effective curve.

    ``cls`` is the class on the base surface.  ``exceptional_of`` marks the
    exceptional curve of a blowup point (base class zero).
    '''

    id: str
    cls: DivisorClass
    mults: tuple[tuple[str, int], ...] = ()
    irreducible: bool = True
    exceptional_of: str | None = None

    def __post_init__(self):
        if self.cls.points:
            raise InvalidConfiguration(f"curve {self.id!r}: class must live on the base surface")
        object.__setattr__(self, "mults", _norm_mults(self.mults))

    @classmethod
    def make(cls, id: str, base: BasisTag, coeffs: Sequence[int], mults: Mapping[str, int] | None = None,
             irreducible: bool = True) -> "CurveRecord":
        return cls(id, DivisorClass.of_base(base, coeffs), _norm_mults(mults or {}), irreducible)

    @property
    def mult_map(self) -> dict[str, int]:
        return dict(self.mults)

    def mult(self, pid: str) -> int:
        for q, m in self.mults:
            if q == pid:
                return m
        return 0

    @property
    def base_coeffs(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.cls.coeffs_base)

    @property
    def degree(self) -> int:
        '''Degree on P2, ``a + b`` on a ruled base.'''
        return sum(self.base_coeffs)

    def with_mult(self, pid: str, m: int) -> "CurveRecord":
        d = self.mult_map
        d[pid] = m
        return CurveRecord(self.id, self.cls, _norm_mults(d), self.irreducible, self.exceptional_of)

    def without(self, pid: str) -> "CurveRecord":
        d = self.mult_map
        d.pop(pid, None)
        return CurveRecord(self.id, self.cls, _norm_mults(d), self.irreducible, self.exceptional_of)


@dataclass(frozen=True)
class SurfaceModel:
    '''Base surface plus an ordered forest of blowup points and declared curves.'''

    base: BasisTag
    points: tuple[BlowupPoint, ...] = ()
    curves: tuple[CurveRecord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "curves", tuple(self.curves))
        seen: set[str] = set()
        for p in self.points:
            if p.id in seen:
                raise InvalidConfiguration(f"duplicate point id {p.id!r}")
            if p.parent is not None and p.parent not in seen:
                raise InvalidConfiguration(f"point {p.id!r} appears before its parent {p.parent!r}")
            seen.add(p.id)
        cids: set[str] = set()
        for c in self.curves:
            if c.id in cids or c.id in seen:
                raise InvalidConfiguration(f"duplicate id {c.id!r}")
            if c.id.startswith(RESERVED_PREFIXES):
                raise InvalidConfiguration(f"reserved curve id {c.id!r}")
            cids.add(c.id)
            self.validate_curve(c)

    def validate_curve(self, c: CurveRecord) -> None:
        if c.cls.base != self.base:
            raise InvalidConfiguration(f"curve {c.id!r} lives on {c.cls.base.label}, not {self.base.label}")
        unknown = set(c.mult_map) - set(self.point_ids)
        if unknown:
            raise IncidenceError(f"curve {c.id!r} has multiplicities at unknown points {sorted(unknown)}")
        check_proximity(c, self)

    @property
    def point_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.points)

    @property
    def k(self) -> int:
        return len(self.points)

    def point(self, pid: str) -> BlowupPoint:
        for p in self.points:
            if p.id == pid:
                return p
        raise IncidenceError(f"unknown point {pid!r}")

    def children(self, pid: str) -> tuple[str, ...]:
        return tuple(p.id for p in self.points if p.parent == pid)

    def roots(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.points if p.parent is None)

    def curve(self, cid: str) -> CurveRecord:
        for c in self.curves:
            if c.id == cid:
                return c
        raise IncidenceError(f"unknown curve {cid!r}")

    def ancestor(self, k: int) -> "SurfaceModel":
        '''The surface before the blowups after the first ``k``.'''
        keep = self.point_ids[:k]
        return SurfaceModel(
            self.base,
            self.points[:k],
            tuple(_restrict(c, keep) for c in self.curves),
        )


def _restrict(c: CurveRecord, keep: Iterable[str]) -> CurveRecord:
    keep = set(keep)
    return CurveRecord(c.id, c.cls, tuple((p, m) for p, m in c.mults if p in keep), c.irreducible, c.exceptional_of)


def exceptional_curve(S: SurfaceModel, pid: str) -> CurveRecord:
    '''The exceptional curve of ``pid`` as a curve record.'''
    S.point(pid)
    return CurveRecord(
        f"E[{pid}]",
        DivisorClass.zero(S.base),
        tuple((q, 1) for q in S.children(pid)),
        True,
        pid,
    )


def exceptional_class(S: SurfaceModel, pid: str) -> DivisorClass:
    '''Strict transform of the exceptional curve of ``pid``: ``E_p`` minus its children.'''
    return strict_transform(exceptional_curve(S, pid), S)


def multiplicity_at(curve: CurveRecord, sigma: Iterable[str]) -> int:
    '''Sum of declared multiplicities over the points of ``sigma``.'''
    return sum(curve.mult(p) for p in sigma)


# position predicates

FLAVORS = (
    "general-P2",
    "almost-general-P2",
    "general-P1P1",
    "almost-general-P1P1",
    "almost-general-F1",
    "almost-general-F2",
)

_FLAVOR_BASE = {
    "general-P2": BasisTag.p2(),
    "almost-general-P2": BasisTag.p2(),
    "general-P1P1": BasisTag.hirzebruch(0),
    "almost-general-P1P1": BasisTag.hirzebruch(0),
    "almost-general-F1": BasisTag.hirzebruch(1),
    "almost-general-F2": BasisTag.hirzebruch(2),
}


def declared_curves(S) -> tuple[CurveRecord, ...]:
    '''Declared curves of a surface, or of an order's surface plus its base components.'''
    if hasattr(S, "surface"):
        return S.surface.curves + tuple(c.curve for c in S.components)
    return S.curves


def _surface(S) -> SurfaceModel:
    return S.surface if hasattr(S, "surface") else S


def sits_on_minus_two_exceptional(S: SurfaceModel) -> bool:
    '''True if some point was blown up on an exceptional curve of square -2 or less.

    A second child of ``q`` lies on the strict transform of ``E_q`` after the
    first child already lowered its square to -2.
    '''
    return any(len(S.children(p.id)) >= 2 for p in S.points)


def _bound(flavor: str, coeffs: tuple[int, ...]) -> tuple[int | None, bool]:
    '''(bound, strict) for a curve class, or (None, _) when unconstrained.'''
    if flavor in ("general-P2", "almost-general-P2"):
        d = coeffs[0]
        strict = flavor == "general-P2"
        if d == 1:
            return (2, False) if strict else (3, False)
        if d == 2:
            return (5, False) if strict else (6, False)
        return None, False
    a, b = coeffs
    if flavor == "general-P1P1":
        return 2 * (a + b), True
    if flavor == "almost-general-P1P1":
        return 2 * (a + b), False
    if flavor == "almost-general-F1":
        return 2 + a * (2 * b - a - 1), False
    return 2 + a * (2 * b - 2 * a), False


def position_predicate(S, flavor: str) -> bool:
    '''General / almost general position of the blown up points.

    ``S`` is a :class:`SurfaceModel` or an order (whose ramification components
    then count as declared curves).
    '''
    if flavor not in _FLAVOR_BASE:
        raise FlavorMismatch(f"unknown flavor {flavor!r}")
    surf = _surface(S)
    if surf.base != _FLAVOR_BASE[flavor]:
        raise FlavorMismatch(f"flavor {flavor} does not apply to base {surf.base.label}")
    sigma = surf.point_ids
    almost = flavor.startswith("almost")
    if not almost and any(p.parent is not None for p in surf.points):
        return False
    if almost and sits_on_minus_two_exceptional(surf):
        return False
    if flavor == "almost-general-P1P1" and len(sigma) >= 8:
        return False
    for c in declared_curves(S):
        if not c.irreducible or c.exceptional_of is not None:
            continue
        bound, strict = _bound(flavor, c.base_coeffs)
        if bound is None:
            continue
        m = multiplicity_at(c, sigma)
        if m > bound or (strict and m == bound):
            return False
    return True


def sigma_almost_general_curves(S) -> list[CurveRecord]:
    '''Irreducible (a,b)-curves on P1xP1 through exactly ``2(a+b)`` points of the configuration.'''
    surf = _surface(S)
    if surf.base != BasisTag.hirzebruch(0):
        raise FlavorMismatch("defined on P1xP1 only")
    sigma = surf.point_ids
    return [
        c for c in declared_curves(S)
        if c.irreducible and c.exceptional_of is None and multiplicity_at(c, sigma) == 2 * c.degree
    ]


# witness curves supplied implicitly

def auto_curves(S, declared: Sequence[CurveRecord] | None = None) -> list[CurveRecord]:
    '''Curves every configuration contains without being told.

    On P2: the line through two base points, and the line through a base point
    in the direction of one of its children.  On F_n: the fibre through each
    base point (both rulings on P1xP1), and the negative section ``C0`` when
    n >= 1.  Each is added only when no declared irreducible curve of the same
    class already passes through the same points, and it is assumed to meet no
    other point; the coordinate oracle in the test suite checks that
    assumption on the fixture corpus.
    '''
    surf = _surface(S)
    if declared is None:
        declared = declared_curves(S)
    base = surf.base
    irr = [c for c in declared if c.irreducible and c.exceptional_of is None]

    def covered(coeffs, pids):
        return any(c.base_coeffs == coeffs and all(c.mult(p) >= 1 for p in pids) for c in irr)

    out: list[CurveRecord] = []
    roots = surf.roots()
    if base.is_p2:
        for i, p in enumerate(roots):
            for q in roots[i + 1:]:
                if not covered((1,), (p, q)):
                    out.append(CurveRecord.make(f"line({p},{q})", base, (1,), {p: 1, q: 1}))
            for q in surf.children(p):
                if not covered((1,), (p, q)):
                    out.append(CurveRecord.make(f"line({p},{q})", base, (1,), {p: 1, q: 1}))
        return out
    rulings = [((0, 1), "fibre")]
    if base.n == 0:
        rulings.append(((1, 0), "ruling"))
    for p in roots:
        for coeffs, tag in rulings:
            if not covered(coeffs, (p,)):
                out.append(CurveRecord.make(f"{tag}({p})", base, coeffs, {p: 1}))
    if base.n >= 1 and not any(c.base_coeffs == (1, 0) for c in irr):
        out.append(CurveRecord.make("C0", base, (1, 0), {}))
    return out


def genus_quantity(curve: CurveRecord, S: SurfaceModel) -> Fraction:
    '''``K.C + C^2`` of the strict transform (``2 p_a - 2``).'''
    c = strict_transform(curve, S)
    return intersect(canonical_class(S), c) + intersect(c, c)
