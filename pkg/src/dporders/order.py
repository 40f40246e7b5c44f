'''Ramification data of an order over a blown up surface.

An order is recorded by its ramification curves ``D_i`` with degrees ``e_i``.
Everything else is derived: the discriminant ``sum (1 - 1/e_i) D_i``, the
canonical class ``K_Z + discriminant`` and its square, and how these change
under a blowup.

Blowing up a node of ``D`` makes the exceptional curve ramified.  That curve
is not stored; :meth:`OrderData.all_components` derives it from the node with
the smaller of the two branch degrees (see :func:`exceptional_degree`).
'''
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .config import (
    BlowupPoint,
    CurveRecord,
    SurfaceModel,
    exceptional_curve,
    RESERVED_PREFIXES,
)
from .errors import IncidenceError, InvalidConfiguration, NotApplicable
from .lattice import DivisorClass, canonical_class, intersect, strict_transform


@dataclass(frozen=True)
class RamificationComponent:
    '''One ramification curve with its degree and opaque labels.'''

    id: str
    curve: CurveRecord
    e: int
    annotations: tuple[str, ...] = ()

    def __post_init__(self):
        if isinstance(self.e, bool) or not isinstance(self.e, int) or self.e < 2:
            raise InvalidConfiguration(f"component {self.id!r}: ramification degree must be an integer >= 2, got {self.e!r}")
        if self.curve.id != self.id:
            object.__setattr__(self, "curve", CurveRecord(self.id, self.curve.cls, self.curve.mults,
                                                          self.curve.irreducible, self.curve.exceptional_of))
        object.__setattr__(self, "annotations", tuple(self.annotations))

    @property
    def derived(self) -> bool:
        return self.curve.exceptional_of is not None


@dataclass(frozen=True)
class Node:
    point: str
    first: str
    second: str
    degrees: tuple[int, int]


@dataclass(frozen=True)
class MDecomposition:
    '''``D = -K_Z + M`` on the current surface.'''

    M: DivisorClass
    effective: bool


def exceptional_degree(degrees: tuple[int, int]) -> int:
    '''Degree given to the exceptional curve of a node with branch degrees ``(e, ne)``.'''
    return min(degrees)


def _branch_degrees(comps: Sequence[RamificationComponent], pid: str) -> tuple[int, int]:
    through = [(c, c.curve.mult(pid)) for c in comps if c.curve.mult(pid)]
    if len(through) == 1:
        c, _ = through[0]
        return (c.e, c.e)
    (c1, _), (c2, _) = through
    lo, hi = sorted((c1.e, c2.e))
    if hi % lo:
        raise InvalidConfiguration(f"node {pid!r}: branch degrees {lo} and {hi} do not divide one another")
    return (lo, hi)


@dataclass(frozen=True)
class OrderData:
    '''A surface with ramification components.'''

    surface: SurfaceModel
    components: tuple[RamificationComponent, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        S = self.surface
        names = set(S.point_ids) | {c.id for c in S.curves}
        for comp in self.components:
            if comp.derived:
                raise InvalidConfiguration("exceptional components are derived, not declared")
            if comp.id in names:
                raise InvalidConfiguration(f"duplicate id {comp.id!r}")
            if comp.id.startswith(RESERVED_PREFIXES):
                raise InvalidConfiguration(f"reserved component id {comp.id!r}")
            names.add(comp.id)
            S.validate_curve(comp.curve)
        # D-multiplicity at each point must match its flags
        derived: list[RamificationComponent] = []
        for p in S.points:
            comps = list(self.components) + derived
            m = sum(c.curve.mult(p.id) for c in comps)
            if m > 2:
                raise InvalidConfiguration(f"point {p.id!r} has multiplicity {m} on D; only smooth points and nodes are allowed")
            if p.on_D != (m >= 1) or p.node_of_D != (m == 2):
                raise InvalidConfiguration(
                    f"point {p.id!r}: flags on_D={p.on_D}, node={p.node_of_D} disagree with D-multiplicity {m}"
                )
            if m == 2:
                deg = _branch_degrees(comps, p.id)
                derived.append(RamificationComponent(f"E[{p.id}]", exceptional_curve(S, p.id), exceptional_degree(deg)))
        object.__setattr__(self, "_derived", tuple(derived))

    # views

    @property
    def base(self):
        return self.surface.base

    @property
    def all_components(self) -> tuple[RamificationComponent, ...]:
        return self.components + self._derived  # type: ignore[attr-defined]

    @property
    def nodes(self) -> tuple[Node, ...]:
        out = []
        for p in self.surface.points:
            if p.node_of_D:
                through = [c for c in self.all_components if c.curve.mult(p.id)]
                if len(through) == 1:
                    a = b = through[0]
                else:
                    a, b = sorted(through, key=lambda c: (c.e, c.id))
                out.append(Node(p.id, a.id, b.id, _branch_degrees(self.all_components, p.id)))
        return tuple(out)

    def component(self, cid: str) -> RamificationComponent:
        for c in self.all_components:
            if c.id == cid:
                return c
        raise IncidenceError(f"unknown component {cid!r}")

    def degrees(self) -> tuple[int, ...]:
        return tuple(c.e for c in self.all_components)

    def uniform_degree(self) -> int | None:
        ds = set(self.degrees())
        return ds.pop() if len(ds) == 1 else None

    def d_class(self) -> DivisorClass:
        '''Class of the reduced ramification curve on the current surface.'''
        out = DivisorClass.zero(self.base, self.surface.point_ids)
        for c in self.all_components:
            out = out + strict_transform(c.curve, self.surface)
        return out

    def base_d_coeffs(self) -> tuple[int, ...]:
        '''Base class of D, ignoring exceptional components.'''
        tot = [0] * self.base.rank
        for c in self.components:
            for i, x in enumerate(c.curve.base_coeffs):
                tot[i] += x
        return tuple(tot)

    def minimal_model(self) -> "OrderData":
        '''The same ramification on the base surface with every blowup forgotten.'''
        return truncate(self, 0)


def truncate(o: OrderData, k: int) -> OrderData:
    '''Forget all blowups after the first ``k``.'''
    keep = o.surface.point_ids[:k]
    S = o.surface.ancestor(k)
    comps = []
    for c in o.components:
        cur = c.curve
        cur = CurveRecord(cur.id, cur.cls, tuple((p, m) for p, m in cur.mults if p in keep), cur.irreducible)
        comps.append(RamificationComponent(c.id, cur, c.e, c.annotations))
    return OrderData(S, tuple(comps))


def discriminant(o: OrderData) -> DivisorClass:
    '''``sum (1 - 1/e_i) D_i`` on the current surface.'''
    out = DivisorClass.zero(o.base, o.surface.point_ids)
    for c in o.all_components:
        out = out + (1 - Fraction(1, c.e)) * strict_transform(c.curve, o.surface)
    return out


def order_canonical(o: OrderData) -> DivisorClass:
    return canonical_class(o.surface) + discriminant(o)


def k_squared(o: OrderData) -> Fraction:
    K = order_canonical(o)
    return intersect(K, K)


def d_multiplicity(o: OrderData, p: BlowupPoint) -> int:
    '''Multiplicity of D at a fresh point, including a ramified exceptional through it.'''
    inc = p.incidence_map
    m = 0
    for c in o.components:
        m += inc.get(c.id, 0)
    if p.parent is not None:
        parent = o.surface.point(p.parent)
        if parent.node_of_D:
            m += 1
    return m


def _fresh_components(o: OrderData, p: BlowupPoint) -> list[tuple[RamificationComponent, int]]:
    inc = p.incidence_map
    out = [(c, inc[c.id]) for c in o.components if inc.get(c.id)]
    if p.parent is not None:
        for c in o.all_components:
            if c.curve.exceptional_of == p.parent:
                out.append((c, 1))
    return out


def _check_fresh(o: OrderData, p: BlowupPoint) -> None:
    S = o.surface
    if p.id in S.point_ids:
        raise InvalidConfiguration(f"point {p.id!r} already blown up")
    if p.parent is not None:
        S.point(p.parent)
    known = {c.id for c in S.curves} | {c.id for c in o.components}
    for cid, _ in p.incidences:
        if cid.startswith("E["):
            if p.parent is None or cid != f"E[{p.parent}]":
                raise IncidenceError(f"point {p.id!r} cannot lie on {cid}")
            continue
        if cid not in known:
            raise IncidenceError(f"point {p.id!r} references unknown curve {cid!r}")
    m = d_multiplicity(o, p)
    if m > 2:
        raise InvalidConfiguration(f"point {p.id!r} has multiplicity {m} on D")
    if p.on_D != (m >= 1) or p.node_of_D != (m == 2):
        raise InvalidConfiguration(
            f"point {p.id!r}: flags on_D={p.on_D}, node={p.node_of_D} disagree with D-multiplicity {m}"
        )


def fresh_point(o: OrderData, pid: str, parent: str | None = None,
                incidences: Mapping[str, int] | None = None) -> BlowupPoint:
    '''A fresh point with ``on_D`` and ``node_of_D`` derived from its incidences.'''
    probe = BlowupPoint(pid, parent, False, False, tuple((incidences or {}).items()))
    m = d_multiplicity(o, probe)
    return BlowupPoint(pid, parent, m >= 1, m == 2, probe.incidences)


def blowup_coefficient(o: OrderData, p: BlowupPoint) -> Fraction:
    '''Coefficient ``a`` in ``K' = f*K + aE``: 1 off D, 1/e at a smooth point, 1/(ne) at a node.'''
    _check_fresh(o, p)
    if not p.on_D:
        return Fraction(1)
    through = _fresh_components(o, p)
    if not p.node_of_D:
        (c, _), = through
        return Fraction(1, c.e)
    if len(through) == 1:
        c, _ = through[0]
        return Fraction(1, c.e)
    (c1, _), (c2, _) = through
    lo, hi = sorted((c1.e, c2.e))
    if hi % lo:
        raise InvalidConfiguration(f"node {p.id!r}: branch degrees {lo} and {hi} do not divide one another")
    return Fraction(1, hi)


def blowup_order(o: OrderData, p: BlowupPoint) -> OrderData:
    '''Blow up a fresh point; curves and components acquire their multiplicity there.'''
    _check_fresh(o, p)
    inc = p.incidence_map
    S = o.surface
    point = BlowupPoint(p.id, p.parent, p.on_D, p.node_of_D)
    curves = tuple(c.with_mult(p.id, inc[c.id]) if inc.get(c.id) else c for c in S.curves)
    comps = tuple(
        RamificationComponent(c.id, c.curve.with_mult(p.id, inc[c.id]), c.e, c.annotations) if inc.get(c.id) else c
        for c in o.components
    )
    return OrderData(SurfaceModel(S.base, S.points + (point,), curves), comps)


def k_squared_after_blowup(o: OrderData, p: BlowupPoint) -> Fraction:
    return k_squared(o) - blowup_coefficient(o, p) ** 2


def remove_last_point(o: OrderData) -> OrderData:
    '''Inverse of :func:`blowup_order` for the most recent point.'''
    if not o.surface.points:
        raise InvalidConfiguration("no blowup to undo")
    return truncate(o, o.surface.k - 1)


def m_decomposition(o: OrderData) -> MDecomposition | None:
    '''``M = D + K_Z`` when every coefficient is non-negative, else ``None``.'''
    if o.all_components and o.uniform_degree() is None:
        raise NotApplicable("ramification degrees are not all equal")
    M = o.d_class() + canonical_class(o.surface)
    if all(c >= 0 for c in M.vector):
        return MDecomposition(M, True)
    return None


def _valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def genus_constraint(o: OrderData, prime: int) -> bool:
    '''``(a_p - 1)(2 b_p - n a_p - 2) >= 2`` for the curves of maximal ``prime``-power degree.'''
    if o.base.is_p2:
        raise NotApplicable("defined over Hirzebruch surfaces only")
    vals = [(c, _valuation(c.e, prime)) for c in o.components]
    top = max((v for _, v in vals), default=0)
    if top == 0:
        raise NotApplicable(f"{prime} divides no ramification degree")
    a = sum(c.curve.base_coeffs[0] for c, v in vals if v == top)
    b = sum(c.curve.base_coeffs[1] for c, v in vals if v == top)
    return (a - 1) * (2 * b - o.base.n * a - 2) >= 2


def _weights(o: OrderData):
    for c in o.components:
        a, b = c.curve.base_coeffs
        yield 1 - Fraction(1, c.e), a, b


def f1_balance(o: OrderData) -> bool:
    '''``sum t_i b_i = sum t_i a_i + 1`` with ``t_i = 1 - 1/e_i`` (equivalently ``K.C0 = 0`` on F1).'''
    if o.base.n != 1 or o.base.is_p2:
        raise NotApplicable("F1 only")
    return sum((t * b for t, a, b in _weights(o)), Fraction(0)) == sum((t * a for t, a, b in _weights(o)), Fraction(0)) + 1


def f2_balance(o: OrderData) -> bool:
    '''``sum t_i (b_i - 2 a_i) = 0`` (equivalently ``K.C0 = 0`` on F2).'''
    if o.base.n != 2 or o.base.is_p2:
        raise NotApplicable("F2 only")
    return sum((t * (b - 2 * a) for t, a, b in _weights(o)), Fraction(0)) == 0


# del Pezzo degrees over P2, used only as a shallow sanity check
_P2_TABLE = {3: None, 4: (2, 3), 5: (2,)}


def terminal_violations(o: OrderData) -> list[str]:
    '''Numeric constraints that a terminal del Pezzo order over these bases satisfies.'''
    out = []
    for n in o.nodes:
        lo, hi = n.degrees
        if hi % lo:
            out.append(f"node {n.point}: degrees {lo}, {hi}")
    if o.base.is_p2:
        if o.components and o.uniform_degree() is None:
            out.append("ramification degrees over P2 differ")
        d = o.base_d_coeffs()[0]
        e = o.uniform_degree()
        if e is not None and o.surface.k == 0:
            allowed = _P2_TABLE.get(d, ())
            if allowed is not None and e not in allowed:
                out.append(f"degree {d} with e={e} is outside the del Pezzo table")
    else:
        if o.base_d_coeffs()[0] == 3 and any(c.e != 2 for c in o.components):
            out.append("a section coefficient of 3 needs all ramification degrees equal to 2")
    return out
