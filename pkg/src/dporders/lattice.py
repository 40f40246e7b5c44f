'''Exact intersection theory on iterated blowups of P2 and Hirzebruch surfaces.

Classes are coefficient vectors over a diagonal basis: the base classes
(``H`` on P2, ``C0, F`` on F_n) followed by the total transforms ``E_p`` of the
exceptional curves in creation order.  With total transforms the exceptional
block of the form is ``-identity`` and orthogonal to the base block, so
pairings are a dot product plus a tiny base term.

All arithmetic uses :class:`fractions.Fraction`.
'''
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import DimensionError, IncidenceError, InvalidConfiguration, LineageError

if TYPE_CHECKING:  # pragma: no cover
    from .config import CurveRecord, SurfaceModel


def as_fraction(x) -> Fraction:
    '''Coerce ints, Fractions and "p/q" strings; floats are refused.'''
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


@dataclass(frozen=True, order=True)
class BasisTag:
    '''Base surface: ``BasisTag("P2")`` or ``BasisTag("F", n)``.'''

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("P2", "F"):
            raise ValueError(f"unknown base kind {self.kind!r}")
        if self.kind == "P2" and self.n != 0:
            raise ValueError("P2 carries no n")
        if self.n < 0:
            raise ValueError("Hirzebruch index must be non-negative")

    @classmethod
    def p2(cls) -> "BasisTag":
        return cls("P2")

    @classmethod
    def hirzebruch(cls, n: int) -> "BasisTag":
        return cls("F", n)

    @property
    def is_p2(self) -> bool:
        return self.kind == "P2"

    @property
    def rank(self) -> int:
        return 1 if self.is_p2 else 2

    @property
    def names(self) -> tuple[str, ...]:
        return ("H",) if self.is_p2 else ("C0", "F")

    @property
    def label(self) -> str:
        return "P2" if self.is_p2 else f"F{self.n}"

    def base_pairing(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        if self.is_p2:
            return u[0] * v[0]
        # C0^2 = -n, C0.F = 1, F^2 = 0
        return -self.n * u[0] * v[0] + u[0] * v[1] + u[1] * v[0]

    @property
    def canonical(self) -> tuple[Fraction, ...]:
        if self.is_p2:
            return (Fraction(-3),)
        return (Fraction(-2), Fraction(-(self.n + 2)))

    @property
    def k_squared(self) -> int:
        return 9 if self.is_p2 else 8


@dataclass(frozen=True)
class DivisorClass:
    '''A rational class on the blowup of ``base`` at ``points`` (ids, in order).

    ``coeffs_exc[i]`` is the coefficient of the total transform ``E`` of
    ``points[i]``.
    '''

    base: BasisTag
    coeffs_base: tuple[Fraction, ...]
    coeffs_exc: tuple[Fraction, ...] = ()
    points: tuple[str, ...] = ()

    def __post_init__(self):
        cb = tuple(as_fraction(c) for c in self.coeffs_base)
        ce = tuple(as_fraction(c) for c in self.coeffs_exc)
        pts = tuple(self.points)
        if len(cb) != self.base.rank:
            raise DimensionError(f"{self.base.label} needs {self.base.rank} base coefficients, got {len(cb)}")
        if len(ce) != len(pts):
            raise DimensionError(f"{len(ce)} exceptional coefficients for {len(pts)} points")
        object.__setattr__(self, "coeffs_base", cb)
        object.__setattr__(self, "coeffs_exc", ce)
        object.__setattr__(self, "points", pts)

    # constructors

    @classmethod
    def zero(cls, base: BasisTag, points: Sequence[str] = ()) -> "DivisorClass":
        return cls(base, (0,) * base.rank, (0,) * len(points), tuple(points))

    @classmethod
    def of_base(cls, base: BasisTag, coeffs: Sequence, points: Sequence[str] = ()) -> "DivisorClass":
        return cls(base, tuple(coeffs), (0,) * len(points), tuple(points))

    @classmethod
    def exceptional(cls, base: BasisTag, points: Sequence[str], pid: str) -> "DivisorClass":
        points = tuple(points)
        if pid not in points:
            raise IncidenceError(f"unknown point {pid!r}")
        return cls(base, (0,) * base.rank, tuple(int(q == pid) for q in points), points)

    # arithmetic

    def _check(self, other: "DivisorClass"):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if self.base != other.base or self.points != other.points:
            raise DimensionError("classes live on different surfaces")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(
            self.base,
            tuple(a + b for a, b in zip(self.coeffs_base, other.coeffs_base)),
            tuple(a + b for a, b in zip(self.coeffs_exc, other.coeffs_exc)),
            self.points,
        )

    def __neg__(self):
        return DivisorClass(self.base, tuple(-a for a in self.coeffs_base), tuple(-a for a in self.coeffs_exc), self.points)

    def __sub__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        k = as_fraction(k)
        return DivisorClass(self.base, tuple(k * a for a in self.coeffs_base), tuple(k * a for a in self.coeffs_exc), self.points)

    __rmul__ = __mul__

    # views

    @property
    def vector(self) -> tuple[Fraction, ...]:
        return self.coeffs_base + self.coeffs_exc

    def coeff(self, pid: str) -> Fraction:
        try:
            return self.coeffs_exc[self.points.index(pid)]
        except ValueError:
            raise IncidenceError(f"unknown point {pid!r}") from None

    def is_zero(self) -> bool:
        return not any(self.vector)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.vector)

    def __str__(self) -> str:
        names = list(self.base.names) + [f"E[{p}]" for p in self.points]
        return format_terms(zip(self.vector, names))


def format_terms(terms: Iterable[tuple[Fraction, str]]) -> str:
    '''Render ``[(c, name), ...]`` as ``-3H + E[p1] - (1/2)F``.'''
    out = []
    for c, name in terms:
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if a == 1:
            mag = ""
        elif a.denominator == 1:
            mag = str(a.numerator)
        else:
            mag = f"({a.numerator}/{a.denominator})"
        out.append((sign, mag + name))
    if not out:
        return "0"
    head_sign, head = out[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def intersect(a: DivisorClass, b: DivisorClass) -> Fraction:
    '''Intersection number of two classes on the same surface.'''
    if a.base != b.base or a.points != b.points:
        raise DimensionError("classes live on different surfaces")
    return a.base.base_pairing(a.coeffs_base, b.coeffs_base) - sum(
        (x * y for x, y in zip(a.coeffs_exc, b.coeffs_exc)), Fraction(0)
    )


def canonical_class(S: "SurfaceModel") -> DivisorClass:
    '''Canonical class: pulled back base canonical plus every ``E_p``.'''
    pts = S.point_ids
    return DivisorClass(S.base, S.base.canonical, (1,) * len(pts), pts)


def _target_points(target) -> tuple[BasisTag, tuple[str, ...]]:
    if isinstance(target, tuple):
        return target
    return target.base, target.point_ids


def total_transform(c: DivisorClass, target: "SurfaceModel") -> DivisorClass:
    '''Pull ``c`` back to a surface obtained by further blowups.'''
    base, pts = _target_points(target)
    k = len(c.points)
    if base != c.base or pts[:k] != c.points:
        raise LineageError("target surface does not extend the source surface")
    return DivisorClass(base, c.coeffs_base, c.coeffs_exc + (Fraction(0),) * (len(pts) - k), pts)


def pushforward(c: DivisorClass, target: "SurfaceModel") -> DivisorClass:
    '''Push ``c`` down to an ancestor surface, forgetting later exceptionals.'''
    base, pts = _target_points(target)
    k = len(pts)
    if base != c.base or c.points[:k] != pts:
        raise LineageError("target surface is not an ancestor of the source surface")
    return DivisorClass(base, c.coeffs_base, c.coeffs_exc[:k], pts)


def strict_transform(curve: "CurveRecord", target: "SurfaceModel") -> DivisorClass:
    '''``f*C - sum m_p E_p`` for a curve declared on the base.

    A curve that is itself the exceptional curve of a point ``q`` carries a
    zero base class and contributes ``+E_q``.
    '''
    base, pts = _target_points(target)
    unknown = set(curve.mult_map) - set(pts)
    if unknown:
        raise IncidenceError(f"curve {curve.id!r} has multiplicities at unknown points {sorted(unknown)}")
    if curve.exceptional_of is not None and curve.exceptional_of not in pts:
        raise IncidenceError(f"curve {curve.id!r} is the exceptional of unknown point {curve.exceptional_of!r}")
    if not isinstance(target, tuple):
        check_proximity(curve, target)
    coeffs = []
    for p in pts:
        c = -curve.mult(p)
        if p == curve.exceptional_of:
            c += 1
        coeffs.append(c)
    return DivisorClass(base, curve.cls.coeffs_base, tuple(coeffs), pts)


def check_proximity(curve: "CurveRecord", S: "SurfaceModel") -> None:
    '''Multiplicity at a point bounds the sum over its first-order children.'''
    for p in S.points:
        kids = S.children(p.id)
        if not kids or p.id == curve.exceptional_of:
            continue
        below = sum(curve.mult(q) for q in kids)
        if below > curve.mult(p.id):
            raise InvalidConfiguration(
                f"curve {curve.id!r}: multiplicity {curve.mult(p.id)} at {p.id!r} "
                f"is below the total {below} at its infinitely near points"
            )
