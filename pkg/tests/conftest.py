from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from dporders.config import SurfaceModel, BlowupPoint
from dporders.fixtures import catalog
from dporders.lattice import BasisTag, DivisorClass

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

P2 = BasisTag.p2()
F0, F1, F2 = (BasisTag.hirzebruch(n) for n in range(3))

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
bases = st.sampled_from([P2, F0, F1, F2, BasisTag.hirzebruch(5)])


@st.composite
def classes(draw, base, points):
    cb = tuple(draw(rationals) for _ in range(base.rank))
    ce = tuple(draw(rationals) for _ in points)
    return DivisorClass(base, cb, ce, tuple(points))


@st.composite
def class_triples(draw):
    base = draw(bases)
    k = draw(st.integers(0, 8))
    pts = [f"p{i}" for i in range(k)]
    return base, pts, draw(classes(base, pts)), draw(classes(base, pts)), draw(classes(base, pts))


def surface(base, k, chain=False):
    pts = [BlowupPoint(f"p{i}", f"p{i-1}" if chain and i else None) for i in range(k)]
    return SurfaceModel(base, pts)


@pytest.fixture(scope="session")
def cat():
    return catalog()


def frac(s):
    return Fraction(s)


@st.composite
def fixture_point_pairs(draw, max_k=6):
    '''A catalog order and a fresh point: off D, smooth on D, a node, or infinitely near.'''
    from dporders.order import fresh_point

    cat = catalog()
    ids = sorted(fid for fid, f in cat.items() if f.order.surface.k <= max_k and f.order.components)
    o = cat[draw(st.sampled_from(ids))].order
    comps = [c for c in o.components]
    kind = draw(st.sampled_from(["off", "smooth", "node", "near"]))
    pid = "x"
    if kind == "near" and o.surface.k:
        parent = draw(st.sampled_from(o.surface.point_ids))
        return o, fresh_point(o, pid, parent, {})
    if kind == "smooth":
        c = draw(st.sampled_from(comps))
        return o, fresh_point(o, pid, None, {c.id: 1})
    if kind == "node":
        if len(comps) >= 2:
            pair = draw(st.permutations(comps))[:2]
            lo, hi = sorted(c.e for c in pair)
            if hi % lo == 0:
                return o, fresh_point(o, pid, None, {c.id: 1 for c in pair})
        big = [c for c in comps if c.curve.degree >= 3]
        if big:
            c = draw(st.sampled_from(big))
            return o, fresh_point(o, pid, None, {c.id: 2})
    return o, fresh_point(o, pid, None, {})


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
