from fractions import Fraction

import pytest
from hypothesis import given

from dporders.config import CurveRecord, SurfaceModel
from dporders.errors import InvalidConfiguration, NotApplicable
from dporders.lattice import DivisorClass, canonical_class, intersect, total_transform
from dporders.order import (
    OrderData,
    RamificationComponent,
    blowup_coefficient,
    blowup_order,
    discriminant,
    f1_balance,
    f2_balance,
    fresh_point,
    genus_constraint,
    k_squared,
    k_squared_after_blowup,
    m_decomposition,
    order_canonical,
    remove_last_point,
)

from conftest import F1, F2, P2, fixture_point_pairs


def single(base, coeffs, e):
    return OrderData(SurfaceModel(base), (RamificationComponent("D", CurveRecord.make("D", base, coeffs), e),))


def two_lines(e1, e2):
    comps = (RamificationComponent("L1", CurveRecord.make("L1", P2, (1,)), e1),
             RamificationComponent("L2", CurveRecord.make("L2", P2, (1,)), e2))
    return OrderData(SurfaceModel(P2), comps)


def test_discriminant_examples():
    assert discriminant(single(P2, (3,), 2)).vector == (Fraction(3, 2),)
    assert discriminant(single(P2, (3,), 3)).vector == (2,)
    assert discriminant(OrderData(SurfaceModel(P2))).is_zero()


def test_order_canonical_examples():
    assert order_canonical(single(P2, (3,), 3)).vector == (-1,)
    assert order_canonical(single(F1, (2, 4), 2)).vector == (-1, -1)
    assert order_canonical(single(F2, (3, 6), 2)).vector == (Fraction(-1, 2), -1)


@pytest.mark.parametrize("e", range(2, 13))
def test_k_squared_p2_table(e):
    assert k_squared(single(P2, (3,), e)) == Fraction(9, e * e)
    assert k_squared(single(P2, (4,), e)) == 1 - Fraction(8, e) + Fraction(16, e * e)


def test_k_squared_examples():
    assert k_squared(single(P2, (3,), 2)) == Fraction(9, 4)
    assert k_squared(single(P2, (4,), 2)) == 1
    assert k_squared(single(P2, (5,), 2)) == Fraction(1, 4)


def test_blowup_coefficient_cases():
    o = single(P2, (3,), 2)
    assert blowup_coefficient(o, fresh_point(o, "p")) == 1
    assert blowup_coefficient(o, fresh_point(o, "p", None, {"D": 1})) == Fraction(1, 2)
    t = two_lines(2, 4)
    p = fresh_point(t, "p", None, {"L1": 1, "L2": 1})
    assert p.node_of_D
    assert blowup_coefficient(t, p) == Fraction(1, 4)


def test_non_dividing_node_rejected():
    t = two_lines(2, 3)
    with pytest.raises(InvalidConfiguration):
        blowup_coefficient(t, fresh_point(t, "p", None, {"L1": 1, "L2": 1}))


def test_flags_must_match_incidences():
    from dporders.config import BlowupPoint

    o = single(P2, (3,), 2)
    with pytest.raises(InvalidConfiguration):
        blowup_order(o, BlowupPoint("p", None, True, True, (("D", 1),)))
    with pytest.raises(InvalidConfiguration):
        blowup_order(o, BlowupPoint("p", None, False, False, (("D", 1),)))


def test_e_one_rejected():
    with pytest.raises(InvalidConfiguration):
        RamificationComponent("D", CurveRecord.make("D", P2, (3,)), 1)


def test_blowup_identity_smooth_point():
    o = single(P2, (3,), 2)
    o2 = blowup_order(o, fresh_point(o, "p", None, {"D": 1}))
    diff = order_canonical(o2) - total_transform(order_canonical(o), o2.surface)
    assert diff == DivisorClass.exceptional(P2, ("p",), "p") * Fraction(1, 2)


@pytest.mark.parametrize("e1,e2", [(2, 2), (3, 3), (2, 4), (3, 6), (2, 6)])
def test_node_exceptional_degree(e1, e2):
    t = two_lines(e1, e2)
    p = fresh_point(t, "p", None, {"L1": 1, "L2": 1})
    t2 = blowup_order(t, p)
    E = t2.component("E[p]")
    assert E.e == min(e1, e2)
    diff = order_canonical(t2) - total_transform(order_canonical(t), t2.surface)
    assert diff.coeff("p") == Fraction(1, max(e1, e2)) == blowup_coefficient(t, p)


def test_node_of_cubic_keeps_d_anticanonical():
    o = single(P2, (3,), 3)
    o2 = blowup_order(o, fresh_point(o, "n", None, {"D": 2}))
    assert o2.component("E[n]").e == 3
    md = m_decomposition(o2)
    assert md is not None and md.M.is_zero()


def test_off_d_pads_components():
    o = single(P2, (3,), 2)
    o2 = blowup_order(o, fresh_point(o, "q"))
    assert o2.components[0].curve.mult_map == {}
    assert blowup_coefficient(o, fresh_point(o, "q")) == 1


def test_k_squared_after_blowup_examples():
    o = single(P2, (3,), 2)
    assert k_squared_after_blowup(o, fresh_point(o, "q")) == Fraction(5, 4)
    o = single(P2, (5,), 2)
    assert k_squared_after_blowup(o, fresh_point(o, "p", None, {"D": 1})) == 0
    o = single(F1, (3, 5), 2)
    assert k_squared_after_blowup(o, fresh_point(o, "p", None, {"D": 1})) == 0


def test_m_decomposition_examples():
    assert m_decomposition(single(P2, (4,), 2)).M.vector == (1,)
    assert m_decomposition(single(P2, (3,), 2)).M.is_zero()
    assert m_decomposition(single(F1, (2, 4), 2)).M.vector == (0, 1)
    assert m_decomposition(single(P2, (2,), 2)) is None
    with pytest.raises(NotApplicable):
        m_decomposition(two_lines(2, 4))


def test_genus_examples():
    assert genus_constraint(single(F2, (2, 4), 2), 2)
    assert genus_constraint(single(F1, (2, 3), 2), 2)
    assert not genus_constraint(single(F1, (2, 2), 2), 2)
    with pytest.raises(NotApplicable):
        genus_constraint(single(F1, (2, 4), 3), 2)


def test_genus_uses_top_prime_power():
    comps = (RamificationComponent("A", CurveRecord.make("A", F1, (2, 4)), 4),
             RamificationComponent("B", CurveRecord.make("B", F1, (1, 1)), 2))
    o = OrderData(SurfaceModel(F1), comps)
    assert genus_constraint(o, 2)  # only A carries the top power of 2


def test_balance_on_minimal_fixtures(cat):
    for f in cat.values():
        o = f.order
        if o.surface.k or o.base.is_p2:
            continue
        if o.base == F1:
            assert f1_balance(o), f.id
            assert intersect(order_canonical(o), DivisorClass.of_base(F1, (1, 0))) == 0
        if o.base == F2:
            assert f2_balance(o), f.id


def test_remove_last_point_inverts_blowup(cat):
    for f in cat.values():
        o = f.order
        if o.surface.k:
            assert blowup_order(remove_last_point(o), _replay(o)) == o, f.id


def _replay(o):
    '''The last point of ``o`` as a fresh point of its predecessor.'''
    prev = remove_last_point(o)
    p = o.surface.points[-1]
    inc = {c.id: c.mult(p.id) for c in o.surface.curves + tuple(x.curve for x in o.components) if c.mult(p.id)}
    return fresh_point(prev, p.id, p.parent, inc)


@given(fixture_point_pairs())
def test_k_squared_recursion(pair):
    o, p = pair
    a = blowup_coefficient(o, p)
    o2 = blowup_order(o, p)
    assert k_squared(o2) == k_squared(o) - a * a == k_squared_after_blowup(o, p)
    diff = order_canonical(o2) - total_transform(order_canonical(o), o2.surface)
    assert diff == DivisorClass.exceptional(o.base, o2.surface.point_ids, p.id) * a


def test_m_formula_on_catalog(cat):
    for f in cat.values():
        o = f.order
        e = o.uniform_degree()
        if e is None:
            continue
        md = m_decomposition(o)
        if md is None:
            continue
        expect = (canonical_class(o.surface) + md.M * (e - 1)) * Fraction(1, e)
        assert order_canonical(o) == expect, f.id


@given(fixture_point_pairs())
def test_anticanonical_preserved_at_d_points(pair):
    o, p = pair
    if not p.on_D or o.uniform_degree() is None:
        return
    md = m_decomposition(o)
    if md is None or not md.M.is_zero():
        return
    if p.node_of_D and len({c.e for c in o.components}) > 1:
        return
    o2 = blowup_order(o, p)
    md2 = m_decomposition(o2)
    assert md2 is not None and md2.M.is_zero()
    e = o.uniform_degree()
    assert order_canonical(o2) == canonical_class(o2.surface) * Fraction(1, e)
