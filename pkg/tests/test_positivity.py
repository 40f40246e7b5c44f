from fractions import Fraction

import pytest
from hypothesis import given

from dporders.config import CurveRecord, SurfaceModel
from dporders.errors import BudgetExceeded, NotApplicable, PredicateViolation, UnsupportedContraction
from dporders.fixtures import get
from dporders.lattice import DivisorClass, intersect
from dporders.order import OrderData, blowup_order, fresh_point, k_squared, m_decomposition, order_canonical
from dporders.positivity import (
    ConeGenerator,
    centre_order,
    contract,
    effective_cone_generators,
    is_almost_del_pezzo,
    is_del_pezzo,
    is_minimal,
    k_zero_curves,
    mult_criterion,
    run_mmp,
    witnessed_curves,
)

from conftest import F0, F1, F2, P2, fixture_point_pairs, surface
from test_order import single


def bare(base, k, chain=False):
    return OrderData(surface(base, k, chain))


def vectors(gens):
    return {tuple(g.cls.vector): g.kind for g in gens}


def test_generators_one_point():
    got = vectors(effective_cone_generators(bare(P2, 1)))
    assert got == {(0, 1): "minus-one", (1, -1): "zero-fibre"}


def test_generators_f2():
    got = vectors(effective_cone_generators(bare(F2, 0)))
    assert got == {(1, 0): "minus-two", (0, 1): "zero-fibre"}


def test_generators_infinitely_near():
    got = vectors(effective_cone_generators(bare(P2, 2, chain=True)))
    assert got == {(0, 1, -1): "minus-two", (0, 0, 1): "minus-one", (1, -1, -1): "minus-one"}


def test_plane_line_kind():
    (g,) = effective_cone_generators(bare(P2, 0))
    assert g.kind == "plane-line" and g.cls.vector == (1,)


def test_generator_kind_numbers(cat):
    from dporders.lattice import canonical_class

    for f in cat.values():
        o = f.order
        if o.surface.k > 8:
            continue
        KZ = canonical_class(o.surface)
        for g in effective_cone_generators(o):
            sq, kz = g.square, intersect(KZ, g.cls)
            want = {"minus-one": (-1, -1), "minus-two": (-2, 0), "zero-fibre": (0, -2)}.get(g.kind)
            if want:
                assert (sq, kz) == want, (f.id, g.witness)
            elif g.kind == "plane-line":
                assert o.base.is_p2 and o.surface.k == 0


def test_unwitnessed_candidates_are_reported():
    diags = []
    effective_cone_generators(bare(P2, 5), diags)
    dropped = [d for d in diags if d.reason.startswith("dropped")]
    assert any(d.cls.vector == (2, -1, -1, -1, -1, -1) for d in dropped)
    kept = [d for d in diags if d.reason == "kept"]
    assert any(d.witness == "line(p0,p1)" for d in kept)


def test_budget():
    with pytest.raises(BudgetExceeded):
        effective_cone_generators(bare(P2, 9))
    with pytest.raises(BudgetExceeded):
        effective_cone_generators(bare(F0, 8))


def test_budget_skipped_when_k_squared_not_positive():
    o = single(P2, (3,), 2)
    for i in range(9):
        o = blowup_order(o, fresh_point(o, f"p{i}", None, {"D": 1}))
    assert k_squared(o) == 0
    assert not is_del_pezzo(o) and not is_almost_del_pezzo(o)


def test_del_pezzo_examples():
    assert is_del_pezzo(single(P2, (3,), 2))
    o = single(P2, (3,), 3)
    assert not is_del_pezzo(blowup_order(o, fresh_point(o, "q")))
    for fid in ("f2-2C0+4F-e2", "f2-2C0+4F-e3", "f2-3C0+6F", "f2-node"):
        assert not is_del_pezzo(get(fid).order)


def test_almost_del_pezzo_examples():
    o = single(F1, (2, 4), 2)
    assert is_almost_del_pezzo(o)
    assert intersect(order_canonical(o), DivisorClass.of_base(F1, (1, 0))) == 0
    o = single(F2, (3, 6), 2)
    assert is_almost_del_pezzo(o) and k_squared(o) == Fraction(1, 2)
    o = single(P2, (5,), 2)
    assert not is_almost_del_pezzo(blowup_order(o, fresh_point(o, "p", None, {"D": 1})))


def test_minimal_examples():
    assert is_minimal(single(P2, (3,), 2))
    o = single(P2, (3,), 2)
    o1 = blowup_order(o, fresh_point(o, "p", None, {"D": 1}))
    assert not is_minimal(o1)
    assert is_minimal(single(F1, (2, 4), 2))


def _kz(fid):
    o = get(fid).order
    K = order_canonical(o)
    return {g.witness: intersect(K, g.cls) for g in k_zero_curves(o)}, o


def test_k_zero_line_through_p_and_q():
    got, o = _kz("t3-p2-deg3-c2")
    assert set(got) == {"line(p,q)"}
    K = order_canonical(o)
    # -3/2 from the plane, +1 from q off D, +1/2 from p on D
    assert K.coeffs_base[0] == Fraction(-3, 2) and K.coeff("q") == 1 and K.coeff("p") == Fraction(1, 2)


def test_k_zero_fibre_through_point_off_d():
    got, o = _kz("t3-f2-c2")
    assert set(got) == {"C0", "fibre(q)"}
    K = order_canonical(o)
    # -1 on the total transform of the fibre, +1 from E[q]
    F = DivisorClass.of_base(F2, (0, 1), o.surface.point_ids)
    assert intersect(K, F) == -1 and K.coeff("q") == 1


def test_k_zero_ruling_on_32():
    got, _ = _kz("t3-f0-c2")
    assert got == {"fibre(p)": 0}


def test_k_zero_requires_almost():
    with pytest.raises(PredicateViolation):
        k_zero_curves(get("p2-deg3-out-e3").order)


def _line_order(n_points):
    o = OrderData(SurfaceModel(P2, (), (CurveRecord.make("L", P2, (1,)),)),
                  (single(P2, (4,), 2).components))
    for i in range(n_points):
        o = blowup_order(o, fresh_point(o, f"p{i}", None, {"D": 1, "L": 1}))
    return o


def test_mult_criterion_examples():
    o = _line_order(1)
    L = o.surface.curve("L")
    assert mult_criterion(o, L, True)
    o = _line_order(2)
    L = o.surface.curve("L")
    assert mult_criterion(o, L, False) and not mult_criterion(o, L, True)
    o = get("p2-deg3-conic-seven").order
    Q = o.surface.curve("Q")
    assert not mult_criterion(o, Q, False)
    assert not is_almost_del_pezzo(o)
    with pytest.raises(NotApplicable):
        mult_criterion(single(P2, (2,), 2), CurveRecord.make("L", P2, (1,)), True)


def test_contract_examples(cat):
    o = single(P2, (3,), 2)
    o2 = blowup_order(o, fresh_point(o, "p", None, {"D": 1}))
    E = next(g for g in witnessed_curves(o2) if g.witness == "E[p]")
    assert contract(o2, E) == o
    line = ConeGenerator(DivisorClass(P2, (1,), (-1,), ("p",)), "zero-fibre", "H")
    with pytest.raises(UnsupportedContraction):
        contract(o2, line)
    chain = get("t3-p2-deg3-c1").order
    last = chain.surface.point_ids[-1]
    E2 = next(g for g in witnessed_curves(chain) if g.witness == f"E[{last}]")
    after = contract(chain, E2)
    first = after.surface.point_ids[-1]
    E1 = next(g for g in witnessed_curves(after) if g.witness == f"E[{first}]")
    assert E1.square == -1


def test_mmp_examples():
    o = single(P2, (3,), 2)
    assert run_mmp(o) == (o, [])
    o2 = get("t1-p2-deg3-n2").order
    final, steps = run_mmp(o2)
    assert final == o
    assert [s.contracted.witness for s in steps] == ["E[p2]", "E[p1]"]
    assert all(is_del_pezzo(s.after) for s in steps)


def _small(cat):
    return [f for f in cat.values() if f.order.surface.k <= 8]


def test_del_pezzo_implies_almost(cat):
    for f in cat.values():
        if is_del_pezzo(f.order):
            assert is_almost_del_pezzo(f.order), f.id


def test_centre_is_almost_del_pezzo(cat):
    for f in cat.values():
        if is_almost_del_pezzo(f.order):
            assert is_almost_del_pezzo(centre_order(f.order)), f.id


def test_mmp_on_catalog(cat):
    for f in cat.values():
        o = f.order
        final, steps = run_mmp(o)
        assert len(steps) <= 8
        assert final.surface.k == 0 and (final.base.is_p2 or final.base.n in (0, 1, 2)), f.id
        if is_almost_del_pezzo(o):
            assert all(is_almost_del_pezzo(s.after) for s in steps), f.id
        for s in steps:
            assert s.contracted.square < 0
            assert intersect(order_canonical(s.before), s.contracted.cls) < 0
            assert k_squared(s.after) == k_squared(s.before) + s.a * s.a


def _as_curve(o, g):
    if g.curve is not None:
        return g.curve
    return CurveRecord.make(g.witness, o.base, tuple(int(c) for c in g.cls.coeffs_base))


def test_mult_criterion_matches_sign_test(cat):
    checked = 0
    for f in cat.values():
        o = f.order
        if o.uniform_degree() is None or m_decomposition(o) is None or k_squared(o) <= 0:
            continue
        K = order_canonical(o)
        for g in witnessed_curves(o):
            c = _as_curve(o, g)
            v = intersect(K, g.cls)
            assert mult_criterion(o, c, True) == (v < 0), (f.id, g.witness)
            assert mult_criterion(o, c, False) == (v <= 0), (f.id, g.witness)
            checked += 1
    assert checked > 200


def test_k_zero_is_minus_two_when_anticanonical(cat):
    for f in cat.values():
        o = f.order
        if o.uniform_degree() is None or not is_almost_del_pezzo(o):
            continue
        md = m_decomposition(o)
        if md is None or not md.M.is_zero():
            continue
        kz = {g.cls.vector for g in k_zero_curves(o)}
        m2 = {g.cls.vector for g in effective_cone_generators(o) if g.kind == "minus-two"}
        assert kz == m2, f.id


@given(fixture_point_pairs())
def test_blowup_then_contract(pair):
    o, p = pair
    o2 = blowup_order(o, p)
    E = next(g for g in witnessed_curves(o2) if g.witness == f"E[{p.id}]") if o2.surface.k <= 8 else None
    if E is None:
        return
    assert contract(o2, E) == o
