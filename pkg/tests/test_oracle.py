'''Coordinate realizations of the P2 and P1xP1 fixtures.'''
import pytest
import sympy as sp

import oracle
from oracle import NODAL_CUBIC, Realization, check, corpus, curve_through, line_through, on_param, realize, residual_params, x, y

REALIZABLE = [fid for fid in corpus() if fid not in oracle.UNREALIZABLE]


@pytest.mark.parametrize("fid", REALIZABLE)
def test_declared_incidences_hold(fid):
    assert check(fid) == []


def test_unrealizable_list_is_exactly_the_conic_case():
    assert set(oracle.UNREALIZABLE) == {"p2-deg3-conic-seven"}
    # no conic passes through seven points of the nodal cubic
    r = Realization({}, {f"p{i}": on_param(NODAL_CUBIC[1], s) for i, s in enumerate(oracle.GENERAL_T[:7])})
    assert curve_through(True, (2,), r, [(p, 1) for p in r.points]) == []


def test_multiplicity_at_node_and_tangent_point():
    r = Realization({}, {"o": (0, 0), "p": on_param(NODAL_CUBIC[1], 2)})
    r.points["p'"] = ("p", oracle.tangent_slope(NODAL_CUBIC[1], 2))
    D = NODAL_CUBIC[0]
    assert oracle.mult(D, r, "o") == 2
    assert oracle.mult(D, r, "p") == 1 and oracle.mult(D, r, "p'") == 1
    T = line_through(r, "p", "p'")
    assert oracle.mult(T, r, "p'") == 1 and oracle.mult(y - 3 * x, r, "p'") == 0


def test_detects_undeclared_collinear_triple():
    r = realize("t1-p2-deg3-n3")
    L = line_through(r, "p1", "p2")
    (s,) = residual_params(L, NODAL_CUBIC[1], oracle.GENERAL_T[:2])
    r.points["p3"] = on_param(NODAL_CUBIC[1], s)
    assert any("undeclared (1,) curve" in p for p in check("t1-p2-deg3-n3", r))


def test_detects_wrong_multiplicity():
    r = realize("t3-p2-deg3-c3")
    r.points["p3"] = on_param(NODAL_CUBIC[1], sp.Rational(1, 2))
    assert any(p.startswith("L at p3") for p in check("t3-p2-deg3-c3", r))


def test_detects_point_off_the_boundary():
    r = realize("t1-p2-deg3-n1")
    r.points["p1"] = (1, 5)
    assert any(p.startswith("D at p1") for p in check("t1-p2-deg3-n1", r))


def test_detects_shared_fibre_on_quadric():
    r = realize("t1-f0-22-n2")
    a, _ = r.points["p1"]
    pts = [pt for pt in (on_param(oracle.F0_CONIC[1], s) for s in (-1, -2)) if pt[0] == a]
    r.points["p2"] = pts[0]
    assert any("(0, 1) curve" in p for p in check("t1-f0-22-n2", r))
