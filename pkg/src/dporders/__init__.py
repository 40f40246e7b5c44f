'''Ramification data of orders over rational surfaces and their positivity.'''
from .classify import ClassificationRecord, classify_blowup, enumerate_minimal_tadpo_ruled, enumerate_minimal_tdpo_p2
from .config import BlowupPoint, CurveRecord, SurfaceModel, auto_curves, position_predicate
from .errors import DPOrdersError
from .fixtures import catalog, get
from .lattice import BasisTag, DivisorClass, canonical_class, intersect, strict_transform, total_transform
from .order import OrderData, RamificationComponent, blowup_order, fresh_point, k_squared, order_canonical
from .positivity import (
    effective_cone_generators,
    is_almost_del_pezzo,
    is_del_pezzo,
    is_minimal,
    k_zero_curves,
    mult_criterion,
    run_mmp,
)
from .serialize import order_dumps, order_loads

__all__ = [
    "BasisTag", "BlowupPoint", "ClassificationRecord", "CurveRecord", "DPOrdersError", "DivisorClass",
    "OrderData", "RamificationComponent", "SurfaceModel", "auto_curves", "blowup_order", "canonical_class",
    "catalog", "classify_blowup", "effective_cone_generators", "enumerate_minimal_tadpo_ruled",
    "enumerate_minimal_tdpo_p2", "fresh_point", "get", "intersect", "is_almost_del_pezzo", "is_del_pezzo",
    "is_minimal", "k_squared", "k_zero_curves", "mult_criterion", "order_canonical", "order_dumps",
    "order_loads", "position_predicate", "run_mmp", "strict_transform", "total_transform",
]
