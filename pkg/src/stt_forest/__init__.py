"""Dynamic forests built on 2-cut search trees on trees."""

from .baselines import LinkCutForest, NaiveForest, OneCutForest, SimpleRooted
from .core import InvalidOperation, RotationContext, SttForest, ValidationReport
from .forest import ForestConfig, SttDynamicForest, stability_violation
from .heuristics import (
    GreedySplay,
    LocalTwoPassSplay,
    MoveToRoot,
    TwoPassSplay,
    can_splay_step,
    get_strategy,
    splay_step,
    splay_to,
)
from .rooted import RootedSttForest
from .weights import MAX_EDGE, SUM, UNIT, MaxEdge, MaxEdgeMonoid, SumGroup, UnitMonoid

__all__ = [
    "ForestConfig",
    "GreedySplay",
    "InvalidOperation",
    "LinkCutForest",
    "LocalTwoPassSplay",
    "MAX_EDGE",
    "MaxEdge",
    "MaxEdgeMonoid",
    "MoveToRoot",
    "NaiveForest",
    "OneCutForest",
    "RootedSttForest",
    "RotationContext",
    "SUM",
    "SimpleRooted",
    "SttDynamicForest",
    "SttForest",
    "SumGroup",
    "TwoPassSplay",
    "UNIT",
    "UnitMonoid",
    "ValidationReport",
    "can_splay_step",
    "get_strategy",
    "splay_step",
    "splay_to",
    "stability_violation",
]
