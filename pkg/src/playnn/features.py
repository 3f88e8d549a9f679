"""Input feature palette: the raw coordinates and their fixed derived combos.

The palette order below is canonical.  Enabled feature sets are always kept
in this order so that weight-initialization draws line up run to run.
"""

import math

# Canonical palette order.  Network input layers, state strings, and frames
# all list features in this order.
FEATURE_IDS = ("x1", "x2", "x1sq", "x2sq", "x1x2", "sinx1", "sinx2")

_FEATURE_INDEX = {fid: i for i, fid in enumerate(FEATURE_IDS)}

# sin arguments are scaled by pi so a half-period spans the input square;
# unscaled sine is near-linear on [-1, 1].
_EVALUATORS = {
    "x1": lambda x1, x2: x1,
    "x2": lambda x1, x2: x2,
    "x1sq": lambda x1, x2: x1 * x1,
    "x2sq": lambda x1, x2: x2 * x2,
    "x1x2": lambda x1, x2: x1 * x2,
    "sinx1": lambda x1, x2: math.sin(math.pi * x1),
    "sinx2": lambda x1, x2: math.sin(math.pi * x2),
}


def is_feature_id(fid: str) -> bool:
    return fid in _FEATURE_INDEX


def feature_value(fid: str, x1: float, x2: float) -> float:
    """Evaluate one palette feature at a point."""
    return _EVALUATORS[fid](x1, x2)


def feature_vector(enabled, x1: float, x2: float) -> list[float]:
    """Evaluate the enabled features, in the order given.

    Callers keep `enabled` in canonical palette order (see
    :func:`canonical_order`); this function does not reorder.
    """
    if not enabled:
        raise ValueError("enabled feature set must not be empty")
    return [_EVALUATORS[fid](x1, x2) for fid in enabled]


def canonical_order(ids) -> tuple[str, ...]:
    """Deduplicate and sort feature ids into canonical palette order.

    Unknown ids are dropped; validation of emptiness is the caller's job.
    """
    present = {fid for fid in ids if fid in _FEATURE_INDEX}
    return tuple(fid for fid in FEATURE_IDS if fid in present)
