"""Samples unit responses over the input square and colorizes them.

A heatmap grid holds a unit's raw activation at every cell center of the
square [-1, 1]^2, row 0 at the top (x2 = +1), column 0 at the left
(x1 = -1).  Sampling runs on a cache-free evaluation path that performs
bit-for-bit the same arithmetic as Network.forward, so grid values equal
forward outputs exactly; tests assert that equality.

Colorization maps sign to hue (orange negative, blue positive, light gray
zero) with linear interpolation per channel, clipping values into [-1, 1]
first so unbounded relu/linear activations saturate instead of escaping
the palette.
"""

from dataclasses import dataclass

from . import features
from .nn import Network, unit_sum

THUMBNAIL_RESOLUTION = 10
PROJECTION_RESOLUTION = 100

COLOR_NEGATIVE = (245, 147, 34)
COLOR_ZERO = (232, 232, 232)
COLOR_POSITIVE = (8, 119, 189)


@dataclass
class HeatmapGrid:
    resolution: int
    values: list[list[float]]  # row-major, raw (unclipped) responses


def cell_center(resolution: int, row: int, col: int) -> tuple[float, float]:
    """(x1, x2) coordinates of a grid cell's center."""
    x1 = -1.0 + 2.0 * (col + 0.5) / resolution
    x2 = 1.0 - 2.0 * (row + 0.5) / resolution
    return x1, x2


def evaluate_units(net: Network, x1: float, x2: float) -> dict[str, float]:
    """Cache-free forward pass: every unit's activation at a point.

    Does not touch the network's activation caches, so it is safe to call
    while a training loop owns them and from parallel samplers.
    """
    outputs: dict[str, float] = {}
    for node in net.layers[0]:
        outputs[node.id] = features.feature_value(node.id, x1, x2)
    for index in range(1, len(net.layers)):
        act = net.activation_for_layer(index)
        for node in net.layers[index]:
            total = unit_sum(
                [node.bias]
                + [link.weight * outputs[link.source.id] for link in node.input_links])
            outputs[node.id] = act.value(total)
    return outputs


def sample_unit(net: Network, unit_id: str, resolution: int) -> HeatmapGrid:
    """Sample one unit's response over the square at the given resolution."""
    if not net.has_node(unit_id):
        raise KeyError(f"unknown unit id {unit_id!r}")
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")
    values = []
    for row in range(resolution):
        values.append([
            evaluate_units(net, *cell_center(resolution, row, col))[unit_id]
            for col in range(resolution)])
    return HeatmapGrid(resolution, values)


def sample_all_units(net: Network, resolution: int) -> dict[str, HeatmapGrid]:
    """Sample every unit in one sweep (one network evaluation per cell)."""
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")
    unit_ids = net.unit_ids()
    grids = {uid: HeatmapGrid(resolution, []) for uid in unit_ids}
    for row in range(resolution):
        rows = {uid: [] for uid in unit_ids}
        for col in range(resolution):
            outputs = evaluate_units(net, *cell_center(resolution, row, col))
            for uid in unit_ids:
                rows[uid].append(outputs[uid])
        for uid in unit_ids:
            grids[uid].values.append(rows[uid])
    return grids


def _channel(zero: int, anchor: int, t: float) -> int:
    value = zero + (anchor - zero) * t
    return int(value + 0.5)  # round half-up; channels are never negative


def color_of(v: float) -> tuple[int, int, int]:
    """Map one response value to an RGB triple."""
    if v != v:  # nan renders neutral
        v = 0.0
    v = -1.0 if v < -1.0 else 1.0 if v > 1.0 else v
    anchor = COLOR_POSITIVE if v >= 0.0 else COLOR_NEGATIVE
    t = v if v >= 0.0 else -v
    return (
        _channel(COLOR_ZERO[0], anchor[0], t),
        _channel(COLOR_ZERO[1], anchor[1], t),
        _channel(COLOR_ZERO[2], anchor[2], t),
    )


def colorize(grid: HeatmapGrid) -> list[list[tuple[int, int, int]]]:
    """RGB triples for every cell of a grid."""
    return [[color_of(v) for v in row] for row in grid.values]


def to_ppm(pixels) -> str:
    """Render colorized pixels as plain PPM (P3), one pixel row per line."""
    height = len(pixels)
    width = len(pixels[0]) if height else 0
    lines = ["P3", f"{width} {height}", "255"]
    for row in pixels:
        lines.append(" ".join(f"{r} {g} {b}" for r, g, b in row))
    return "\n".join(lines) + "\n"
