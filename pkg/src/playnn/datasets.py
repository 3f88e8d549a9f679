"""Synthetic 2-D dataset generators and the train/test split.

Four classification shapes (two gaussian blobs, xor quadrants, concentric
circle/ring, interleaved spirals) and two regression surfaces (tilted plane,
signed gaussian bumps).  All coordinates live in the square [-1, 1]^2;
classification labels are exactly +1/-1 and exactly balanced.

Every generator is a pure function of (kind, n, noise, seed).  Noise is a
per-coordinate uniform jitter applied in a second pass; jitter draws are
consumed even at noise 0 so the total draw count depends only on (kind, n).
Labels are never perturbed.
"""

import math
from dataclasses import dataclass, field

from .rng import Rng

KINDS = ("gauss", "xor", "circle", "spiral", "plane", "gaussreg")
REGRESSION_KINDS = ("plane", "gaussreg")

DEFAULT_N = 500

_GAUSS_SIGMA = 0.17
_XOR_PADDING = 0.05
_CIRCLE_INNER_RADIUS = 0.4
_CIRCLE_OUTER_BAND = (0.75, 1.0)
_SPIRAL_TURNS = 1.75
_GAUSSREG_SIGMA = 0.3

# Quadrant sign pairs cycled per point so labels alternate +1, -1, ... and
# even n comes out exactly balanced.
_XOR_QUADRANTS = ((1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0))


@dataclass
class Point:
    x1: float
    x2: float
    label: float


@dataclass
class Dataset:
    kind: str
    points: list[Point]
    train_indices: list[int] = field(default_factory=list)
    test_indices: list[int] = field(default_factory=list)

    def train_points(self) -> list[Point]:
        return [self.points[i] for i in self.train_indices]

    def test_points(self) -> list[Point]:
        return [self.points[i] for i in self.test_indices]


def _clip(v: float) -> float:
    return -1.0 if v < -1.0 else 1.0 if v > 1.0 else v


def generate(kind: str, n: int, noise: int, seed: int) -> list[Point]:
    """Generate `n` points of the named kind with `noise` percent jitter."""
    return generate_with_rng(kind, n, noise, Rng(seed))


def generate_with_rng(kind: str, n: int, noise: int, rng: Rng) -> list[Point]:
    """Like :func:`generate` but drawing from a caller-owned stream.

    Draw counts per kind: gauss 4n, xor 2n, circle 2n, spiral 0, plane 2n,
    gaussreg 2n -- plus 2n jitter draws, always.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown dataset kind {kind!r}")
    if n < 2 or n % 2 != 0:
        raise ValueError(f"n must be even and >= 2, got {n}")

    if kind == "gauss":
        points = _gen_gauss(n, rng)
    elif kind == "xor":
        points = _gen_xor(n, rng)
    elif kind == "circle":
        points = _gen_circle(n, rng)
    elif kind == "spiral":
        points = _gen_spiral(n)
    elif kind == "plane":
        points = _gen_plane(n, rng)
    else:
        points = _gen_gaussreg(n, rng)

    jitter = noise / 100.0
    for p in points:
        p.x1 = _clip(p.x1 + rng.uniform(-jitter, jitter))
        p.x2 = _clip(p.x2 + rng.uniform(-jitter, jitter))
    return points


def _gen_gauss(n: int, rng: Rng) -> list[Point]:
    points = []
    for center, label in (((0.5, 0.5), 1.0), ((-0.5, -0.5), -1.0)):
        for _ in range(n // 2):
            x1 = rng.next_gaussian(center[0], _GAUSS_SIGMA)
            x2 = rng.next_gaussian(center[1], _GAUSS_SIGMA)
            points.append(Point(x1, x2, label))
    return points


def _gen_xor(n: int, rng: Rng) -> list[Point]:
    # Coordinates are drawn as magnitudes and placed in a cycling quadrant,
    # then pushed off the axes by the padding; the label is the sign of
    # x1*x2, which the padding keeps strict.
    points = []
    for i in range(n):
        s1, s2 = _XOR_QUADRANTS[i % 4]
        x1 = _clip(s1 * (rng.next_float() + _XOR_PADDING))
        x2 = _clip(s2 * (rng.next_float() + _XOR_PADDING))
        points.append(Point(x1, x2, 1.0 if x1 * x2 > 0.0 else -1.0))
    return points


def _gen_circle(n: int, rng: Rng) -> list[Point]:
    points = []
    for _ in range(n // 2):
        r = rng.uniform(0.0, _CIRCLE_INNER_RADIUS)
        theta = rng.uniform(0.0, 2.0 * math.pi)
        points.append(Point(r * math.cos(theta), r * math.sin(theta), 1.0))
    for _ in range(n // 2):
        r = rng.uniform(*_CIRCLE_OUTER_BAND)
        theta = rng.uniform(0.0, 2.0 * math.pi)
        points.append(Point(r * math.cos(theta), r * math.sin(theta), -1.0))
    return points


def _gen_spiral(n: int) -> list[Point]:
    # Deterministic arms; only the jitter pass consumes draws.
    points = []
    m = n // 2
    for phase, label in ((0.0, 1.0), (math.pi, -1.0)):
        for i in range(m):
            r = i / m
            theta = _SPIRAL_TURNS * (i / m) * 2.0 * math.pi + phase
            points.append(Point(r * math.sin(theta), r * math.cos(theta), label))
    return points


def _gen_plane(n: int, rng: Rng) -> list[Point]:
    points = []
    for _ in range(n):
        x1 = rng.uniform(-1.0, 1.0)
        x2 = rng.uniform(-1.0, 1.0)
        points.append(Point(x1, x2, _clip((x1 + x2) / 2.0)))
    return points


def _gen_gaussreg(n: int, rng: Rng) -> list[Point]:
    denom = 2.0 * _GAUSSREG_SIGMA * _GAUSSREG_SIGMA
    points = []
    for _ in range(n):
        x1 = rng.uniform(-1.0, 1.0)
        x2 = rng.uniform(-1.0, 1.0)
        d_pos = (x1 - 0.5) ** 2 + (x2 - 0.5) ** 2
        d_neg = (x1 + 0.5) ** 2 + (x2 + 0.5) ** 2
        label = _clip(math.exp(-d_pos / denom) - math.exp(-d_neg / denom))
        points.append(Point(x1, x2, label))
    return points


def split(points, train_percent: int, rng: Rng) -> tuple[list[int], list[int]]:
    """Shuffle indices (Fisher-Yates, n-1 draws) and cut off the first
    ceil(n * train_percent / 100) as the training set."""
    if not points:
        raise ValueError("cannot split an empty point list")
    n = len(points)
    indices = list(range(n))
    for i in range(n - 1, 0, -1):
        j = int(rng.next_float() * (i + 1))
        indices[i], indices[j] = indices[j], indices[i]
    train_size = -(-n * train_percent // 100)
    return indices[:train_size], indices[train_size:]
