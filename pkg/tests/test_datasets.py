"""Dataset generators: determinism, balance, clipping, draw discipline."""

import math

import pytest

from playnn.config import Config
from playnn.datasets import KINDS, Point, generate, generate_with_rng, split
from playnn.nn import Activation, build_network
from playnn.rng import Rng
from playnn.trainer import accuracy, init_state, run_epoch

CLASSIFICATION_KINDS = ("gauss", "xor", "circle", "spiral")


class CountingRng(Rng):
    def __init__(self, seed):
        super().__init__(seed)
        self.draws = 0

    def next_float(self):
        self.draws += 1
        return super().next_float()


class TestGenerate:
    def test_deterministic(self):
        for kind in KINDS:
            assert generate(kind, 100, 25, 7) == generate(kind, 100, 25, 7)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            generate("moons", 100, 0, 1)
        with pytest.raises(ValueError):
            generate("gauss", 101, 0, 1)
        with pytest.raises(ValueError):
            generate("gauss", 0, 0, 1)

    def test_label_balance_exact(self):
        for kind in CLASSIFICATION_KINDS:
            for noise in (0, 25, 50):
                points = generate(kind, 200, noise, 3)
                positives = sum(1 for p in points if p.label == 1.0)
                negatives = sum(1 for p in points if p.label == -1.0)
                assert (positives, negatives) == (100, 100)

    def test_coordinates_clipped_for_every_noise_level(self):
        for kind in KINDS:
            for noise in (0, 25, 50):
                for p in generate(kind, 200, noise, 11):
                    assert -1.0 <= p.x1 <= 1.0
                    assert -1.0 <= p.x2 <= 1.0

    def test_spiral_starts_at_origin(self):
        points = generate("spiral", 100, 0, 5)
        assert points[0] == Point(0.0, 0.0, 1.0)
        assert points[50].label == -1.0  # second arm, phase pi

    def test_circle_radius_bands(self):
        points = generate("circle", 400, 0, 9)
        for p in points:
            radius = math.hypot(p.x1, p.x2)
            if p.label == 1.0:
                assert radius <= 0.4
            else:
                assert radius >= 0.75

    def test_gauss_class_means(self):
        points = generate("gauss", 500, 0, 42)
        for label, center in ((1.0, 0.5), (-1.0, -0.5)):
            cluster = [p for p in points if p.label == label]
            mean_x1 = sum(p.x1 for p in cluster) / len(cluster)
            mean_x2 = sum(p.x2 for p in cluster) / len(cluster)
            assert abs(mean_x1 - center) < 0.05
            assert abs(mean_x2 - center) < 0.05

    def test_xor_labels_match_quadrant_product(self):
        for p in generate("xor", 200, 0, 13):
            assert p.label == (1.0 if p.x1 * p.x2 > 0 else -1.0)
            # padding pushes points off both axes
            assert abs(p.x1) >= 0.05
            assert abs(p.x2) >= 0.05

    def test_regression_labels_in_range(self):
        for kind in ("plane", "gaussreg"):
            for p in generate(kind, 200, 10, 17):
                assert -1.0 <= p.label <= 1.0

    def test_plane_label_formula(self):
        for p in generate("plane", 100, 0, 21):
            assert p.label == (p.x1 + p.x2) / 2.0

    def test_noise_never_perturbs_labels(self):
        clean = generate("circle", 200, 0, 31)
        noisy = generate("circle", 200, 50, 31)
        assert [p.label for p in clean] == [p.label for p in noisy]


class TestDrawDiscipline:
    """Total draw count is a pure function of (kind, n): noise draws are
    consumed even at noise level 0."""

    EXPECTED_PER_POINT = {"gauss": 6, "xor": 4, "circle": 4,
                          "spiral": 2, "plane": 4, "gaussreg": 4}

    def test_draw_counts(self):
        n = 100
        for kind, per_point in self.EXPECTED_PER_POINT.items():
            counts = set()
            for noise in (0, 25, 50):
                rng = CountingRng(1)
                generate_with_rng(kind, n, noise, rng)
                counts.add(rng.draws)
            assert counts == {per_point * n}


class TestSplit:
    def test_even_split(self):
        points = generate("gauss", 500, 0, 1)
        train, test = split(points, 50, Rng(2))
        assert len(train) == 250 and len(test) == 250

    def test_ceiling_rule(self):
        points = generate("gauss", 10, 0, 1)
        train, test = split(points, 90, Rng(2))
        assert len(train) == 9 and len(test) == 1

    def test_partition_is_exact(self):
        points = generate("xor", 100, 0, 3)
        train, test = split(points, 37, Rng(4))
        assert sorted(train + test) == list(range(100))

    def test_deterministic(self):
        points = generate("gauss", 100, 0, 1)
        assert split(points, 50, Rng(8)) == split(points, 50, Rng(8))

    def test_consumes_n_minus_one_draws(self):
        points = generate("gauss", 100, 0, 1)
        rng = CountingRng(8)
        split(points, 50, rng)
        assert rng.draws == 99

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            split([], 50, Rng(1))


class TestSeparabilityOrdering:
    def test_reference_linear_classifier_prefers_gauss_over_spiral(self):
        """The same linear model trained identically separates the blobs far
        better than the interleaved spirals."""
        scores = {}
        for kind in ("gauss", "spiral"):
            config = Config(dataset=kind, hidden_layer_sizes=(),
                            enabled_features=("x1", "x2"), seed=42)
            state = init_state(config)
            for _ in range(30):
                run_epoch(state, config)
            scores[kind] = accuracy(state.net, state.dataset.train_points())
        assert scores["gauss"] > scores["spiral"]
