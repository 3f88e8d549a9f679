"""Feature palette: evaluation, canonical ordering, range guarantees."""

import pytest

from playnn.features import (FEATURE_IDS, canonical_order, feature_value,
                             feature_vector)


class TestFeatureVector:
    def test_product_feature(self):
        assert feature_vector(("x1x2",), 0.5, -0.5) == [-0.25]

    def test_sine_at_zero(self):
        assert feature_vector(("sinx1",), 0.0, 0.7) == [0.0]

    def test_all_seven_at_corner(self):
        values = feature_vector(FEATURE_IDS, 1.0, 1.0)
        assert values[:5] == [1.0, 1.0, 1.0, 1.0, 1.0]
        assert abs(values[5]) < 1e-12  # sin(pi)
        assert abs(values[6]) < 1e-12

    def test_evaluation_order_is_the_given_order(self):
        assert feature_vector(("x1", "x1sq"), -0.5, 0.0) == [-0.5, 0.25]

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            feature_vector((), 0.0, 0.0)

    def test_range_on_grid_sweep(self):
        """Every feature maps [-1,1]^2 into [-1,1], checked at 101x101."""
        steps = [-1.0 + 2.0 * k / 100 for k in range(101)]
        for fid in FEATURE_IDS:
            for x1 in steps:
                for x2 in steps:
                    assert -1.0 <= feature_value(fid, x1, x2) <= 1.0

    def test_pure(self):
        assert feature_vector(FEATURE_IDS, 0.3, -0.8) == feature_vector(
            FEATURE_IDS, 0.3, -0.8)


class TestCanonicalOrder:
    def test_sorts_into_palette_order(self):
        assert canonical_order(["sinx2", "x1", "x1x2"]) == ("x1", "x1x2", "sinx2")

    def test_deduplicates(self):
        assert canonical_order(["x2", "x2", "x1"]) == ("x1", "x2")

    def test_drops_unknown_ids(self):
        assert canonical_order(["x1", "cosx1"]) == ("x1",)
