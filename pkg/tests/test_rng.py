"""Deterministic RNG: schedule correctness, draw discipline, distribution."""

import math
import statistics

from playnn.rng import Rng


def xorshift32_step(x: int) -> int:
    # independent re-evaluation of the shift-xor schedule on 32-bit ints
    x ^= (x << 13) & 0xFFFFFFFF
    x ^= x >> 17
    x ^= (x << 5) & 0xFFFFFFFF
    return x


class StubRng(Rng):
    """Feeds a fixed uniform sequence to code under test."""

    def __init__(self, values):
        super().__init__(1)
        self.values = list(values)

    def next_float(self):
        return self.values.pop(0)


class TestNextFloat:
    def test_first_update_from_seed_one(self):
        # hand-evaluated: 1 -> ^<<13 -> 8193 -> ^>>17 -> 8193 -> ^<<5 -> 270369
        rng = Rng(1)
        value = rng.next_float()
        assert rng.state == 270369
        assert value == 270369 / 2**32

    def test_matches_reference_schedule(self):
        rng = Rng(123456789)
        x = 123456789
        for _ in range(1000):
            x = xorshift32_step(x)
            assert rng.next_float() == x / 2**32

    def test_seed_zero_remaps(self):
        a = Rng(0)
        b = Rng(0x9E3779B9)
        assert [a.next_float() for _ in range(100)] == [b.next_float() for _ in range(100)]

    def test_output_range_and_nonzero_state(self):
        rng = Rng(77)
        for _ in range(10_000):
            v = rng.next_float()
            assert 0.0 <= v < 1.0
            assert rng.state != 0

    def test_reproducibility(self):
        a = Rng(2024)
        b = Rng(2024)
        assert [a.next_float() for _ in range(10_000)] == [b.next_float() for _ in range(10_000)]

    def test_seeds_wider_than_32_bits_are_masked(self):
        assert Rng(2**32 + 5).state == Rng(5).state


class TestUniform:
    def test_single_draw_and_bounds(self):
        rng = Rng(9)
        reference = Rng(9)
        u = reference.next_float()
        assert rng.uniform(-0.5, 0.5) == -0.5 + u
        assert rng.state == reference.state


class TestNextGaussian:
    def test_cosine_branch_formula(self):
        # u1=0.5, u2=0 -> sqrt(-2 ln 0.5) * cos 0
        rng = StubRng([0.5, 0.0])
        expected = math.sqrt(-2.0 * math.log(0.5))
        value = rng.next_gaussian(0.0, 1.0)
        assert value == expected
        assert abs(value - 1.17741) < 1e-5

    def test_zero_stddev_returns_mean_and_consumes_two_draws(self):
        rng = StubRng([0.25, 0.75])
        assert rng.next_gaussian(3.5, 0.0) == 3.5
        assert rng.values == []

    def test_u1_clamped_away_from_zero(self):
        rng = StubRng([0.0, 0.0])
        value = rng.next_gaussian(0.0, 1.0)
        assert math.isfinite(value)

    def test_mean_and_spread(self):
        rng = Rng(7)
        draws = [rng.next_gaussian(0.0, 1.0) for _ in range(100_000)]
        assert -0.02 <= statistics.fmean(draws) <= 0.02
        assert 0.98 <= statistics.pstdev(draws) <= 1.02

    def test_mean_shift_and_scale(self):
        rng = Rng(11)
        draws = [rng.next_gaussian(2.0, 0.5) for _ in range(50_000)]
        assert abs(statistics.fmean(draws) - 2.0) < 0.02
        assert abs(statistics.pstdev(draws) - 0.5) < 0.02
