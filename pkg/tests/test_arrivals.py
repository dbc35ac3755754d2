import math
import random

import pytest

from farefabric.errors import InvalidInput
from farefabric.money import Money
from farefabric.sim import (
    ArrivalProfile,
    CustomerParams,
    WtpParams,
    build_customer_stream,
    generate_arrivals,
    sample_wtp,
    satisfaction_score,
)

FLAT = ArrivalProfile(duration_hours=100.0, segments=((0.0, 100.0),))


class TestArrivalProfile:
    def test_rate_lookup_is_piecewise_constant(self):
        profile = ArrivalProfile(
            duration_hours=24.0, segments=((0.0, 1.0), (8.0, 5.0), (20.0, 0.5))
        )
        assert profile.rate_at(0.0) == 1.0
        assert profile.rate_at(7.99) == 1.0
        assert profile.rate_at(8.0) == 5.0
        assert profile.rate_at(19.0) == 5.0
        assert profile.rate_at(23.0) == 0.5
        assert profile.max_rate == 5.0

    def test_validation(self):
        with pytest.raises(InvalidInput):
            ArrivalProfile(duration_hours=0.0, segments=((0.0, 1.0),))
        with pytest.raises(InvalidInput):
            ArrivalProfile(duration_hours=10.0, segments=())
        with pytest.raises(InvalidInput):
            ArrivalProfile(duration_hours=10.0, segments=((1.0, 1.0),))
        with pytest.raises(InvalidInput):
            ArrivalProfile(duration_hours=10.0, segments=((0.0, 1.0), (0.5, -2.0)))
        with pytest.raises(InvalidInput):
            ArrivalProfile(duration_hours=10.0, segments=((0.0, 1.0), (12.0, 2.0)))


class TestGenerateArrivals:
    def test_zero_rate_profile_is_empty(self):
        profile = ArrivalProfile(duration_hours=10.0, segments=((0.0, 0.0),))
        assert generate_arrivals(profile, random.Random(1)) == []

    def test_same_seed_identical_lists(self):
        first = generate_arrivals(FLAT, random.Random(42))
        second = generate_arrivals(FLAT, random.Random(42))
        assert first == second

    def test_times_strictly_inside_duration_and_sorted(self):
        times = generate_arrivals(FLAT, random.Random(3))
        assert all(0.0 < t < FLAT.duration_hours for t in times)
        assert times == sorted(times)

    def test_constant_rate_count_near_lambda_t(self):
        # lambda*T = 10,000; a single run stays within 3 standard deviations
        count = len(generate_arrivals(FLAT, random.Random(0)))
        assert abs(count - 10_000) <= 300

    def test_mean_count_over_20_seeds_within_2_percent(self):
        counts = [len(generate_arrivals(FLAT, random.Random(seed))) for seed in range(20)]
        mean = sum(counts) / len(counts)
        assert abs(mean - 10_000) / 10_000 <= 0.02

    def test_thinning_respects_rate_shape(self):
        profile = ArrivalProfile(
            duration_hours=200.0, segments=((0.0, 10.0), (100.0, 40.0))
        )
        times = generate_arrivals(profile, random.Random(5))
        low = sum(1 for t in times if t < 100.0)
        high = sum(1 for t in times if t >= 100.0)
        assert high / low == pytest.approx(4.0, rel=0.15)


class TestSampleWtp:
    def test_sigma_zero_is_exp_mu(self):
        params = WtpParams(mu=math.log(170.0), sigma=0.0)
        rng = random.Random(1)
        assert all(sample_wtp(params, rng) == Money.of(170) for _ in range(10))

    def test_same_stream_same_sequence(self):
        params = WtpParams(mu=5.0, sigma=0.4)
        seq_a = [sample_wtp(params, random.Random(9)) for _ in range(1)]
        seq_b = [sample_wtp(params, random.Random(9)) for _ in range(1)]
        assert seq_a == seq_b

    def test_draw_mean_matches_lognormal_formula(self):
        params = WtpParams(mu=math.log(170.0), sigma=0.35)
        rng = random.Random(123)
        n = 10_000
        mean = sum(float(sample_wtp(params, rng)) for _ in range(n)) / n
        expected = 170.0 * math.exp(0.35**2 / 2)
        assert abs(mean - expected) / expected < 0.05

    def test_draws_always_positive_money(self):
        params = WtpParams(mu=-10.0, sigma=0.1)  # tiny prices round up to a cent
        rng = random.Random(2)
        assert all(sample_wtp(params, rng).amount > 0 for _ in range(100))

    def test_negative_sigma_rejected(self):
        with pytest.raises(InvalidInput):
            WtpParams(mu=1.0, sigma=-0.5)


class TestSatisfactionScore:
    def test_exact_wtp_scores_zero(self):
        assert satisfaction_score(Money.of(100), Money.of(100)) == 0.0

    def test_half_price_scores_half(self):
        assert satisfaction_score(Money.of(50), Money.of(100)) == 0.5

    def test_price_above_wtp_is_no_sale(self):
        assert satisfaction_score(Money.of(120), Money.of(100)) is None

    def test_score_always_in_unit_interval(self):
        rng = random.Random(8)
        for _ in range(200):
            price = Money.of(rng.randint(1, 300))
            wtp = Money.of(rng.randint(1, 300))
            score = satisfaction_score(price, wtp)
            if score is not None:
                assert 0.0 <= score <= 1.0
                assert price <= wtp


class TestCustomerStream:
    def test_stream_is_deterministic(self):
        params = (FLAT, WtpParams(mu=5.0, sigma=0.3), CustomerParams(), ("LIS-BCN",))
        assert build_customer_stream(*params, seed=7) == build_customer_stream(*params, seed=7)

    def test_different_seeds_differ(self):
        params = (FLAT, WtpParams(mu=5.0, sigma=0.3), CustomerParams(), ("LIS-BCN",))
        assert build_customer_stream(*params, seed=7) != build_customer_stream(*params, seed=8)

    def test_draw_fields_are_consistent(self):
        stream = build_customer_stream(
            ArrivalProfile(duration_hours=72.0, segments=((0.0, 2.0),)),
            WtpParams(mu=5.0, sigma=0.3),
            CustomerParams(),
            ("LIS-BCN", "OPO-LYS"),
            seed=11,
        )
        assert stream
        for draw in stream:
            assert 0.0 < draw.arrival_hour < 72.0
            assert draw.route in ("LIS-BCN", "OPO-LYS")
            assert draw.wtp.amount > 0
            assert draw.lead_days == max(0, int((72.0 - draw.arrival_hour) // 24.0))
            assert draw.trip_frequency >= 0
            assert isinstance(draw.loyalty, bool)

    def test_no_routes_rejected(self):
        with pytest.raises(InvalidInput):
            build_customer_stream(
                FLAT, WtpParams(mu=5.0, sigma=0.3), CustomerParams(), (), seed=1
            )
