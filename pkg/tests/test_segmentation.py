import random

import numpy as np
import pytest

from farefabric.errors import InvalidInput
from farefabric.money import Money
from farefabric.pricing import (
    Segmentation,
    assign_segment,
    segment_customers,
    segment_fare,
)

from oracles import clustered_dataset, exhaustive_min_sse, partition_of, sse_of_assignment

PROFILE_POINTS = [[10.0, 1.0, 0.0], [30.0, 5.0, 1.0], [5.0, 2.0, 0.0]]


def test_known_dataset_recovers_optimal_partition():
    result = segment_customers(PROFILE_POINTS, k=2)
    assert partition_of(result.assignments) == {frozenset({0, 2}), frozenset({1})}
    best_sse, _ = exhaustive_min_sse(PROFILE_POINTS, 2)
    assert result.sse <= best_sse + 1e-9


def test_assignments_are_nearest_centroid():
    rng = random.Random(7)
    points = [[rng.uniform(0, 10) for _ in range(3)] for _ in range(12)]
    result = segment_customers(points, k=3)
    centroids = np.asarray(result.centroids)
    for point, label in zip(points, result.assignments):
        dists = np.linalg.norm(centroids - np.asarray(point), axis=1)
        assert dists[label] <= dists.min() + 1e-12


def test_centroids_are_cluster_means():
    rng = random.Random(8)
    points = [[rng.uniform(0, 10) for _ in range(2)] for _ in range(15)]
    result = segment_customers(points, k=3)
    for j in range(3):
        members = [p for p, a in zip(points, result.assignments) if a == j]
        if members:
            mean = np.mean(np.asarray(members), axis=0)
            assert np.allclose(result.centroids[j], mean, atol=1e-12)


def test_sse_matches_assignment():
    result = segment_customers(PROFILE_POINTS, k=2)
    assert abs(result.sse - sse_of_assignment(PROFILE_POINTS, result.assignments)) <= 1e-9


def test_near_optimal_on_small_instances():
    rng = random.Random(123)
    for _ in range(50):
        n = rng.randint(2, 8)
        d = rng.randint(1, 3)
        k = rng.randint(1, min(3, n))
        points = clustered_dataset(rng, n, d, k)
        result = segment_customers(points, k=k)
        best_sse, _ = exhaustive_min_sse(points, k)
        assert result.sse <= 1.05 * best_sse + 1e-9


def test_deterministic_across_calls_and_seeds():
    first = segment_customers(PROFILE_POINTS, k=2, seed=0)
    second = segment_customers(PROFILE_POINTS, k=2, seed=999)
    assert first.assignments == second.assignments
    assert first.centroids == second.centroids
    assert first.sse == second.sse


def test_k_equals_n_gives_zero_sse():
    result = segment_customers(PROFILE_POINTS, k=3)
    assert result.sse <= 1e-12
    assert sorted(result.assignments) == [0, 1, 2]


def test_duplicate_points_do_not_crash():
    points = [[1.0, 1.0]] * 4 + [[5.0, 5.0]]
    result = segment_customers(points, k=2)
    assert partition_of(result.assignments) == {frozenset({0, 1, 2, 3}), frozenset({4})}


def test_new_customer_lands_in_high_spend_segment():
    seg = segment_customers(PROFILE_POINTS, k=2)
    target = seg.assignments[1]  # the singleton cluster of [30, 5, 1]
    assert assign_segment(seg, [20.0, 2.0, 1.0]) == target


def test_assign_segment_picks_nearest_lowest_index():
    seg = Segmentation(
        centroids=((0.0, 0.0), (4.0, 0.0)), assignments=(0, 1), sse=0.0, iterations=1
    )
    assert assign_segment(seg, (1.0, 0.0)) == 0
    assert assign_segment(seg, (3.0, 0.0)) == 1
    assert assign_segment(seg, (2.0, 0.0)) == 0  # tie -> lowest index
    with pytest.raises(InvalidInput):
        assign_segment(seg, (1.0, 2.0, 3.0))


def test_invalid_k_rejected():
    with pytest.raises(InvalidInput):
        segment_customers(PROFILE_POINTS, k=0)
    with pytest.raises(InvalidInput):
        segment_customers(PROFILE_POINTS, k=4)
    with pytest.raises(InvalidInput):
        segment_customers([], k=1)


def test_ragged_points_rejected():
    with pytest.raises(InvalidInput):
        segment_customers([[1.0, 2.0], [3.0]], k=1)


def test_segment_fare_applies_multiplier():
    fare = segment_fare(Money.of(100), {0: 1.2, 1: 0.9}, 1)
    assert fare == Money.of(90)
    assert segment_fare(Money.of(100), {0: 1.2, 1: 0.9}, 0) == Money.of(120)


def test_segment_fare_unknown_segment_rejected():
    with pytest.raises(InvalidInput):
        segment_fare(Money.of(100), {0: 1.2}, 3)
