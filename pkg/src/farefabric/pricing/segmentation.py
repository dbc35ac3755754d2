"""Customer segmentation with deterministic k-means.

Lloyd's algorithm with farthest-point seeding: the first centroid is the point
with the largest L2 norm, each following centroid the point farthest from all
chosen so far, ties always breaking toward the lowest index. Runs are fully
reproducible; no RNG is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from ..errors import InvalidInput
from ..money import Money

MAX_ITERATIONS = 100


@dataclass(frozen=True)
class Segmentation:
    centroids: tuple[tuple[float, ...], ...]
    assignments: tuple[int, ...]
    sse: float
    iterations: int


def _validate_points(points: Sequence[Sequence[float]]) -> np.ndarray:
    if len(points) == 0:
        raise InvalidInput("segmentation needs at least one point")
    width = len(points[0])
    if width == 0:
        raise InvalidInput("points must have at least one feature")
    for i, point in enumerate(points):
        if len(point) != width:
            raise InvalidInput(f"point {i} has {len(point)} features, expected {width}")
    data = np.asarray(points, dtype=float)
    if not np.all(np.isfinite(data)):
        raise InvalidInput("points must be finite")
    return data


def _farthest_point_seeds(data: np.ndarray, k: int) -> list[int]:
    norms = np.linalg.norm(data, axis=1)
    seeds = [int(np.argmax(norms))]  # argmax takes the first (lowest index) on ties
    min_dist = np.linalg.norm(data - data[seeds[0]], axis=1)
    while len(seeds) < k:
        nxt = int(np.argmax(min_dist))
        seeds.append(nxt)
        min_dist = np.minimum(min_dist, np.linalg.norm(data - data[nxt], axis=1))
    return seeds


def _assign(data: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    # squared distances, shape (n, k); argmin takes the lowest centroid index on ties
    dists = ((data[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
    return np.argmin(dists, axis=1)


def segment_customers(points: Sequence[Sequence[float]], k: int, seed: int = 0) -> Segmentation:
    """Cluster feature rows into k segments.

    Farthest-point seeding makes the run deterministic, so the seed does not
    influence the result; it is accepted so callers can treat this like any
    other seeded component.
    """
    del seed
    data = _validate_points(points)
    n = data.shape[0]
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    if k > n:
        raise InvalidInput(f"k={k} exceeds number of points ({n})")

    centroids = data[_farthest_point_seeds(data, k)].copy()
    assignments = _assign(data, centroids)
    iterations = 0
    for _ in range(MAX_ITERATIONS):
        iterations += 1
        for j in range(k):
            members = data[assignments == j]
            if len(members) > 0:
                centroids[j] = members.mean(axis=0)
            # empty cluster keeps its previous centroid
        new_assignments = _assign(data, centroids)
        if np.array_equal(new_assignments, assignments):
            break
        assignments = new_assignments

    sse = float(((data - centroids[assignments]) ** 2).sum())
    return Segmentation(
        centroids=tuple(tuple(float(v) for v in c) for c in centroids),
        assignments=tuple(int(a) for a in assignments),
        sse=sse,
        iterations=iterations,
    )


def assign_segment(segmentation: Segmentation, point: Sequence[float]) -> int:
    """Index of the nearest centroid; ties break toward the lowest index."""
    width = len(segmentation.centroids[0])
    if len(point) != width:
        raise InvalidInput(f"point has {len(point)} features, expected {width}")
    data = np.asarray(point, dtype=float)
    if not np.all(np.isfinite(data)):
        raise InvalidInput("point must be finite")
    centroids = np.asarray(segmentation.centroids, dtype=float)
    dists = ((centroids - data) ** 2).sum(axis=1)
    return int(np.argmin(dists))


def segment_fare(base_fare: Money, multipliers: Mapping[int, float], segment: int) -> Money:
    """Base fare scaled by the segment's multiplier."""
    if segment not in multipliers:
        raise InvalidInput(f"unknown segment {segment}; known: {sorted(multipliers)}")
    mult = multipliers[segment]
    if mult <= 0:
        raise InvalidInput(f"segment multiplier must be positive, got {mult}")
    return Money.of(float(base_fare.amount) * mult, base_fare.currency)
