"""Planar primitives shared by the dynamics engines and the bounds module.

Only what the simulators and the convergence analysis consume: half-plane
occupancy tests, strictly convex hulls, hull corner angles, and the minimal
enclosing disc. Coordinates are float64 throughout; angles are radians.
"""

import math
import random
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

# Containment slack for the enclosing-disc support tests; multiplicative so
# it scales with the constellation diameter.
_DISC_EPS = 1.0 + 1e-14

# Fixed shuffle seed keeps min_enclosing_disc deterministic while preserving
# the expected-linear behavior of the randomized incremental construction.
_DISC_SHUFFLE_SEED = 0x5EED


class Vec2(NamedTuple):
    """Planar point or direction (length units)."""

    x: float
    y: float


class Disc(NamedTuple):
    """Circle given by center and radius, radius >= 0."""

    center: Vec2
    radius: float


@dataclass(frozen=True)
class Hull:
    """Strictly convex hull: counter-clockwise vertices plus source indices."""

    vertices: np.ndarray  # (m, 2) float64, CCW order
    indices: np.ndarray  # (m,) int, positions of the vertices in the input


def as_points(points) -> np.ndarray:
    """Coerce a point sequence to a validated (n, 2) float64 array.

    Accepts anything array-like: a list of (x, y) pairs, a list of Vec2, or
    an ndarray. Raises ValueError on empty input, wrong shape, or non-finite
    coordinates.
    """
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1 and arr.shape == (2,):
        arr = arr.reshape(1, 2)
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] == 0:
        raise ValueError(f"expected a non-empty (n, 2) point array, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("points contain NaN or infinite coordinates")
    return arr


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> Hull:
    """Strictly convex hull of the points, vertices in CCW order.

    Collinear boundary points are dropped so every remaining vertex is a
    strict corner. Degenerate inputs yield 1-vertex (all coincident) or
    2-vertex (all collinear) hulls. Monotone chain, O(n log n).
    """
    pts = as_points(points)
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    # Dedupe exact coincidences, keeping the first index in sort order.
    sorted_pts = pts[order]
    keep = np.ones(len(order), dtype=bool)
    keep[1:] = np.any(sorted_pts[1:] != sorted_pts[:-1], axis=1)
    cand = [(tuple(sorted_pts[i]), int(order[i])) for i in np.nonzero(keep)[0]]

    if len(cand) == 1:
        p, idx = cand[0]
        return Hull(np.array([p]), np.array([idx]))

    def half(chain_input):
        chain: list[tuple[tuple[float, float], int]] = []
        for p, idx in chain_input:
            while len(chain) >= 2 and _cross(chain[-2][0], chain[-1][0], p) <= 0.0:
                chain.pop()
            chain.append((p, idx))
        return chain[:-1]

    lower = half(cand)
    upper = half(cand[::-1])
    verts = lower + upper
    return Hull(
        np.array([p for p, _ in verts], dtype=float),
        np.array([i for _, i in verts], dtype=int),
    )


def corner_angles(hull: Hull) -> np.ndarray:
    """Interior angle at each hull vertex, radians in (0, pi).

    Computed from exterior turn angles via atan2, so the angle sum matches
    pi * (m - 2) to near machine precision. Requires >= 3 vertices.
    """
    verts = hull.vertices
    m = len(verts)
    if m < 3:
        raise ValueError(f"corner angles need a hull with >= 3 vertices, got {m}")
    edges = np.roll(verts, -1, axis=0) - verts
    prev = np.roll(edges, 1, axis=0)
    turn = np.arctan2(
        prev[:, 0] * edges[:, 1] - prev[:, 1] * edges[:, 0],
        (prev * edges).sum(axis=1),
    )
    return np.pi - turn


def back_halfplane_occupied(i: int, positions, heading) -> bool:
    """True iff some agent j != i lies in the closed half-plane behind agent i.

    The boundary line through agent i counts as occupied (dot product <= 0),
    so coincident agents block each other. `heading` must be a unit vector
    within 1e-12.
    """
    pts = as_points(positions)
    h = np.asarray(heading, dtype=float).reshape(2)
    if abs(math.hypot(h[0], h[1]) - 1.0) > 1e-12:
        raise ValueError("heading must be a unit vector (|norm - 1| <= 1e-12)")
    if not 0 <= i < len(pts):
        raise ValueError(f"agent index {i} out of range for {len(pts)} agents")
    dots = (pts - pts[i]) @ h
    dots[i] = np.inf
    return bool((dots <= 0.0).any())


def min_enclosing_disc(points) -> Disc:
    """Smallest disc containing all points.

    Randomized incremental construction with a fixed shuffle seed: expected
    O(n), deterministic for a given input, supported by at most 3 points.
    """
    pts = [(float(x), float(y)) for x, y in as_points(points)]
    random.Random(_DISC_SHUFFLE_SEED).shuffle(pts)
    disc = None
    for k, p in enumerate(pts):
        if disc is None or not _in_disc(disc, p):
            disc = _disc_with_point(pts[: k + 1], p)
    cx, cy, r = disc
    return Disc(Vec2(cx, cy), r)


def _in_disc(disc, p) -> bool:
    return math.hypot(p[0] - disc[0], p[1] - disc[1]) <= disc[2] * _DISC_EPS


def _disc_with_point(pts, p):
    disc = (p[0], p[1], 0.0)
    for k, q in enumerate(pts):
        if not _in_disc(disc, q):
            if disc[2] == 0.0:
                disc = _diameter_disc(p, q)
            else:
                disc = _disc_with_two(pts[: k + 1], p, q)
    return disc


def _disc_with_two(pts, p, q):
    circ = _diameter_disc(p, q)
    left = None
    right = None
    for r in pts:
        if _in_disc(circ, r):
            continue
        side = _cross(p, q, r)
        c = _circumcircle(p, q, r)
        if c is None:
            continue
        if side > 0.0 and (left is None or _cross(p, q, c) > _cross(p, q, left)):
            left = c
        elif side < 0.0 and (right is None or _cross(p, q, c) < _cross(p, q, right)):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left[2] <= right[2] else right


def _diameter_disc(a, b):
    cx = (a[0] + b[0]) / 2.0
    cy = (a[1] + b[1]) / 2.0
    return (cx, cy, max(math.hypot(cx - a[0], cy - a[1]), math.hypot(cx - b[0], cy - b[1])))


def _circumcircle(a, b, c):
    # Shift to the bounding-box midpoint for numerical stability.
    ox = (min(a[0], b[0], c[0]) + max(a[0], b[0], c[0])) / 2.0
    oy = (min(a[1], b[1], c[1]) + max(a[1], b[1], c[1])) / 2.0
    ax, ay = a[0] - ox, a[1] - oy
    bx, by = b[0] - ox, b[1] - oy
    cx, cy = c[0] - ox, c[1] - oy
    d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * 2.0
    if d == 0.0:
        return None
    x = ox + ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    y = oy + ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    r = max(math.hypot(x - a[0], y - a[1]), math.hypot(x - b[0], y - b[1]), math.hypot(x - c[0], y - c[1]))
    return (x, y, r)
