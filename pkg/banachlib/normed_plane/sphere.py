from functools import lru_cache

import numpy as np

from banachlib.exceptions import ParameterError
from banachlib.normed_plane.models import UnitVector, Vector2
from banachlib.normed_plane.norms import HexagonNorm, NormSpec, PolygonNorm
from banachlib.utils import normalize_angle


def directions(thetas: np.ndarray) -> np.ndarray:
    thetas = np.asarray(thetas, dtype=float)
    return np.stack([np.cos(thetas), np.sin(thetas)], axis=-1)


def unit_points(spec: NormSpec, thetas: np.ndarray) -> np.ndarray:
    """Radial projection of (cos θ, sin θ) onto the unit sphere, for an array of angles."""
    rays = directions(thetas)
    return rays / spec.evaluate(rays)[..., None]


def unit_point(spec: NormSpec, theta: float) -> UnitVector:
    angle = normalize_angle(theta)
    return UnitVector(theta=angle, point=Vector2.of(unit_points(spec, np.array([angle]))[0]))


def angle_of(points: np.ndarray) -> np.ndarray:
    """Angles in [0, 2π) of an array of non-zero points."""
    points = np.asarray(points, dtype=float)
    return np.mod(np.arctan2(points[..., 1], points[..., 0]), 2 * np.pi)


def normalize(spec: NormSpec, points: np.ndarray) -> np.ndarray:
    return points / spec.evaluate(points)[..., None]


@lru_cache(maxsize=None)
def vertex_angles(spec: NormSpec) -> np.ndarray:
    """Sorted angles of the sphere vertices, empty for smooth norms."""
    vertices = spec.vertices()
    if not vertices:
        return np.zeros(0)
    return np.unique(angle_of(np.array([v.as_list() for v in vertices])))


def angle_grid(spec: NormSpec, grid_n: int) -> np.ndarray:
    """Uniform grid of grid_n angles on [0, 2π) merged with the sphere vertex angles."""
    uniform = np.arange(grid_n) * (2 * np.pi / grid_n)
    return np.union1d(uniform, vertex_angles(spec))


def hexagon_from_linfl1() -> HexagonNorm:
    """The linf-l1 unit sphere as the hexagon ±p, ±(p+q), ±q with p=(0,1), q=(1,0)."""
    return HexagonNorm(p=Vector2(x1=0, x2=1), q=Vector2(x1=1, x2=0))


def random_polygon(rng: np.random.Generator, n_vertices: int) -> PolygonNorm:
    """Seeded random centrally symmetric convex polygon with n_vertices vertices.

    Half of the vertices are drawn at random angles on [0, π) with radii in [0.85, 1], the
    other half mirrors them. Draws that are not strictly convex are rejected.
    """
    if n_vertices < 4 or n_vertices % 2:
        raise ParameterError(f'A symmetric polygon needs an even count >= 4, got {n_vertices}')
    half = n_vertices // 2
    while True:
        angles = np.sort(rng.uniform(0, np.pi, size=half))
        radii = rng.uniform(0.85, 1.0, size=half)
        points = directions(angles) * radii[:, None]
        if rng.random() < 0.5:
            # Random shear and stretch, orientation preserving
            linear = np.array([[1.0, rng.uniform(-0.5, 0.5)], [0.0, rng.uniform(0.5, 1.5)]])
            points = points @ linear.T
        full = np.concatenate([points, -points])
        if _strictly_convex(full):
            return PolygonNorm(vertices=tuple(Vector2.of(p) for p in full))


def _strictly_convex(points: np.ndarray) -> bool:
    order = np.argsort(angle_of(points), kind='stable')
    ordered = points[order]
    edges = np.roll(ordered, -1, axis=0) - ordered
    following = np.roll(edges, -1, axis=0)
    turns = edges[:, 0] * following[:, 1] - edges[:, 1] * following[:, 0]
    return bool(turns.min() > 1e-6)

