from math import sqrt

from banachlib.geometric_constants import SearchOpts
from banachlib.normed_plane import (
    HexagonNorm,
    LinfL1Norm,
    LpNorm,
    PolygonNorm,
    TruncatedNorm,
    Vector2,
    hexagon_from_linfl1,
)

L1 = LpNorm(p=1)
L2 = LpNorm(p=2)
L3 = LpNorm(p=3)
LINF = LpNorm(p=float('inf'))
LINF_L1 = LinfL1Norm()
TRUNCATED = TruncatedNorm()
HEXAGON = hexagon_from_linfl1()
SKEWED_HEXAGON = HexagonNorm(p=Vector2(x1=0.5, x2=1), q=Vector2(x1=1, x2=-0.25))
SQUARE_POLYGON = PolygonNorm(
    vertices=tuple(Vector2(x1=a, x2=b) for a, b in [(1, 0), (0, 1), (-1, 0), (0, -1)])
)

D_INF_SQUARE = 2 * (sqrt(2) - 1)
MODULUS_L2 = 1 - sqrt(3) / 2
# x = (1, 2/3), y = (-1/3, 2/3)
D_INF_HEXAGON = 8 / 9

# Coarse grids keep the suite fast, polygonal norms are exact on any grid
FAST_OPTS = SearchOpts(grid_n=256, torus_n=128, refine_iters=30, t_grid=(0.25, 0.5, 1.0, 2.0))
