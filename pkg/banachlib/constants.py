from math import pi

TWO_PI = 2 * pi

# Acceptance tolerances
NORM_TOLERANCE = 1e-12
AXIOM_TOLERANCE = 1e-10
ORTHOGONALITY_TEST_TOLERANCE = 1e-9
CONE_ACCEPTANCE_TOLERANCE = 1e-7
LOWER_BOUND_SLACK = 1e-3
UPPER_BOUND_TOLERANCE = 1e-7
LEMMA_TOLERANCE = 1e-8
SATURATION_TOLERANCE = 1e-6
ATTAINMENT_TOLERANCE = 1e-8
HEXAGON_EQUALITY_TOLERANCE = 1e-4

# Degenerate hexagons have |det(p, q)| below this
HEXAGON_MIN_DETERMINANT = 1e-9

# Golden-section and bisection
LINE_SEARCH_RELATIVE_TOLERANCE = 1e-13
BISECTION_DEPTH = 60

# Search defaults
DEFAULT_GRID_N = 2048
MIN_GRID_N = 64
MIN_MATE_GRID_N = 8
DEFAULT_REFINE_ITERS = 40
DEFAULT_TORUS_N = 512
DEFAULT_CONE_SAMPLES = 17
DEFAULT_T_POINTS = 96
DEFAULT_T_MIN = 1e-3
DEFAULT_T_MAX = 1e3
CNJB_SCALE_POINTS = 33
CNJB_SCALE_MIN = 1e-2
CNJB_SCALE_MAX = 1e2
ISOSCELES_SCAN_POINTS = 256

# Skewness one-sided limit
SKEWNESS_STEP = 1e-7
SKEWNESS_CHECK_STEP = 1e-6

# Symmetric pair search retries with a doubled grid
SYMMETRIC_PAIR_ATTEMPTS = 4

THREADS_ENV_VAR = 'BANACH_THREADS'
UTF8ENCODING = 'utf-8'

# Verification
RADON_TOLERANCE = 1e-6
SKEWNESS_LAMBDAS = (0.1, 0.25, 0.5, 0.75, 1.0)
BATTERY_TS = (0.25, 0.5, 1.0, 2.0, 4.0)
RANDOM_POLYGON_MIN_VERTICES = 6
RANDOM_POLYGON_MAX_VERTICES = 16
LEMMA_MAX_P = 8.0

# Command line
ROBERTS_LAMBDA_MAX = 4.0
ROBERTS_LAMBDA_POINTS = 801
DEFAULT_LEMMA_SAMPLES = 2000
