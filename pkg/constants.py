# config
APP_NAME = "QReader"
APP_VERSION = "1.0"
PREFS_FILENAME = "prefs.json"
MAX_WORKERS = 6

# fock space
DEFAULT_CUTOFF = 64
NORM_TOL = 1e-12

# device validation
UNITARY_TOL = 1e-10
DET_TOL = 1e-8

# |overlap| drift above 1 up to this is clamped, beyond it is rejected
OVERLAP_HARD_TOL = 1e-9

# design
DEGENERATE_TOL = 1e-12
ROOT_BRACKET = (1.0, 1.5)  # tan t = 2t
ROOT_XTOL = 1e-14
SATURATION_TOL = 1e-9
TIE_RTOL = 1e-12

# oracle
DEFAULT_SEED = 0xC0FFEE
DEFAULT_SAMPLES = 100_000
D_MAX_MARGIN = 4
ORACLE_GRID_STEP = 1e-3
ORACLE_MAX_SUPPORT = 5
ORACLE_TOL = 1e-6

# tradeoff
DEFAULT_POINTS = 200
DEFAULT_Q_MIN = 1e-6
DEFAULT_Q_MAX = 0.49
CSV_HEADER = ["q", "K", "n_star", "alpha", "energy_optimal", "energy_coherent_homodyne"]

BASELINES = {
    "homodyne": "energy_coherent_homodyne",
    "helstrom": "energy_coherent_helstrom",
}

MODES = ("ambiguous", "unambiguous")

# q grids for verify when none is given
VERIFY_Q_GRID = {
    "ambiguous": [0.0, 1e-3, 0.01, 0.1, 0.25],
    "unambiguous": [0.0, 0.01, 0.1, 0.25, 0.5],
}
