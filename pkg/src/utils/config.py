# Configuration settings for the Bost-Connes lifting toolkit

# Witt vector / Burnside settings
DEFAULT_TRUNCATION_LEVEL = 24  # CLI default: divisors of 24

# Expectation value settings
EULER_MACLAURIN_ORDER = 4  # Bernoulli corrections B2..B8
EULER_MACLAURIN_TOLERANCE = 1e-12  # First omitted term must fall below this
EULER_MACLAURIN_MIN_TERMS = 10
EULER_MACLAURIN_MAX_TERMS = 1_000_000
COMPLEX_OUTPUT_DIGITS = 12

# Scissors / assembler settings
FINITE_SET_SIZE_FACTOR = 2  # Objects of the level-N assembler have size <= 2N

# Self-test settings
DEFAULT_SEED = 20170
SELFTEST_RELATION_RANGE = 12  # n, m <= 12 for generator relations
SELFTEST_MAX_DENOMINATOR = 24
SELFTEST_MAX_COEFFICIENT = 9
SELFTEST_RANDOM_ELEMENTS = 1000
SELFTEST_ASSOCIATIVITY_TRIPLES = 500
SELFTEST_HOMOMORPHISM_PAIRS = 200
SELFTEST_ORBIT_RANGE = 12
SELFTEST_DYNAMICAL_RANGE = 6  # n <= 6 for the Phi_n(f) and f^n checks
SELFTEST_WITT_TRUNCATION = 24
SELFTEST_WITT_ENDOMORPHISM_LEVEL = 60  # F_n, V_n checks need n | N for every n <= 6
SELFTEST_SCISSORS_LEVEL = 12
SELFTEST_ENDOFUNCTOR_LEVEL = 8
SELFTEST_ENDOFUNCTOR_RANGE = 4
SELFTEST_DIRECT_SUM_TERMS = 1_000_000
SELFTEST_TIME_BUDGET = 60.0  # seconds
SELFTEST_WORKERS = 4

# CLI exit codes
EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_SCHEMA_ERROR = 2
EXIT_DOMAIN_ERROR = 3

# Logging settings
LOG_FORMAT = "[%(levelname)s] %(message)s"
LOG_LEVEL = "WARNING"
