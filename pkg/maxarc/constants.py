MIN_FIELD_DEGREE = 2
MAX_FIELD_DEGREE = 16
PAPER_EXAMPLE_MODULUS = 37

DEFAULT_ENUMERATION_BUDGET = 2 ** 24
BUDGET_ENV_VAR = "MAXARC_BUDGET"
SUBFIELD_SUBCODE_MAX_EXPONENT = 24
REPORT_SUBCODE_MAX_EXPONENT = 20
LINE_PROFILE_MAX_DEGREE = 6
GENERAL_POSITION_MAX_POINTS = 300
GEOMETRY_FALLBACK_MAX_POINTS = 65
MAX_SEARCH_WEIGHT = 6
SEARCH_TABLE_MAX_ROWS = 26
BLOCK_MAX_ENTRIES = 2 ** 22
REPORT_DISTRIBUTION_MAX_LENGTH = 2048

DENNISTON_SWEEP_DEFAULT_M = (4, 5, 6, 7, 8)
PG3_SWEEP_DEFAULT_M = (4, 5, 6, 7, 8, 9, 10)
PG3_THEOREM_MIN_M = 5

# Pencil parameter standing for the line x = 0.
LAMBDA_INFINITY = "inf"

BUDGET_EXCEEDED_MSG = "{} requires {} enumeration steps, budget is {}."
FIELD_MISMATCH_MSG = "Elements belong to different fields: {} and {}."
REDUCIBLE_MODULUS_MSG = "Modulus {} is reducible over GF(2)."
MODULUS_DEGREE_MSG = "Modulus {} does not have degree {}."
FIELD_DEGREE_MSG = "Extension degree {} is outside {}..{}."
DEPENDENT_BASIS_MSG = "Elements {} are not linearly independent over GF(2)."
DENNISTON_S_RANGE_MSG = "Subgroup exponent s={} is outside 1 <= s < m={}."
PG3_GCD_MSG = "gcd(m={}, h={}) = {} but the PG(3) arc requires gcd 1."
BETA_INADMISSIBLE_MSG = "x^2 + {}x + 1 is reducible over GF(2^{})."
THEOREM_DISABLED_MSG = "s={} is outside the theorem hypothesis 1 < s < m={}; verdicts disabled."
PG3_THEOREM_DISABLED_MSG = "m={} is below {}; the extended-dual theorem is not asserted."
DEFAULT_APPLIED_MSG = "{} not given; using default {}."
AUGMENT_DEGENERATE_MSG = "The all-ones word already lies in the code; dimension stays {}."
NOT_ENUMERATED = "not enumerated"

DENNISTON_COLUMN_ORDER = (
    "columns: (u, 1, 0) for lambda in H* in span order; then for each y in integer order the h-1 points "
    "(u*(y + sqrt(beta)*sqrt(y) + 1), y, 1); then (1, 0, 0); u = lambda^(-q/2)"
)
PG3_COLUMN_ORDER = "columns: (x^(2^h+1), x^(2^h), x, 1) for x in integer order; then (1, 0, 0, 0)"
SUBFIELD_BASIS_NOTE = "subfield codes expand over the polynomial basis; equivalence also checked over {}"
PG3_SUBFIELD_OPTIMALITY_NOTE = (
    "pg3 subfield code [33, 11, 12] is quoted as distance-optimal; not certified by the sphere-packing bound"
)
PG3_DUAL_OPTIMALITY_NOTE = (
    "pg3 subfield dual [33, 22, 5] is quoted as almost distance-optimal; recorded, not certified"
)
