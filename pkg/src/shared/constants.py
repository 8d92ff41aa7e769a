"""Shared constants across the application."""

# Output format versions
REPORT_SCHEMA_VERSION = "schubert-cone-report/1"
RENDER_FORMAT_VERSION = "schubert-cone-render/1"

# Term order families with a certified initial-term property
ORDER_FAMILIES = (1, 2, 3, 4)
LEX_FAMILIES = (1, 2)  # homogeneous lexicographic

# Process exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

# Output formats
OUTPUT_FORMATS = ("json", "table", "ascii", "svg")
RENDER_FORMATS = ("ascii", "svg")

# Provenance labels attached to every reported number
PROVENANCE_INCLUSION_EXCLUSION = "inclusion_exclusion"
PROVENANCE_DIRECT = "direct"
PROVENANCE_STANDARD_MONOMIALS = "standard_monomials"
PROVENANCE_PATHS = "paths"
PROVENANCE_FACE_SEARCH = "face_search"

# Default limits
DEFAULT_MAX_DEGREE = 6
MAX_SAMPLES = 1000
