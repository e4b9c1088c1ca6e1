"""Default configuration values for svetlichny_core."""

DEFAULT_SETTINGS = {
    # Size guards
    "dimension_guard": 2 ** 21,     # amplitudes in the oracle state vector
    "search_guard": 14,             # largest n for the 2^(2n) sign search
    "max_parties": 16,              # largest n for analytic evaluation

    # Execution
    "threads": 0,                   # 0 = available parallelism
    "max_reported_assignments": 64,

    # Output
    "output_format": "table",
    "results_dir": "./results",
    "log_file": "logs/svetlichny.log",
}

VALID_OUTPUT_FORMATS = ["json", "csv", "table"]

INTEGER_SETTINGS = [
    "dimension_guard",
    "search_guard",
    "max_parties",
    "threads",
    "max_reported_assignments",
]

# Environment variable mapping
ENV_MAPPING = {
    "SVETLICHNY_DIMENSION_GUARD": "dimension_guard",
    "SVETLICHNY_SEARCH_GUARD": "search_guard",
    "SVETLICHNY_THREADS": "threads",
    "SVETLICHNY_OUTPUT_FORMAT": "output_format",
    "SVETLICHNY_RESULTS_DIR": "results_dir",
    "SVETLICHNY_LOG_FILE": "log_file",
}
