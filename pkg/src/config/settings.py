"""
Configuration settings for the monomial joint-reduction workbench
"""

import os

# Rings
DEFAULT_VARIABLES = ("x", "y", "z")
MAX_DIMENSION = 3

# Verification bounds
DEFAULT_BOUND = int(os.getenv("JR_DEFAULT_BOUND", 4))  # "for all n" checked up to this bound
LC_MAX_K = 6  # Diagonal points tried before the origin length must have stabilized

# Hilbert polynomial fitting
FIT_VALIDATION_SPAN = 5  # Validate on [offset, offset + span]^arity
MAX_STABILIZATION_OFFSET = 8

# Newton polyhedra
FACET_CANDIDATE_CHUNK = 20000  # Candidate normals validated per numpy batch
INT64_SAFE_LIMIT = 2 ** 20  # Larger coordinates switch arrays to Python integers

# Oracles
ORACLE_POWER_CAP = 6  # x^v in closure(I) is certified by (x^v)^k in I^k for some k <= cap

# Corpus sampling
CORPUS_SEED = int(os.getenv("JR_CORPUS_SEED", 42))
CORPUS_MAX_EXPONENT = 4
CORPUS_EXTRA_GENERATORS = 3  # Mixed generators added on top of the pure powers
CORPUS_MAX_ATTEMPTS = 400
CORPUS_GOOD_JR_BOUND = 2

# Filtration cache persistence
CACHE_PATH = os.getenv("JR_CACHE_PATH")

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
