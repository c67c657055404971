"""
Settings for the maxent workbench.

Every tunable is read from the environment (a local .env file is honoured),
so experiments can be pinned without touching the code.
"""

import os
from dotenv import load_dotenv


# Setting env variables
load_dotenv()


DEBUG = os.getenv('DEBUG', False) == "True"

LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')


# Tolerances
EXACT_TOL = float(os.getenv('MAXENT_EXACT_TOL', '1e-12'))  # identities from exact arithmetic
FLOAT_TOL = float(os.getenv('MAXENT_FLOAT_TOL', '1e-9'))  # eigen and LP derived quantities
CLAMP_TOL = EXACT_TOL  # negative entries above -CLAMP_TOL are clamped on deserialization


# Caps
MAX_DIM = int(os.getenv('MAXENT_MAX_DIM', '4096'))
MAX_VERTICES = int(os.getenv('MAXENT_MAX_VERTICES', '100000'))
MAX_DEN = int(os.getenv('MAXENT_MAX_DEN', '1000'))


# Randomness
DEFAULT_SEED = int(os.getenv('MAXENT_SEED', '0'))


# Simultaneous diagonalization
SIMDIAG_RETRIES = 5
SIMDIAG_TOL = 1e-8


# Local polytope membership
MEMBERSHIP_TOL = float(os.getenv('MAXENT_MEMBERSHIP_TOL', '1e-8'))  # reconstruction error of inside verdicts
SEPARATION_MARGIN = 1e-9  # certificate value must beat the classical bound by this much
