"""
Django settings for heckebasis_project.

There is no web front end and no database: the project exists to host the
`hecke` app, its management commands and its configuration. Every limit below
can be overridden from the environment or a .env file.
"""

from pathlib import Path
from fractions import Fraction
import os
from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv('SECRET_KEY', 'heckebasis-local-only')

DEBUG = os.getenv('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'hecke',
]

DATABASES = {}

USE_TZ = True


# ─── Computation limits ───
# Tensor-space commands grow like d^n words; n = d = 5 is the intended ceiling.
HECKE_MAX_N = int(os.getenv('HECKE_MAX_N', 5))
HECKE_MAX_D = int(os.getenv('HECKE_MAX_D', 5))
# The df report never builds V^n, so it may go further.
HECKE_DF_MAX_N = int(os.getenv('HECKE_DF_MAX_N', 7))

# Threads for independent work items (partitions, report rows)
HECKE_WORKERS = int(os.getenv('HECKE_WORKERS', 4))

# Rational evaluation points for the oracle checks; none is a root of n_{q^2}!
HECKE_SEEDS = [Fraction(s.strip()) for s in os.getenv('HECKE_SEEDS', '2,3,5,7').split(',') if s.strip()]


# ─── Logging ───
# stdout carries the command output, so every log record goes to stderr.
HECKE_LOG_LEVEL = os.getenv('HECKE_LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'hecke': {
            'handlers': ['stderr'],
            'level': HECKE_LOG_LEVEL,
            'propagate': False,
        },
    },
}
