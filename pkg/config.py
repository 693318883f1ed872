"""
Configuration and logging for conic_nets.

Values come from the environment, optionally seeded from a .env file
next to this module. CLI flags override them.
"""

import logging
import os
import sys
import time
from pathlib import Path

# Load .env file if present (explicit environment variables win)
env_file = Path(__file__).parent / '.env'
if env_file.exists():
    with open(env_file) as f:
        for line in f:
            line = line.strip()
            if line and not line.startswith('#') and '=' in line:
                key, value = line.split('=', 1)
                os.environ.setdefault(key.strip(), value.strip())

# =============================================================================
# CONFIGURATION
# =============================================================================

DEFAULT_PRIME = int(os.environ.get('CONIC_NETS_PRIME', '5'))
SPOT_CHECK_PRIME = int(os.environ.get('CONIC_NETS_SPOT_PRIME', '13'))

# Orbit enumeration is only feasible over F_5
ORACLE_PRIME = 5

REPORT_DIR = os.environ.get('CONIC_NETS_REPORT_DIR', 'reports')
LOG_FILE = os.environ.get(
    'CONIC_NETS_LOG_FILE',
    os.path.join(os.path.dirname(os.path.abspath(__file__)), 'conic_nets.log'),
)

SWEEP_WORKERS = int(os.environ.get('CONIC_NETS_WORKERS', '1'))
ORBIT_CHUNK = int(os.environ.get('CONIC_NETS_ORBIT_CHUNK', '50000'))
# Census sweeps sample orbit members; representative checks walk whole orbits
ORBIT_MEMBER_CHECKS = int(os.environ.get('CONIC_NETS_ORBIT_MEMBERS', '25'))
SAMPLE_ORBIT_CHECKS = int(os.environ.get('CONIC_NETS_SAMPLE_ORBITS', '3'))
SAMPLE_SEED = int(os.environ.get('CONIC_NETS_SAMPLE_SEED', '1'))


# =============================================================================
# LOGGING
# =============================================================================

logger = logging.getLogger('conic_nets')
logger.setLevel(logging.INFO)


def setup_logging(log_file=None):
    """Attach file + stdout handlers once. Called by the CLI entry point."""
    if logger.handlers:
        return logger
    fmt = logging.Formatter('[%(asctime)s] %(message)s', datefmt='%Y-%m-%d %H:%M:%S')
    fmt.converter = time.gmtime  # UTC timestamps
    fh = logging.FileHandler(log_file or LOG_FILE)
    fh.setFormatter(fmt)
    logger.addHandler(fh)
    sh = logging.StreamHandler(sys.stdout)
    sh.setFormatter(fmt)
    logger.addHandler(sh)
    return logger


def log_message(message):
    logger.info(message)
