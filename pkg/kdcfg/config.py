"""Shared runtime configuration."""

import os

from dotenv import load_dotenv

load_dotenv()

# Parse trees explored by certificate searches and parse --all.
MAX_TREES = int(os.getenv("KDCFG_MAX_TREES", "32"))

LOG_LEVEL = os.getenv("KDCFG_LOG_LEVEL", "WARNING")

# Guard on collapse steps during the Ogden search.
OGDEN_MAX_STEPS = int(os.getenv("KDCFG_OGDEN_MAX_STEPS", "256"))

MAX_LEN = int(os.getenv("KDCFG_MAX_LEN", "8"))
