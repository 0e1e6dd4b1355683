"""
Utils package
Configuration, errors, RNG contract and console helpers
"""

from .config import Config, get_config, reset_config
from .rng import RNG_ID, make_rng

__all__ = ['Config', 'get_config', 'reset_config', 'RNG_ID', 'make_rng']
