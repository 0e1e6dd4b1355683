"""
Configuration management for the sublinear sampling toolkit
"""

import copy
import json
import logging
import os

from utils.rng import RNG_ID

logger = logging.getLogger(__name__)


class Config:
    """Toolkit configuration manager"""

    DEFAULT_CONFIG = {
        # Dense linear algebra
        'linalg': {
            'power_iterations': 20,
            'verifier_iterations': 200,
            'symmetry_tolerance': 1e-10,
            'zero_eigenvalue_tolerance': 1e-9
        },

        # Index sampling
        'sampling': {
            'rng': RNG_ID,
            'abort_factor': 2
        },

        # Trust-region subproblem
        'trs': {
            'secular_tolerance': 1e-10,
            'max_iterations': 200
        },

        # Brute-force references
        'oracles': {
            'als_restarts': 16,
            'als_sweeps': 500,
            'trs_grid': 10000,
            'gd_steps': 20000,
            'jacobi_sweeps': 30,
            'jacobi_tolerance': 1e-12,
            'max_dim': 64
        },

        # Structured + pseudorandom decomposition
        'decomposition': {
            'gamma': 0.3,
            'edge_tolerance': 1e-7
        },

        # Experiment defaults (kernel PCA study)
        'experiment': {
            'k_values': [64, 128, 256, 512, 1024, 2048],
            'seeds': list(range(10)),
            't': 16,
            'sigma_kernel': 1.0,
            'synthetic_n': 4096,
            'synthetic_d': 10
        },

        # Run archive
        'database': {
            'path': 'data/experiments.db'
        }
    }

    def __init__(self, config_path="sampler_config.json"):
        self.config_path = config_path
        self.config = self.load_config()

    def load_config(self):
        """Load configuration from file, falling back to defaults"""
        if os.path.exists(self.config_path):
            try:
                with open(self.config_path, 'r', encoding='utf-8') as f:
                    loaded = json.load(f)
                    # Merge with defaults to handle missing keys
                    return self._merge_configs(self.DEFAULT_CONFIG, loaded)
            except Exception as e:
                logger.warning("Error loading config %s: %s. Using defaults.", self.config_path, e)
        return copy.deepcopy(self.DEFAULT_CONFIG)

    def _merge_configs(self, default, loaded):
        """Recursively merge loaded config with defaults"""
        result = copy.deepcopy(default)
        for key, value in loaded.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._merge_configs(result[key], value)
            else:
                result[key] = value
        return result

    def save_config(self, config=None):
        """Save configuration to file"""
        if config is None:
            config = self.config

        try:
            directory = os.path.dirname(os.path.abspath(self.config_path))
            os.makedirs(directory, exist_ok=True)
            with open(self.config_path, 'w', encoding='utf-8') as f:
                json.dump(config, f, indent=2)
        except Exception as e:
            logger.warning("Error saving config: %s", e)

    def get(self, *keys, default=None):
        """Get a configuration value by key path"""
        value = self.config
        for key in keys:
            if isinstance(value, dict) and key in value:
                value = value[key]
            else:
                return default
        return value

    def set(self, *keys, value, persist=False):
        """Set a configuration value by key path"""
        config = self.config
        for key in keys[:-1]:
            if key not in config:
                config[key] = {}
            config = config[key]
        config[keys[-1]] = value
        if persist:
            self.save_config()

    # Convenience properties
    @property
    def power_iterations(self):
        return int(self.get('linalg', 'power_iterations', default=20))

    @property
    def verifier_iterations(self):
        return int(self.get('linalg', 'verifier_iterations', default=200))

    @property
    def symmetry_tolerance(self):
        return float(self.get('linalg', 'symmetry_tolerance', default=1e-10))

    @property
    def zero_eigenvalue_tolerance(self):
        return float(self.get('linalg', 'zero_eigenvalue_tolerance', default=1e-9))

    @property
    def abort_factor(self):
        return int(self.get('sampling', 'abort_factor', default=2))

    @property
    def secular_tolerance(self):
        return float(self.get('trs', 'secular_tolerance', default=1e-10))

    @property
    def trs_max_iterations(self):
        return int(self.get('trs', 'max_iterations', default=200))

    @property
    def als_restarts(self):
        return int(self.get('oracles', 'als_restarts', default=16))

    @property
    def als_sweeps(self):
        return int(self.get('oracles', 'als_sweeps', default=500))

    @property
    def trs_grid(self):
        return int(self.get('oracles', 'trs_grid', default=10000))

    @property
    def gd_steps(self):
        return int(self.get('oracles', 'gd_steps', default=20000))

    @property
    def jacobi_sweeps(self):
        return int(self.get('oracles', 'jacobi_sweeps', default=30))

    @property
    def jacobi_tolerance(self):
        return float(self.get('oracles', 'jacobi_tolerance', default=1e-12))

    @property
    def oracle_max_dim(self):
        return int(self.get('oracles', 'max_dim', default=64))

    @property
    def gamma(self):
        return float(self.get('decomposition', 'gamma', default=0.3))

    @property
    def edge_tolerance(self):
        return float(self.get('decomposition', 'edge_tolerance', default=1e-7))

    @property
    def rng_id(self):
        return str(self.get('sampling', 'rng', default=RNG_ID))

    @property
    def database_path(self):
        return self.get('database', 'path', default='data/experiments.db')

    def get_experiment_defaults(self):
        """Get a copy of the experiment section"""
        return copy.deepcopy(self.get('experiment', default={}))


# Global config instance
_config = None


def get_config():
    """Get the global config instance"""
    global _config
    if _config is None:
        _config = Config(os.environ.get('SAMPLER_CONFIG', 'sampler_config.json'))
    return _config


def reset_config(config=None):
    """Replace (or drop) the global config instance"""
    global _config
    _config = config
