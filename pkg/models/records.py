"""
Experiment configuration, result and oracle report models
"""

import math
from dataclasses import asdict, dataclass, field, fields
from typing import List, Optional

from utils.errors import ConfigError
from utils.rng import RNG_ID

COMMANDS = ('quadmin', 'quadmin-ball', 'sv-top', 'sv-t', 'decompose', 'kpca-experiment')
INPUT_FORMATS = ('csv', 'bin', 'points')


@dataclass(frozen=True)
class OracleReport:
    name: str
    reference_value: float
    candidate_value: float

    @property
    def abs_error(self) -> float:
        return abs(self.reference_value - self.candidate_value)

    @property
    def rel_error(self) -> float:
        return self.abs_error / max(1.0, abs(self.reference_value))


@dataclass
class ExperimentConfig:
    command: str
    input_path: Optional[str] = None
    input_format: Optional[str] = None
    k_values: List[int] = field(default_factory=lambda: [64])
    t: int = 1
    gamma: float = 0.3
    radius: float = 1.0
    seeds: List[int] = field(default_factory=lambda: [0])
    sigma_kernel: float = 1.0
    output_path: Optional[str] = None
    rng_id: str = RNG_ID
    kpca: bool = False
    method: str = 'svd'
    iterations: Optional[int] = None
    synthetic_n: int = 4096
    synthetic_d: int = 10
    data_seed: int = 0

    def validate(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}; expected one of {', '.join(COMMANDS)}")
        if self.input_format is not None and self.input_format not in INPUT_FORMATS:
            raise ConfigError(f"unknown input format {self.input_format!r}")
        if not self.k_values or any(k < 1 for k in self.k_values):
            raise ConfigError("k_values must be a nonempty list of counts >= 1")
        if not self.seeds:
            raise ConfigError("seeds must be nonempty")
        if self.t < 1:
            raise ConfigError("t must be >= 1")
        if self.rng_id != RNG_ID:
            raise ConfigError(f"rng {self.rng_id!r} is not available; this build provides {RNG_ID}")
        if self.method not in ('svd', 'power'):
            raise ConfigError(f"unknown spectral method {self.method!r}")
        if self.iterations is not None and self.iterations < 1:
            raise ConfigError(f"iterations must be >= 1, got {self.iterations}")
        if self.command != 'kpca-experiment' and self.input_path is None:
            raise ConfigError(f"command {self.command!r} needs an input file")
        return self


@dataclass
class ResultRecord:
    command: str
    input_descriptor: str
    n: int
    m: int
    k: int
    t: int
    seed: int
    estimate: Optional[float]
    reference: Optional[float]
    abs_error: Optional[float]
    rel_error: Optional[float]
    wall_time_seconds: float
    aborted: bool
    rng_id: str = RNG_ID
    reference_time_seconds: Optional[float] = None

    def to_dict(self):
        record = asdict(self)
        # JSON has no inf/nan
        for key in ('estimate', 'reference', 'abs_error', 'rel_error'):
            value = record[key]
            if value is not None and not math.isfinite(value):
                record[key] = repr(float(value))
        return record

    @classmethod
    def from_dict(cls, data):
        known = {f.name for f in fields(cls)}
        values = {key: value for key, value in data.items() if key in known}
        for key in ('estimate', 'reference', 'abs_error', 'rel_error'):
            if isinstance(values.get(key), str):
                values[key] = float(values[key])
        return cls(**values)
