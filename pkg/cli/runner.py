"""
Experiment runner: loads the input, computes the full-matrix reference
once, then runs the configured estimator for every (k, seed) pair.
"""

import logging
import os
import time
from typing import Callable, List, Optional

import numpy as np

from cli.kernels import rbf_gram, synthesize_gaussian
from cli.loaders import load_matrix, load_points, load_problem
from cli.reports import emit_report, summarize
from decomp import decompose, write_report
from linalg import power_iteration_sigma1, top_singular_values
from models.records import ExperimentConfig, ResultRecord
from quadmin import approximate_min, approximate_min_ball, normalized_ball_optimum, normalized_optimum
from svest import estimate_sigma1, estimate_sigma_t, estimate_top_spectrum
from utils.errors import SamplerError, SamplingAborted
from utils.log import echo, status, warn

logger = logging.getLogger(__name__)


class ExperimentInput:
    """The loaded operand of a run: a matrix or a quadratic problem"""

    def __init__(self, descriptor, matrix=None, problem=None):
        self.descriptor = descriptor
        self.matrix = matrix
        self.problem = problem

    @property
    def shape(self):
        if self.problem is not None:
            return self.problem.n, self.problem.n
        return self.matrix.shape


def load_input(config: ExperimentConfig) -> ExperimentInput:
    if config.command in ('quadmin', 'quadmin-ball'):
        fmt = None if config.input_format == 'points' else config.input_format
        problem = load_problem(config.input_path, fmt)
        return ExperimentInput(os.path.basename(config.input_path), problem=problem)

    if config.command == 'kpca-experiment' and config.input_path is None:
        points = synthesize_gaussian(config.synthetic_n, config.synthetic_d, config.data_seed)
        descriptor = f"gaussian(n={config.synthetic_n},d={config.synthetic_d},seed={config.data_seed})"
        return ExperimentInput(f"{descriptor}|rbf(sigma={config.sigma_kernel})",
                               matrix=rbf_gram(points, config.sigma_kernel))

    descriptor = os.path.basename(config.input_path)
    if config.input_format == 'points' or config.command == 'kpca-experiment':
        matrix = rbf_gram(load_points(config.input_path), config.sigma_kernel)
        return ExperimentInput(f"{descriptor}|rbf(sigma={config.sigma_kernel})", matrix=matrix)
    return ExperimentInput(descriptor, matrix=load_matrix(config.input_path, config.input_format))


def _reference(config: ExperimentConfig, data: ExperimentInput):
    """Full-problem reference values, indexed by t (1-based) for spectra"""
    command = config.command
    if command == 'quadmin':
        return normalized_optimum(data.problem)
    if command == 'quadmin-ball':
        return normalized_ball_optimum(data.problem, config.radius)
    if command == 'sv-top':
        return power_iteration_sigma1(data.matrix, iterations=config.iterations)
    return top_singular_values(data.matrix, config.t, iterations=config.iterations)


def _trial(config: ExperimentConfig, data: ExperimentInput, k: int, seed: int):
    """Run one estimator call and return [(t, estimate), ...]"""
    command = config.command
    if command == 'quadmin':
        return [(0, approximate_min(data.problem, k, seed).z_tilde_normalized)]
    if command == 'quadmin-ball':
        return [(0, approximate_min_ball(data.problem, config.radius, k, seed).z_tilde_normalized)]
    if command == 'sv-top':
        result = estimate_sigma1(data.matrix, k, seed, iterations=config.iterations,
                                 symmetric_sample=config.kpca)
        return [(1, result.estimate)]
    if command == 'sv-t':
        result = estimate_sigma_t(data.matrix, config.t, k, seed, method=config.method,
                                  symmetric_sample=config.kpca, iterations=config.iterations)
        return [(config.t, result.estimate)]
    estimates = estimate_top_spectrum(data.matrix, config.t, k, seed, method=config.method,
                                      symmetric_sample=True, iterations=config.iterations)
    return [(e.t, e.estimate) for e in estimates]


def _errors(config: ExperimentConfig, reference, t: int, estimate: float):
    """(reference, abs_error, rel_error) for one estimate.

    Spectral errors are relative to the largest reference value; quadratic
    minima use a max(1, |reference|) denominator.
    """
    if config.command in ('quadmin', 'quadmin-ball'):
        ref = float(reference)
        if not np.isfinite(ref) or not np.isfinite(estimate):
            return ref, None, None
        abs_error = abs(estimate - ref)
        return ref, abs_error, abs_error / max(1.0, abs(ref))
    if config.command == 'sv-top':
        ref, top = float(reference), float(reference)
    else:
        ref, top = float(reference[t - 1]), float(reference[0])
    abs_error = abs(estimate - ref)
    return ref, abs_error, (abs_error / top if top > 0 else None)


def _run_decompose(config: ExperimentConfig, data: ExperimentInput) -> List[ResultRecord]:
    start = time.perf_counter()
    D = decompose(data.matrix, config.gamma, iterations=config.iterations)
    elapsed = time.perf_counter() - start
    status(D.diagnostics.psd_ok, f"||A^psd||_2 = {D.diagnostics.psd_spectral_norm:.6g} "
                                 f"<= {D.diagnostics.psd_bound:.6g}")
    status(D.diagnostics.str_ok, f"||A^str||_max = {D.diagnostics.str_max_norm:.6g} "
                                 f"<= {D.diagnostics.str_bound:.6g}")
    echo('DECOMPOSE', f"kept_rank={D.kept_rank} blocks={D.diagnostics.block_count}")
    if config.output_path:
        root, _ = os.path.splitext(config.output_path)
        write_report(D, root + '.decomposition.json')
    n, m = data.shape
    return [ResultRecord(command=config.command, input_descriptor=data.descriptor, n=n, m=m, k=0, t=D.kept_rank,
                         seed=0, estimate=D.diagnostics.psd_spectral_norm, reference=None, abs_error=None,
                         rel_error=None, wall_time_seconds=elapsed, aborted=False, rng_id=config.rng_id)]


def run_experiment(config: ExperimentConfig,
                   on_record: Optional[Callable[[ResultRecord], None]] = None) -> List[ResultRecord]:
    """All (k, seed) trials of one configured command.

    Trials run sequentially in (k, seed) order. Aborted samples become
    records with aborted=True. If a trial fails with anything other than an
    abort, the records gathered so far are written before re-raising.
    """
    config.validate()
    echo('LOAD', f"{config.command}: {config.input_path or 'synthetic input'}")
    data = load_input(config)
    n, m = data.shape

    if config.command == 'decompose':
        records = _run_decompose(config, data)
        if config.output_path:
            emit_report(records, config.output_path)
        return records

    start = time.perf_counter()
    reference = _reference(config, data)
    reference_time = time.perf_counter() - start
    echo('REFERENCE', f"computed in {reference_time:.3f}s")

    records: List[ResultRecord] = []
    aborted_t = 0 if config.command in ('quadmin', 'quadmin-ball') else config.t
    try:
        for k in config.k_values:
            for seed in config.seeds:
                start = time.perf_counter()
                try:
                    estimates = _trial(config, data, k, seed)
                    aborted = False
                except SamplingAborted as e:
                    logger.info("trial k=%d seed=%d aborted: %s", k, seed, e)
                    estimates, aborted = [(aborted_t, None)], True
                elapsed = time.perf_counter() - start

                for t, estimate in estimates:
                    if aborted:
                        ref, abs_error, rel_error = None, None, None
                    else:
                        ref, abs_error, rel_error = _errors(config, reference, t, estimate)
                    record = ResultRecord(
                        command=config.command, input_descriptor=data.descriptor, n=n, m=m, k=k, t=t,
                        seed=seed, estimate=estimate, reference=ref, abs_error=abs_error,
                        rel_error=rel_error, wall_time_seconds=elapsed, aborted=aborted,
                        rng_id=config.rng_id, reference_time_seconds=reference_time,
                    )
                    records.append(record)
                    if on_record is not None:
                        on_record(record)
                echo('TRIAL', f"k={k} seed={seed} " + ("aborted" if aborted else f"{elapsed:.4f}s"))
    except SamplerError:
        if config.output_path and records:
            warn(f"run failed; flushing {len(records)} partial records")
            emit_report(records, config.output_path)
        raise

    for row in summarize(records):
        echo('SUMMARY', f"k={row['k']} mean_rel_error={row['mean_rel_error']:.4g} "
                        f"sd={row['sd_rel_error']:.4g} mean_time={row['mean_time']:.4g}s "
                        f"aborted={row['aborted']}/{row['trials']}")
    if config.output_path:
        emit_report(records, config.output_path)
        echo('REPORT', config.output_path)
    return records


def abort_fraction(records: List[ResultRecord]) -> float:
    trials = {(r.k, r.seed) for r in records}
    aborted = {(r.k, r.seed) for r in records if r.aborted}
    return len(aborted) / len(trials) if trials else 0.0
