#!/usr/bin/env python3
"""
Sublinear Sampling Toolkit
Command-line entry point

Constant-size random-submatrix estimators for dense matrices:
- quadmin / quadmin-ball: normalized minimum of a quadratic (optionally over a ball)
- sv-top / sv-t: largest and t-th largest singular value
- decompose: structured + pseudorandom decomposition with bound checks
- kpca-experiment: accuracy-vs-k and runtime study on an RBF Gram matrix

Usage:
    python main.py --cmd sv-top --input A.csv --k 64 --k 128 --seeds 0 1 2 --out reports/sv.jsonl
    python main.py --cmd kpca-experiment --n 4096 --d 10 --t 16 --out reports/kpca.jsonl

Exit codes: 0 success, 2 parse/config error, 3 all trials aborted,
4 internal numerical failure.

Requirements:
    - Python 3.9+
    - Required packages: numpy, scipy
"""

import argparse
import logging
import os
import sys

# Ensure project root is in path
PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, PROJECT_ROOT)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ALL_ABORTED = 3
EXIT_NUMERICAL = 4

logger = logging.getLogger("main")


def check_requirements():
    """Check that all requirements are met before starting"""
    errors = []

    if sys.version_info < (3, 9):
        errors.append(f"Python 3.9+ required (you have {sys.version_info.major}.{sys.version_info.minor})")

    try:
        import numpy  # noqa: F401
    except ImportError:
        errors.append("numpy not found - run: pip install numpy")

    try:
        import scipy  # noqa: F401
    except ImportError:
        errors.append("scipy not found - run: pip install scipy")

    return errors


def print_banner():
    """Print application banner"""
    banner = """
╔══════════════════════════════════════════════════════════════╗
║                                                              ║
║              Sublinear Sampling Toolkit                      ║
║                                                              ║
║        constant-size submatrix estimators & experiments      ║
║                                                              ║
╚══════════════════════════════════════════════════════════════╝
"""
    print(banner)


def build_parser():
    from models.records import COMMANDS, INPUT_FORMATS

    parser = argparse.ArgumentParser(
        description="Sampling estimators for quadratic minima, singular values and matrix decompositions")
    parser.add_argument('--cmd', required=True, choices=COMMANDS, help="command to run")
    parser.add_argument('--input', help="input file (matrix, problem or points)")
    parser.add_argument('--format', choices=INPUT_FORMATS,
                        help="input format (sniffed from the file when omitted)")
    parser.add_argument('--k', type=int, action='append', help="sample rate numerator (repeatable)")
    parser.add_argument('--t', type=int, help="singular value index / spectrum depth")
    parser.add_argument('--gamma', type=float, help="decomposition parameter in (0, 1)")
    parser.add_argument('--radius', type=float, default=1.0, help="ball radius for quadmin-ball")
    parser.add_argument('--seeds', type=int, nargs='+', help="trial seeds")
    parser.add_argument('--sigma', type=float, help="RBF kernel bandwidth")
    parser.add_argument('--out', help="report path (line-delimited JSON; a companion .csv is written too)")
    parser.add_argument('--kpca', action='store_true', help="share the row and column sample (S_R = S_C)")
    parser.add_argument('--rng-seed', type=int, default=0, help="seed for synthetic data")
    parser.add_argument('--n', type=int, help="synthetic point count")
    parser.add_argument('--d', type=int, help="synthetic point dimension")
    parser.add_argument('--method', choices=('svd', 'power'), default='svd',
                        help="spectral routine for sampled submatrices")
    parser.add_argument('--iterations', type=int, help="power iterations (default from config)")
    parser.add_argument('--config', help="JSON configuration file")
    parser.add_argument('--db', nargs='?', const='',
                        help="archive the run in this sqlite database (configured path when no value is given)")
    parser.add_argument('--quiet', action='store_true', help="suppress progress output")
    parser.add_argument('--verbose', action='store_true', help="debug logging")
    return parser


def config_from_args(args):
    """Merge command-line flags over the configured experiment defaults"""
    from models.records import ExperimentConfig
    from utils.config import get_config

    config = get_config()
    defaults = config.get_experiment_defaults()

    def pick(value, key):
        return value if value is not None else defaults.get(key)

    return ExperimentConfig(
        command=args.cmd,
        input_path=args.input,
        input_format=args.format,
        k_values=pick(args.k, 'k_values'),
        t=pick(args.t, 't'),
        gamma=args.gamma if args.gamma is not None else config.gamma,
        radius=args.radius,
        seeds=pick(args.seeds, 'seeds'),
        sigma_kernel=pick(args.sigma, 'sigma_kernel'),
        output_path=args.out,
        rng_id=config.rng_id,
        kpca=args.kpca,
        method=args.method,
        iterations=args.iterations,
        synthetic_n=pick(args.n, 'synthetic_n'),
        synthetic_d=pick(args.d, 'synthetic_d'),
        data_seed=args.rng_seed,
    ).validate()


def run(argv=None):
    """Parse arguments, run one command and return the exit code"""
    args = build_parser().parse_args(argv)

    from cli import abort_fraction, run_experiment
    from utils.config import Config, reset_config
    from utils.errors import InputError, NumericalError, ReportWriteError, SamplerError
    from utils.log import configure_logging, echo, status

    configure_logging(verbose=args.verbose, quiet=args.quiet)
    if not args.quiet:
        print_banner()

    try:
        if args.config:
            if not os.path.exists(args.config):
                raise InputError(f"config file not found: {args.config}")
            reset_config(Config(args.config))
        config = config_from_args(args)
        records = run_experiment(config)

        if args.db is not None:
            from database import ResultDatabase
            db = ResultDatabase(args.db or None)
            run_id = db.save_run(config, records)
            db.close()
            echo('DB', f"archived as run {run_id} in {db.db_path}")

    except (InputError, ReportWriteError) as e:
        status(False, str(e))
        logger.error("%s", e)
        return EXIT_INPUT
    except NumericalError as e:
        status(False, f"numerical failure: {e}")
        logger.error("numerical failure: %s", e)
        return EXIT_NUMERICAL
    except SamplerError as e:
        status(False, str(e))
        logger.error("%s", e)
        return EXIT_NUMERICAL

    fraction = abort_fraction(records)
    if records and fraction == 1.0:
        status(False, "all trials aborted")
        return EXIT_ALL_ABORTED
    status(True, f"{len(records)} records, abort fraction {fraction:.3f}")
    return EXIT_OK


def main():
    """Main application entry point"""
    errors = check_requirements()
    if errors:
        print("\n❌ Cannot start - missing requirements:")
        for error in errors:
            print(f"   • {error}")
        sys.exit(1)

    try:
        sys.exit(run())
    except KeyboardInterrupt:
        print("\n\nInterrupted by user.")
        sys.exit(130)


if __name__ == "__main__":
    main()
