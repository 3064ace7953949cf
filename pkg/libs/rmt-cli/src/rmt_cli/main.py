from __future__ import annotations

import argparse
from pathlib import Path
import sys
import typing as t

from rmt_cli.config import ExperimentConfig, load_config
from rmt_lab.exceptions import (
    ConfigurationError,
    DomainError,
    NumericError,
    SingularConfigurationError,
)

from .classes import RunResult
from .constants import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, VALIDATE_COMMAND
from .helpers import _set_logging_level, overrides_from_args, parse_args
from .runner import run_experiment

from loguru import logger as log

__all__ = ["cli", "main", "run", "validate"]


def _report(exc: BaseException) -> str:
    """Single-line `error: <reason>` for stderr."""
    reason = getattr(exc, "reason", None) or str(exc)

    return "error: " + " ".join(str(reason).split())


def _exit_code(exc: BaseException) -> int | None:
    match exc:
        case NumericError() | SingularConfigurationError():
            return EXIT_NUMERIC
        case ConfigurationError() | DomainError() | ValueError():
            return EXIT_USAGE
        case _:
            return None


def run(config: ExperimentConfig) -> RunResult:
    """Run a validated experiment config and write its artifacts."""
    return run_experiment(config)


def validate(path: t.Union[str, Path]) -> ExperimentConfig:
    """Schema-check an experiment document without running it or touching the output dir.

    Raises:
        ConfigurationError: Missing/empty file, parse error (with line/column) or schema error.

    """
    config = load_config(path)
    log.debug(f"{path}: valid '{config.experiment}' document")

    return config


def main(options: argparse.Namespace) -> int:
    """Dispatch parsed CLI options; returns the process exit code."""
    try:
        if options.command == VALIDATE_COMMAND:
            path = options.target or options.config
            config = validate(path)
            print(f"ok: {path} ({config.experiment}, {config.seeds.count} seed(s))")

            return EXIT_OK

        config = load_config(options.config, overrides_from_args(options))
        result = run(config)
        print(f"{result.experiment}: wrote {result.rows} row(s) to {result.output_dir}")

        return EXIT_OK

    except Exception as exc:
        code = _exit_code(exc)
        if code is None:
            raise
        print(_report(exc), file=sys.stderr)

        return code


def cli(argv: t.Sequence[str] | None = None) -> int:
    """Console-script entry point (`rmt-lab`)."""
    try:
        args = parse_args(argv)
    except ConfigurationError as exc:
        print(_report(exc), file=sys.stderr)

        return EXIT_USAGE

    _set_logging_level(verbosity=args.verbosity, set_debug=args.debug)

    return main(options=args)
