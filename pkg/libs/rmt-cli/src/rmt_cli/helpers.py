from __future__ import annotations

import argparse
import typing as t

from rmt_cli.config import EXPERIMENT_NAMES
from rmt_lab.exceptions import ConfigurationError
from rmt_lab.settings import LOGGING_SETTINGS
from rmt_lab.setup import setup_loguru_logging

from .constants import VALIDATE_COMMAND

__all__ = ["_set_logging_level", "parse_args", "overrides_from_args"]

## `rmt-lab run <experiment>` is accepted as an alias of `rmt-lab <experiment>`
RUN_COMMAND: str = "run"

## CLI flag -> (section, key); section None means top level
_SECTION_FLAGS: dict[str, tuple[str | None, str]] = {
    "m": ("ensemble", "m"),
    "d": ("ensemble", "d"),
    "kind": ("ensemble", "kind"),
    "entry_dist": ("ensemble", "entry_dist"),
    "seeds": ("seeds", "count"),
    "base_seed": ("seeds", "base"),
    "workers": (None, "workers"),
    "output_dir": (None, "output_dir"),
    "e": ("statistics", "e"),
    "b": ("statistics", "b"),
    "ell": ("statistics", "ell"),
    "order": ("statistics", "order"),
    "tau": ("statistics", "tau"),
    "drift": ("flow", "drift"),
    "dt": ("flow", "dt"),
    "horizon": ("flow", "horizon"),
}


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so usage errors share the error path."""

    def error(self, message: str) -> t.NoReturn:
        raise ConfigurationError(f"usage: {message}")


def _set_logging_level(verbosity: int, set_debug: bool = False) -> None:
    """Configure loguru from the CLI's -v count and -d flag (WARNING, INFO, DEBUG)."""
    ## Cap verbosity at 2
    verbosity = min(verbosity, 2)

    if set_debug:
        log_level: str = "DEBUG"
    else:
        log_levels: list[str] = [LOGGING_SETTINGS.get("LOG_LEVEL", "WARNING"), "INFO", "DEBUG"]
        ## Set log level based on verbosity counter
        log_level: str = log_levels[verbosity]

    setup_loguru_logging(
        log_level=log_level,
        enable_loggers=["rmt_lab"],
        log_fmt="detailed" if log_level == "DEBUG" else LOGGING_SETTINGS.get("LOG_FMT", "basic"),
    )


def _size_list(value: str) -> list[int]:
    try:
        sizes = [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{value}'")
    if not sizes:
        raise argparse.ArgumentTypeError("expected at least one size")

    return sizes


def parse_args(argv: t.Sequence[str] | None = None) -> argparse.Namespace:
    """Handle CLI args.

    Description:
        `rmt-lab <experiment> [--config file.json] [overrides]` runs an experiment,
        `rmt-lab validate <path>` checks a document without running it.

    Raises:
        ConfigurationError: Usage errors, reported with a `usage:` prefix.

    """
    parser = _ArgumentParser(
        prog="rmt-lab",
        description="Run random-matrix experiments and write results.csv/summary.json/meta.log",
    )

    parser.add_argument(
        "command",
        metavar="experiment",
        help=f"One of {', '.join(EXPERIMENT_NAMES)}, or '{VALIDATE_COMMAND} <path>'",
    )
    parser.add_argument("target", nargs="?", default=None, help="Config path for 'validate'")
    parser.add_argument("-c", "--config", dest="config", default=None, help="JSON experiment document")

    ## Ensemble
    parser.add_argument("--n", dest="n", type=_size_list, default=None, help="Size(s) N, i.e. 100,200")
    parser.add_argument("--m", dest="m", type=int, default=None, help="Rows M (covariance)")
    parser.add_argument("--d", dest="d", type=float, default=None, help="Ratio d = N/M (covariance)")
    parser.add_argument("--kind", dest="kind", default=None, help="Ensemble kind")
    parser.add_argument("--entry-dist", dest="entry_dist", default=None, help="Entry distribution")

    ## Seeds & runner
    parser.add_argument("--seeds", dest="seeds", type=int, default=None, help="Number of seeds")
    parser.add_argument("--base-seed", dest="base_seed", type=int, default=None, help="Base seed")
    parser.add_argument("--workers", dest="workers", type=int, default=None, help="Worker processes")
    parser.add_argument("-o", "--output-dir", dest="output_dir", default=None, help="Artifact directory")

    ## Statistics
    parser.add_argument("--e", dest="e", type=float, default=None, help="Bulk energy E")
    parser.add_argument("--b", dest="b", type=float, default=None, help="Energy half-window b")
    parser.add_argument("--ell", dest="ell", type=float, default=None, help="Gap window length")
    parser.add_argument("--order", dest="order", type=int, default=None, help="Correlation order")
    parser.add_argument("--tau", dest="tau", type=float, default=None, help="OU interpolation time")

    ## Flow / relaxation
    parser.add_argument("--drift", dest="drift", default=None, help="Flow drift")
    parser.add_argument("--beta", dest="beta", type=float, default=None, help="Dyson index")
    parser.add_argument("--dt", dest="dt", type=float, default=None, help="Flow time step")
    parser.add_argument("--horizon", dest="horizon", type=float, default=None, help="Flow horizon")
    parser.add_argument("--r", dest="r", type=float, default=None, help="Relaxation radius R")

    ## Add debugging flag
    parser.add_argument(
        "-d", "--debug", dest="debug", action="store_true", help="Enable debug logging"
    )
    ## Add verbosity counter
    parser.add_argument(
        "-v",
        "--verbose",
        dest="verbosity",
        action="count",
        default=0,
        help="Increase verbosity level (-v, -vv, etc). Max verbosity: -vv",
    )

    options: argparse.Namespace = parser.parse_args(argv)

    if options.command == RUN_COMMAND:
        if options.target is None:
            parser.error("'run' needs an experiment name")
        options.command, options.target = options.target, None

    if options.command == VALIDATE_COMMAND:
        if options.target is None and options.config is None:
            parser.error("'validate' needs a config path")
    elif options.target is not None:
        parser.error(f"unexpected argument '{options.target}'")

    return options


def overrides_from_args(options: argparse.Namespace) -> dict[str, t.Any]:
    """Nested document overrides from the CLI flags that were given.

    Description:
        `--beta` and `--r` go to the `flow` section for dbm-relax and to `relaxation`
        otherwise.

    """
    overrides: dict[str, t.Any] = {"experiment": options.command}

    def _put(section: str | None, key: str, value: t.Any) -> None:
        if section is None:
            overrides[key] = value
        else:
            overrides.setdefault(section, {})[key] = value

    if options.n is not None:
        _put("ensemble", "n", options.n[0] if len(options.n) == 1 else options.n)

    for flag, (section, key) in _SECTION_FLAGS.items():
        value = getattr(options, flag)
        if value is not None:
            _put(section, key, value)

    target = "flow" if options.command == "dbm-relax" else "relaxation"
    for flag in ("beta", "r"):
        value = getattr(options, flag)
        if value is not None:
            _put(target, flag, value)

    return overrides
