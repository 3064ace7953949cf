from __future__ import annotations

from pathlib import Path
import sys
import typing as t

from loguru import logger

__all__ = [
    "setup_loguru_logging",
    "add_run_log_sink",
    "remove_run_log_sink",
    "LOG_FORMATS",
]

LOG_FORMATS: dict[str, str] = {
    "basic": "{time:YY-MM-DD HH:mm:ss} [{level}]: {message}",
    "basic_color": "<blue>{time:YY-MM-DD HH:mm:ss}</> [<yellow>{level}</>]: {message}",
    "detailed": "{time:YYYY-MM-DD HH:mm:ss} | [{level}] | ({module}.{function}:{line}) | > {message}",
    "detailed_color": "<blue>{time:YYYY-MM-DD HH:mm:ss}</> | [<yellow>{level}</>] | (<cyan>{module}.{function}:{line}</>) | > {message}",
}


def filter_errors_only(record) -> bool:
    """Keep ERROR and CRITICAL records.

    Params:
        record (dict): The loguru record to filter.

    Returns:
        (bool): True if the record should be emitted.

    """
    return record["level"].name in ["ERROR", "CRITICAL"]


def _select_format(log_fmt: str, colorize: bool) -> str:
    valid_log_fmts: list[str] = ["basic", "detailed"]

    match log_fmt.lower():
        case "basic" | "detailed":
            key = f"{log_fmt.lower()}_color" if colorize else log_fmt.lower()

            return LOG_FORMATS[key]
        case _:
            raise ValueError(
                f"Unknown log_fmt: '{log_fmt}'. Must be one of {valid_log_fmts}"
            )


def setup_loguru_logging(
    log_level: str = "INFO",
    enable_loggers: list[str] | None = None,
    add_file_logger: bool = False,
    app_log_file: str = "logs/app.log",
    add_error_file_logger: bool = False,
    error_log_file: str = "logs/error.log",
    colorize: bool = False,
    retention: int = 3,
    rotation: str = "15 MB",
    log_fmt: str = "detailed",
) -> None:
    """Setup loguru logging.

    Description:
        Replaces every existing sink with a stderr sink at `log_level`. Library loggers
        (i.e. `rmt_lab`) are disabled at import, pass their names in `enable_loggers`
        to see their output.

    Params:
        log_level (str): The log level to use.
        enable_loggers (list[str]): A list of loggers to enable.
        add_file_logger (bool): If `True`, add a file logger to the log.
        add_error_file_logger (bool): If `True`, add a file logger to the log for errors.
        colorize (bool): If `True`, colorize the log output.
        log_fmt (str): One of 'basic', 'detailed'.

    Raises:
        ValueError: When `log_fmt` is unknown.

    """
    fmt: str = _select_format(log_fmt=log_fmt, colorize=colorize)

    logger.remove()
    logger.add(sys.stderr, format=fmt, level=log_level.upper(), colorize=colorize)

    for _logger in enable_loggers or []:
        logger.enable(_logger)

    if add_file_logger:
        logger.add(
            app_log_file,
            format=_select_format(log_fmt=log_fmt, colorize=False),
            retention=retention,
            rotation=rotation,
            level="DEBUG",
        )

    if add_error_file_logger:
        logger.add(
            error_log_file,
            format=_select_format(log_fmt=log_fmt, colorize=False),
            retention=retention,
            rotation=rotation,
            level="ERROR",
            filter=filter_errors_only,
        )


def add_run_log_sink(
    log_file: t.Union[str, Path], level: str = "DEBUG", log_fmt: str = "detailed"
) -> int:
    """Attach a file sink for the duration of one experiment run.

    Params:
        log_file (str|Path): Destination, i.e. `<output_dir>/meta.log`. Parent dirs are created.
        level (str): Minimum level written to the file.

    Returns:
        (int): The loguru handler id, pass it to `remove_run_log_sink()`.

    """
    log_file = Path(log_file)
    log_file.parent.mkdir(parents=True, exist_ok=True)

    return logger.add(
        log_file,
        format=_select_format(log_fmt=log_fmt, colorize=False),
        level=level,
        mode="w",
        encoding="utf-8",
    )


def remove_run_log_sink(sink_id: int) -> None:
    try:
        logger.remove(sink_id)
    except ValueError:
        ## Already removed
        pass
