from __future__ import annotations

import importlib.util
import logging
from pathlib import Path
import platform

import nox

## Prefer uv for session venvs when it is installed
if importlib.util.find_spec("uv"):
    nox.options.default_venv_backend = "uv|virtualenv"
else:
    nox.options.default_venv_backend = "virtualenv"
nox.options.reuse_existing_virtualenvs = True
nox.options.error_on_external_run = False
nox.options.error_on_missing_interpreters = False

## Sessions run by a bare `nox`
nox.options.sessions = ["ruff-lint", "fast-tests"]

log: logging.Logger = logging.getLogger("nox")

PY_VER_TUPLE: tuple[str, str, str] = platform.python_version_tuple()
DEFAULT_PYTHON: str = f"{PY_VER_TUPLE[0]}.{PY_VER_TUPLE[1]}"

REQUIREMENTS_OUTPUT_DIR: Path = Path(".")

LINT_PATHS: list[str] = ["libs", "scripts", "sandbox", "tests", "noxfile.py"]

## Sample experiment documents checked by `validate-configs`
EXPERIMENT_CONFIGS_DIR: Path = Path("config/experiments")

## Flags shared by the pytest sessions
PYTEST_ARGS: list[str] = ["-n", "auto", "--tb=auto", "-rsXxf"]


def install_uv_project(session: nox.Session, external: bool = False) -> None:
    """Install uv in the session and sync every workspace package."""
    log.info("Installing uv in session")
    session.install("uv")
    log.info("Syncing uv workspace")
    session.run("uv", "sync", "--all-packages", external=external)


@nox.session(name="dev-env", tags=["setup"])
def dev(session: nox.Session) -> None:
    """Build the development environment on a fresh clone."""
    install_uv_project(session, external=True)


@nox.session(python=[DEFAULT_PYTHON], name="ruff-lint", tags=["ruff", "clean", "lint"])
def run_linter(session: nox.Session):
    session.install("ruff")

    for lint_path in LINT_PATHS:
        if not Path(lint_path).exists():
            log.warning(f"Skipping lint path '{lint_path}', could not find path")
            continue

        log.info(f"Sorting imports in '{lint_path}'")
        session.run("ruff", "check", lint_path, "--select", "I", "--fix")

        log.info(f"Running ruff checks on '{lint_path}' with --fix")
        session.run("ruff", "check", lint_path, "--fix")


@nox.session(python=[DEFAULT_PYTHON], name="uv-export")
def export_requirements(session: nox.Session):
    try:
        REQUIREMENTS_OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        msg = f"({type(exc)}) Unable to create requirements export directory '{REQUIREMENTS_OUTPUT_DIR}'. Details: {exc}"
        log.error(msg)

        raise exc

    session.install("uv")

    log.info("Exporting production requirements")
    session.run("uv", "export", "--no-hashes", "-o", str(REQUIREMENTS_OUTPUT_DIR / "requirements.txt"))

    log.info("Exporting development requirements")
    session.run(
        "uv",
        "export",
        "--only-dev",
        "--no-hashes",
        "-o",
        str(REQUIREMENTS_OUTPUT_DIR / "requirements.dev.txt"),
    )


## Full suite, including the desk-scale Monte Carlo tests
@nox.session(python=DEFAULT_PYTHON, name="tests", tags=["tests"])
def run_tests(session: nox.Session):
    install_uv_project(session)

    log.info("Running Pytest tests")
    session.run("uv", "run", "pytest", *PYTEST_ARGS, "-v")


@nox.session(python=DEFAULT_PYTHON, name="fast-tests", tags=["tests"])
def run_fast_tests(session: nox.Session):
    install_uv_project(session)

    log.info("Running Pytest tests, skipping 'slow' markers")
    session.run("uv", "run", "pytest", *PYTEST_ARGS, "-m", "not slow")


@nox.session(python=[DEFAULT_PYTHON], name="validate-configs", tags=["quality"])
def run_validate_configs(session: nox.Session):
    install_uv_project(session)

    configs = sorted(EXPERIMENT_CONFIGS_DIR.glob("*.json"))
    log.info(f"Validating [{len(configs)}] experiment document(s)")
    for config in configs:
        session.run("uv", "run", "rmt-lab", "validate", str(config))


@nox.session(python=[DEFAULT_PYTHON], name="run-sandbox", tags=["sandbox"])
def run_sandbox_scripts(session: nox.Session):
    session.install("uv")

    log.info("Running sandbox scripts")
    session.run("python", "scripts/run_sandbox_scripts.py")
