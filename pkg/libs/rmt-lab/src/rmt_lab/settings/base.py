from __future__ import annotations

from dynaconf import Dynaconf

__all__ = ["SETTINGS", "get_namespace", "LOGGING_SETTINGS", "RUNNER_SETTINGS"]

## Initialize Dynaconf object with all configurations.
#  Environment variables prefixed with RMT_LAB_ override file values,
#  i.e. RMT_LAB_WORKERS=4
SETTINGS = Dynaconf(
    environments=True,
    envvar_prefix="RMT_LAB",
    settings_files=[
        "settings.toml",
        ".secrets.toml",
        "config/settings.toml",
        "config/settings.local.toml",
    ],
)


def get_namespace(namespace: str) -> Dynaconf:
    """Return a Dyanconf object scoped to a namespace.

    Description:
        Uses the global SETTINGS Dynaconf object to return only the environment/namespace.
        In config/settings.toml, configurations are separated by domain, i.e.:

        ```toml
        [logging]
        log_level = "WARNING"

        [runner]
        workers = 1
        output_dir = "output"
        ```

    Params:
        namespace (str): The name of a `[namespace]` in settings.toml, i.e. 'logging' or 'runner'.

    Returns:
        (Dynaconf): A scoped Dynaconf settings object.

    """
    try:
        scoped_settings = SETTINGS.from_env(namespace)

        return scoped_settings
    except Exception as exc:
        raise Exception(
            f"Error scoping Dynaconf settings to namespace '{namespace}'. Details: {exc}"
        )


LOGGING_SETTINGS: Dynaconf = get_namespace("logging")
RUNNER_SETTINGS: Dynaconf = get_namespace("runner")
