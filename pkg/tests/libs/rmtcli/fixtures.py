from __future__ import annotations

import json
from pathlib import Path
import typing as t

import pytest

__all__ = [
    "EXPERIMENTS_DIR",
    "write_doc",
    "semicircle_doc",
    "semicircle_file",
]

EXPERIMENTS_DIR: Path = Path(__file__).parents[3] / "config" / "experiments"


def write_doc(path: Path, doc: t.Any) -> Path:
    """Write `doc` as JSON (or verbatim when it is already a string)."""
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc), encoding="utf-8")

    return path


@pytest.fixture
def semicircle_doc(tmp_path: Path) -> dict[str, t.Any]:
    return {
        "experiment": "semicircle",
        "ensemble": {"kind": "wigner-symmetric", "n": [50, 100]},
        "seeds": {"count": 4, "base": 7},
        "output_dir": str(tmp_path / "out"),
    }


@pytest.fixture
def semicircle_file(tmp_path: Path, semicircle_doc: dict[str, t.Any]) -> Path:
    return write_doc(tmp_path / "semicircle.json", semicircle_doc)
