"""Shared pytest fixtures for all tests."""
import itertools
import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple

import pytest

from apps.cli.main import main


# CLI runner
@pytest.fixture
def run_cli(tmp_path: Path) -> Callable[..., Tuple[int, Dict[str, Any]]]:
    """Run the command line with ``--out`` in tmp_path.

    Returns the exit code and the parsed output document ({} when none was
    written).
    """
    counter = itertools.count()

    def _run(*argv: str) -> Tuple[int, Dict[str, Any]]:
        out = tmp_path / f"out-{next(counter)}.json"
        args: List[str] = list(argv) + ["--out", str(out)]
        code = main(args)
        doc = json.loads(out.read_text(encoding="utf-8")) if out.exists() else {}
        return code, doc

    return _run


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], str]:
    """Write a JSON value under tmp_path and return the path."""

    def _write(name: str, value: Any) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(value), encoding="utf-8")
        return str(path)

    return _write
