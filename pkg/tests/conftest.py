import pathlib
import subprocess
import sys

import pytest

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def golden():
    def _read(name: str) -> str:
        return (GOLDEN / name).read_text()
    return _read


@pytest.fixture(scope="session")
def run_cli():
    """Invoke the installed CLI in a subprocess and capture everything."""
    def _run(*args: str) -> subprocess.CompletedProcess:
        return subprocess.run(
            [sys.executable, "-m", "mockrational.cli", *args],
            capture_output=True,
            text=True,
        )
    return _run
