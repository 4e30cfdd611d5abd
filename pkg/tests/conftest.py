"""Shared test fixtures: a subprocess runner for the command-line interface."""

import os
import subprocess
import sys

import pytest


@pytest.fixture(scope="session")
def cli():
    """Run the installed CLI module in a subprocess and capture everything."""

    def run(*args, env_extra=None, timeout=600):
        env = dict(os.environ)
        if env_extra:
            env.update(env_extra)
        return subprocess.run(
            [sys.executable, "-m", "speclab.cli", *args],
            capture_output=True,
            text=True,
            env=env,
            timeout=timeout,
        )

    return run
