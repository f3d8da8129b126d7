"""Pytest configuration shared across the test suite.

Living at the repo root, this file makes pytest add the repo root to
``sys.path`` so ``import lacuna`` works, provides the canonical seed-3
sequences, and clears ``LACUNA_OUTPUT_DIR`` so a developer's environment
cannot redirect CLI reports during tests.
"""

import io

import pytest

from lacuna.sequence import default_generator

# n_k = 2^k n_(k-1) + 1 from n_1 = 3
SEED3_TERMS = (3, 13, 105, 1681, 53793, 3442753, 440672385, 112812130561)


@pytest.fixture
def seq6():
    return default_generator(6, 3)


@pytest.fixture
def seq8():
    return default_generator(8, 3)


@pytest.fixture
def run_cli():
    """Run the CLI in-process; returns ``(exit_code, stdout_text)``."""
    from lacuna.cli import main

    def _run(*argv):
        out = io.StringIO()
        code = main([str(a) for a in argv], stream=out)
        return code, out.getvalue()

    return _run


@pytest.fixture(autouse=True)
def _no_output_dir_override(monkeypatch):
    monkeypatch.delenv("LACUNA_OUTPUT_DIR", raising=False)
