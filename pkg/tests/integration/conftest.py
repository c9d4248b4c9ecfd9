import pytest


@pytest.fixture(scope="session")
def qg():
    """Runs the ``qg`` entry point in a subprocess and returns (code, stdout)."""
    import subprocess
    import sys

    def run(*argv):
        done = subprocess.run([sys.executable, '-m', 'kquasi.cli', *argv],
                              capture_output=True, text=True)
        return done.returncode, done.stdout
    return run
