import json
import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))


@pytest.fixture(scope="session")
def scan_run(tmp_path_factory):
    """One full scan over n = 3..6 at the default per-n cutoff 4n+4, run
    through the CLI; shared by the acceptance criteria that read it."""
    import time

    from auslab.cli import main

    out = tmp_path_factory.mktemp("scan_first")
    started = time.monotonic()
    code = main(
        ["scan", "--n-list", "3,4,5,6", "--all-dihedral-subgroups", "--out", str(out)]
    )
    elapsed = time.monotonic() - started
    with open(out / "scan.json") as fh:
        envelope = json.load(fh)
    with open(out / "scan.csv") as fh:
        csv_text = fh.read()
    return {
        "exit_code": code,
        "envelope": envelope,
        "csv": csv_text,
        "elapsed": elapsed,
        "out_dir": str(out),
    }
