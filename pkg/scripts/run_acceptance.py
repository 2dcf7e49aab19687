#!/usr/bin/env python3
"""Run the acceptance suite with live per-criterion pass/fail lines."""

import subprocess
import sys
from pathlib import Path


def main() -> int:
    root = Path(__file__).resolve().parent.parent
    return subprocess.call(
        [sys.executable, "-m", "pytest", str(root / "tests" /
                                             "test_acceptance.py"),
         "-v", "-s", *sys.argv[1:]])


if __name__ == "__main__":
    sys.exit(main())
