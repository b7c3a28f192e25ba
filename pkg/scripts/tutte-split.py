#!/usr/bin/env python3
"""
Tutte Split
Exact Tutte and Negami polynomials, splitting evaluation of glued graphs,
verification suites and a direct-vs-split benchmark

Examples:
    tutte-split.py poly triangle.json --method negami
    tutte-split.py split c4.json --x 2 --y 3 --coeffs --check
    tutte-split.py split c4.json --preset potts:3 --x 2
    tutte-split.py verify --corpus --seed 2024 --count 25 --format json
    tutte-split.py bench ladder.json
"""

import sys
from pathlib import Path

# Add src directory to path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from dotenv import load_dotenv

from cli_harness import main

if __name__ == '__main__':
    load_dotenv()
    sys.exit(main())
