#!/usr/bin/env python3
"""
Entry point for the bergtol command line tool.

    python run.py decide --symbol examples.json
"""

import sys

from src.main import main

if __name__ == "__main__":
    sys.exit(main())
