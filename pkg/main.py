#!/usr/bin/env python3
"""
Main entry point for the multibase command line.
"""

import sys

from src.cli.app import run

if __name__ == "__main__":
    sys.exit(run())
