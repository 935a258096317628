"""
Command-line interface.
"""

from .app import build_parser, main, parse_base, parse_point, run

__all__ = ["build_parser", "main", "parse_base", "parse_point", "run"]
