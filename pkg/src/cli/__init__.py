"""
Command-line interface.
"""

from .app import build_parser, exit_code, parse_matrix_file, run

__all__ = ["build_parser", "exit_code", "parse_matrix_file", "run"]
