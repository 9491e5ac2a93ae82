"""
Command line interface

``nits`` exposes the library operations with canonical JSON input and
output; ``run`` is the testable entry point returning the exit code.
"""

from .main import build_parser, main, run

__all__ = ["build_parser", "main", "run"]
