"""
Tagged console logging
Same "[TAG] message" lines the dashboard printed, sent to stderr so
stdout stays clean for code words, JSON and DOT.
"""

import sys

_verbose = False


def set_verbose(enabled: bool = True):
    global _verbose
    _verbose = enabled


def log(tag: str, message: str):
    """Print a tagged progress line (verbose mode only)"""
    if _verbose:
        print(f"[{tag}] {message}", file=sys.stderr)


def warn(tag: str, message: str):
    """Print a tagged line regardless of verbosity"""
    print(f"[{tag}] {message}", file=sys.stderr)
