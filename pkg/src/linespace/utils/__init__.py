"""Grids, sampling, export and verification suites used by the command line."""
