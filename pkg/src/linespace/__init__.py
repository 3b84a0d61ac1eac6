"""Oriented lines in R^3 as points of TS^2, and surfaces as sections of TS^2."""

__version__ = "0.1.0"
