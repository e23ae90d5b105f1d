"""Exact decision procedures for planar polynomial submersions of degree at most four."""

__version__ = "0.1.0"
