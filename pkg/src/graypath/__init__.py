"""Finite Gray-category kernel: path spaces, resolutions, mapping spaces."""

__version__ = "0.1.0"
