"""Numerical core: special functions, thermal states, amplitudes, optics, channels."""
