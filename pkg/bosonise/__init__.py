"""Bosonise - exact shape/boson factorisation of fermionic oscillator states."""

__version__ = "1.0.0"
__app_name__ = "Bosonise"
