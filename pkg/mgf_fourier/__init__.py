"""
Modular Graph Function Fourier Modes Package
"""

__version__ = "0.1.0"
__author__ = "Your Name"
__description__ = "Exact and high-precision toolkit for the constant Fourier mode of two-loop modular graph functions"
