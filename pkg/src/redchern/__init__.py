"""Exact reduced Chern class calculus over the rationals.

Subpackage map:
    poly       sparse exact polynomials, truncation, substitution, JSON
    symfun     partitions, monomial/elementary bases, basis conversion
    chern      root calculus: reduced classes, twists, symmetric powers
    universal  the triangular system, psi/phi, the pushforward recipe
    oracle     toy graded rings and identity specialization
    verify     named verification suites
    cli        command-line entry points
    kernels    hot-loop backend selection (compiled or pure Python)
"""

from redchern.kernels import BACKEND
from redchern.poly import MPoly, VarTable
from redchern.symfun import Partition

__version__ = "0.1.0"

__all__ = ["BACKEND", "MPoly", "Partition", "VarTable", "__version__"]
