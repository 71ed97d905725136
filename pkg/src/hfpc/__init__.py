"""Hadamard full propelinear codes with associated group C_2t x C_2.

Construction, exhaustive search and verification of the four families of
length-4t codes (tags 4tu2, 2t22u, 2t4u, tqu), rank and kernel profiling,
and conversion to and from circulant complex Hadamard matrices.
"""

from .gf2 import BitMatrix, BitVector
from .hadamard import CodeProfile, profile
from .perms import Permutation
from .propelinear import PropelinearCode, PropelinearElement

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BitVector",
    "CodeProfile",
    "Permutation",
    "PropelinearCode",
    "PropelinearElement",
    "profile",
    "__version__",
]
