"""Exact computational toolkit for sign variation, the positive
Grassmannian, positroids, Bergman fans, stable polynomials, M-convexity,
and tropical curves.

All arithmetic is exact (``fractions.Fraction`` and integers); there is no
floating point anywhere in the library.
"""

__version__ = "0.1.0"
