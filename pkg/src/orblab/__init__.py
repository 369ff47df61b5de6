"""Exact-arithmetic toolkit for rational points on orbifold lines.

Subpackages cover integer arithmetic, projective-line points and prime
forms, orbifold divisors and point scans, abc triple quality machinery,
self-maps of the line with ramification transfer, double-cover tower
combinatorics, and local solvability of Chatelet surfaces.  Everything is
exact (arbitrary-precision integers and fractions); floating point only
appears in logarithmic report columns.
"""

__version__ = "0.1.0"
