"""Singleton-optimal locally repairable codes from finite geometry.

Subpackages cover exact GF(p^m) arithmetic, dense linear algebra over
finite fields, projective geometry in PG(2,q) and PG(3,q), the code
objects themselves (parity-check assembly, distance and locality
verification, repair), the geometric constructions and their verifiers,
closed-form length bounds, exhaustive search at tiny field sizes, and a
command-line interface with text file formats.
"""

from lrcgeom.galois import GF, field_create, field_for_order

__all__ = ["GF", "field_create", "field_for_order"]
__version__ = "0.1.0"
