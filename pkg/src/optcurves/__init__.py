"""optcurves: exact point counts, optimal-curve searches and hermitian
lattice verification over finite fields of small discriminant."""

__version__ = "0.1.0"

from .ff import Field, FieldElement, discriminant, enumerate_discriminant_fields

__all__ = [
    "Field",
    "FieldElement",
    "discriminant",
    "enumerate_discriminant_fields",
]
