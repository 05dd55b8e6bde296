"""hyperval: exact arithmetic in finitely ramified p-adic fields, their valued
hyperfield quotients K/(1+m^n), homomorphism lifting, and the matching
hyperfield/valued-field logic layer."""

from .padic import FieldModel, FieldElem, make_field

__all__ = ["FieldModel", "FieldElem", "make_field"]
__version__ = "0.1.0"
