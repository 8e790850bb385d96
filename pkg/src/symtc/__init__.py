"""Exact cohomology rings of symmetric products of closed surfaces, with
certified cup-length, category and sequential topological complexity bounds.

The core is an exact computer-algebra layer: finitely presented
graded-commutative rings over Q and Z2 with per-degree quotient bases,
Kunneth tensor powers with Koszul signs, replayable zero-divisor
certificates, and an independent brute-force zero-divisor-cup-length oracle.
A FastAPI service wraps the library; the ``symtc`` CLI is a thin client.
"""

__version__ = "0.1.0"

from .algebra import Element, Generator, Monomial, PresentedRing, mul_monomial
from .catalog import (
    NonOrientable,
    Orientable,
    Power,
    Product,
    Sphere,
    SymmetricProduct,
    dimension,
    ks_ring,
    macdonald_ring,
    ring_of,
    sphere_ring,
)
from .invariants import (
    BoundReport,
    cat_bounds,
    cup_length,
    dtc_lower,
    essential,
    ganea_check,
    genfun,
    product_additivity_check,
    tcm_bounds,
    zcl_bruteforce,
)
from .spaceexpr import parse_space, print_space
from .tensor import TensorRing, diagonal_pullback, proj_pullback, tensor_power, tensor_product
from .zerodiv import Certificate, SpecialZeroDivisor, special_zero_divisor, szcl_lower

__all__ = [
    "__version__",
    "Element",
    "Generator",
    "Monomial",
    "PresentedRing",
    "mul_monomial",
    "Sphere",
    "Orientable",
    "NonOrientable",
    "SymmetricProduct",
    "Product",
    "Power",
    "dimension",
    "macdonald_ring",
    "ks_ring",
    "sphere_ring",
    "ring_of",
    "TensorRing",
    "tensor_product",
    "tensor_power",
    "proj_pullback",
    "diagonal_pullback",
    "SpecialZeroDivisor",
    "special_zero_divisor",
    "Certificate",
    "szcl_lower",
    "BoundReport",
    "cup_length",
    "zcl_bruteforce",
    "cat_bounds",
    "tcm_bounds",
    "product_additivity_check",
    "ganea_check",
    "genfun",
    "essential",
    "dtc_lower",
    "parse_space",
    "print_space",
]
