"""Finite-field check of the twisted tensor witness group for 2G2(q)."""

from .field import FieldContext, gf_make
from .matrix import FqMatrix
from .semidirect import (
    ConstructionError,
    EnumerationTooLarge,
    WitnessGroup,
    brute_force_coset_orders,
    build_M,
    coset_has_order_pk,
    element_order,
    field_for_q,
    m_mu,
    phi,
    semidirect_mu,
    sl2,
    sl2_class_reps,
    unipotent_block_sizes,
)

__all__ = [
    "ConstructionError",
    "EnumerationTooLarge",
    "FieldContext",
    "FqMatrix",
    "WitnessGroup",
    "brute_force_coset_orders",
    "build_M",
    "coset_has_order_pk",
    "element_order",
    "field_for_q",
    "gf_make",
    "m_mu",
    "phi",
    "semidirect_mu",
    "sl2",
    "sl2_class_reps",
    "unipotent_block_sizes",
]
