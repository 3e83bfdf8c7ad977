"""Stabilized power-sum plethysms of classical Weyl characters.

The public entry points are re-exported here; see the submodules for the
full API.
"""

from .characters import GroupLabel, LaurentPoly, psi_oracle, weyl_character, weyl_dimension
from .lr import Expansion, lr_coefficient, multi_lr, newell_littlewood
from .partitions import Partition, RationalGLWeight, conjugate, format_partition, parse_partition
from .plethysm import (
    a_so,
    a_so_via_levi,
    a_sp,
    a_sp_dual,
    convert,
    psi,
    psi_so,
    psi_sp,
    split_square,
    split_square_closed_form,
)
from .quotient_a import a_gl, ell_quotient_a, psi_gl
from .quotient_b import SignedPermutation, is_stable, sign_levi_weight

__version__ = "0.1.0"

__all__ = [
    "Expansion", "GroupLabel", "LaurentPoly", "Partition", "RationalGLWeight",
    "SignedPermutation", "a_gl", "a_so", "a_so_via_levi", "a_sp", "a_sp_dual",
    "conjugate", "convert", "ell_quotient_a", "format_partition", "is_stable",
    "lr_coefficient", "multi_lr", "newell_littlewood", "parse_partition", "psi",
    "psi_gl", "psi_oracle", "psi_so", "psi_sp", "sign_levi_weight", "split_square",
    "split_square_closed_form", "weyl_character", "weyl_dimension",
]
