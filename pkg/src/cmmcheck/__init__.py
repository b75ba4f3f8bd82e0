"""Exact verification of Cherednik-Macdonald-Mehta identities for A_{n-1}."""

from .laurent import LaurentQ, RationalQ, qbracket, rational_eq
from .roots import Weight, from_fundamental, root_system
from .weightpoly import WeightPoly, delta_k, q_dimension, weyl_character, weyl_denominator
from .macdonald import macdonald_poly, norm_direct, norm_formula, phi
from .gaussian import gaussian_pairing, gaussian_eval_property, prop1_coefficient_check, verify_eq5
from .verify import CmmInstance, cmm_lhs, cmm_rhs_eq1, cmm_rhs_eq8, verify_cmm, verify_eq7, verify_symmetry

__version__ = "0.1.0"
