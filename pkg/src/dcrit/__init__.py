"""Exact Koszul complexes, derived critical loci, and their graded structures.

Everything is computed over the rationals with exact arithmetic; there is no
floating point anywhere in the package.  The main entry points:

- Poly, parse_poly: sparse multivariate polynomials over Q
- build_koszul, build_tautological_koszul: Koszul complexes of sections
- hilbert_table, resolution_certificate: weight-slice cohomology
- milnor_number, quotient_dimension: Groebner oracles for critical loci
- schouten, bv_delta, vol_contract: the odd bracket and its generator
- minus_one_pairing, intersect_graph_lagrangians: shifted pairings
- comultiply, coaction: the exterior coalgebra acting on Koszul complexes
- run_all (acceptance), cli.main: the gating suites
"""

__version__ = "0.1.0"

from .poly import (ANY_DEGREE, INHOMOGENEOUS, Poly, UnknownVariableError,
                   degrevlex_key, gradient, monomials_of_weight, normalize_weights)
from .exterior import Ambient, ExtElt, Section, contract, merge_sign, wedge
from .parsing import (ParseError, parse_one_form, parse_poly, parse_polyvector,
                      parse_section)
from .groebner import (INFINITE, GroebnerBasis, buchberger, jacobian_ideal,
                       milnor_number, normal_form, quotient_dimension,
                       standard_monomials)
from .koszul import (BaseChangeReport, KoszulComplex, MatrixComplex,
                     TautologicalKoszul, augmentation, base_change_compare,
                     build_koszul, build_tautological_koszul, check_d_squared)
from .cohomology import (HilbertTable, InhomogeneousSectionError,
                         RegularSequenceReport, ResolutionCertificate,
                         hilbert_table, is_regular_sequence,
                         resolution_certificate, slice_cohomology)
from .polyvec import (OneForm, VolumeForm, alpha_of_vector, apply_vector,
                      bv_delta, check_bracket_compat, check_bv,
                      check_gerstenhaber, d_alpha, de_rham, schouten,
                      vol_contract, vol_contract_inv)
from .symplectic import (LagrangianIntersection, NotClosedError,
                         ObstructionReport, PairingReport, TwoTermComplex,
                         hessian, intersect_graph_lagrangians,
                         minus_one_pairing, obstruction_theory,
                         pairing_report, tangent_complex)
from .coalgebra import (TensorElt, antipode, coaction, comultiply, counit,
                        tensor_collapse, tensor_flip, tensor_multiply)
from .checks import CheckReport
from .acceptance import CriterionResult, run_all

__all__ = [
    "__version__",
    "ANY_DEGREE", "INHOMOGENEOUS", "Poly", "UnknownVariableError",
    "degrevlex_key", "gradient", "monomials_of_weight", "normalize_weights",
    "Ambient", "ExtElt", "Section", "contract", "merge_sign", "wedge",
    "ParseError", "parse_one_form", "parse_poly", "parse_polyvector",
    "parse_section",
    "INFINITE", "GroebnerBasis", "buchberger", "jacobian_ideal",
    "milnor_number", "normal_form", "quotient_dimension", "standard_monomials",
    "BaseChangeReport", "KoszulComplex", "MatrixComplex", "TautologicalKoszul",
    "augmentation", "base_change_compare", "build_koszul",
    "build_tautological_koszul", "check_d_squared",
    "HilbertTable", "InhomogeneousSectionError", "RegularSequenceReport",
    "ResolutionCertificate", "hilbert_table", "is_regular_sequence",
    "resolution_certificate", "slice_cohomology",
    "OneForm", "VolumeForm", "alpha_of_vector", "apply_vector", "bv_delta",
    "check_bracket_compat", "check_bv", "check_gerstenhaber", "d_alpha",
    "de_rham", "schouten", "vol_contract", "vol_contract_inv",
    "LagrangianIntersection", "NotClosedError", "ObstructionReport",
    "PairingReport", "TwoTermComplex", "hessian",
    "intersect_graph_lagrangians", "minus_one_pairing", "obstruction_theory",
    "pairing_report", "tangent_complex",
    "TensorElt", "antipode", "coaction", "comultiply", "counit",
    "tensor_collapse", "tensor_flip", "tensor_multiply",
    "CheckReport", "CriterionResult", "run_all",
]
