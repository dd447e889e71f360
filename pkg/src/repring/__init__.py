"""Exact computations with root data and Weyl-invariant character rings.

The package works entirely over exact arithmetic: integer lattices with
Smith and Hermite normal forms, cyclotomic numbers, Laurent polynomial
character rings, and rational Groebner bases.  On top of that base it
computes fundamental groups, supports of evaluation points, centralizer
subsystems, fibers and stabilizers of maximal ideals, the twist
automorphism, and truncated local comparisons between invariant rings.
"""

from .errors import ResourceCapError
from .lattice import (FinAbGroup, Sublattice, full_lattice,
                      hermite_normal_form, kernel, quotient_group, saturate,
                      smith_normal_form)
from .cyclotomic import Cyclo, cyclotomic_polynomial, euler_phi
from .laurent import (LaurentPoly, augmentation, exact_divide,
                      inverse_monomial, render, weyl_act)
from .rootdata import (LeviDatum, RootDatum, WeylGroup, all_roots,
                       centralizer_subsystem, datum_from_dict,
                       dominant_representative, fundamental_group, gl_datum,
                       is_derived_simply_connected, is_dominant, orbit,
                       positive_roots, product, reflection_subgroup,
                       standard_datum, torus_datum, vector_orbit, weyl_group)
from .invariants import (CharacterBasisReport, InvariantElement,
                         character_dimension, decompose_into_orbit_sums,
                         dominance_leq, dominant_weights_in_box,
                         finiteness_probe, fundamental_character_probe,
                         invariants_basis_probe, orbit_sum, weyl_character)
from .spectrum import (EvalPoint, MaxIdealDesc, StabilizerReport, SupportDesc,
                       evaluate_char, evaluate_poly, fiber_over_RG,
                       ideal_equal, parse_point, render_point,
                       stabilizer_check, support, unique_lift_check,
                       weyl_translate)
from .twist import (IsotypicDecomposition, TwistedElement, inverse_point,
                    isotypic_decompose, twist_augmentation_check,
                    twist_element, twist_multiplicativity_check)
from .poly import Poly, grevlex_key, make_elim_key, parse_poly
from .groebner import (GroebnerBasis, groebner, groebner_basis,
                       ideal_membership, reduce_poly, s_polynomial,
                       standard_monomials)
from .completion import (LevelReport, LocalIsoReport, Presentation,
                         PresentationReport, TruncationReport,
                         load_case_config, local_isomorphism_check,
                         point_ideal, presentation_from_config,
                         truncated_quotient, validate_presentation)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
