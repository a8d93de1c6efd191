"""Presentations of mod-2 group cohomology by Stiefel-Whitney classes."""

from .f2poly import (BudgetExceeded, ContractError, F2Error, Polynomial, Ring,
                     SchemaError)
from .groebner import (Algebra, Budget, buchberger, enumerate_degree,
                       graded_dimension, ideal_equal, is_finite_dimensional,
                       kernel_of_map, minimal_generators, normal_form, present,
                       standard_monomials)
from .modules_f2 import syzygies, vector_from_coords, vector_to_coords
from .repdata import (RepTheoryData, load_fixture, parse_cohomology,
                      parse_repdata, serialize_repdata, validate_cross)
from .formalring import (FormalRing, SteenrodContext, build_formal_ring,
                         steenrod_closure)
from .solver import FinalPresentation, SolveOutcome, Solver
from .chow import (ChowReport, UnstableAlgebra, chern_subring, compare_bounds,
                   derivation_kernel, from_final_presentation,
                   milnor_derivation, tilde_subring)

__version__ = "0.1.0"
