"""Finite H*-algebras in matrix categories over commutative *-semirings."""

from ._accel import COMPILED
from .endo_algebra import Subsemialgebra, closure, commutant, double_commutant
from .errors import (CapError, CheckFailure, ClassificationError, ConsistencyError, HStarError,
                     InputError, PreconditionError, TheoremViolation, UnsupportedError)
from .groups import GroupTable, cyclic, invariant_factors, make_group, parse_group
from .hstar import (DaggerAlgebra, check_axioms, generated_vn, make_rel_group_algebra,
                    right_mult, set_like_elements)
from .kernel_factor import factorize, kernel, normal_decompose
from .matcat import Mor, compose, dagger, identity, mat, tensor
from .semiring import SemiringDef, boolean, nat, table_semiring, validate_semiring
from .spectrum import Character, characters, global_sections, restrict, rho_from_setlike
from .structure import decompose, rel_extract_groups

__version__ = "0.1.0"
