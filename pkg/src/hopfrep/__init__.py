"""Exact verification of Hopf algebra structures, Hopf modules and Hopf representations.

Scalars are Laurent polynomials in ``q`` with rational coefficients; algebras
are finitely presented with a confluent rewriting system; every identity is
checked by exact symbolic equality on an explicit finite test set.
"""

from .algebra import AlgebraElement, Presentation, RewriteRule, enumerate_basis, local_confluence_check
from .catalog import (
    make_ak,
    make_cyclic_quotient,
    make_eq2,
    make_eq2_pi,
    make_group_algebra,
    make_trivial_eta,
    resolve_hopf,
)
from .errors import (
    ClosureViolation,
    DSLSyntaxError,
    EvaluationMismatch,
    HopfRepError,
    NonDecreasingRule,
    NotConfluent,
    NotLocallyConfluent,
    UnknownGenerator,
)
from .hopf import HopfAlgebra, antipode_check, axioms_check, bialgebra_check, coalgebra_check
from .induction import (
    QuantumSubgroup,
    coinvariant_basis,
    induced_rep_check,
    induced_structures,
    lemma_2_9_check,
    lemma_2_10_check,
    lemma_2_11_check,
    lprime_member,
    restriction_R,
    subgroup_check,
)
from .report import Finding, Report
from .representations import (
    LEFT,
    RIGHT,
    ActionStructure,
    Carrier,
    CoactionStructure,
    canonical_phi,
    canonical_psi,
    comodule_check,
    hopf_module_check,
    hopf_rep_check_full,
    hopf_rep_check_type1,
    hopf_rep_check_type2,
    module_check,
    thm23_equivalence_check,
)
from .scalars import LaurentScalar
from .tensor import LinearMap, Space, TensorElement, compose, identity, maps_equal_on, tensor, twist

__version__ = "0.1.0"
