"""Finitely presented permutative categories: constructions and checks."""

from .monoid import (
    CoproductMonoid, FiniteMonoid, FreeMonoid, Monoid, MonoidError, MonoidHom, codiagonal,
    coproduct, counit, cyclic_group, additive_group, enumerate_monoid, free_monoid,
    identity_hom, is_surjective, multiply, normalize, product_monoid, solve_lifting,
    trivial_monoid,
)
from .category import (
    ChaoticCat, DeloopCat, DiscreteCat, InducedCat, Morphism, PermCat, TableCat,
    full_subcategory, standard_category, terminal, validate,
)
from .report import CheckReport, LawResult
from .smfunctor import (
    MonoidalNatTrans, SectionDatum, SmFunctor, check_equivalence, compose_functors,
    find_section, identity_functor, is_acyclic_fibration, transport_functor, transport_lambda,
    validate_functor, validate_nat_trans, validate_section,
)
from .gabriel import gabriel_factorize, induced_category, verify_factorization
from .modelcat import (
    FreeCofibrationDatum, PushoutResult, RetractWitness, build_retract, free_cofibration,
    is_free_cofibration, properness_check, pushout_free, recognize_cofibration,
    universal_lift, verify_lift, verify_retract,
)

__version__ = "0.1.0"
