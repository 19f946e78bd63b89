"""Finite-model toolkit for quantum cylindric algebras, cylindric
quasi-implication algebras and their cylindric orthoframes."""

__version__ = "0.1.0"

from .catalog import (
    boolean_algebra,
    cylindric_set_algebra,
    mo,
    o6,
    product_qca,
    with_simple_quantifiers,
)
from .frames import (
    CylindricOrthoFrame,
    check_canonical_iso,
    check_cylindric_orthoframe,
    check_monadic_orthoframe,
    check_orthoframe,
    enumerate_proper_filters,
    filter_generated,
    goldblatt_frame,
    maclaren_frame,
    perp_set,
    principal_filter,
    psi,
)
from .lattice import (
    FiniteOrtholattice,
    QuantumCylindricAlgebra,
    check_orthomodular,
    check_ortholattice,
    check_qca,
    check_quantifier,
)
from .qia import (
    CylindricQia,
    DerivedOrder,
    QiaTable,
    check_cylindric_qia,
    check_derived_identities,
    check_monadic_qia,
    check_qia,
    derived_order,
    qia_comp,
    qia_join,
    qia_meet,
    unit_of,
)
from .report import CheckReport, Violation
from .transforms import (
    HomMap,
    ImplicationKind,
    check_hardegree,
    check_hom_cqia,
    check_hom_qca,
    check_useful_lemma,
    cqia_to_qca,
    implication,
    qca_to_cqia,
)
