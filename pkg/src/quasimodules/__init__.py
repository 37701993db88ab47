"""Finite bounded lattices and quasimodules over them.

A quasimodule over a bounded lattice is a commutative monoid of vectors with
a scalar action from the lattice; the canonical ones are finite products of
ideals with componentwise join as addition and componentwise meet as the
scalar action. This package builds them, computes orthogonality companions
and the lattices of subquasimodules, closed subquasimodules and splitting
subquasimodules, searches for bases, and exhaustively verifies the structural
laws these objects satisfy.
"""

from . import errors
from .galois import (
    ClosedIso,
    ClosedLattice,
    FactorizationWitness,
    TaggedSet,
    closed_join,
    closed_lattice_iso,
    closed_sets,
    closed_subquasimodules,
    double_perp,
    factor_zero_distributivity,
    factorize_closed,
    is_closed,
    is_splitting,
    perp,
    principal_perp,
    product_mask,
    splitting_subquasimodules,
    sum_set,
)
from .lattice import (
    Ideal,
    Lattice,
    build_lattice,
    builtin,
    builtin_covers,
    format_lattice,
    is_0_distributive,
    is_distributive,
    is_ideal,
    is_modular,
    load_lattice,
    parse_lattice,
    principal_ideal,
    read_lattice_file,
)
from .quasimodule import (
    CanonicalQM,
    RawQM,
    canonical,
    parse_qm,
    read_qm_file,
    standard_basis,
    verify_axioms,
)
from .subquasi import (
    SubQM,
    SubQMLattice,
    all_subquasimodules,
    find_bases,
    generate,
    is_basis,
    is_generating,
    is_subquasimodule,
)
from .verify import (
    Budgets,
    SearchConfig,
    TheoremReport,
    check_all,
    check_homomorphism,
    counterexample_search,
    reproduce_reference,
    replay_witness,
)

__version__ = "0.1.0"
