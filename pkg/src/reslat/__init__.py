"""Workbench for finite residuated lattices built from finite commutative rings.

Construct rings, compute their ideal lattices exhaustively, classify
residuated lattices against the BL/MV axioms, build ordinal products, and
enumerate all BL-algebras of small order two independent ways.
"""

from .audit import FIXTURE_CLAIMS, audit_fixture, audit_ok, bundled_fixtures, fixture_path, render_audit
from .census import (
    CensusRow,
    are_isomorphic,
    canonical_key,
    census_table,
    enumerate_bl_ordinal,
    enumerate_mv,
    enumerate_reslat_oracle,
    lukasiewicz_chain,
    multiplicative_partition_list,
    multiplicative_partitions,
    relabel,
)
from .claims import ClaimResult, factorize, ring_claims
from .core import (
    MVTables,
    Report,
    ResLattice,
    bl_from_mv,
    check_bl_identity,
    check_bl_implication_form,
    check_div,
    check_div_implication_form,
    check_mv_axioms,
    check_prel,
    check_prel_implication_form,
    check_prel_meet_identity,
    check_product_below_meet,
    classify,
    derive_residuum,
    direct_product,
    is_bl,
    is_chain,
    is_involutive,
    is_mv,
    mv_from_bl,
    render_report,
    replay_law,
    scan_bl_identity,
    validate,
)
from .errors import (
    CapExceeded,
    FormatError,
    InternalCheckError,
    MalformedSpec,
    MalformedTable,
    NotInvolutive,
    NotResiduated,
    ParseError,
    ReslatError,
    ResiduumMismatch,
    RingMismatch,
    SizeCapExceeded,
)
from .expr import (
    AlgebraExpr,
    IdOf,
    Load,
    Luk,
    Ord,
    ProductAlg,
    eval_expr,
    format_algebra_expr,
    format_ring_expr,
    parse_expr,
    parse_ring_expr,
)
from .ideals import (
    Ideal,
    IdealLatticeMeta,
    all_ideals,
    all_ideals_bruteforce,
    annihilator,
    check_blring,
    classify_ideals,
    ideal_intersection,
    ideal_lattice,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    minimal_generators,
    principal_ideal,
    unit_ideal,
    zero_ideal,
)
from .ordinal import ordinal_product
from .rings import (
    DEFAULT_SIZE_CAP,
    FinRing,
    PolyQuot,
    Product,
    RingExpr,
    Zn,
    build_ring,
    euler_totient,
    ring_axiom_report,
    ring_units,
)
from .serialization import LoadedLattice, deserialize, deserialize_relaxed, serialize

__version__ = "0.1.0"
