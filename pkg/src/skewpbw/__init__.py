"""Exact arithmetic, centers, growth and right fractions for skew PBW extensions."""

from .algebra import (
    Element,
    IncompatibleAlgebras,
    InvalidPresentation,
    PBWReport,
    Relation,
    SkewPBWAlgebra,
    add,
    check_pbw_consistency,
    commutator,
    mul,
    neg,
    power,
    print_element,
    random_element,
    scalar_mul,
    total_degree,
)
from .catalog import CatalogEntry, InvalidParams, UnknownEntry, build, list_entries
from .center import (
    CenterBasis,
    central_space,
    compare_center,
    fixed_subring_basis,
    is_central,
    skew_polynomial_ring,
    verify_skew_polynomial_center,
)
from .coeff import (
    BaseElement,
    BaseRing,
    Endomorphism,
    Field,
    IncompatibleRings,
    SigmaDerivation,
    apply_endo,
    apply_sigma_derivation,
    base_add,
    base_mul,
    endo_order,
)
from .fractions import (
    CapExceeded,
    NotCentral,
    RightFraction,
    central_multiple,
    frac,
    frac_add,
    frac_eq,
    frac_mul,
    frac_neg,
    is_central_fraction,
    membership_characterization,
    membership_roundtrip,
    ore_solve,
    central_fraction_suite,
)
from .growth import GrowthTable, HypothesisVerdict, center_growth, estimate_gkdim, filtration_dims, hypothesis_check
from .linalg import Echelon, ExactMatrix, nullspace_basis, rank, rref
from .parser import ParseError, UnknownSymbol, parse_base, parse_element
from .specfile import dump_spec, load_spec, read_spec_file, spec_json

__version__ = "0.1.0"
