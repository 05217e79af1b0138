"""Generalized Hamming weights, weight hierarchies and higher weight spectra
of linear codes over arbitrary finite fields GF(p^s)."""

from .code import (
    LinearCode,
    bch_bound,
    code_from_rows,
    dual,
    encode_subspace,
    generator_polynomial,
    is_cyclic,
    make_rm,
    make_rs,
    new_code,
    support_weight,
)
from .enumeration import (
    count_e,
    count_full_support,
    expand_to_support,
    expected_enumeration,
    gaussian_binomial,
    columns_up_to_weight,
    pivot_shapes,
    subspace_blocks,
    subspaces,
    support_choices,
)
from .errors import GHWError
from .gf import FiniteField, build_field
from .ghw import (
    ComputeOptions,
    Hierarchy,
    Report,
    RoundEvent,
    RunReport,
    Spectrum,
    Witness,
    ghw,
    hierarchy,
    hierarchy_auto,
    higher_spectrum,
    naive_ghw,
    naive_rghw,
    rghw,
    rhierarchy,
    rhigher_spectrum,
    wei_duality,
)
from .infoset import InfoSetDecomposition, information
from .matrix import MatrixGF

__version__ = "0.1.0"

__all__ = [
    "FiniteField",
    "MatrixGF",
    "LinearCode",
    "InfoSetDecomposition",
    "Hierarchy",
    "Spectrum",
    "ComputeOptions",
    "Report",
    "RunReport",
    "RoundEvent",
    "Witness",
    "GHWError",
    "build_field",
    "new_code",
    "code_from_rows",
    "dual",
    "encode_subspace",
    "support_weight",
    "is_cyclic",
    "bch_bound",
    "generator_polynomial",
    "make_rs",
    "make_rm",
    "information",
    "gaussian_binomial",
    "count_full_support",
    "count_e",
    "expected_enumeration",
    "pivot_shapes",
    "columns_up_to_weight",
    "subspaces",
    "subspace_blocks",
    "support_choices",
    "expand_to_support",
    "ghw",
    "hierarchy",
    "rghw",
    "rhierarchy",
    "hierarchy_auto",
    "wei_duality",
    "naive_ghw",
    "naive_rghw",
    "higher_spectrum",
    "rhigher_spectrum",
]
