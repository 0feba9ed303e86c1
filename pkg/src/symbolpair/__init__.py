"""Symbol-pair and b-symbol weights of MDS and simplex codes over finite fields."""

from __future__ import annotations

from .closed_form import (
    MdsParams,
    SingletonReport,
    binom,
    mds_hamming_distribution,
    mds_pair_distribution,
    pair_polynomial_in_q,
    singleton_pair_check,
    verify_pair_distribution,
    verify_theorem31,
)
from .codes import (
    CodeKind,
    Codeword,
    LinearCode,
    cyclic_simplex,
    enumerate_codewords,
    mds_params,
    powers_points,
    raw_code,
    rs_code,
    shorten,
    simplex_codeword,
    standard_simplex,
    variation_simplex,
)
from .description import code_from_description, describe_code, load_code
from .enumeration import Histograms, weight_histograms
from .errors import *  # noqa: F401,F403
from .field import (
    FieldElement,
    FieldSpec,
    add,
    dlog,
    format_element,
    format_field,
    inv,
    make_field,
    mul,
    parse_element,
    parse_field,
    power,
    sub,
    trace,
)
from .metrics import (
    WeightDistribution,
    b_distance,
    b_weight,
    b_weight_distribution,
    hamming_weight,
    min_b_distance,
    read_vector,
)
from .report import TheoremReport
from .simplex_theory import (
    SimplexParams,
    closed_form_weight,
    cyclic_simplex_b_weight,
    standard_simplex_b_weight,
    variation_simplex_odd_b_weight_p3,
    variation_simplex_p_weight,
    variation_simplex_pair_weight,
    verify_simplex,
)

__version__ = "0.1.0"
