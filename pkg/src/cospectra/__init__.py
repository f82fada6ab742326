"""Exact spectra and strongly cospectral vertices of Cayley graphs of finite abelian groups."""

from .cayley import (
    CayleyGraph,
    ConnectionSet,
    SpectrumTable,
    cayley_graph,
    check_cube_identity,
    complement,
    connection_set_new,
    eigenvalue_for_character,
    max_multiplicity,
    spectrum,
    wht_spectrum,
)
from .constructions import (
    appendix_catalog,
    appendix_graph,
    construct_even,
    construct_odd,
    cycle_product,
    hypercube,
    parse_connection_set,
    parse_graph_spec,
    search_random,
)
from .cospectral import (
    CospectralReport,
    build_report,
    check_cubelike_bounds,
    check_multiplicity_bound,
    pst_pair,
    strongly_cospectral_to_zero,
    verify_subgroup,
)
from .cyclotomic import CyclotomicInteger, cyclotomic_polynomial
from .groups import FiniteAbelianGroup, char_value, group_new, parse_group
from .oracle import (
    GaussianInteger,
    adjacency_matrix,
    idempotent_strong_cospectrality,
    oracle_agreement,
    pst_amplitude_exact,
)

__version__ = "0.1.0"
