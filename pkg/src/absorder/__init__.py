"""absorder: the absolute order on the symmetric group S_n, exactly.

Order tests by two independent characterizations, Hasse-diagram export,
noncrossing-partition intervals, integer homology of order complexes via
sparse Smith normal form, the signed Euler-characteristic table by two
independent routes, Cohen-Macaulayness over Z, and verifiable
strong-constructibility certificates.
"""

from .cycles import Cycle, are_noncrossing, crossing_witness, is_deletion_subcycle
from .certificates import (
    Certificate,
    VerificationReport,
    build_certificate,
    certificate_json,
    verify_certificate,
    verify_inter1,
    verify_second_intersection,
)
from .complexes import (
    SimplicialComplex,
    find_shelling,
    order_complex,
    read_facet_file,
    verify_shelling,
    write_facet_file,
)
from .errors import (
    DegreeMismatchError,
    PermutationParseError,
    PreconditionError,
    ResourceCapError,
)
from .homology import (
    CMResult,
    HomologyGroup,
    boundary_matrix,
    invariant_factors,
    is_cohen_macaulay_Z,
    reduced_homology,
    smith_diagonal,
)
from .mobius import (
    euler_char_proper_part,
    gf_expand,
    mobius_direct,
    mobius_product,
    table1_value,
)
from .order import (
    RSpec,
    build_Pn,
    enumerate_SnR,
    hasse_export,
    ideal_generated,
    leq_length,
    leq_noncrossing,
    nc_interval,
    nc_interval_by_filter,
    poset_dot,
    poset_json,
    poset_over,
    rank_generating_polynomial,
    rank_polynomial_product,
    satisfies_rspec,
)
from .perms import Permutation, parse_permutation, sn_elements, transposition
from .poset import Poset, product, product_many
from .series import Series, catalan, catalan_series, series_exp

__version__ = "0.1.0"

__all__ = [
    "CMResult",
    "Certificate",
    "Cycle",
    "DegreeMismatchError",
    "HomologyGroup",
    "Permutation",
    "PermutationParseError",
    "Poset",
    "PreconditionError",
    "RSpec",
    "ResourceCapError",
    "Series",
    "SimplicialComplex",
    "VerificationReport",
    "are_noncrossing",
    "boundary_matrix",
    "build_Pn",
    "build_certificate",
    "catalan",
    "catalan_series",
    "certificate_json",
    "crossing_witness",
    "enumerate_SnR",
    "euler_char_proper_part",
    "find_shelling",
    "gf_expand",
    "hasse_export",
    "ideal_generated",
    "invariant_factors",
    "is_cohen_macaulay_Z",
    "is_deletion_subcycle",
    "leq_length",
    "leq_noncrossing",
    "mobius_direct",
    "mobius_product",
    "nc_interval",
    "nc_interval_by_filter",
    "order_complex",
    "parse_permutation",
    "poset_dot",
    "poset_json",
    "poset_over",
    "product",
    "product_many",
    "rank_generating_polynomial",
    "rank_polynomial_product",
    "read_facet_file",
    "reduced_homology",
    "satisfies_rspec",
    "series_exp",
    "smith_diagonal",
    "sn_elements",
    "table1_value",
    "transposition",
    "verify_certificate",
    "verify_inter1",
    "verify_second_intersection",
    "verify_shelling",
    "write_facet_file",
]
