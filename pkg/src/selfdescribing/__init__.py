"""Self-describing sequences, the Catalan family tree and related bijections.

Sequences are plain tuples of non-negative ints.  The generation of a
sequence is its length minus one.
"""

from .sequences import (
    DomainError,
    delta,
    delta_fast,
    enumerate_A,
    format_sequence,
    gamma,
    generation,
    lex_compare,
    mu,
    parse_sequence,
    validate_in_A,
)
from .dynamics import (
    BudgetExceeded,
    Endomorphism,
    OrbitTrace,
    count_double_points_gamma,
    count_fixed_points_delta,
    find_double_point_gamma,
    is_fixed,
    orbit,
    stabilize_delta,
)
from .family import (
    FamilyNode,
    NameDistribution,
    children,
    enumerate_family,
    family_root,
    is_family_member,
    name_distribution,
)
from .combinatorics import (
    ballot_count,
    binomial,
    catalan,
    fuss_catalan,
    name_distribution_closed,
    unit_increase_count_closed,
)
from .bijections import (
    decode_ballot,
    decode_ballot_m,
    encode_ballot,
    encode_ballot_m,
    enumerate_m_increase,
    enumerate_unit_increase,
    west_tree_labels,
)

__version__ = "0.1.0"
