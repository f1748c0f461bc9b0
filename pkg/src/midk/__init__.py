"""Exchange properties, linear quotients and cover ideals of monomial ideals."""

from midk.errors import (
    AmbientMismatch,
    BoundExceeded,
    HypothesisViolation,
    MidkError,
    NotEquigenerated,
    NotNDEP,
)
from midk.monomial import (
    MonomialIdeal,
    colon_monomial,
    component,
    contains,
    divides,
    intersect,
    maximal_ideal,
    minimalize,
    monomial,
    multiply,
    power,
    render,
    support,
    unit_ideal,
    veronese,
    zero_ideal,
)
from midk.exchange import (
    Certificate,
    OrderSearch,
    check_ndep,
    check_polymatroidal,
    check_weakly_polymatroidal,
    ndep_pair_certificate,
    search_weakly_polymatroidal_order,
    variable_order,
    weakly_pair_certificate,
)
from midk.linquot import (
    OrderCertificate,
    is_admissible_order,
    ndep_admissible_order,
    search_linear_quotients,
)
from midk.resolution import (
    BettiTable,
    betti_table,
    has_linear_resolution,
    is_componentwise_linear,
)
from midk.hypergraph import (
    EdgePartition,
    WeightedHypergraph,
    factor_degrees,
    is_totally_balanced,
    kcover_ideal,
    minimal_kcovers,
    three_edge_order,
    validate_path_family,
    validate_sunflower,
)

__version__ = "0.1.0"
