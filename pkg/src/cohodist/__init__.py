"""Exact-arithmetic simplicial cohomology, cup products, and
cohomological-distance cover certificates."""

from .complexes import (
    Cover,
    SimplicialComplex,
    SimplicialMap,
    Subcomplex,
    barycentric_subdivision,
    from_maximal_faces,
    is_cover,
    product,
    restrict,
    sd_map,
)
from .cupring import (
    CohomologyClass,
    GradedClassSet,
    J_generators,
    cup,
    cup_length,
    lcp_ideal,
    lcp_of_set,
    unit_class,
    zero_divisor_cup_length,
)
from .distance import (
    BoundReport,
    CoverCertificate,
    DistanceQuery,
    hscat,
    hstc,
    lower_bound,
    scat_query,
    search,
    stc_query,
    subdivision_monotonicity_check,
    verify,
)
from .exactalg import (
    GF,
    GF2,
    Matrix,
    Presentation,
    QQ,
    Ring,
    ZZ,
    homs_equal,
    kernel_basis,
    image_basis,
    quotient_presentation,
    ring_from_code,
    smith_normal_form,
    solve,
)
from .homology import (
    chain_complex,
    cohomology,
    homology,
    induced_map,
    maps_equal,
)

__version__ = "0.1.0"
