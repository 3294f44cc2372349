"""Exact lattice-point counting, Ehrhart polynomials, and mechanical
verification of coefficient bounds, root-line properties, and
l-reflexivity for the cube, crosspolytope, bipyramid, and hybrid
families."""

from .counting import (
    MembershipOracle,
    count_box_scan,
    count_minkowski_dp,
    count_pn_sliced,
    count_product,
    count_qn_closed,
    dilation_counter,
    oracle_for,
)
from .ehrhart import (
    EhrhartPolynomial,
    ehrhart_of,
    product_coefficients,
    qn_coefficients,
    qn_first_coefficient,
    qn_growth_check,
    second_coefficient_from_facets,
)
from .exact import (
    Polynomial,
    bernoulli,
    bernoulli_magnitude_bounds,
    binomial,
    elementary_symmetric,
    faulhaber_sum,
    interpolate,
    poly_shift,
)
from .polytopes import (
    Family,
    FamilyTag,
    Halfspace,
    LatticePolytope,
    OriginNotInteriorError,
    crosspolytope,
    cube,
    dilate,
    hull2d,
    index,
    is_primitive,
    pn_family,
    polar_scaled,
    product,
    qn_family,
)
from .reflexivity import (
    ReflexivityReport,
    is_l_reflexive,
    reflexivity_equivalence,
    root_line_reflexivity_consequence,
)
from .roots import (
    BoundVerdict,
    RootSet,
    WillsVerdict,
    braun_disc_check,
    coefficient_ratio_bound,
    common_real_part,
    find_roots,
    gamma_sum_identity_check,
    parity_necessary_check,
    point_count_bound,
    volume_bound,
    wills_check,
)

__version__ = "0.1.0"

__all__ = [
    "BoundVerdict",
    "EhrhartPolynomial",
    "Family",
    "FamilyTag",
    "Halfspace",
    "LatticePolytope",
    "MembershipOracle",
    "OriginNotInteriorError",
    "Polynomial",
    "ReflexivityReport",
    "RootSet",
    "WillsVerdict",
    "bernoulli",
    "bernoulli_magnitude_bounds",
    "binomial",
    "braun_disc_check",
    "coefficient_ratio_bound",
    "common_real_part",
    "count_box_scan",
    "count_minkowski_dp",
    "count_pn_sliced",
    "count_product",
    "count_qn_closed",
    "crosspolytope",
    "cube",
    "dilate",
    "dilation_counter",
    "ehrhart_of",
    "elementary_symmetric",
    "faulhaber_sum",
    "find_roots",
    "gamma_sum_identity_check",
    "hull2d",
    "index",
    "interpolate",
    "is_l_reflexive",
    "is_primitive",
    "oracle_for",
    "parity_necessary_check",
    "pn_family",
    "point_count_bound",
    "polar_scaled",
    "poly_shift",
    "product",
    "product_coefficients",
    "qn_coefficients",
    "qn_family",
    "qn_first_coefficient",
    "qn_growth_check",
    "reflexivity_equivalence",
    "root_line_reflexivity_consequence",
    "second_coefficient_from_facets",
    "volume_bound",
    "wills_check",
]
